#ifndef BST_QEXP_HPP
#define BST_QEXP_HPP

#include "bst/abelian_field.hpp"
#include "bst/character.hpp"
#include "bst/cyclotomic.hpp"
#include "bst/dirichlet.hpp"
#include "bst/group_ring.hpp"
#include "bst/ideal_lattice.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace bst {

/* q-expansion with exact cyclotomic coefficients, given by a deterministic
 * provider plus a memo table.  Metadata follows the usual bookkeeping: sums
 * need equal (weight, level), products add weights and lcm levels. */
struct qexpansion {
    long k = 0, level = 1;
    dirichlet_character psi;   /* nebentypus */
    cyc c0;                    /* constant term */
    std::function<cyc(long)> provider;
    std::shared_ptr<std::map<long, cyc>> cache =
        std::make_shared<std::map<long, cyc>>();

    cyc c(long m) const;       /* m >= 1; m = 0 gives c0 */
};

/* S-stabilized Eisenstein series: c(m) = sum_{r | m} psi_S(m/r) r^(k-1),
 * where psi_S kills everything touching S; level = cond(psi) * (S beyond the
 * conductor); constant term by the weight/level case split. */
qexpansion eisenstein_qexp(long k, const dirichlet_character& psi, const std::vector<long>& S);

qexpansion qexp_one();                                   /* the constant form 1 */
qexpansion qexp_add(const qexpansion& f, const qexpansion& g);
qexpansion qexp_scale(const cyc& s, const qexpansion& f);
qexpansion qexp_mul(const qexpansion& f, const qexpansion& g);
qexpansion qexp_pow(const qexpansion& f, long n);

/* Hecke operators as lazy coefficient rules. */
qexpansion hecke_T(const qexpansion& f, long ell);       /* ell coprime to level */
qexpansion hecke_U(const qexpansion& f, long q);         /* q | level */
qexpansion diamond(const qexpansion& f, long m);         /* nebentypus scalar */
qexpansion raise_level(const qexpansion& f, long q);     /* c(m) -> c(m/q) */

/* Moebius-modified series over the smoothing set T:
 * W = sum_{m | prod T} mu(m) psi(m) m^k (E_k(psi_P, 1) | m).
 * The coefficient identity c(l, W) = c(l, E) - psi(l) l^k is asserted on
 * construction for every l in T. */
qexpansion w_modified(long k, const dirichlet_character& psi, const std::vector<long>& P,
                      const std::vector<long>& T);

struct congruence_report {
    bool ok = true;
    long first_fail = -1; /* index, with 0 = constant term */
};
/* c(m, f) = c(m, g) mod pm for 0 <= m <= N; coefficients must be rational
 * with denominator prime to pm. */
congruence_report congruence_check(const qexpansion& f, const qexpansion& g,
                                   const mpz_class& pm, long N);

/* Group-ring valued family over Gal(H/Q): coefficients in Z[G]. */
struct gr_qexpansion {
    long k = 0, level = 1;
    fab_group G;
    std::function<grq(long)> provider;
    std::shared_ptr<std::map<long, grq>> cache =
        std::make_shared<std::map<long, grq>>();

    grq c(long m) const;
};
/* c(m) = sum_{r | m, gcd(m/r, f) = 1} [artin(m/r)] r^(k-1). */
gr_qexpansion family_eisenstein(const abelian_field_q& F, long k);
/* Applying a character of G to every coefficient gives the S-stabilized
 * scalar series with S = primes dividing the conductor. */
qexpansion specialize(const gr_qexpansion& fam, const abelian_field_q& F, const character& chi);

/* Coefficientwise difference of two group-ring expansions lies in a lattice. */
congruence_report congruence_check_gr(const gr_qexpansion& f, const gr_qexpansion& g,
                                      const ideal_lattice& L, long N);

/* --- cusps and constant terms ------------------------------------------- */

/* Cusp a/c of level n in lowest terms; the derived ideal of the cusp is the
 * positive gcd-class of c. */
struct cusp_datum {
    long level = 1;
    long a = 1, c = 0;
};
cusp_datum make_cusp(long level, long a, long c);
bool cusp_in_C0(const cusp_datum& A, long b);   /* gcd(b, c) = 1 */
bool cusp_in_Cinf(const cusp_datum& A, long b); /* b | c */

/* tau(psi) carried symbolically; exact cyclotomic value for conductor <= 40. */
struct gauss_sum_symbol {
    dirichlet_character psi;
    bool exact = false;
    cyc value;
};
gauss_sum_symbol gauss_sum(const dirichlet_character& psi);

/* value = plain + tau_coef * tau(psi) */
struct ct_value {
    cyc plain, tau_coef;
};
cyc ct_eval(const ct_value& v, const gauss_sum_symbol& tau);
bool ct_is_zero(const ct_value& v);

/* Normalized constant term of E_k(psi_P, 1) | m at a cusp of level
 * cond * P * prod(T), for m dividing prod(T); case table on the
 * (C0, Cinf) membership pattern. */
ct_value constant_term_E_raised(long k, const dirichlet_character& psi,
                                const std::vector<long>& P, const std::vector<long>& T,
                                long m, const cusp_datum& A);
/* Normalized constant term of W_k(psi_P, 1); k > 1 and k = 1 case tables. */
ct_value constant_term_W(long k, const dirichlet_character& psi, const std::vector<long>& P,
                         const std::vector<long>& T, const cusp_datum& A);

} // namespace bst

#endif

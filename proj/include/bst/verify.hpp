#ifndef BST_VERIFY_HPP
#define BST_VERIFY_HPP

#include "bst/abelian_field.hpp"
#include "bst/fitting.hpp"
#include "bst/quadform.hpp"
#include "bst/rayclass.hpp"
#include "bst/stickelberger.hpp"

#include <string>
#include <vector>

namespace bst {

/* One verification instance: an imaginary quadratic field (D) or a
 * biquadratic field given by two imaginary quadratic discriminants. */
struct verification_case {
    std::string theorem;        /* brumer-stark | cnf | kurihara | bs-unit | selmer */
    long D = 0;                 /* fundamental discriminant < 0; 0 for biquadratic */
    long D1 = 0, D2 = 0;        /* biquadratic component discriminants */
    std::vector<long> S_extra;  /* finite depletion primes beyond the ramified set */
    std::vector<long> T;
    long p = 0;                 /* for p-part checks */
    long split_prime = 0;       /* for the unit construction */

    std::string case_id() const;
};

struct witness {
    std::string name, value;
};

struct verification_report {
    verification_case vcase;
    std::string status;         /* pass | fail | skipped */
    std::string reason;
    std::vector<witness> witnesses;
    long elapsed_ms = 0;
};

/* The quadratic / biquadratic field as an abelian extension of Q. */
abelian_field_q quad_field_q(long D);
abelian_field_q biquad_field_q(long D1, long D2);

/* Annihilation of the odd part of the T-smoothed class group by the theta
 * element (componentwise over the imaginary quadratic subfields for a
 * biquadratic field). */
verification_report check_brumer_stark(const verification_case& c);

/* Odd-part equality of #Cl^T(K)^- with |prod over odd characters of the
 * smoothed L-value at 0|. */
verification_report check_cnf(const verification_case& c);

/* p-part equality of the minus Fitting ideal of the dual smoothed class
 * group with the p-modified product ideal; also asserts the sharped theta
 * membership and the Fitt-within-annihilator chain. */
verification_report check_kurihara(const verification_case& c);

/* The unit u with (u) = P^theta, u = 1 mod the T-modulus; exposes
 * u = num / den and the exponent of the theta element. */
struct bs_unit_data {
    quad_elt num;               /* u = num / den */
    mpz_class den = 1;
    long n = 0;                 /* theta = n (1 - sigma) */
    quad_ideal P;               /* the chosen prime above the split prime */
};
verification_report brumer_stark_unit(const verification_case& c, bs_unit_data* out = nullptr);

/* Selmer group from the S'-unit valuation presentation vs the dual smoothed
 * class group: Fitting-equivalence of the odd parts. */
verification_report check_selmer_duality(const verification_case& c);

/* Fitting-equivalence of two modules over the order-2 acting group:
 * equal odd invariant factors, equal plus/minus quotient orders, equal
 * zeroth Fitting ideals of the minus parts. */
bool fitting_equivalent(const galois_module& A, const galois_module& B);

/* odd quotient followed by the quotient by (1 + conjugation) */
galois_module minus_odd_module(const galois_module& M);

} // namespace bst

#endif

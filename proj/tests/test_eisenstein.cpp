#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bst/abelian_field.hpp"
#include "bst/character.hpp"
#include "bst/dirichlet.hpp"
#include "bst/ideal_lattice.hpp"
#include "bst/qexp.hpp"
#include "bst/stickelberger.hpp"

#include <numeric>
#include <random>

using namespace bst;

static bool same_upto(const qexpansion& f, const qexpansion& g, long N)
{
    for (long m = 0; m <= N; m++)
        if (!cyc_eq(f.c(m), g.c(m))) return false;
    return true;
}

static bool is_prime_l(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

TEST_CASE("Eisenstein coefficients and constant terms")
{
    dirichlet_character triv = trivial_character(1);
    qexpansion E4 = eisenstein_qexp(4, triv, {});
    CHECK(E4.level == 1);
    CHECK(E4.c0.rational_value() == mpq_class(1, 240));
    CHECK(E4.c(1).rational_value() == 1);
    CHECK(E4.c(2).rational_value() == 9);
    CHECK(E4.c(3).rational_value() == 28);
    CHECK(E4.c(4).rational_value() == 73);
    CHECK(E4.c(6).rational_value() == 252);

    qexpansion E6 = eisenstein_qexp(6, triv, {});
    CHECK(E6.c0.rational_value() == mpq_class(-1, 504));
    CHECK(E6.c(2).rational_value() == 33);

    dirichlet_character chi4 = quadratic_character(-4);
    qexpansion E1 = eisenstein_qexp(1, chi4, {});
    CHECK(E1.level == 4);
    CHECK(E1.c0.rational_value() == mpq_class(1, 4));
    CHECK(E1.c(1).rational_value() == 1);
    CHECK(E1.c(2).rational_value() == 1);
    CHECK(E1.c(3).rational_value() == 0);
    CHECK(E1.c(5).rational_value() == 2);
    CHECK(E1.c(25).rational_value() == 3);

    /* depletion at 2: coefficients lose the even-index character terms */
    qexpansion E4s = eisenstein_qexp(4, triv, {2});
    CHECK(E4s.level == 2);
    CHECK(E4s.c0.is_zero());
    for (long m = 1; m <= 30; m++) {
        cyc expect = E4.c(m);
        if (m % 2 == 0) expect = cyc_sub(expect, E4.c(m / 2));
        CHECK(cyc_eq(E4s.c(m), expect));
    }

    /* weight and character parity must agree */
    CHECK_THROWS(eisenstein_qexp(3, triv, {}));
    CHECK_THROWS(eisenstein_qexp(2, chi4, {}));
}

TEST_CASE("square of the weight-4 series is the weight-8 series")
{
    dirichlet_character triv = trivial_character(1);
    qexpansion E4 = eisenstein_qexp(4, triv, {});
    qexpansion E8 = eisenstein_qexp(8, triv, {});
    CHECK(E8.c0.rational_value() == mpq_class(1, 480));
    qexpansion a = qexp_pow(qexp_scale(cyc(240), E4), 2);
    qexpansion b = qexp_scale(cyc(480), E8);
    CHECK(a.k == 8);
    CHECK(same_upto(a, b, 40));
}

TEST_CASE("Hecke operators")
{
    dirichlet_character triv = trivial_character(1);
    dirichlet_character chi4 = quadratic_character(-4);
    qexpansion E4 = eisenstein_qexp(4, triv, {});
    qexpansion E1 = eisenstein_qexp(1, chi4, {});

    /* T_ell eigenvalue psi(ell) + ell^(k-1) */
    CHECK(same_upto(hecke_T(E4, 2), qexp_scale(cyc(9), E4), 50));
    CHECK(same_upto(hecke_T(E1, 5), qexp_scale(cyc(2), E1), 40));
    CHECK(same_upto(hecke_T(E1, 3), qexp_scale(cyc(0), E1), 40));
    CHECK_THROWS(hecke_T(E1, 2));

    /* U_q eigenvalue q^(k-1) on the q-depleted series */
    qexpansion E4s = eisenstein_qexp(4, triv, {2});
    CHECK(same_upto(hecke_U(E4s, 2), qexp_scale(cyc(8), E4s), 50));
    qexpansion E1s = eisenstein_qexp(1, chi4, {3});
    CHECK(same_upto(hecke_U(E1s, 3), E1s, 40));
    CHECK_THROWS(hecke_U(E4, 2));

    /* diamond operators act through the nebentypus */
    CHECK(same_upto(diamond(E1, 3), qexp_scale(cyc(-1), E1), 30));
    CHECK_THROWS(diamond(E1, 2));

    /* level raising and its commutativity */
    qexpansion R2 = raise_level(E4, 2);
    CHECK(R2.level == 2);
    CHECK(cyc_eq(R2.c(6), E4.c(3)));
    CHECK(R2.c(5).is_zero());
    CHECK(cyc_eq(R2.c0, E4.c0));
    CHECK(same_upto(raise_level(R2, 3), raise_level(raise_level(E4, 3), 2), 60));
}

TEST_CASE("Moebius-smoothed series")
{
    dirichlet_character chi4 = quadratic_character(-4);
    qexpansion E1 = eisenstein_qexp(1, chi4, {});

    qexpansion W = w_modified(1, chi4, {}, {3});
    CHECK(W.level == 12);
    CHECK(W.c(1).rational_value() == 1);
    CHECK(W.c(3).rational_value() == 3);
    CHECK(W.c0.rational_value() == 1); /* (1/4)(1 - chi(3) 3) */

    /* two smoothing primes against the hand-built inclusion-exclusion */
    qexpansion W2 = w_modified(1, chi4, {}, {3, 7});
    CHECK(W2.level == 84);
    for (long m = 0; m <= 60; m++) {
        cyc expect = E1.c(m);
        if (m % 3 == 0) expect = cyc_add(expect, cyc_mul(cyc(3), E1.c(m / 3)));
        if (m % 7 == 0) expect = cyc_add(expect, cyc_mul(cyc(7), E1.c(m / 7)));
        if (m % 21 == 0) expect = cyc_add(expect, cyc_mul(cyc(21), E1.c(m / 21)));
        CHECK(cyc_eq(W2.c(m), expect));
    }

    dirichlet_character triv = trivial_character(1);
    qexpansion W3 = w_modified(4, triv, {3}, {5, 7});
    CHECK(W3.level == 105);

    CHECK_THROWS(w_modified(1, chi4, {}, {}));
    CHECK_THROWS(w_modified(1, chi4, {3}, {3}));
    CHECK_THROWS(w_modified(1, chi4, {}, {2}));
}

TEST_CASE("group-ring family specializes to each character")
{
    abelian_field_q F = make_abelian_field(5, {});
    CHECK(F.degree() == 4);
    for (long k : {2L, 3L}) {
        gr_qexpansion fam = family_eisenstein(F, k);
        for (const character& chi : enumerate_characters(F.G)) {
            bool odd = chi.is_odd(F.gal.conj);
            if (odd != (k % 2 != 0)) continue;
            qexpansion spec = specialize(fam, F, chi);
            qexpansion E = eisenstein_qexp(k, pullback_character(F, chi), {5});
            CHECK(spec.level == E.level);
            for (long m = 1; m <= 60; m++) CHECK(cyc_eq(spec.c(m), E.c(m)));
        }
        /* coefficients are integral group-ring elements */
        for (long m = 1; m <= 20; m++) CHECK(fam.c(m).is_integral());
    }
}

TEST_CASE("classical normalizations are 1 mod p")
{
    dirichlet_character triv = trivial_character(1);
    qexpansion one = qexp_one();

    qexpansion E4n = qexp_scale(cyc(240), eisenstein_qexp(4, triv, {}));
    CHECK(congruence_check(E4n, one, 5, 200).ok);
    CHECK(congruence_check(qexp_pow(E4n, 5), one, 25, 100).ok);

    qexpansion E6n = qexp_scale(cyc(-504), eisenstein_qexp(6, triv, {}));
    CHECK(congruence_check(E6n, one, 7, 100).ok);

    congruence_report bad = congruence_check(E4n, one, 7, 50);
    CHECK(!bad.ok);
    CHECK(bad.first_fail == 1);
}

TEST_CASE("Gauss sum norms")
{
    long tested = 0;
    for (long f = 1; f <= 40; f++) {
        for (const dirichlet_character& chi : characters_mod(f)) {
            if (!chi.is_primitive()) continue;
            gauss_sum_symbol tau = gauss_sum(chi);
            gauss_sum_symbol taubar = gauss_sum(chi.inverse());
            REQUIRE(tau.exact);
            cyc parity = f > 1 ? chi.value(f - 1) : cyc(1);
            CHECK(cyc_eq(cyc_mul(tau.value, taubar.value),
                         cyc_mul(parity, cyc(mpq_class(f)))));
            tested++;
        }
    }
    CHECK(tested > 100);
    CHECK(!gauss_sum(quadratic_character(41)).exact);
}

TEST_CASE("constant terms at the standard cusps match the expansions")
{
    dirichlet_character triv = trivial_character(1);
    dirichlet_character chi4 = quadratic_character(-4);

    /* weight 4, level 1: value at infinity through the tau branch */
    {
        cusp_datum inf = make_cusp(1, 1, 0);
        ct_value v = constant_term_E_raised(4, triv, {}, {}, 1, inf);
        CHECK(cyc_eq(ct_eval(v, gauss_sum(triv)), eisenstein_qexp(4, triv, {}).c0));
    }
    /* weight 1 with depletion and smoothing: plain branch at infinity */
    {
        qexpansion E = eisenstein_qexp(1, chi4, {3});
        cusp_datum inf = make_cusp(60, 1, 0);
        ct_value v = constant_term_E_raised(1, chi4, {3}, {5}, 1, inf);
        CHECK(v.tau_coef.is_zero());
        CHECK(cyc_eq(v.plain, E.c0));

        qexpansion W = w_modified(1, chi4, {3}, {5});
        ct_value w = constant_term_W(1, chi4, {3}, {5}, inf);
        CHECK(w.tau_coef.is_zero());
        CHECK(cyc_eq(w.plain, W.c0));
        CHECK(cyc_eq(w.plain, cyc(mpq_class(-2))));
    }
    /* weight > 1 vanishes off the c-coprime region */
    {
        ct_value v = constant_term_W(3, chi4, {}, {5}, make_cusp(20, 1, 2));
        CHECK(ct_is_zero(v));
    }
    /* smoothing contributes the (1 - psi(l)) factor on the tau branch */
    {
        cusp_datum zero = make_cusp(20, 0, 1);
        ct_value w = constant_term_W(3, chi4, {}, {5}, zero);
        ct_value e = constant_term_E_raised(3, chi4, {}, {5}, 1, zero);
        CHECK(w.plain.is_zero());
        CHECK(cyc_eq(w.tau_coef,
                     cyc_mul(e.tau_coef, cyc_sub(cyc(1), chi4.value(5)))));
    }
    CHECK_THROWS(make_cusp(12, 2, 4));
    CHECK_THROWS(constant_term_W(1, chi4, {}, {3}, make_cusp(8, 1, 0)));
    CHECK_THROWS(constant_term_W(2, chi4, {}, {3}, make_cusp(12, 1, 0)));

    gauss_sum_symbol sym = gauss_sum(quadratic_character(41));
    ct_value mixed;
    mixed.tau_coef = cyc(1);
    CHECK_THROWS(ct_eval(mixed, sym));
}

TEST_CASE("smoothed constant terms are the alternating sums of raised ones")
{
    dirichlet_character chi4 = quadratic_character(-4);
    struct probe {
        long k;
        std::vector<long> P, T;
    };
    std::vector<probe> probes = {{1, {3}, {5, 7}}, {3, {}, {5}}, {1, {}, {3, 7}}, {5, {3}, {7}}};
    for (const probe& pr : probes) {
        long level = chi4.conductor();
        for (long q : pr.P)
            if (level % q != 0) level *= q;
        for (long l : pr.T) level *= l;
        long tprod = 1;
        for (long l : pr.T) tprod *= l;
        for (long c = 0; c <= level; c++) {
            if (c > 0 && level % c != 0) continue;
            long a = 1;
            while (std::gcd(a, c) != 1) a++;
            cusp_datum A = make_cusp(level, a, c);
            ct_value w = constant_term_W(pr.k, chi4, pr.P, pr.T, A);
            cyc plain, taup;
            for (long m = 1; m <= tprod; m++) {
                if (tprod % m != 0) continue;
                /* mu(m) psi(m) m^k over the squarefree divisors */
                long nb = 0;
                for (long l : pr.T)
                    if (m % l == 0) nb++;
                mpz_class mk = 1;
                for (long i = 0; i < pr.k; i++) mk *= m;
                cyc coef = cyc_mul(chi4.value(m), cyc(mpq_class(mk)));
                if (nb % 2) coef = cyc_neg(coef);
                ct_value e = constant_term_E_raised(pr.k, chi4, pr.P, pr.T, m, A);
                plain = cyc_add(plain, cyc_mul(coef, e.plain));
                taup = cyc_add(taup, cyc_mul(coef, e.tau_coef));
            }
            CHECK(cyc_eq(w.plain, plain));
            CHECK(cyc_eq(w.tau_coef, taup));
        }
    }
}

TEST_CASE("alternating product identity over divisor splits")
{
    std::vector<dirichlet_character> pool;
    for (long f : {3L, 4L, 5L, 7L})
        for (const dirichlet_character& chi : characters_mod(f))
            if (chi.is_primitive()) pool.push_back(chi);

    std::mt19937 rng(20240817u);
    std::vector<long> primes = {3, 5, 7, 11, 13, 17, 19};
    for (int trial = 0; trial < 30; trial++) {
        const dirichlet_character& psi = pool[rng() % pool.size()];
        long k = 1 + (long)(rng() % 6);
        std::vector<long> T, J, Jc;
        for (long l : primes) {
            if (psi.conductor() % l == 0) continue;
            if (rng() % 3 == 0) T.push_back(l);
        }
        for (long l : T) (rng() % 2 ? J : Jc).push_back(l);

        /* sum over squarefree divisors m of prod(T) */
        cyc lhs;
        size_t n = T.size();
        for (unsigned mask = 0; mask < (1u << n); mask++) {
            cyc term(1);
            long bits = 0;
            for (size_t i = 0; i < n; i++) {
                if (!(mask & (1u << i))) continue;
                bits++;
                long l = T[i];
                bool inJ = std::find(J.begin(), J.end(), l) != J.end();
                if (inJ)
                    term = cyc_mul(term, psi.value(l));
                else {
                    mpz_class lk = 1;
                    for (long t = 0; t < k; t++) lk *= l;
                    term = cyc_mul(term, cyc(mpq_class(lk)));
                }
            }
            if (bits % 2) term = cyc_neg(term);
            lhs = cyc_add(lhs, term);
        }
        cyc rhs(1);
        for (long l : J) rhs = cyc_mul(rhs, cyc_sub(cyc(1), psi.value(l)));
        for (long l : Jc) {
            mpz_class lk = 1;
            for (long t = 0; t < k; t++) lk *= l;
            rhs = cyc_mul(rhs, cyc_sub(cyc(1), cyc(mpq_class(lk))));
        }
        CHECK(cyc_eq(lhs, rhs));
    }
}

TEST_CASE("Hecke deviation elements fall in the theta ideal")
{
    /* (ell^(k-1) - 1)(1 - [frob_ell]) against the ideal generated by the
     * smoothed theta element of the quadratic field of discriminant -3 */
    abelian_field_q F = make_abelian_field(3, {});
    stickelberger_element th = theta(F, {3}, {7});
    ambient_ring amb = group_ring_ambient(F.G);
    ideal_lattice I = ideal_from_gr_elems(amb, {th.element});
    grq one = grq::scalar(F.G, 1);
    for (long ell = 2; ell <= 50; ell++) {
        if (!is_prime_l(ell) || ell == 3 || ell == 7) continue;
        for (long k : {2L, 3L, 7L}) {
            mpz_class lk = 1;
            for (long t = 0; t + 1 < k; t++) lk *= ell;
            grq dev = gr_smul(mpq_class(lk - 1),
                              gr_sub(one, grq::of_element(F.G, F.frobenius(ell))));
            CHECK(ideal_member(I, dev));
        }
    }
}

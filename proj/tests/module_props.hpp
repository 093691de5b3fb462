#ifndef BST_TESTS_MODULE_PROPS_HPP
#define BST_TESTS_MODULE_PROPS_HPP

/* Randomized structural checks on matrices, presentations and finite
 * modules.  Shared between the fitting unit tests and the acceptance
 * runner, so each check returns true/false instead of asserting. */

#include "bst/character.hpp"
#include "bst/fitting.hpp"
#include "bst/group_ring.hpp"
#include "bst/ideal_lattice.hpp"
#include "bst/intmat.hpp"

#include <random>

namespace props {

inline bst::imat random_imat(std::mt19937& rng, int r, int c, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    bst::imat A(r, c);
    for (int i = 0; i < r; i++)
        for (int j = 0; j < c; j++) A.at(i, j) = d(rng);
    return A;
}

/* Random square presentation over Z[G] whose determinant is a non
 * zero-divisor (all character values nonzero). */
inline bst::amat random_regular_presentation(std::mt19937& rng, const bst::fab_group& G,
                                             int n, int bound)
{
    bst::ambient_ring amb = bst::group_ring_ambient(G);
    std::uniform_int_distribution<int> d(-bound, bound);
    for (;;) {
        bst::amat A = bst::amat::zero(amb, n, n);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                for (int k = 0; k < amb.dim; k++) A.at(i, j)[(size_t)k] = d(rng);
        bst::grq det(G);
        det.c = bst::amat_det(A);
        bst::qmat R = bst::gr_regular_matrix(det);
        if (bst::mat_det(R.num) != 0) return A;
    }
}

/* Rows of `rows0` together with all their translates under the action:
 * the lattice of an action-stable subgroup. */
inline bst::imat orbit_rows(const bst::galois_module& B, const bst::imat& rows0)
{
    long n = B.acting.order();
    int k = (int)B.inv.size();
    bst::imat K(rows0.rows * (int)n, k);
    for (long e = 0; e < n; e++) {
        bst::imat act = B.act_matrix(B.acting.elt_at(e));
        for (int i = 0; i < rows0.rows; i++)
            for (int j = 0; j < k; j++) {
                mpz_class s = 0;
                for (int t = 0; t < k; t++) s += rows0.at(i, t) * act.at(t, j);
                mpz_class r;
                mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), mpz_class(B.inv[(size_t)j]).get_mpz_t());
                K.at((int)e * rows0.rows + i, j) = r;
            }
    }
    return K;
}

/* U * A * V = D, unimodularity, divisibility chain, invariance of the
 * divisors under row/column permutation of the input. */
inline bool snf_suite(std::mt19937& rng, int trials)
{
    for (int t = 0; t < trials; t++) {
        bst::imat A = random_imat(rng, 4, 4, 9);
        bst::snf_result s = bst::smith_normal_form(A);
        if (!(bst::mat_mul(bst::mat_mul(s.U, A), s.V) == s.D)) return false;
        if (abs(bst::mat_det(s.U)) != 1 || abs(bst::mat_det(s.V)) != 1) return false;
        if (!(bst::mat_mul(s.V, s.Vinv) == bst::imat::identity(4))) return false;
        for (int i = 0; i + 1 < 4; i++) {
            if (s.D.at(i, i) < 0) return false;
            if (s.D.at(i, i) != 0 && s.D.at(i + 1, i + 1) % s.D.at(i, i) != 0) return false;
        }
        /* divisors are invariant under permuting rows and columns */
        bst::imat P(4, 4);
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) P.at(i, j) = A.at(3 - i, (j + 1) % 4);
        bst::snf_result s2 = bst::smith_normal_form(P);
        for (int i = 0; i < 4; i++)
            if (s.D.at(i, i) != s2.D.at(i, i)) return false;
    }
    return true;
}

/* For a square presentation with non-zero-divisor determinant, the quotient
 * order equals the order of B/(det); cross-checked against the product of
 * elementary divisors of the integral regular representation. */
inline bool quadratic_order_suite(std::mt19937& rng, int trials)
{
    std::vector<bst::fab_group> rings = {bst::fab_group(std::vector<long>{}),
                                         bst::fab_group({2})};
    for (int t = 0; t < trials; t++) {
        const bst::fab_group& G = rings[(size_t)(t % (int)rings.size())];
        bst::amat A = random_regular_presentation(rng, G, 2, 3);
        bst::size_check_report rep = bst::module_order_and_size_checks(A);
        if (!rep.equal) return false;
        /* independent count: elementary divisors of the blown-up matrix */
        bst::ambient_ring amb = A.amb;
        int d = amb.dim, n = A.cols;
        bst::imat B(n * d, n * d);
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++)
                for (int i = 0; i < d; i++) {
                    std::vector<mpq_class> unit((size_t)d, mpq_class(0));
                    unit[(size_t)i] = 1;
                    auto prod = amb.mul(unit, A.at(r, c));
                    for (int j = 0; j < d; j++) B.at(r * d + i, c * d + j) = prod[(size_t)j].get_num();
                }
        bst::snf_result s = bst::smith_normal_form(B);
        mpz_class count = 1;
        for (int i = 0; i < n * d; i++) count *= s.D.at(i, i);
        if (abs(count) != rep.quotient_order) return false;
    }
    return true;
}

/* #(Z[G]/(x)) = |prod_chi chi(x)| for x with all character values nonzero,
 * plus the same count over Z[zeta_3] against the explicit norm form. */
inline bool character_product_suite(std::mt19937& rng, int trials)
{
    std::vector<bst::fab_group> groups = {bst::fab_group({2}), bst::fab_group({3}),
                                          bst::fab_group({4}), bst::fab_group({2, 2})};
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < trials; t++) {
        const bst::fab_group& G = groups[(size_t)(t % (int)groups.size())];
        bst::grq x(G);
        bst::cyc prod;
        for (;;) {
            for (auto& v : x.c) v = d(rng);
            prod = bst::cyc(mpq_class(1));
            bool nonzero = true;
            for (const auto& chi : bst::enumerate_characters(G)) {
                bst::cyc v = chi.eval(x);
                if (v.is_zero()) { nonzero = false; break; }
                prod = bst::cyc_mul(prod, v);
            }
            if (nonzero) break;
        }
        if (!prod.is_rational()) return false;
        mpq_class pv = prod.rational_value();
        if (pv.get_den() != 1) return false;
        bst::qmat R = bst::gr_regular_matrix(x);
        if (abs(bst::mat_det(R.num)) != abs(pv.get_num())) return false;

        /* Z[zeta_3]: order of the quotient by psi(x) is the norm, which is
         * the product of the two faithful character values */
        if (G.inv == std::vector<long>{3}) {
            bst::character psi{G, {1}};
            bst::cyc v = psi.eval(x);
            bst::cyc nrm = bst::cyc_mul(v, v.conj());
            if (!nrm.is_rational()) return false;
            mpz_class a = 0, b = 0;
            if (v.order == 1) a = v.c[0].get_num();
            else { a = v.c[0].get_num(); b = v.c[1].get_num(); }
            mpz_class normform = a * a - a * b + b * b;
            if (normform != nrm.rational_value().get_num()) return false;
        }
    }
    return true;
}

inline bst::ideal_lattice fitt_of(const bst::galois_module& M)
{
    return bst::fitting_ideal(bst::module_presentation(M));
}

/* Short exact sequence with quadratically presented quotient: the Fitting
 * ideal of the middle term is the product of the outer two, and orders
 * multiply.  The sequence is built honestly: B is the cokernel of a block
 * matrix, the sub is the action-stable span of the first block's generator
 * images, the quotient is B modulo that span. */
inline bool multiplicativity_suite(std::mt19937& rng, int trials)
{
    bst::fab_group G({2});
    bst::ambient_ring amb = bst::group_ring_ambient(G);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int t = 0; t < trials; t++) {
        bst::amat PA = random_regular_presentation(rng, G, 2, 2);
        bst::amat PC = random_regular_presentation(rng, G, 2, 2);
        bst::amat big = bst::amat::zero(amb, 4, 4);
        for (int i = 0; i < 2; i++)
            for (int j = 0; j < 2; j++) {
                big.at(i, j) = PA.at(i, j);
                big.at(2 + i, 2 + j) = PC.at(i, j);
                for (int k = 0; k < amb.dim; k++) big.at(2 + i, j)[(size_t)k] = d(rng);
            }
        bst::imat gens;
        bst::galois_module B = bst::cokernel_module(G, big, &gens);
        if ((int)B.inv.size() > 4) { t--; continue; }
        bst::imat first(2, (int)B.inv.size());
        for (int i = 0; i < 2; i++)
            for (int j = 0; j < (int)B.inv.size(); j++) first.at(i, j) = gens.at(i, j);
        bst::imat K = orbit_rows(B, first);
        bst::galois_module A = bst::submodule_from_lattice(B, K).mod;
        bst::galois_module C = bst::quotient_module(B, K);
        if (B.order() != A.order() * C.order()) return false;
        if (!bst::ideal_equals(fitt_of(B), bst::ideal_product(fitt_of(A), fitt_of(C))))
            return false;
    }
    return true;
}

/* Two surjections onto a common quadratically presented quotient: with
 * kernels A and A', Fitt(A) Fitt(B') = Fitt(A') Fitt(B). */
inline bool fiber_square_suite(std::mt19937& rng, int trials)
{
    bst::fab_group G({2});
    bst::ambient_ring amb = bst::group_ring_ambient(G);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int t = 0; t < trials; t++) {
        bst::amat PC = random_regular_presentation(rng, G, 2, 2);
        struct leg {
            bst::galois_module B, A;
        };
        leg legs[2];
        bool ok = true;
        for (int s = 0; s < 2 && ok; s++) {
            bst::amat PA = random_regular_presentation(rng, G, 2, 2);
            bst::amat big = bst::amat::zero(amb, 4, 4);
            for (int i = 0; i < 2; i++)
                for (int j = 0; j < 2; j++) {
                    big.at(i, j) = PA.at(i, j);
                    big.at(2 + i, 2 + j) = PC.at(i, j);
                    for (int k = 0; k < amb.dim; k++) big.at(2 + i, j)[(size_t)k] = d(rng);
                }
            bst::imat gens;
            bst::galois_module B = bst::cokernel_module(G, big, &gens);
            if ((int)B.inv.size() > 4) { ok = false; break; }
            bst::imat first(2, (int)B.inv.size());
            for (int i = 0; i < 2; i++)
                for (int j = 0; j < (int)B.inv.size(); j++) first.at(i, j) = gens.at(i, j);
            legs[s].B = B;
            legs[s].A = bst::submodule_from_lattice(B, orbit_rows(B, first)).mod;
        }
        if (!ok) { t--; continue; }
        bst::ideal_lattice lhs = bst::ideal_product(fitt_of(legs[0].A), fitt_of(legs[1].B));
        bst::ideal_lattice rhs = bst::ideal_product(fitt_of(legs[1].A), fitt_of(legs[0].B));
        if (!bst::ideal_equals(lhs, rhs)) return false;
    }
    return true;
}

/* det(A) kills the cokernel of the r-th compound map (checked by direct
 * lattice membership), and det of the compound matches the classical
 * power identity. */
inline bool exterior_power_suite(std::mt19937& rng, int trials)
{
    std::uniform_int_distribution<int> nd(2, 4);
    for (int t = 0; t < trials; t++) {
        int n = nd(rng);
        bst::imat A = random_imat(rng, n, n, 5);
        mpz_class det = bst::mat_det(A);
        if (det == 0) { t--; continue; }
        std::uniform_int_distribution<int> rd(1, n);
        int r = rd(rng);
        bst::compound_result cr = bst::compound_and_adjugate(A, r); /* verifies adj*C = det*I */
        int m = cr.compound.rows;
        bst::imat H = bst::hnf_rows(cr.compound);
        for (int j = 0; j < m; j++) {
            std::vector<mpz_class> v((size_t)m, 0);
            v[(size_t)j] = det;
            if (!bst::hnf_member(H, v)) return false;
        }
        /* det C_r(A) = det(A)^binom(n-1, r-1) up to sign */
        long e = 1;
        for (int i = 1; i < r; i++) e = e * (n - i) / i;
        mpz_class want;
        mpz_pow_ui(want.get_mpz_t(), det.get_mpz_t(), (unsigned long)e);
        if (abs(bst::mat_det(cr.compound)) != abs(want)) return false;
    }
    return true;
}

/* The contragredient is an involution, preserves the order, and the odd
 * quotient has the odd part of the order. */
inline bool duality_involution_suite(std::mt19937& rng, int trials)
{
    std::vector<bst::fab_group> groups = {bst::fab_group({2}), bst::fab_group({4})};
    for (int t = 0; t < trials; t++) {
        const bst::fab_group& G = groups[(size_t)(t % (int)groups.size())];
        bst::amat P = random_regular_presentation(rng, G, 2, 2);
        bst::galois_module M = bst::cokernel_module(G, P);
        M.validate();
        bst::galois_module D = M.dual();
        D.validate();
        if (D.order() != M.order()) return false;
        bst::galois_module DD = D.dual();
        int k = (int)M.inv.size();
        for (int g = 0; g < G.ngens(); g++)
            for (int i = 0; i < k; i++)
                for (int j = 0; j < k; j++)
                    if ((DD.action[(size_t)g].at(i, j) - M.action[(size_t)g].at(i, j)) %
                            M.inv[(size_t)j] != 0)
                        return false;
        long odd = M.order();
        while (odd % 2 == 0) odd /= 2;
        if (M.odd_quotient().order() != odd) return false;
    }
    return true;
}

} // namespace props

#endif

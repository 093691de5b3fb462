#ifndef BST_FITTING_HPP
#define BST_FITTING_HPP

#include "bst/abelian_group.hpp"
#include "bst/group_ring.hpp"
#include "bst/ideal_lattice.hpp"
#include "bst/intmat.hpp"

#include <vector>

namespace bst {

/* Presentation matrix over an ambient ring (Z[G], minus ring; plain Z is the
 * group ring of the trivial group).  rows = relations, cols = generators. */
struct amat {
    ambient_ring amb;
    int rows = 0, cols = 0;
    std::vector<std::vector<mpq_class>> e; /* e[i*cols + j] = coords of entry */

    static amat zero(const ambient_ring& amb, int r, int c);
    std::vector<mpq_class>& at(int i, int j) { return e[(size_t)i * cols + j]; }
    const std::vector<mpq_class>& at(int i, int j) const { return e[(size_t)i * cols + j]; }
};

/* Determinant over the ambient ring (subset DP over columns; guarded n <= 8). */
std::vector<mpq_class> amat_det(const amat& A);

/* i-th Fitting ideal: ideal generated by all (cols - i)-minors.  Unit ideal
 * when cols - i <= 0; zero ideal when cols - i > rows. */
ideal_lattice fitting_ideal(const amat& A, int i = 0);

/* Finite abelian group with an action of a finite abelian group `acting`:
 * module elements are row vectors over inv (each coordinate mod inv[t]);
 * generator j of `acting` maps x to x * action[j] (mod moduli). */
struct galois_module {
    fab_group acting;
    std::vector<long> inv;      /* may include any d >= 1; d=1 cols allowed */
    std::vector<imat> action;   /* one per generator of acting */

    long order() const;
    bool is_trivial() const { return order() == 1; }
    imat act_matrix(const gelt& g) const;  /* full rho(g) */
    void validate() const;                 /* commuting, right orders, involution */

    galois_module dual() const;            /* same inv; contragredient action */
    galois_module odd_quotient() const;    /* kill 2-power torsion */
};

/* Cokernel of a presentation over Z[G] (entries must be integral) as a
 * concrete finite module with its induced action.  Throws if infinite.
 * gen_images, when given, receives one row per presentation column: the
 * image of that generator in the coordinates of the returned module. */
galois_module cokernel_module(const fab_group& G, const amat& A, imat* gen_images = nullptr);

/* Submodule of B generated by the rows of K (coordinates mod B.inv), as an
 * abstract module plus the embedding of its abstract generators into B.
 * Throws if the rows do not span an action-stable subgroup. */
struct submodule_result {
    galois_module mod;
    imat inclusion; /* mod generators -> coordinates in B */
};
submodule_result submodule_from_lattice(const galois_module& B, const imat& K);

/* Quotient of B by the submodule generated by the rows of K. */
galois_module quotient_module(const galois_module& B, const imat& K);

/* Presentation of M over Z[G]: relation rows d_t e_t and g_j e_i = (x A_j)_i. */
amat module_presentation(const galois_module& M);
/* Same, pushed to the minus ring of (acting, conj). */
amat module_presentation_minus(const galois_module& M, const minus_ring& mr);

/* Annihilator of M in Z[G] as an ideal lattice. */
ideal_lattice annihilator(const galois_module& M);

/* Compound matrix C_r(A) (all r x r minors, lex subset order) and the higher
 * adjugate adj_r(A) with adj_r(A) * C_r(A) = det(A) * I, verified on return. */
struct compound_result {
    imat compound, adjugate;
    mpz_class det;
};
compound_result compound_and_adjugate(const imat& A, int r);

/* #(B^n / A B^n) vs #(B / det(A)) for a square presentation over the ambient
 * ring; and the character-product factorization of the same count. */
struct size_check_report {
    mpz_class quotient_order;   /* #(B^n / A B^n) */
    mpz_class det_order;        /* #(B / (det A)) */
    bool equal = false;
};
size_check_report module_order_and_size_checks(const amat& A);

/* |det| of the action of x on Q[G]/(conj+1), = |prod over odd chi of chi(x)|. */
mpq_class odd_product_det(const grq& x, const gelt& conj);

} // namespace bst

#endif

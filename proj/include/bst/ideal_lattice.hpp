#ifndef BST_IDEAL_LATTICE_HPP
#define BST_IDEAL_LATTICE_HPP

#include "bst/abelian_group.hpp"
#include "bst/group_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bst {

/* A commutative ring that is free of finite rank as a Z-module (possibly
 * with 2 inverted), described by its structure constants.  Instances:
 * Z[G] and the minus quotient Z[1/2][G]/(conj + 1). */
struct ambient_ring {
    std::string id;
    int dim = 0;
    std::vector<imat> mult; /* mult[i].at(j,k): basis_i * basis_j = sum_k c * basis_k */
    bool invert_two = false;

    std::vector<mpq_class> mul(const std::vector<mpq_class>& a,
                               const std::vector<mpq_class>& b) const;
    std::vector<mpq_class> one() const;
};

ambient_ring group_ring_ambient(const fab_group& G);

/* Minus quotient: basis indexed by orbit representatives of <conj>-cosets;
 * [g * conj] = -[g].  Also carries the projection Q[G] -> minus ring. */
struct minus_ring {
    ambient_ring amb;
    fab_group G;
    gelt conj;
    std::vector<long> reps;      /* element indices of chosen representatives */
    std::vector<int> pos;        /* element index -> rep position */
    std::vector<int> sign;       /* element index -> +1 / -1 */

    std::vector<mpq_class> project(const grq& x) const;
};
minus_ring make_minus_ring(const fab_group& G, const gelt& conj);

/* Finitely generated ideal (or fractional ideal / lattice) of an ambient
 * ring, stored as the row HNF of an integer basis over a global denominator.
 * Rank 0 is the zero ideal, a first-class value. */
struct ideal_lattice {
    ambient_ring amb;
    imat basis;          /* r x dim, HNF rows, canonical */
    mpz_class den = 1;

    int rank() const { return basis.rows; }
    bool is_zero() const { return basis.rows == 0; }
};

ideal_lattice ideal_from_generators(const ambient_ring& amb,
                                    const std::vector<std::vector<mpq_class>>& gens);
ideal_lattice ideal_from_gr_elems(const ambient_ring& amb, const std::vector<grq>& gens);
ideal_lattice ideal_unit(const ambient_ring& amb);

bool ideal_member(const ideal_lattice& I, const std::vector<mpq_class>& x);
bool ideal_member(const ideal_lattice& I, const grq& x);
bool ideal_equals(const ideal_lattice& a, const ideal_lattice& b);
ideal_lattice ideal_product(const ideal_lattice& a, const ideal_lattice& b);
ideal_lattice ideal_sum(const ideal_lattice& a, const ideal_lattice& b);
bool ideal_p_part_equals(const ideal_lattice& a, const ideal_lattice& b, const mpz_class& p);
bool ideal_p_part_contains(const ideal_lattice& big, const ideal_lattice& small_, const mpz_class& p);

/* Image of a Z[G]-ideal in the minus ring (generators projected, then
 * re-spanned; 2 is invertible there). */
ideal_lattice ideal_minus_projection(const ideal_lattice& I, const minus_ring& mr);

/* x * B = v over Q; nullopt if inconsistent. B need not be square. */
std::optional<std::vector<mpq_class>> rational_solve_left(const imat& B,
                                                          const std::vector<mpq_class>& v);

} // namespace bst

#endif

#ifndef BST_ABELIAN_GROUP_HPP
#define BST_ABELIAN_GROUP_HPP

#include "bst/intmat.hpp"

#include <vector>
#include <cstdint>

namespace bst {

using gelt = std::vector<long>; /* element = exponent vector, reduced mod d_i */

/* Finite abelian group in invariant-factor form: d_1 | d_2 | ... | d_k,
 * each d_i >= 2.  The trivial group has an empty factor list.  Elements are
 * indexed lexicographically (last coordinate fastest), which fixes the basis
 * order of all group rings and serializations built on top. */
struct fab_group {
    std::vector<long> inv;

    explicit fab_group(std::vector<long> invariants = {});

    long order() const { return n_; }
    long exponent() const { return inv.empty() ? 1 : inv.back(); }
    int ngens() const { return (int)inv.size(); }

    gelt zero() const { return gelt(inv.size(), 0); }
    gelt gen(int i) const;
    gelt add(const gelt& x, const gelt& y) const;
    gelt neg(const gelt& x) const;
    gelt smul(long k, const gelt& x) const;
    bool is_zero(const gelt& x) const;
    long elt_order(const gelt& x) const;

    long index_of(const gelt& x) const;   /* lexicographic rank */
    gelt elt_at(long idx) const;

    bool operator==(const fab_group& o) const { return inv == o.inv; }
    bool operator!=(const fab_group& o) const { return !(*this == o); }

  private:
    long n_ = 1;
};

/* Closure of a generating set: returns sorted element indices of the
 * generated subgroup. */
std::vector<long> subgroup_closure(const fab_group& G, const std::vector<gelt>& gens);

/* Z^ngens modulo the row span of `relations`, as an invariant-factor group.
 * to_group maps original generator coordinates to group coordinates:
 * an element given by exponents x (length ngens) maps to x * to_group,
 * reduced mod the invariant factors.  Throws if the quotient is infinite. */
struct fab_presented {
    fab_group grp;
    imat to_group;  /* ngens x grp.ngens() */
    imat lift;      /* grp.ngens() x ngens: a preimage in Z^ngens of each group generator */
    gelt project(const std::vector<mpz_class>& x) const;
    gelt project_gen(int i) const;
};
fab_presented structure_from_relations(int ngens, const imat& relations);

/* Invariant factors of the quotient of G by the subgroup generated by
 * `gens`, together with the projection data (a presentation of G/N on
 * the generators of G). */
fab_presented quotient_by_subgroup(const fab_group& G, const std::vector<gelt>& gens);

/* Subgroup of G generated by `gens`, as a standalone invariant-factor group
 * plus expressions of its generators as elements of G. */
struct fab_subgroup {
    fab_group grp;                /* abstract structure of the subgroup */
    std::vector<gelt> embed_gens; /* image in G of each abstract generator */
};
fab_subgroup subgroup_structure(const fab_group& G, const std::vector<gelt>& gens);

/* Odd part: the subgroup of elements of odd order.  Returned as abstract
 * structure plus embedding (used to discard 2-torsion per the Z[1/2]
 * convention). */
fab_subgroup odd_part(const fab_group& G);

} // namespace bst

#endif

#ifndef BST_ABELIAN_FIELD_HPP
#define BST_ABELIAN_FIELD_HPP

#include "bst/abelian_group.hpp"
#include "bst/galois_structure.hpp"
#include "bst/unit_group_modm.hpp"

#include <vector>

namespace bst {

/* Abelian extension H/Q cut out by a subgroup of (Z/m)^*: H is the fixed
 * field of the subgroup inside Q(zeta_m).  The stored modulus is always the
 * exact conductor (the constructor reduces), so inertia and Frobenius data
 * read off the standard conductor-ramification correspondence. */
struct abelian_field_q {
    long conductor = 1;
    unit_group_modm U;              /* (Z/conductor)^* */
    std::vector<gelt> subgroup_gens;/* subgroup cut out, in U.grp coordinates */
    fab_presented to_galois;        /* (Z/conductor)^* -> G */
    fab_group G;
    galois_structure gal;           /* conj and ramified-place data, keyed "p" */
    std::vector<long> s_ram;        /* ramified rational primes, ascending */

    long degree() const { return G.order(); }
    gelt artin(long a) const;       /* class of the Artin symbol at a, gcd(a, conductor) = 1 */
    gelt frobenius(long p) const;   /* for p unramified: artin(p); ramified: stored rep */
    bool is_ramified(long p) const;
    bool is_cm() const;             /* complex conjugation is nontrivial */
    /* largest w with zeta_w in H, i.e. #roots of unity of H */
    long num_roots_of_unity() const;
};

/* subgroup_residues: integers generating the subgroup of (Z/m)^* to fix. */
abelian_field_q make_abelian_field(long m, const std::vector<long>& subgroup_residues);

/* The maximal subfield of H unramified at every prime of J: quotient of G
 * by the inertia subgroups at J. */
abelian_field_q maximal_unramified_at(const abelian_field_q& F, const std::vector<long>& J);

} // namespace bst

#endif

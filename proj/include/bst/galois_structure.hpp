#ifndef BST_GALOIS_STRUCTURE_HPP
#define BST_GALOIS_STRUCTURE_HPP

#include "bst/abelian_group.hpp"
#include "bst/group_ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace bst {

/* Per-place ramification data: inertia subgroup generators, a Frobenius
 * representative (well-defined mod inertia), and the decomposition group
 * (generated by the two). */
struct place_data {
    std::vector<gelt> inertia_gens;
    gelt frob;
};

struct galois_structure {
    fab_group G;
    gelt conj; /* complex conjugation; must have order 2 */
    std::map<std::string, place_data> places;

    void validate() const; /* conj order 2, I_v <= G_v by construction */
    std::vector<long> inertia_indices(const std::string& v) const;  /* closure of I_v */
    std::vector<long> decomp_indices(const std::string& v) const;   /* closure of I_v + frob */
};

enum class canonical_kind { norm_of_inertia, unramified_idempotent_numerator, one_minus_frob_times_e };

/* N I_v, e_v = N I_v / #I_v, or 1 - sigma_v e_v, as Q[G]-elements. */
grq canonical_element(const galois_structure& gal, const std::string& v, canonical_kind kind);

} // namespace bst

#endif

#include "bst/galois_structure.hpp"

#include <stdexcept>

namespace bst {

void galois_structure::validate() const
{
    if (G.elt_order(conj) != 2)
        throw std::invalid_argument("galois_structure: conjugation must have order 2");
}

std::vector<long> galois_structure::inertia_indices(const std::string& v) const
{
    auto it = places.find(v);
    if (it == places.end()) throw std::invalid_argument("unlabeled place: " + v);
    return subgroup_closure(G, it->second.inertia_gens);
}

std::vector<long> galois_structure::decomp_indices(const std::string& v) const
{
    auto it = places.find(v);
    if (it == places.end()) throw std::invalid_argument("unlabeled place: " + v);
    std::vector<gelt> gens = it->second.inertia_gens;
    gens.push_back(it->second.frob);
    return subgroup_closure(G, gens);
}

grq canonical_element(const galois_structure& gal, const std::string& v, canonical_kind kind)
{
    auto it = gal.places.find(v);
    if (it == gal.places.end()) throw std::invalid_argument("unlabeled place: " + v);
    std::vector<long> I = gal.inertia_indices(v);

    grq ni(gal.G);
    for (long idx : I) ni.c[(size_t)idx] += 1;
    if (kind == canonical_kind::norm_of_inertia) return ni;

    grq e = gr_smul(mpq_class(1, (long)I.size()), ni);
    if (kind == canonical_kind::unramified_idempotent_numerator) return e;

    grq sigma = grq::of_element(gal.G, it->second.frob);
    return gr_sub(grq::scalar(gal.G, 1), gr_mul(sigma, e));
}

} // namespace bst

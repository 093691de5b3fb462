#ifndef BST_RAYCLASS_HPP
#define BST_RAYCLASS_HPP

#include "bst/abelian_group.hpp"
#include "bst/fitting.hpp"
#include "bst/quadform.hpp"

#include <vector>

namespace bst {

/* Class group with modulus the product of the primes above T: quotient of
 * the ideals coprime to T by principal ideals with a generator congruent to
 * 1 at every prime above T.  Built from the extension
 *   (O/t)^* / image(mu)  ->  Cl^T  ->  Cl
 * with explicit ideal representatives, carrying the conjugation action. */
struct ray_class_group_t {
    imag_quad_field K;
    std::vector<long> T;
    std::vector<residue_field> comps;    /* one per prime above T */
    std::vector<int> conj_comp;          /* index of the conjugate component */
    form_class_group_t cl;
    std::vector<quad_ideal> class_reps;  /* coprime-to-T ideal per Cl generator */
    std::vector<long> base_ells;         /* split primes carrying the presentation */
    std::vector<quad_ideal> base_primes; /* one chosen prime above each */
    fab_presented pres;                  /* residue gens + class reps -> Cl^T */
    fab_group grp;
    galois_module mod;                   /* action of conjugation, G = Z/2 */

    long order() const { return grp.order(); }
    /* class of an ideal coprime to T */
    gelt class_of_ideal(const quad_ideal& I) const;
    /* class of a principal ideal with marked generator (tracks the residue) */
    gelt class_of_elt(const quad_elt& u) const;
};

ray_class_group_t ray_class_group(long D, const std::vector<long>& T);

} // namespace bst

#endif

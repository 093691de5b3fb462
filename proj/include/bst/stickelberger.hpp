#ifndef BST_STICKELBERGER_HPP
#define BST_STICKELBERGER_HPP

#include "bst/abelian_field.hpp"
#include "bst/dirichlet.hpp"
#include "bst/group_ring.hpp"
#include "bst/ideal_lattice.hpp"

#include <string>
#include <vector>

namespace bst {

/* Theta element for (H, S, T): rational group-ring element whose character
 * values are the depleted/smoothed L-values at 0. */
struct stickelberger_element {
    std::vector<long> s_finite; /* finite primes of S; infinity is implicit */
    std::vector<long> t_set;
    grq element;
};

/* Value at 0 of the conductor-level partial zeta attached to a mod m. */
mpq_class partial_zeta_zero(long m, long a);

/* The Dirichlet character of modulus cond(F) pulling back a character of
 * the Galois group through the Artin map. */
dirichlet_character pullback_character(const abelian_field_q& F, const character& chi);

/* Theta element: S_finite may omit ramified primes (the base element is then
 * assembled character by character); throws on S/T overlap or ramified T. */
stickelberger_element theta(const abelian_field_q& F, std::vector<long> S_finite,
                            std::vector<long> T);

/* Is the group of roots of unity congruent to 1 at all primes above T
 * trivial?  A root of exact order d is 1 at the primes above ell iff d is a
 * power of ell, so the check reduces to the residue characteristics of T
 * against #mu(H). */
struct drcond_report {
    bool ok = false;
    long roots_of_unity = 1;
    bool two_residue_criterion = false;
    std::string reason;
};
drcond_report check_drcond(const abelian_field_q& F, const std::vector<long>& T);

bool check_integrality(const stickelberger_element& th);

/* The ideal (Theta^#_{S_inf,T}) * prod_{v ram} (N I_v, 1 - sigma_v e_v),
 * expanded over all 2^{#S_ram} generator choices; den = 1 asserted. */
ideal_lattice sinnott_kurihara_ideal(const abelian_field_q& F, const std::vector<long>& T);

/* p-modified variant: the base element absorbs the (1 - sigma_v e_v) factors
 * at v | p and the product runs over ramified v not above p; integral at p
 * but possibly with p-free denominators. */
ideal_lattice sinnott_kurihara_ideal_p_modified(const abelian_field_q& F,
                                                const std::vector<long>& T, long p);

} // namespace bst

#endif

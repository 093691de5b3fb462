#ifndef BST_CHARACTER_HPP
#define BST_CHARACTER_HPP

#include "bst/abelian_group.hpp"
#include "bst/group_ring.hpp"
#include "bst/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace bst {

/* Character of a finite abelian group, stored as exponents of an abstract
 * primitive root of unity of order exponent(G): chi(gen_i) = zeta^(exps[i]),
 * where exps[i] is a multiple of exponent(G)/d_i. */
struct character {
    fab_group G;
    std::vector<long> exps;

    /* exponent t with chi(x) = zeta_E^t, E = exponent(G) */
    long eval_exponent(const gelt& x) const;
    cyc eval(const gelt& x) const;       /* value in Q(zeta_E) */
    cyc eval(const grq& a) const;        /* extend linearly to the group ring */
    long order() const;
    bool is_trivial() const;
    bool is_odd(const gelt& conj) const; /* chi(conj) = -1 */
    character inverse() const;
    character mul(const character& o) const;

    /* Evaluate into Z/p^m: requires order() | p-1 (values are Teichmueller
     * lifts, i.e. powers of a fixed element of order ord in (Z/p^m)^*).
     * Throws otherwise -- flagged per the O = Z_p restriction. */
    mpz_class eval_mod(const gelt& x, const mpz_class& p, int m) const;
};

std::vector<character> enumerate_characters(const fab_group& G);

/* An element of order n in (Z/p^m)^*, for n | p-1 (Teichmueller-style:
 * r = w^((p-1)/n * p^(m-1)) for a primitive root w mod p^m). */
mpz_class root_of_unity_mod(long n, const mpz_class& p, int m);

} // namespace bst

#endif

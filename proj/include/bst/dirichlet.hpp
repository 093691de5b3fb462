#ifndef BST_DIRICHLET_HPP
#define BST_DIRICHLET_HPP

#include "bst/character.hpp"
#include "bst/cyclotomic.hpp"
#include "bst/unit_group_modm.hpp"

#include <vector>

namespace bst {

/* Dirichlet character: a character of (Z/n)^* together with the unit-group
 * structure it lives on.  Values are cyclotomic; 0 off the units. */
struct dirichlet_character {
    long modulus = 1;
    unit_group_modm U;
    character chi;

    cyc value(long a) const;            /* 0 when gcd(a, modulus) > 1 */
    long value_exponent(long a) const;  /* chi(a) = zeta_E^t; throws off units */
    bool is_odd() const;                /* chi(-1) = -1 */
    long order() const { return chi.order(); }
    long conductor() const;
    bool is_primitive() const { return conductor() == modulus; }
    dirichlet_character primitive() const; /* the inducing character at the conductor */
    dirichlet_character inverse() const;
    dirichlet_character mul(const dirichlet_character& o) const; /* same modulus */
    mpz_class value_mod(long a, const mpz_class& p, int m) const; /* into Z/p^m */
};

dirichlet_character trivial_character(long n);
dirichlet_character quadratic_character(long D); /* Kronecker symbol, modulus |D| */
std::vector<dirichlet_character> characters_mod(long n);

mpq_class bernoulli_number(int k);
/* B_k(x) evaluated exactly at a rational point. */
mpq_class bernoulli_poly(int k, const mpq_class& x);
/* Generalized Bernoulli number of a primitive character (throws otherwise). */
cyc generalized_bernoulli(const dirichlet_character& chi, int k);
/* L(chi, 1-k) = -B_{k,chi}/k for k >= 1, chi primitive. */
cyc L_at_nonpositive(const dirichlet_character& chi, int k);

} // namespace bst

#endif

#ifndef BST_QUADFORM_HPP
#define BST_QUADFORM_HPP

#include "bst/abelian_group.hpp"
#include "bst/fitting.hpp"
#include "bst/intmat.hpp"

#include <gmpxx.h>
#include <vector>

namespace bst {

/* Imaginary quadratic field of fundamental discriminant D < 0. */
struct imag_quad_field {
    long D = -3;
    long w() const { return D == -3 ? 6 : D == -4 ? 4 : 2; } /* #roots of unity */
};
bool is_fundamental_discriminant(long D);
imag_quad_field make_imag_quad_field(long D); /* throws unless fundamental */

/* Element (x + y sqrt(D)) / 2 of the field; integral iff x = y D mod 2.
 * All arithmetic keeps that parity invariant. */
struct quad_elt {
    mpz_class x, y;
};
quad_elt qe_int(long n);                 /* the rational integer n */
quad_elt qe_add(const quad_elt& u, const quad_elt& v);
quad_elt qe_mul(long D, const quad_elt& u, const quad_elt& v);
quad_elt qe_conj(const quad_elt& u);
mpz_class qe_norm(long D, const quad_elt& u);
bool qe_eq(const quad_elt& u, const quad_elt& v);

/* Positive definite binary quadratic form a x^2 + b x y + c y^2. */
struct quad_form {
    long a = 1, b = 0, c = 0;
    bool operator==(const quad_form& o) const { return a == o.a && b == o.b && c == o.c; }
};
long form_disc(const quad_form& f);
bool form_is_reduced(const quad_form& f);
quad_form reduce_form(quad_form f);
quad_form principal_form(long D);
quad_form inverse_form(const quad_form& f);   /* (a, -b, c) */
/* Gauss/Dirichlet composition computed on the forms themselves (congruence
 * conditions on the middle coefficient), independent of ideal arithmetic. */
quad_form compose_forms(long D, const quad_form& f1, const quad_form& f2);

/* Integral ideal m * (a Z + (b + sqrt(D))/2 Z); 0 <= b < 2a, 4a | b^2 - D.
 * Norm = m^2 a. */
struct quad_ideal {
    long D = -3;
    mpz_class m = 1, a = 1, b;
};
quad_ideal make_ideal(long D, const mpz_class& m, const mpz_class& a, const mpz_class& b);
quad_ideal ideal_one(long D);
quad_ideal ideal_mul(const quad_ideal& I, const quad_ideal& J);
quad_ideal ideal_pow(const quad_ideal& I, long n);
quad_ideal ideal_conj(const quad_ideal& I);
quad_ideal ideal_of_elt(long D, const quad_elt& u); /* the principal ideal (u) */
mpz_class ideal_norm(const quad_ideal& I);
bool ideal_eq(const quad_ideal& I, const quad_ideal& J);
bool ideal_contains(const quad_ideal& I, const quad_elt& u);

quad_form ideal_to_form(const quad_ideal& I);       /* reduced form of the class */
quad_ideal form_to_ideal(long D, const quad_form& f);

/* The class group from exhaustive reduced-form enumeration, with the map
 * class -> abstract group element and the inversion (= conjugation) action. */
struct form_class_group_t {
    imag_quad_field K;
    std::vector<quad_form> classes;   /* all reduced forms, lexicographic (a, b) */
    fab_group grp;
    std::vector<gelt> class_elt;      /* grp element of each class */
    galois_module mod;                /* conjugation acts by inversion */

    long h() const { return (long)classes.size(); }
    long index_of(const quad_form& reduced) const;
    gelt elt_of_ideal(const quad_ideal& I) const;
};
form_class_group_t form_class_group(long D);

enum class splitting_type { split, inert, ramified };
struct splitting_result {
    splitting_type type;
    std::vector<quad_ideal> primes; /* 2 conjugate for split, 1 otherwise */
};
splitting_result prime_splitting(long D, long p);

/* Residue field O / P for a prime P above ell, with a multiplicative
 * generator and a full discrete-log table (fields stay tiny). */
struct residue_field {
    long D = -3, ell = 2;
    bool split = false;
    quad_ideal P;
    long q = 2;                  /* #(O/P) */
    quad_elt gen;
    std::vector<long> dlog_tab;  /* residue key -> dlog, -1 at 0 */

    long key(const quad_elt& u) const;   /* canonical residue index in [0, q) */
    bool is_coprime(const quad_elt& u) const;
    long dlog(const quad_elt& u) const;  /* throws on non-units */
};
residue_field make_residue_field(long D, const quad_ideal& P, long ell, bool split);

/* Generator search by short-vector enumeration at the exact norm; optionally
 * sweeps generator * (root of unity) for congruence to 1 at every listed
 * residue component, reporting the residue obstruction when the sweep fails. */
struct principal_result {
    bool principal = false;
    quad_elt gen;                   /* set when principal */
    bool congruent = false;         /* gen = 1 at every component */
    std::vector<long> obstruction;  /* dlogs of gen per component otherwise */
};
principal_result principal_generator(const quad_ideal& I,
                                     const std::vector<residue_field>* congruence = nullptr);

/* For each prime above S: the generator of its smallest principal power,
 * with the full valuation matrix over all those primes. */
struct s_unit_data {
    std::vector<quad_ideal> primes;
    std::vector<quad_elt> gens;     /* gens[i] generates primes[i]^(class order) */
    imat valuations;                /* gens x primes */
};
s_unit_data s_units(long D, const std::vector<long>& S);

long ideal_valuation(const quad_ideal& P, const quad_elt& u); /* ord_P, P prime */

} // namespace bst

#endif

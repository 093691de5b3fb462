#ifndef BST_GROUP_RING_HPP
#define BST_GROUP_RING_HPP

#include "bst/abelian_group.hpp"

#include <gmpxx.h>
#include <vector>

namespace bst {

/* Element of Q[G] (or Z[G]: integrality is a checkable property, not a
 * separate type).  Coefficients are dense in the lexicographic element
 * order of G. */
struct grq {
    fab_group G;
    std::vector<mpq_class> c;

    grq() : G(std::vector<long>{}), c(1, mpq_class(0)) {}
    explicit grq(const fab_group& g) : G(g), c((size_t)g.order(), mpq_class(0)) {}

    static grq scalar(const fab_group& g, const mpq_class& v);
    static grq of_element(const fab_group& g, const gelt& x); /* the basis element [x] */

    mpq_class& coeff(const gelt& x) { return c[(size_t)G.index_of(x)]; }
    const mpq_class& coeff(const gelt& x) const { return c[(size_t)G.index_of(x)]; }

    bool is_zero() const;
    bool is_integral() const;
};

grq gr_add(const grq& a, const grq& b);
grq gr_sub(const grq& a, const grq& b);
grq gr_mul(const grq& a, const grq& b);
grq gr_smul(const mpq_class& s, const grq& a);
grq gr_sharp(const grq& a);        /* involution induced by g -> g^{-1} */
mpq_class gr_augmentation(const grq& a);
bool gr_eq(const grq& a, const grq& b);

/* Multiplication-by-a matrix in the regular representation (order x order,
 * rational entries as a pair of integer matrix and denominator). */
struct qmat {
    imat num;
    mpz_class den = 1;
};
qmat gr_regular_matrix(const grq& a);

} // namespace bst

#endif

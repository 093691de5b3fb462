#ifndef BST_CYCLOTOMIC_HPP
#define BST_CYCLOTOMIC_HPP

#include <gmpxx.h>
#include <vector>

namespace bst {

/* Element of Q(zeta_e), stored as a polynomial in zeta of degree < phi(e)
 * reduced mod the e-th cyclotomic polynomial.  Mixed-order arithmetic lifts
 * both operands to lcm of the orders via zeta_e -> zeta_{e'}^{e'/e}.
 * Orders stay small (<= a few hundred), so dense polynomial arithmetic with
 * mpq coefficients is fine. */
struct cyc {
    long order = 1;
    std::vector<mpq_class> c; /* size phi(order); c[i] multiplies zeta^i */

    cyc() : c(1, mpq_class(0)) {}
    cyc(const mpq_class& q) : c(1, q) {}              /* rational constant */
    cyc(long v) : c(1, mpq_class(v)) {}
    static cyc root_of_unity(long e, long k);         /* zeta_e^k */

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_value() const;                 /* throws if not rational */
    cyc conj() const;                                 /* zeta -> zeta^{-1} */
};

cyc cyc_add(const cyc& x, const cyc& y);
cyc cyc_sub(const cyc& x, const cyc& y);
cyc cyc_mul(const cyc& x, const cyc& y);
cyc cyc_neg(const cyc& x);
bool cyc_eq(const cyc& x, const cyc& y);
cyc cyc_pow(const cyc& x, long n);                    /* n >= 0 */

/* e-th cyclotomic polynomial, integer coefficients, ascending degree. */
const std::vector<mpz_class>& cyclotomic_poly(long e);

long euler_phi(long n);

} // namespace bst

#endif

#ifndef BST_INTMAT_HPP
#define BST_INTMAT_HPP

#include <gmpxx.h>
#include <vector>
#include <string>

namespace bst {

/* Dense matrix over Z (arbitrary precision).  Everything downstream --
 * lattice arithmetic, presentations, class group structure -- reduces to
 * row HNF / SNF computations on these. Sizes stay small (dim <= ~200),
 * so the algorithms are the plain gcd-elimination ones. */
struct imat {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;

    imat() = default;
    imat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    mpz_class& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const mpz_class& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static imat identity(int n);
    bool operator==(const imat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

imat mat_mul(const imat& x, const imat& y);
imat mat_transpose(const imat& x);
imat mat_vstack(const imat& top, const imat& bottom);

/* Row Hermite normal form of the row span of A: returns an r x cols matrix
 * (r = rank) in row echelon form with positive pivots and entries above each
 * pivot reduced into [0, pivot). Zero rows are dropped. */
imat hnf_rows(const imat& A);

/* Is v in the integer row span of the HNF matrix H? (H must be an hnf_rows
 * output.)  If coeffs != nullptr and the answer is yes, *coeffs gets x with
 * x * H = v. */
bool hnf_member(const imat& H, const std::vector<mpz_class>& v,
                std::vector<mpz_class>* coeffs = nullptr);

/* Smith normal form: U * A * V = D with U, V unimodular, D diagonal with
 * d_i | d_{i+1}, d_i >= 0.  Vinv is the inverse of V (tracked, not inverted
 * after the fact). */
struct snf_result {
    imat D, U, V, Vinv;
};
snf_result smith_normal_form(const imat& A);

/* Basis (as rows) of the left kernel { x : x * A = 0 }. */
imat left_kernel(const imat& A);

/* Determinant of a square matrix (fraction-free Gaussian elimination). */
mpz_class mat_det(const imat& A);

std::string mat_to_string(const imat& A);

} // namespace bst

#endif

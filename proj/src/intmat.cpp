#include "bst/intmat.hpp"

#include <stdexcept>
#include <sstream>

namespace bst {

imat imat::identity(int n)
{
    imat I(n, n);
    for (int i = 0; i < n; i++) I.at(i, i) = 1;
    return I;
}

imat mat_mul(const imat& x, const imat& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    imat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; i++)
        for (int k = 0; k < x.cols; k++) {
            const mpz_class& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; j++)
                z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

imat mat_transpose(const imat& x)
{
    imat t(x.cols, x.rows);
    for (int i = 0; i < x.rows; i++)
        for (int j = 0; j < x.cols; j++)
            t.at(j, i) = x.at(i, j);
    return t;
}

imat mat_vstack(const imat& top, const imat& bottom)
{
    if (top.rows == 0) return bottom;
    if (bottom.rows == 0) return top;
    if (top.cols != bottom.cols) throw std::invalid_argument("mat_vstack: width mismatch");
    imat z(top.rows + bottom.rows, top.cols);
    for (int i = 0; i < top.rows; i++)
        for (int j = 0; j < top.cols; j++) z.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows; i++)
        for (int j = 0; j < bottom.cols; j++) z.at(top.rows + i, j) = bottom.at(i, j);
    return z;
}

static void row_swap(imat& A, int i, int j)
{
    for (int k = 0; k < A.cols; k++) std::swap(A.at(i, k), A.at(j, k));
}

/* rows[i] += q * rows[j] */
static void row_addmul(imat& A, int i, int j, const mpz_class& q)
{
    if (q == 0) return;
    for (int k = 0; k < A.cols; k++) A.at(i, k) += q * A.at(j, k);
}

/* Unimodular 2-row transform putting gcd(A[r1][col], A[r2][col]) into
 * position (r1, col) and 0 into (r2, col). */
static void rows_gcd_transform(imat& A, int r1, int r2, int col)
{
    const mpz_class a = A.at(r1, col), b = A.at(r2, col);
    if (b == 0) return;
    if (a == 0) { row_swap(A, r1, r2); return; }
    mpz_class g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class p = a / g, q = b / g;
    /* (row1, row2) <- (u*row1 + v*row2, -q*row1 + p*row2); det = u*p + v*q = 1 */
    for (int k = 0; k < A.cols; k++) {
        mpz_class x = A.at(r1, k), y = A.at(r2, k);
        A.at(r1, k) = u * x + v * y;
        A.at(r2, k) = -q * x + p * y;
    }
}

imat hnf_rows(const imat& A0)
{
    imat A = A0;
    int row = 0;
    for (int col = 0; col < A.cols && row < A.rows; col++) {
        int pivot = -1;
        for (int i = row; i < A.rows; i++)
            if (A.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        row_swap(A, row, pivot);
        for (int i = row + 1; i < A.rows; i++)
            rows_gcd_transform(A, row, i, col);
        if (A.at(row, col) < 0)
            for (int k = 0; k < A.cols; k++) A.at(row, k) = -A.at(row, k);
        /* reduce the entries above the pivot into [0, pivot) */
        for (int i = 0; i < row; i++) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), A.at(i, col).get_mpz_t(), A.at(row, col).get_mpz_t());
            row_addmul(A, i, row, -q);
        }
        row++;
    }
    imat H(row, A.cols);
    for (int i = 0; i < row; i++)
        for (int j = 0; j < A.cols; j++) H.at(i, j) = A.at(i, j);
    return H;
}

bool hnf_member(const imat& H, const std::vector<mpz_class>& v,
                std::vector<mpz_class>* coeffs)
{
    if ((int)v.size() != H.cols) throw std::invalid_argument("hnf_member: size mismatch");
    std::vector<mpz_class> r = v;
    std::vector<mpz_class> x(H.rows, 0);
    int row = 0;
    for (int col = 0; col < H.cols; col++) {
        if (row < H.rows && H.at(row, col) != 0) {
            /* pivot column of row `row` */
            if (r[col] % H.at(row, col) != 0) return false;
            mpz_class q = r[col] / H.at(row, col);
            if (q != 0)
                for (int k = col; k < H.cols; k++) r[k] -= q * H.at(row, k);
            x[row] = q;
            row++;
        } else if (r[col] != 0) {
            return false;
        }
    }
    for (int col = 0; col < H.cols; col++)
        if (r[col] != 0) return false;
    if (coeffs) *coeffs = x;
    return true;
}

snf_result smith_normal_form(const imat& A)
{
    snf_result s;
    s.D = A;
    s.U = imat::identity(A.rows);
    s.V = imat::identity(A.cols);
    s.Vinv = imat::identity(A.cols);
    imat& D = s.D;

    auto col_swap = [&](int i, int j) {
        for (int k = 0; k < D.rows; k++) std::swap(D.at(k, i), D.at(k, j));
        for (int k = 0; k < s.V.rows; k++) std::swap(s.V.at(k, i), s.V.at(k, j));
        /* inverse of a swap is the same swap, applied to rows of Vinv */
        for (int k = 0; k < s.Vinv.cols; k++) std::swap(s.Vinv.at(i, k), s.Vinv.at(j, k));
    };
    /* col[i] += q * col[j];  Vinv row[j] -= q * row[i] */
    auto col_addmul = [&](int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int k = 0; k < D.rows; k++) D.at(k, i) += q * D.at(k, j);
        for (int k = 0; k < s.V.rows; k++) s.V.at(k, i) += q * s.V.at(k, j);
        for (int k = 0; k < s.Vinv.cols; k++) s.Vinv.at(j, k) -= q * s.Vinv.at(i, k);
    };
    auto row_swap2 = [&](int i, int j) {
        row_swap(D, i, j);
        row_swap(s.U, i, j);
    };
    auto row_addmul2 = [&](int i, int j, const mpz_class& q) {
        row_addmul(D, i, j, q);
        row_addmul(s.U, i, j, q);
    };

    int n = std::min(D.rows, D.cols);
    for (int t = 0; t < n; t++) {
        for (;;) {
            /* find a nonzero pivot in the remaining block */
            int pi = -1, pj = -1;
            for (int i = t; i < D.rows && pi < 0; i++)
                for (int j = t; j < D.cols; j++)
                    if (D.at(i, j) != 0) { pi = i; pj = j; break; }
            if (pi < 0) goto done;
            row_swap2(t, pi);
            col_swap(t, pj);
            /* clear column t */
            bool again = false;
            for (int i = t + 1; i < D.rows; i++) {
                while (D.at(i, t) != 0) {
                    mpz_class q = D.at(i, t) / D.at(t, t);
                    row_addmul2(i, t, -q);
                    if (D.at(i, t) != 0) row_swap2(t, i);
                }
            }
            for (int j = t + 1; j < D.cols; j++) {
                while (D.at(t, j) != 0) {
                    mpz_class q = D.at(t, j) / D.at(t, t);
                    col_addmul(j, t, -q);
                    if (D.at(t, j) != 0) { col_swap(t, j); again = true; }
                }
            }
            if (again) continue; /* column clearing may have refilled column t */
            bool colclear = true;
            for (int i = t + 1; i < D.rows; i++)
                if (D.at(i, t) != 0) colclear = false;
            if (!colclear) continue;
            /* divisibility fixup: ensure D[t][t] divides everything below-right */
            bool fixed = true;
            for (int i = t + 1; i < D.rows && fixed; i++)
                for (int j = t + 1; j < D.cols; j++)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        row_addmul2(t, i, 1); /* bring the bad entry into row t */
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
        if (D.at(t, t) < 0) {
            for (int k = 0; k < D.cols; k++) D.at(t, k) = -D.at(t, k);
            for (int k = 0; k < s.U.cols; k++) s.U.at(t, k) = -s.U.at(t, k);
        }
    }
done:
    return s;
}

imat left_kernel(const imat& A)
{
    /* Row-reduce [A | I]; rows whose A-part vanished give the kernel. */
    imat M(A.rows, A.cols + A.rows);
    for (int i = 0; i < A.rows; i++) {
        for (int j = 0; j < A.cols; j++) M.at(i, j) = A.at(i, j);
        M.at(i, A.cols + i) = 1;
    }
    imat H = hnf_rows(M);
    std::vector<int> ker_rows;
    for (int i = 0; i < H.rows; i++) {
        bool zero = true;
        for (int j = 0; j < A.cols; j++)
            if (H.at(i, j) != 0) { zero = false; break; }
        if (zero) ker_rows.push_back(i);
    }
    imat K((int)ker_rows.size(), A.rows);
    for (size_t i = 0; i < ker_rows.size(); i++)
        for (int j = 0; j < A.rows; j++)
            K.at((int)i, j) = H.at(ker_rows[i], A.cols + j);
    return K;
}

mpz_class mat_det(const imat& A0)
{
    if (A0.rows != A0.cols) throw std::invalid_argument("mat_det: not square");
    int n = A0.rows;
    if (n == 0) return 1;
    imat A = A0;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (A.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; i++)
                if (A.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            row_swap(A, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++) {
                A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
            }
        prev = A.at(k, k);
    }
    return sign > 0 ? A.at(n - 1, n - 1) : mpz_class(-A.at(n - 1, n - 1));
}

std::string mat_to_string(const imat& A)
{
    std::ostringstream os;
    for (int i = 0; i < A.rows; i++) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < A.cols; j++) os << (j ? " " : "") << A.at(i, j).get_str();
        os << "]";
    }
    return os.str();
}

} // namespace bst

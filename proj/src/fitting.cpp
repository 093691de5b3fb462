#include "bst/fitting.hpp"

#include <numeric>
#include <stdexcept>

namespace bst {

amat amat::zero(const ambient_ring& amb, int r, int c)
{
    amat A;
    A.amb = amb;
    A.rows = r;
    A.cols = c;
    A.e.assign((size_t)r * c, std::vector<mpq_class>((size_t)amb.dim, mpq_class(0)));
    return A;
}

std::vector<mpq_class> amat_det(const amat& A)
{
    if (A.rows != A.cols) throw std::invalid_argument("amat_det: not square");
    int n = A.rows;
    if (n > 8) throw std::invalid_argument("amat_det: size guard n <= 8 exceeded");
    std::vector<mpq_class> zero((size_t)A.amb.dim, mpq_class(0));
    if (n == 0) {
        auto one = A.amb.one();
        return one;
    }
    /* f[mask] = det of the submatrix on rows 0..popcount(mask)-1 and column
     * set mask (Laplace DP over the last processed row). */
    std::vector<std::vector<mpq_class>> f((size_t)1 << n, zero);
    f[0] = A.amb.one();
    for (unsigned mask = 1; mask < (1u << n); mask++) {
        int r = __builtin_popcount(mask) - 1;
        auto& out = f[mask];
        int pos = 0; /* index of column j within mask */
        for (int j = 0; j < n; j++) {
            if (!(mask & (1u << j))) continue;
            const auto& sub = f[mask & ~(1u << j)];
            bool subzero = true;
            for (const auto& v : sub)
                if (v != 0) { subzero = false; break; }
            if (!subzero) {
                auto term = A.amb.mul(sub, A.at(r, j));
                if (pos % 2 == 0)
                    for (int k = 0; k < A.amb.dim; k++) out[(size_t)k] += term[(size_t)k];
                else
                    for (int k = 0; k < A.amb.dim; k++) out[(size_t)k] -= term[(size_t)k];
            }
            pos++;
        }
    }
    return f[((size_t)1 << n) - 1];
}

static void subsets_of_size(int n, int r, std::vector<std::vector<int>>& out)
{
    std::vector<int> cur(r);
    for (int i = 0; i < r; i++) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - r + i) i--;
        if (i < 0) break;
        cur[i]++;
        for (int j = i + 1; j < r; j++) cur[j] = cur[j - 1] + 1;
    }
}

ideal_lattice fitting_ideal(const amat& A, int i)
{
    int s = A.cols - i;
    if (s <= 0) return ideal_unit(A.amb);
    if (s > A.rows) { /* no minors of that size: zero ideal */
        ideal_lattice z;
        z.amb = A.amb;
        z.basis = imat(0, A.amb.dim);
        return z;
    }
    if (s > 8) throw std::invalid_argument("fitting_ideal: minor size guard n <= 8 exceeded");
    std::vector<std::vector<int>> rsets, csets;
    subsets_of_size(A.rows, s, rsets);
    subsets_of_size(A.cols, s, csets);
    std::vector<std::vector<mpq_class>> gens;
    for (const auto& R : rsets)
        for (const auto& C : csets) {
            amat sub = amat::zero(A.amb, s, s);
            for (int a = 0; a < s; a++)
                for (int b = 0; b < s; b++) sub.at(a, b) = A.at(R[(size_t)a], C[(size_t)b]);
            gens.push_back(amat_det(sub));
        }
    return ideal_from_generators(A.amb, gens);
}

long galois_module::order() const
{
    long n = 1;
    for (long d : inv) n *= d;
    return n;
}

imat galois_module::act_matrix(const gelt& g) const
{
    int k = (int)inv.size();
    imat M = imat::identity(k);
    for (size_t j = 0; j < g.size(); j++)
        for (long t = 0; t < g[j]; t++) M = mat_mul(M, action[j]);
    /* reduce column t mod inv[t] */
    for (int i = 0; i < k; i++)
        for (int t = 0; t < k; t++) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), M.at(i, t).get_mpz_t(), mpz_class(inv[(size_t)t]).get_mpz_t());
            M.at(i, t) = r;
        }
    return M;
}

static bool mat_eq_mod(const imat& A, const imat& B, const std::vector<long>& inv)
{
    for (int i = 0; i < A.rows; i++)
        for (int t = 0; t < A.cols; t++)
            if ((A.at(i, t) - B.at(i, t)) % inv[(size_t)t] != 0) return false;
    return true;
}

void galois_module::validate() const
{
    int k = (int)inv.size();
    if ((int)action.size() != acting.ngens())
        throw std::invalid_argument("galois_module: one action matrix per generator required");
    for (const auto& A : action)
        if (A.rows != k || A.cols != k)
            throw std::invalid_argument("galois_module: action matrix shape");
    for (size_t a = 0; a < action.size(); a++)
        for (size_t b = a + 1; b < action.size(); b++)
            if (!mat_eq_mod(mat_mul(action[a], action[b]), mat_mul(action[b], action[a]), inv))
                throw std::invalid_argument("galois_module: action does not commute");
    for (int j = 0; j < acting.ngens(); j++) {
        gelt g = acting.zero();
        /* order of generator j divides inv factor of acting group */
        imat M = imat::identity(k);
        for (long t = 0; t < acting.inv[(size_t)j]; t++) M = mat_mul(M, action[(size_t)j]);
        if (!mat_eq_mod(M, imat::identity(k), inv))
            throw std::invalid_argument("galois_module: action order mismatch");
        (void)g;
    }
}

galois_module galois_module::dual() const
{
    /* contragredient: coords of g.f_t in the dual basis are
     * c_s = d_s * rho(g^{-1})(s,t) / d_t, an exact division for any valid
     * action matrix (d_s * entry = 0 mod d_t). */
    galois_module D;
    D.acting = acting;
    D.inv = inv;
    int k = (int)inv.size();
    for (int j = 0; j < acting.ngens(); j++) {
        imat R = act_matrix(acting.neg(acting.gen(j)));
        imat B(k, k);
        for (int t = 0; t < k; t++)
            for (int s = 0; s < k; s++) {
                mpz_class num = mpz_class(inv[(size_t)s]) * R.at(s, t);
                if (num % inv[(size_t)t] != 0)
                    throw std::logic_error("dual: invalid action matrix");
                mpz_class r;
                mpz_class c = num / inv[(size_t)t];
                mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mpz_class(inv[(size_t)s]).get_mpz_t());
                /* dual action: f_t -> sum_s c_s f_s, so row t, column s */
                B.at(t, s) = r;
            }
        D.action.push_back(B);
    }
    return D;
}

galois_module galois_module::odd_quotient() const
{
    galois_module O;
    O.acting = acting;
    int k = (int)inv.size();
    for (long d : inv) {
        long o = d;
        while (o % 2 == 0) o /= 2;
        O.inv.push_back(o);
    }
    for (const auto& A : action) {
        imat B = A;
        for (int i = 0; i < k; i++)
            for (int t = 0; t < k; t++) {
                mpz_class r;
                mpz_fdiv_r(r.get_mpz_t(), B.at(i, t).get_mpz_t(), mpz_class(O.inv[(size_t)t]).get_mpz_t());
                B.at(i, t) = r;
            }
        O.action.push_back(B);
    }
    return O;
}

/* Solve coef * M = v modulo the per-column moduli.  coef receives integer
 * coefficients of the rows of M; returns false when no solution exists. */
static bool solve_rows_mod(const imat& M, const std::vector<long>& mod,
                           const std::vector<mpz_class>& v, std::vector<mpz_class>& coef)
{
    int m = M.rows, n = M.cols;
    imat A(m + n, n + m + n);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < n; j++) A.at(i, j) = M.at(i, j);
    for (int i = 0; i < n; i++) A.at(m + i, i) = mod[(size_t)i];
    for (int i = 0; i < m + n; i++) A.at(i, n + i) = 1;
    imat H = hnf_rows(A);
    std::vector<mpz_class> r(n + m + n, 0), acc(n + m + n, 0);
    for (int j = 0; j < n; j++) r[(size_t)j] = v[(size_t)j];
    for (int i = 0; i < H.rows; i++) {
        int p = -1;
        for (int c = 0; c < n; c++)
            if (H.at(i, c) != 0) { p = c; break; }
        if (p < 0) break;
        if (r[(size_t)p] == 0) continue;
        if (r[(size_t)p] % H.at(i, p) != 0) return false;
        mpz_class q = r[(size_t)p] / H.at(i, p);
        for (int c = 0; c < n + m + n; c++) {
            r[(size_t)c] -= q * H.at(i, c);
            acc[(size_t)c] += q * H.at(i, c);
        }
    }
    for (int c = 0; c < n; c++)
        if (r[(size_t)c] != 0) return false;
    coef.assign((size_t)m, 0);
    for (int i = 0; i < m; i++) coef[(size_t)i] = acc[(size_t)(n + i)];
    return true;
}

galois_module cokernel_module(const fab_group& G, const amat& A, imat* gen_images)
{
    int d = A.amb.dim, nc = A.cols, N = nc * d;
    if (d != (int)G.order())
        throw std::invalid_argument("cokernel_module: ambient is not the group ring of G");
    /* the relation lattice over Z is spanned by basis_k * row_i, so each ring
     * relation contributes d integer rows */
    imat R(A.rows * d, N);
    for (int i = 0; i < A.rows; i++)
        for (int k = 0; k < d; k++) {
            std::vector<mpq_class> unit((size_t)d, mpq_class(0));
            unit[(size_t)k] = 1;
            for (int j = 0; j < nc; j++) {
                auto prod = A.amb.mul(unit, A.at(i, j));
                for (int t = 0; t < d; t++) {
                    if (prod[(size_t)t].get_den() != 1)
                        throw std::invalid_argument("cokernel_module: non-integral entry");
                    R.at(i * d + k, j * d + t) = prod[(size_t)t].get_num();
                }
            }
        }
    fab_presented pres = structure_from_relations(N, R);
    galois_module M;
    M.acting = G;
    M.inv = pres.grp.inv;
    int kk = pres.grp.ngens();
    if (gen_images) {
        *gen_images = imat(nc, kk);
        long id = G.index_of(G.zero());
        for (int j = 0; j < nc; j++) {
            std::vector<mpz_class> e((size_t)N, 0);
            e[(size_t)(j * d + (int)id)] = 1;
            gelt img = pres.project(e);
            for (int u = 0; u < kk; u++) gen_images->at(j, u) = img[(size_t)u];
        }
    }
    for (int s = 0; s < G.ngens(); s++) {
        imat act(kk, kk);
        for (int t = 0; t < kk; t++) {
            /* act on a lift of generator t: left multiplication by g_s is a
             * basis permutation in each column block */
            std::vector<mpz_class> y((size_t)N, 0);
            for (int j = 0; j < nc; j++)
                for (long g = 0; g < d; g++) {
                    long h = G.index_of(G.add(G.gen(s), G.elt_at(g)));
                    y[(size_t)(j * d + (int)h)] += pres.lift.at(t, j * d + (int)g);
                }
            gelt img = pres.project(y);
            for (int u = 0; u < kk; u++) act.at(t, u) = img[(size_t)u];
        }
        M.action.push_back(act);
    }
    return M;
}

submodule_result submodule_from_lattice(const galois_module& B, const imat& K)
{
    int m = K.rows, n = (int)B.inv.size();
    if (K.cols != n) throw std::invalid_argument("submodule_from_lattice: width mismatch");
    imat A(m + n, n);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < n; j++) A.at(i, j) = K.at(i, j);
    for (int i = 0; i < n; i++) A.at(m + i, i) = B.inv[(size_t)i];
    imat ker = left_kernel(A);
    imat Km(ker.rows, m);
    for (int i = 0; i < ker.rows; i++)
        for (int j = 0; j < m; j++) Km.at(i, j) = ker.at(i, j);
    fab_presented pres = structure_from_relations(m, Km);
    submodule_result out;
    out.mod.acting = B.acting;
    out.mod.inv = pres.grp.inv;
    int kk = pres.grp.ngens();
    out.inclusion = imat(kk, n);
    for (int t = 0; t < kk; t++)
        for (int j = 0; j < n; j++) {
            mpz_class s = 0;
            for (int i = 0; i < m; i++) s += pres.lift.at(t, i) * K.at(i, j);
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), mpz_class(B.inv[(size_t)j]).get_mpz_t());
            out.inclusion.at(t, j) = r;
        }
    for (int g = 0; g < B.acting.ngens(); g++) {
        imat act(kk, kk);
        for (int t = 0; t < kk; t++) {
            std::vector<mpz_class> v((size_t)n, 0);
            for (int j = 0; j < n; j++) {
                mpz_class s = 0;
                for (int i = 0; i < n; i++)
                    s += out.inclusion.at(t, i) * B.action[(size_t)g].at(i, j);
                mpz_fdiv_r(v[(size_t)j].get_mpz_t(), s.get_mpz_t(),
                           mpz_class(B.inv[(size_t)j]).get_mpz_t());
            }
            std::vector<mpz_class> coef;
            if (!solve_rows_mod(K, B.inv, v, coef))
                throw std::invalid_argument("submodule_from_lattice: not action-stable");
            gelt img = pres.project(coef);
            for (int u = 0; u < kk; u++) act.at(t, u) = img[(size_t)u];
        }
        out.mod.action.push_back(act);
    }
    return out;
}

galois_module quotient_module(const galois_module& B, const imat& K)
{
    int m = K.rows, n = (int)B.inv.size();
    if (m > 0 && K.cols != n) throw std::invalid_argument("quotient_module: width mismatch");
    imat R(m + n, n);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < n; j++) R.at(i, j) = K.at(i, j);
    for (int i = 0; i < n; i++) R.at(m + i, i) = B.inv[(size_t)i];
    fab_presented pres = structure_from_relations(n, R);
    galois_module Q;
    Q.acting = B.acting;
    Q.inv = pres.grp.inv;
    int kk = pres.grp.ngens();
    for (int g = 0; g < B.acting.ngens(); g++) {
        imat act(kk, kk);
        for (int t = 0; t < kk; t++) {
            std::vector<mpz_class> y((size_t)n, 0);
            for (int j = 0; j < n; j++)
                for (int i = 0; i < n; i++)
                    y[(size_t)j] += pres.lift.at(t, i) * B.action[(size_t)g].at(i, j);
            gelt img = pres.project(y);
            for (int u = 0; u < kk; u++) act.at(t, u) = img[(size_t)u];
        }
        Q.action.push_back(act);
    }
    return Q;
}

static std::vector<mpq_class> coords_of_grq(const grq& x) { return x.c; }

amat module_presentation(const galois_module& M)
{
    ambient_ring amb = group_ring_ambient(M.acting);
    int k = (int)M.inv.size();
    int ng = M.acting.ngens();
    amat A = amat::zero(amb, k + ng * k, k);
    for (int t = 0; t < k; t++)
        A.at(t, t) = coords_of_grq(grq::scalar(M.acting, mpq_class(M.inv[(size_t)t])));
    for (int j = 0; j < ng; j++)
        for (int i = 0; i < k; i++) {
            int r = k + j * k + i;
            grq entry_i = grq::of_element(M.acting, M.acting.gen(j));
            A.at(r, i) = coords_of_grq(entry_i);
            for (int t = 0; t < k; t++) {
                auto& cell = A.at(r, t);
                mpq_class sub(M.action[(size_t)j].at(i, t));
                cell[0] -= sub; /* identity coefficient */
            }
        }
    return A;
}

amat module_presentation_minus(const galois_module& M, const minus_ring& mr)
{
    amat Z = module_presentation(M);
    amat A = amat::zero(mr.amb, Z.rows, Z.cols);
    for (int i = 0; i < Z.rows; i++)
        for (int j = 0; j < Z.cols; j++) {
            grq x(M.acting);
            x.c = Z.at(i, j);
            A.at(i, j) = mr.project(x);
        }
    return A;
}

ideal_lattice annihilator(const galois_module& M)
{
    ambient_ring amb = group_ring_ambient(M.acting);
    long n = M.acting.order();
    int k = (int)M.inv.size();
    if (k == 0) return ideal_unit(amb);
    /* C[g][(i,t)] = rho(g)(i,t); left kernel of [C; moduli] gives the
     * annihilator's coefficient vectors. */
    imat C((int)n + k * k, k * k);
    for (long g = 0; g < n; g++) {
        imat R = M.act_matrix(M.acting.elt_at(g));
        for (int i = 0; i < k; i++)
            for (int t = 0; t < k; t++) C.at((int)g, i * k + t) = R.at(i, t);
    }
    for (int i = 0; i < k; i++)
        for (int t = 0; t < k; t++)
            C.at((int)n + i * k + t, i * k + t) = M.inv[(size_t)t];
    imat K = left_kernel(C);
    std::vector<std::vector<mpq_class>> gens;
    for (int r = 0; r < K.rows; r++) {
        std::vector<mpq_class> x((size_t)n);
        bool nonzero = false;
        for (long g = 0; g < n; g++) {
            x[(size_t)g] = mpq_class(K.at(r, (int)g));
            if (x[(size_t)g] != 0) nonzero = true;
        }
        if (nonzero) gens.push_back(x);
    }
    if (gens.empty()) {
        ideal_lattice z;
        z.amb = amb;
        z.basis = imat(0, amb.dim);
        return z;
    }
    return ideal_from_generators(amb, gens);
}

compound_result compound_and_adjugate(const imat& A, int r)
{
    if (A.rows != A.cols) throw std::invalid_argument("compound: not square");
    int n = A.rows;
    if (r < 1 || r > n) throw std::invalid_argument("compound: r out of range");
    std::vector<std::vector<int>> sets;
    subsets_of_size(n, r, sets);
    int m = (int)sets.size();

    auto minor_det = [&](const std::vector<int>& R, const std::vector<int>& C) {
        imat S((int)R.size(), (int)C.size());
        for (size_t a = 0; a < R.size(); a++)
            for (size_t b = 0; b < C.size(); b++) S.at((int)a, (int)b) = A.at(R[a], C[b]);
        return mat_det(S);
    };
    auto complement = [&](const std::vector<int>& S) {
        std::vector<int> c;
        size_t p = 0;
        for (int i = 0; i < n; i++) {
            if (p < S.size() && S[p] == i) { p++; continue; }
            c.push_back(i);
        }
        return c;
    };
    auto sum_idx = [](const std::vector<int>& S) {
        long s = 0;
        for (int i : S) s += i;
        return s;
    };

    compound_result out;
    out.compound = imat(m, m);
    out.adjugate = imat(m, m);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++)
            out.compound.at(i, j) = minor_det(sets[(size_t)i], sets[(size_t)j]);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            mpz_class d = (r == n) ? mpz_class(1)
                                   : minor_det(complement(sets[(size_t)j]), complement(sets[(size_t)i]));
            if ((sum_idx(sets[(size_t)i]) + sum_idx(sets[(size_t)j])) % 2 != 0) d = -d;
            out.adjugate.at(i, j) = d;
        }
    out.det = mat_det(A);
    /* verify adj_r * C_r = det * I, as promised */
    imat P = mat_mul(out.adjugate, out.compound);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            mpz_class want = (i == j) ? out.det : mpz_class(0);
            if (P.at(i, j) != want) throw std::logic_error("compound: adjugate identity failed");
        }
    return out;
}

/* regular representation of an ambient element, integral entries required */
static imat regular_rep(const ambient_ring& amb, const std::vector<mpq_class>& x)
{
    imat R(amb.dim, amb.dim);
    for (int i = 0; i < amb.dim; i++) {
        if (x[(size_t)i] == 0) continue;
        if (x[(size_t)i].get_den() != 1)
            throw std::invalid_argument("regular_rep: non-integral coefficient");
        for (int j = 0; j < amb.dim; j++)
            for (int t = 0; t < amb.dim; t++)
                R.at(j, t) += x[(size_t)i].get_num() * amb.mult[(size_t)i].at(j, t);
    }
    return R;
}

size_check_report module_order_and_size_checks(const amat& A)
{
    if (A.rows != A.cols) throw std::invalid_argument("size check: square presentation required");
    int n = A.cols, d = A.amb.dim;
    imat B(n * d, n * d);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) {
            imat R = regular_rep(A.amb, A.at(r, c));
            for (int i = 0; i < d; i++)
                for (int j = 0; j < d; j++) B.at(r * d + i, c * d + j) = R.at(i, j);
        }
    size_check_report rep;
    mpz_class db = mat_det(B);
    if (db == 0) throw std::invalid_argument("size check: determinant is a zero divisor");
    rep.quotient_order = abs(db);
    rep.det_order = abs(mat_det(regular_rep(A.amb, amat_det(A))));
    rep.equal = rep.quotient_order == rep.det_order;
    return rep;
}

mpq_class odd_product_det(const grq& x, const gelt& conj)
{
    minus_ring mr = make_minus_ring(x.G, conj);
    auto coords = mr.project(x);
    /* rational determinant of multiplication on the minus ring */
    mpz_class den = 1;
    for (const auto& v : coords) den = lcm(den, v.get_den());
    std::vector<mpq_class> scaled = coords;
    for (auto& v : scaled) v *= den;
    imat R = regular_rep(mr.amb, scaled);
    mpz_class d = mat_det(R);
    mpq_class out(d);
    mpq_class dd(den);
    for (int i = 0; i < mr.amb.dim; i++) out /= dd;
    out.canonicalize();
    return out;
}

} // namespace bst

#include "bst/ideal_lattice.hpp"

#include <stdexcept>

namespace bst {

std::vector<mpq_class> ambient_ring::mul(const std::vector<mpq_class>& a,
                                         const std::vector<mpq_class>& b) const
{
    std::vector<mpq_class> z(dim, mpq_class(0));
    for (int i = 0; i < dim; i++) {
        if (b[i] == 0) continue;
        /* (sum_j a_j basis_j) * basis_i: coords a * mult[i] */
        for (int j = 0; j < dim; j++) {
            if (a[j] == 0) continue;
            for (int k = 0; k < dim; k++) {
                const mpz_class& s = mult[i].at(j, k);
                if (s != 0) z[k] += a[j] * b[i] * s;
            }
        }
    }
    return z;
}

std::vector<mpq_class> ambient_ring::one() const
{
    std::vector<mpq_class> e(dim, mpq_class(0));
    e[0] = 1; /* identity is basis element 0 in both instantiations */
    return e;
}

ambient_ring group_ring_ambient(const fab_group& G)
{
    ambient_ring a;
    a.id = "Z[G ";
    for (long d : G.inv) a.id += std::to_string(d) + " ";
    a.id += "]";
    a.dim = (int)G.order();
    a.mult.resize(a.dim);
    for (int i = 0; i < a.dim; i++) {
        a.mult[i] = imat(a.dim, a.dim);
        gelt gi = G.elt_at(i);
        for (int j = 0; j < a.dim; j++)
            a.mult[i].at(j, (int)G.index_of(G.add(gi, G.elt_at(j)))) = 1;
    }
    return a;
}

minus_ring make_minus_ring(const fab_group& G, const gelt& conj)
{
    if (G.elt_order(conj) != 2)
        throw std::invalid_argument("make_minus_ring: conj must have order 2");
    minus_ring m;
    m.G = G;
    m.conj = conj;
    long n = G.order();
    m.pos.assign((size_t)n, -1);
    m.sign.assign((size_t)n, 0);
    for (long i = 0; i < n; i++) {
        if (m.pos[(size_t)i] >= 0) continue;
        long j = G.index_of(G.add(G.elt_at(i), conj));
        int r = (int)m.reps.size();
        m.reps.push_back(i);
        m.pos[(size_t)i] = r;
        m.sign[(size_t)i] = 1;
        m.pos[(size_t)j] = r;
        m.sign[(size_t)j] = -1;
    }
    ambient_ring& a = m.amb;
    a.id = "Z[1/2][G";
    for (long d : G.inv) a.id += " " + std::to_string(d);
    a.id += "]/(conj+1)";
    a.invert_two = true;
    a.dim = (int)m.reps.size();
    a.mult.resize(a.dim);
    for (int i = 0; i < a.dim; i++) {
        a.mult[i] = imat(a.dim, a.dim);
        gelt gi = G.elt_at(m.reps[(size_t)i]);
        for (int j = 0; j < a.dim; j++) {
            long k = G.index_of(G.add(gi, G.elt_at(m.reps[(size_t)j])));
            a.mult[i].at(j, m.pos[(size_t)k]) = m.sign[(size_t)k];
        }
    }
    /* identity (index 0) is its own coset rep, at position 0 */
    return m;
}

std::vector<mpq_class> minus_ring::project(const grq& x) const
{
    if (x.G != G) throw std::invalid_argument("minus projection: group mismatch");
    std::vector<mpq_class> out((size_t)amb.dim, mpq_class(0));
    for (long i = 0; i < G.order(); i++)
        if (x.c[(size_t)i] != 0)
            out[(size_t)pos[(size_t)i]] += sign[(size_t)i] * x.c[(size_t)i];
    return out;
}

/* canonical form: HNF, strip common content between basis and denominator;
 * for Z[1/2]-ambients additionally 2-saturate and make den odd. */
static void canonicalize(ideal_lattice& L)
{
    L.basis = hnf_rows(L.basis);
    if (L.basis.rows == 0) { L.den = 1; return; }
    if (L.amb.invert_two) {
        snf_result s = smith_normal_form(L.basis);
        /* rows of odd(D) * Vinv span the 2-saturation */
        int r = L.basis.rows;
        imat M(r, L.basis.cols);
        for (int i = 0; i < r; i++) {
            mpz_class d = s.D.at(i, i);
            while (d % 2 == 0) d /= 2;
            for (int j = 0; j < L.basis.cols; j++) M.at(i, j) = d * s.Vinv.at(i, j);
        }
        L.basis = hnf_rows(M);
        while (L.den % 2 == 0) L.den /= 2;
    }
    mpz_class g = L.den;
    for (const auto& v : L.basis.a) g = gcd(g, v);
    if (g > 1) {
        L.den /= g;
        for (auto& v : L.basis.a) v /= g;
    }
}

ideal_lattice ideal_from_generators(const ambient_ring& amb,
                                    const std::vector<std::vector<mpq_class>>& gens)
{
    ideal_lattice L;
    L.amb = amb;
    /* module generators: gen * basis_i for each ring basis element */
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& g : gens) {
        if ((int)g.size() != amb.dim)
            throw std::invalid_argument("ideal_from_generators: bad generator length");
        for (int i = 0; i < amb.dim; i++) {
            std::vector<mpq_class> b(amb.dim, mpq_class(0));
            b[i] = 1;
            rows.push_back(amb.mul(g, b));
        }
    }
    mpz_class den = 1;
    for (const auto& r : rows)
        for (const auto& v : r) den = lcm(den, v.get_den());
    L.den = den;
    L.basis = imat((int)rows.size(), amb.dim);
    for (size_t i = 0; i < rows.size(); i++)
        for (int j = 0; j < amb.dim; j++) {
            mpq_class scaled = rows[i][j] * den;
            L.basis.at((int)i, j) = scaled.get_num();
        }
    canonicalize(L);
    return L;
}

ideal_lattice ideal_from_gr_elems(const ambient_ring& amb, const std::vector<grq>& gens)
{
    std::vector<std::vector<mpq_class>> vs;
    for (const auto& g : gens) {
        if ((int)g.c.size() != amb.dim)
            throw std::invalid_argument("ideal_from_gr_elems: dimension mismatch");
        vs.push_back(g.c);
    }
    return ideal_from_generators(amb, vs);
}

ideal_lattice ideal_unit(const ambient_ring& amb)
{
    return ideal_from_generators(amb, {amb.one()});
}

static void check_same_ring(const ideal_lattice& a, const ideal_lattice& b)
{
    if (a.amb.id != b.amb.id) throw std::invalid_argument("ideal ops: mismatched ambient rings");
}

bool ideal_member(const ideal_lattice& I, const std::vector<mpq_class>& x)
{
    /* x in basis/den  <=>  den*x integral (up to 2s if inverted) and in span */
    std::vector<mpz_class> v((size_t)I.amb.dim);
    mpz_class extra = 1;
    for (int j = 0; j < I.amb.dim; j++) {
        mpq_class s = x[(size_t)j] * I.den;
        mpz_class d = s.get_den();
        if (I.amb.invert_two) {
            while (d % 2 == 0) d /= 2;
        }
        if (d != 1) return false;
        extra = lcm(extra, mpz_class(s.get_den()));
    }
    for (int j = 0; j < I.amb.dim; j++) {
        mpq_class s = x[(size_t)j] * I.den * extra;
        v[(size_t)j] = s.get_num();
    }
    if (I.is_zero()) {
        for (const auto& t : v)
            if (t != 0) return false;
        return true;
    }
    if (extra == 1) return hnf_member(I.basis, v);
    /* 2-power denominator: basis is 2-saturated, so membership of 2^k x and
     * x are equivalent */
    return hnf_member(I.basis, v);
}

bool ideal_member(const ideal_lattice& I, const grq& x)
{
    if ((int)x.c.size() != I.amb.dim)
        throw std::invalid_argument("ideal_member: dimension mismatch");
    return ideal_member(I, x.c);
}

bool ideal_equals(const ideal_lattice& a, const ideal_lattice& b)
{
    check_same_ring(a, b);
    return a.den == b.den && a.basis == b.basis;
}

ideal_lattice ideal_product(const ideal_lattice& a, const ideal_lattice& b)
{
    check_same_ring(a, b);
    std::vector<std::vector<mpq_class>> gens;
    for (int i = 0; i < a.basis.rows; i++)
        for (int j = 0; j < b.basis.rows; j++) {
            std::vector<mpq_class> x((size_t)a.amb.dim), y((size_t)a.amb.dim);
            for (int k = 0; k < a.amb.dim; k++) {
                x[(size_t)k] = mpq_class(a.basis.at(i, k)) / a.den;
                y[(size_t)k] = mpq_class(b.basis.at(j, k)) / b.den;
            }
            gens.push_back(a.amb.mul(x, y));
        }
    if (gens.empty()) { /* zero ideal */
        ideal_lattice z;
        z.amb = a.amb;
        z.basis = imat(0, a.amb.dim);
        return z;
    }
    return ideal_from_generators(a.amb, gens);
}

ideal_lattice ideal_sum(const ideal_lattice& a, const ideal_lattice& b)
{
    check_same_ring(a, b);
    std::vector<std::vector<mpq_class>> gens;
    for (int i = 0; i < a.basis.rows; i++) {
        std::vector<mpq_class> x((size_t)a.amb.dim);
        for (int k = 0; k < a.amb.dim; k++) x[(size_t)k] = mpq_class(a.basis.at(i, k)) / a.den;
        gens.push_back(x);
    }
    for (int i = 0; i < b.basis.rows; i++) {
        std::vector<mpq_class> x((size_t)a.amb.dim);
        for (int k = 0; k < a.amb.dim; k++) x[(size_t)k] = mpq_class(b.basis.at(i, k)) / b.den;
        gens.push_back(x);
    }
    if (gens.empty()) {
        ideal_lattice z;
        z.amb = a.amb;
        z.basis = imat(0, a.amb.dim);
        return z;
    }
    return ideal_from_generators(a.amb, gens);
}

ideal_lattice ideal_minus_projection(const ideal_lattice& I, const minus_ring& mr)
{
    std::vector<std::vector<mpq_class>> gens;
    for (int i = 0; i < I.basis.rows; i++) {
        grq x(mr.G);
        for (int k = 0; k < I.amb.dim; k++)
            x.c[(size_t)k] = mpq_class(I.basis.at(i, k)) / I.den;
        gens.push_back(mr.project(x));
    }
    if (gens.empty()) {
        ideal_lattice z;
        z.amb = mr.amb;
        z.basis = imat(0, mr.amb.dim);
        return z;
    }
    return ideal_from_generators(mr.amb, gens);
}

std::optional<std::vector<mpq_class>> rational_solve_left(const imat& B,
                                                          const std::vector<mpq_class>& v)
{
    /* solve x * B = v: Gaussian elimination on [B^T | v^T] columns=unknowns */
    int m = B.rows, n = B.cols;
    std::vector<std::vector<mpq_class>> A((size_t)n, std::vector<mpq_class>((size_t)m + 1));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < m; j++) A[(size_t)i][(size_t)j] = mpq_class(B.at(j, i));
        A[(size_t)i][(size_t)m] = v[(size_t)i];
    }
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < m && row < n; col++) {
        int p = -1;
        for (int i = row; i < n; i++)
            if (A[(size_t)i][(size_t)col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(A[(size_t)row], A[(size_t)p]);
        mpq_class inv = A[(size_t)row][(size_t)col];
        for (int k = col; k <= m; k++) A[(size_t)row][(size_t)k] /= inv;
        for (int i = 0; i < n; i++) {
            if (i == row) continue;
            mpq_class f = A[(size_t)i][(size_t)col];
            if (f == 0) continue;
            for (int k = col; k <= m; k++) A[(size_t)i][(size_t)k] -= f * A[(size_t)row][(size_t)k];
        }
        pivot_col.push_back(col);
        row++;
    }
    for (int i = row; i < n; i++)
        if (A[(size_t)i][(size_t)m] != 0) return std::nullopt;
    std::vector<mpq_class> x((size_t)m, mpq_class(0));
    for (int i = 0; i < row; i++) x[(size_t)pivot_col[(size_t)i]] = A[(size_t)i][(size_t)m];
    return x;
}

bool ideal_p_part_contains(const ideal_lattice& big, const ideal_lattice& small_, const mpz_class& p)
{
    check_same_ring(big, small_);
    if (small_.is_zero()) return true;
    if (big.is_zero()) return false;
    for (int i = 0; i < small_.basis.rows; i++) {
        std::vector<mpq_class> v((size_t)big.amb.dim);
        for (int k = 0; k < big.amb.dim; k++)
            v[(size_t)k] = mpq_class(small_.basis.at(i, k)) * big.den / small_.den;
        auto x = rational_solve_left(big.basis, v);
        if (!x) return false;
        for (const auto& q : *x)
            if (q.get_den() % p == 0) return false;
    }
    return true;
}

bool ideal_p_part_equals(const ideal_lattice& a, const ideal_lattice& b, const mpz_class& p)
{
    return ideal_p_part_contains(a, b, p) && ideal_p_part_contains(b, a, p);
}

} // namespace bst

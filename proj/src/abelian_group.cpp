#include "bst/abelian_group.hpp"

#include <numeric>
#include <stdexcept>
#include <set>
#include <algorithm>

namespace bst {

fab_group::fab_group(std::vector<long> invariants) : inv(std::move(invariants))
{
    for (size_t i = 0; i < inv.size(); i++) {
        if (inv[i] < 2) throw std::invalid_argument("fab_group: invariant factor < 2");
        if (i + 1 < inv.size() && inv[i + 1] % inv[i] != 0)
            throw std::invalid_argument("fab_group: divisibility chain violated");
        n_ *= inv[i];
    }
}

gelt fab_group::gen(int i) const
{
    gelt x = zero();
    x[i] = 1 % inv[i];
    return x;
}

gelt fab_group::add(const gelt& x, const gelt& y) const
{
    gelt z(inv.size());
    for (size_t i = 0; i < inv.size(); i++) z[i] = (x[i] + y[i]) % inv[i];
    return z;
}

gelt fab_group::neg(const gelt& x) const
{
    gelt z(inv.size());
    for (size_t i = 0; i < inv.size(); i++) z[i] = (inv[i] - x[i]) % inv[i];
    return z;
}

gelt fab_group::smul(long k, const gelt& x) const
{
    gelt z(inv.size());
    for (size_t i = 0; i < inv.size(); i++) {
        long r = (k % inv[i]) * x[i] % inv[i];
        if (r < 0) r += inv[i];
        z[i] = r;
    }
    return z;
}

bool fab_group::is_zero(const gelt& x) const
{
    for (long v : x)
        if (v != 0) return false;
    return true;
}

long fab_group::elt_order(const gelt& x) const
{
    long o = 1;
    for (size_t i = 0; i < inv.size(); i++) {
        long d = inv[i] / std::gcd(inv[i], x[i]);
        o = std::lcm(o, d);
    }
    return o;
}

long fab_group::index_of(const gelt& x) const
{
    long idx = 0;
    for (size_t i = 0; i < inv.size(); i++) idx = idx * inv[i] + x[i];
    return idx;
}

gelt fab_group::elt_at(long idx) const
{
    gelt x(inv.size());
    for (size_t i = inv.size(); i-- > 0;) {
        x[i] = idx % inv[i];
        idx /= inv[i];
    }
    return x;
}

std::vector<long> subgroup_closure(const fab_group& G, const std::vector<gelt>& gens)
{
    std::set<long> seen{G.index_of(G.zero())};
    std::vector<gelt> frontier{G.zero()};
    while (!frontier.empty()) {
        std::vector<gelt> next;
        for (const gelt& x : frontier)
            for (const gelt& g : gens) {
                gelt y = G.add(x, g);
                if (seen.insert(G.index_of(y)).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return std::vector<long>(seen.begin(), seen.end());
}

gelt fab_presented::project(const std::vector<mpz_class>& x) const
{
    gelt out(grp.ngens());
    for (int j = 0; j < grp.ngens(); j++) {
        mpz_class s = 0;
        for (int i = 0; i < to_group.rows; i++) s += x[i] * to_group.at(i, j);
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), mpz_class(grp.inv[j]).get_mpz_t());
        out[j] = r.get_si();
    }
    return out;
}

gelt fab_presented::project_gen(int i) const
{
    std::vector<mpz_class> x(to_group.rows, 0);
    x[i] = 1;
    return project(x);
}

fab_presented structure_from_relations(int ngens, const imat& relations)
{
    imat R = relations;
    if (R.rows == 0) R = imat(0, ngens);
    if (R.cols != ngens) throw std::invalid_argument("structure_from_relations: width mismatch");
    snf_result s = smith_normal_form(R);
    /* Z^n / rowspan(R): in coordinates y = x * V the relations become the
     * diagonal of D, so the group is the product of Z/d_i (keeping d_i >= 2;
     * d_i = 0 would mean an infinite quotient). */
    std::vector<long> invs;
    std::vector<int> keep;
    int n = ngens;
    int nd = std::min(s.D.rows, s.D.cols);
    for (int i = 0; i < n; i++) {
        mpz_class d = (i < nd) ? s.D.at(i, i) : mpz_class(0);
        if (d == 0) throw std::runtime_error("structure_from_relations: infinite quotient");
        if (d == 1) continue;
        if (!d.fits_slong_p()) throw std::runtime_error("structure_from_relations: factor too large");
        invs.push_back(d.get_si());
        keep.push_back(i);
    }
    fab_presented out{fab_group(invs), imat(ngens, (int)keep.size()),
                      imat((int)keep.size(), ngens)};
    for (int i = 0; i < ngens; i++)
        for (size_t j = 0; j < keep.size(); j++)
            out.to_group.at(i, (int)j) = s.V.at(i, keep[j]);
    /* y = x V diagonalizes the lattice, so a preimage of abstract generator j
     * is the row keep[j] of V^{-1}; then lift * to_group = I mod inv. */
    for (size_t j = 0; j < keep.size(); j++)
        for (int i = 0; i < ngens; i++)
            out.lift.at((int)j, i) = s.Vinv.at(keep[j], i);
    return out;
}

fab_presented quotient_by_subgroup(const fab_group& G, const std::vector<gelt>& gens)
{
    int n = G.ngens();
    imat R((int)gens.size() + n, n);
    for (size_t i = 0; i < gens.size(); i++)
        for (int j = 0; j < n; j++) R.at((int)i, j) = gens[i][j];
    for (int i = 0; i < n; i++) R.at((int)gens.size() + i, i) = G.inv[i];
    return structure_from_relations(n, R);
}

fab_subgroup subgroup_structure(const fab_group& G, const std::vector<gelt>& gens)
{
    /* The subgroup is the image of Z^gens; its structure is Z^gens modulo
     * the kernel of the map into G.  Kernel = { x : sum x_i gens_i = 0 },
     * an integer kernel with the group moduli as auxiliary rows. */
    int m = (int)gens.size(), n = G.ngens();
    if (m == 0) return {fab_group(std::vector<long>{}), {}};
    imat A(m + n, n);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < n; j++) A.at(i, j) = gens[i][j];
    for (int i = 0; i < n; i++) A.at(m + i, i) = G.inv[i];
    imat K = left_kernel(A);
    /* keep only the first m coordinates of each kernel row */
    imat Km(K.rows, m);
    for (int i = 0; i < K.rows; i++)
        for (int j = 0; j < m; j++) Km.at(i, j) = K.at(i, j);
    fab_presented pres = structure_from_relations(m, Km);
    /* abstract generator t of the subgroup = some Z-combination of gens:
     * need a section of Z^m -> subgroup.  Use the SNF data implicitly by
     * solving: express each abstract generator as image of a basis vector.
     * to_group maps Z^m onto the abstract group; a right inverse exists on
     * generators: find for each abstract gen j a vector e with
     * project(e) = gen_j by Smith-solving.  Simpler: the composite
     * Z^m -> G factors through the abstract group, so the embedding of
     * abstract generator j is obtained by lifting: pick any x in Z^m with
     * x * to_group = e_j mod inv, via brute solve on the generators. */
    fab_subgroup out{pres.grp, {}};
    /* Solve x * M = e_j (mod inv_j) with M = pres.to_group: stack M with
     * modulus rows and use HNF membership on the augmented lattice. */
    int k = pres.grp.ngens();
    imat M(m + k, k);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < k; j++) M.at(i, j) = pres.to_group.at(i, j);
    for (int i = 0; i < k; i++) M.at(m + i, i) = pres.grp.inv[i];
    /* augment with identity to recover coefficients */
    imat Maug(m + k, k + m + k);
    for (int i = 0; i < m + k; i++) {
        for (int j = 0; j < k; j++) Maug.at(i, j) = M.at(i, j);
        Maug.at(i, k + i) = 1;
    }
    imat H = hnf_rows(Maug);
    for (int j = 0; j < k; j++) {
        std::vector<mpz_class> target(k + m + k, 0);
        target[j] = 1;
        /* find combination of H rows matching e_j on the first k coords:
         * solve greedily on the echelon structure of the first k columns */
        std::vector<mpz_class> r = target;
        std::vector<mpz_class> acc(k + m + k, 0);
        for (int i = 0; i < H.rows; i++) {
            int p = -1;
            for (int c = 0; c < k; c++)
                if (H.at(i, c) != 0) { p = c; break; }
            if (p < 0) break;
            if (r[p] == 0) continue;
            if (r[p] % H.at(i, p) != 0)
                throw std::runtime_error("subgroup_structure: lift failed");
            mpz_class q = r[p] / H.at(i, p);
            for (int c = 0; c < k + m + k; c++) {
                r[c] -= q * H.at(i, c);
                acc[c] += q * H.at(i, c);
            }
        }
        for (int c = 0; c < k; c++)
            if (r[c] != 0) throw std::runtime_error("subgroup_structure: generator not hit");
        /* coefficients of original rows are in acc[k .. k+m): x-part */
        gelt img = G.zero();
        for (int i = 0; i < m; i++) {
            mpz_class coef = acc[k + i];
            mpz_class cm;
            mpz_fdiv_r(cm.get_mpz_t(), coef.get_mpz_t(), mpz_class(G.exponent()).get_mpz_t());
            img = G.add(img, G.smul(cm.get_si(), gens[i]));
        }
        out.embed_gens.push_back(img);
    }
    return out;
}

fab_subgroup odd_part(const fab_group& G)
{
    std::vector<gelt> gens;
    for (int i = 0; i < G.ngens(); i++) {
        long d = G.inv[i], odd = d;
        while (odd % 2 == 0) odd /= 2;
        if (odd > 1) gens.push_back(G.smul(d / odd, G.gen(i)));
    }
    return subgroup_structure(G, gens);
}

} // namespace bst

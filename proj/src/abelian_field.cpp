#include "bst/abelian_field.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bst {

static std::vector<mpz_class> to_mpz_vec(const gelt& x)
{
    std::vector<mpz_class> v(x.size());
    for (size_t i = 0; i < x.size(); i++) v[i] = x[i];
    return v;
}

gelt abelian_field_q::artin(long a) const
{
    return to_galois.project(to_mpz_vec(U.dlog(a)));
}

bool abelian_field_q::is_ramified(long p) const
{
    return conductor % p == 0;
}

gelt abelian_field_q::frobenius(long p) const
{
    if (!is_ramified(p)) return artin(p);
    return gal.places.at(std::to_string(p)).frob;
}

bool abelian_field_q::is_cm() const
{
    return !G.is_zero(gal.conj);
}

long abelian_field_q::num_roots_of_unity() const
{
    long f = conductor;
    /* an invariance test: every element of the fixing subgroup is 1 mod d */
    std::set<long> sub;
    for (long a = 1; a <= f; a++) {
        if (!U.is_unit(a)) continue;
        if (G.is_zero(artin(a))) sub.insert(a % f);
    }
    auto fixed = [&](long d) {
        for (long a : sub)
            if (a % d != 1 % d) return false;
        return true;
    };
    long odd_best = 1;
    for (long d = 1; d <= f; d += 2)
        if (f % d == 0 && fixed(d)) odd_best = d;
    long two_best = 2;
    for (long t = 2; f % t == 0; t *= 2)
        if (fixed(t)) two_best = std::max(two_best, t);
    return odd_best * two_best;
}

abelian_field_q make_abelian_field(long m, const std::vector<long>& subgroup_residues)
{
    if (m < 1) throw std::invalid_argument("make_abelian_field: modulus >= 1 required");
    unit_group_modm U0 = make_unit_group(m);
    std::vector<gelt> gens0;
    for (long r : subgroup_residues) gens0.push_back(U0.dlog(r));
    std::vector<long> closure = subgroup_closure(U0.grp, gens0);
    std::set<long> in_sub(closure.begin(), closure.end());

    /* conductor: the smallest f | m whose reduction kernel lies in the
     * subgroup (then H already sits inside Q(zeta_f)) */
    long f = m;
    for (long d = 1; d <= m; d++) {
        if (m % d != 0) continue;
        bool ok = true;
        for (long a = 1; a <= m && ok; a++) {
            if (!U0.is_unit(a) || a % d != 1 % d) continue;
            if (!in_sub.count(U0.grp.index_of(U0.dlog(a)))) ok = false;
        }
        if (ok) { f = d; break; }
    }

    abelian_field_q F;
    F.conductor = f;
    F.U = make_unit_group(f);
    /* image of the subgroup at the exact conductor */
    std::set<long> residues_f;
    for (long a = 1; a <= m; a++) {
        if (!U0.is_unit(a)) continue;
        if (in_sub.count(U0.grp.index_of(U0.dlog(a)))) residues_f.insert(a % f);
    }
    std::vector<gelt> gens;
    for (long r : residues_f) {
        F.subgroup_gens.push_back(F.U.dlog(r));
        gens.push_back(F.subgroup_gens.back());
    }
    F.to_galois = quotient_by_subgroup(F.U.grp, gens);
    F.G = F.to_galois.grp;

    F.gal.G = F.G;
    F.gal.conj = (f <= 2) ? F.G.zero() : F.artin(f - 1); /* class of -1 */

    for (long p = 2; p <= f; p++) {
        if (f % p != 0) continue;
        bool prime = p >= 2;
        for (long q = 2; q * q <= p; q++)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        long pe = 1, ff = f;
        while (ff % p == 0) {
            ff /= p;
            pe *= p;
        }
        long cof = f / pe;
        place_data pd;
        for (long a = 1; a <= f; a++) {
            if (!F.U.is_unit(a)) continue;
            if (a % cof == 1 % cof) pd.inertia_gens.push_back(F.artin(a));
        }
        /* Frobenius representative: acts as p away from p, trivially at p */
        long x = 1;
        if (cof > 1) {
            for (x = 1; x <= f; x++)
                if (F.U.is_unit(x) && x % cof == p % cof && x % pe == 1 % pe) break;
            if (x > f) throw std::logic_error("make_abelian_field: no Frobenius lift");
        }
        pd.frob = F.artin(x);
        /* only record places where inertia is nontrivial in G */
        bool nontrivial = false;
        for (const gelt& g : pd.inertia_gens)
            if (!F.G.is_zero(g)) { nontrivial = true; break; }
        if (nontrivial) {
            F.gal.places[std::to_string(p)] = pd;
            F.s_ram.push_back(p);
        }
    }
    return F;
}

abelian_field_q maximal_unramified_at(const abelian_field_q& F, const std::vector<long>& J)
{
    long f = F.conductor;
    std::vector<long> residues;
    for (const gelt& g : F.subgroup_gens) residues.push_back(F.U.residue(g));
    for (long p : J) {
        if (f % p != 0) continue;
        long pe = 1, ff = f;
        while (ff % p == 0) {
            ff /= p;
            pe *= p;
        }
        long cof = f / pe;
        for (long a = 1; a <= f; a++)
            if (F.U.is_unit(a) && a % cof == 1 % cof) residues.push_back(a);
    }
    return make_abelian_field(f, residues);
}

} // namespace bst

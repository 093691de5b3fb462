#include "bst/unit_group_modm.hpp"

#include <numeric>
#include <stdexcept>

namespace bst {

long powmod(long b, long e, long m)
{
    if (m == 1) return 0;
    long r = 1;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

static std::vector<long> prime_factors(long n)
{
    std::vector<long> out;
    for (long p = 2; p * p <= n; p++)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

static long multiplicative_order(long a, long m)
{
    long r = a % m, o = 1;
    while (r != 1 % m) {
        r = r * (a % m) % m;
        o++;
        if (o > m) throw std::logic_error("multiplicative_order: not a unit");
    }
    return o;
}

static long primitive_root_mod_pk(long p, int e)
{
    long phi_p = p - 1;
    std::vector<long> qs = prime_factors(phi_p);
    long g = 2;
    for (;; g++) {
        bool ok = true;
        for (long q : qs)
            if (powmod(g, phi_p / q, p) == 1) { ok = false; break; }
        if (ok) break;
    }
    if (e == 1) return g;
    /* lift: g works mod p^e unless g^{p-1} = 1 mod p^2 */
    long p2 = p * p;
    if (powmod(g % p2, p - 1, p2) == 1) g += p;
    return g;
}

unit_group_modm make_unit_group(long m)
{
    if (m < 1) throw std::invalid_argument("make_unit_group: m >= 1 required");
    unit_group_modm U;
    U.m = m;

    /* CRT generators: one or two residues per prime-power factor, each
     * congruent to 1 modulo the complementary factor */
    struct crt_gen {
        long res, ord;
    };
    std::vector<crt_gen> gens;
    long rem = m;
    for (long p = 2; p <= rem; p++) {
        if (rem % p != 0) continue;
        long pe = 1;
        int e = 0;
        while (rem % p == 0) {
            rem /= p;
            pe *= p;
            e++;
        }
        long cof = m / pe;
        auto lift = [&](long r) { /* x = r mod p^e, x = 1 mod cof */
            for (long x = 1; x <= m; x += 1)
                if (x % pe == r % pe && (cof == 1 || x % cof == 1)) return x % m;
            throw std::logic_error("make_unit_group: CRT lift failed");
        };
        if (p == 2) {
            if (e >= 2) gens.push_back({lift(pe - 1), 2});
            if (e >= 3) gens.push_back({lift(5), pe / 4});
        } else {
            long g = primitive_root_mod_pk(p, e);
            gens.push_back({lift(g), (p - 1) * (pe / p)});
        }
    }

    int n = (int)gens.size();
    imat rel(n, n);
    for (int i = 0; i < n; i++) rel.at(i, i) = gens[(size_t)i].ord;
    fab_presented pres = structure_from_relations(n, rel);
    U.grp = pres.grp;

    int k = U.grp.ngens();
    for (int j = 0; j < k; j++) {
        long r = 1 % m;
        for (int i = 0; i < n; i++) {
            mpz_class e;
            mpz_fdiv_r(e.get_mpz_t(), pres.lift.at(j, i).get_mpz_t(),
                       mpz_class(gens[(size_t)i].ord).get_mpz_t());
            r = r * powmod(gens[(size_t)i].res, e.get_si(), m) % m;
        }
        U.gen_residues.push_back(r);
        if (multiplicative_order(r, m) != U.grp.inv[(size_t)j])
            throw std::logic_error("make_unit_group: generator order mismatch");
    }

    /* full dlog table by enumeration of exponent tuples on the CRT gens */
    U.dlog_index.assign((size_t)m, -1);
    std::vector<long> tuple((size_t)n, 0);
    for (;;) {
        long r = 1 % m;
        for (int i = 0; i < n; i++) r = r * powmod(gens[(size_t)i].res, tuple[(size_t)i], m) % m;
        std::vector<mpz_class> x((size_t)n);
        for (int i = 0; i < n; i++) x[(size_t)i] = tuple[(size_t)i];
        U.dlog_index[(size_t)r] = U.grp.index_of(pres.project(x));
        int i = n - 1;
        while (i >= 0 && ++tuple[(size_t)i] == gens[(size_t)i].ord) tuple[(size_t)i--] = 0;
        if (i < 0) break;
    }
    return U;
}

bool unit_group_modm::is_unit(long a) const
{
    long r = a % m;
    if (r < 0) r += m;
    return dlog_index[(size_t)r] >= 0;
}

gelt unit_group_modm::dlog(long a) const
{
    long r = a % m;
    if (r < 0) r += m;
    if (dlog_index[(size_t)r] < 0) throw std::invalid_argument("dlog: not a unit");
    return grp.elt_at(dlog_index[(size_t)r]);
}

long unit_group_modm::residue(const gelt& x) const
{
    long r = 1 % m;
    for (size_t j = 0; j < gen_residues.size(); j++)
        r = r * powmod(gen_residues[j], x[j], m) % m;
    return r;
}

} // namespace bst

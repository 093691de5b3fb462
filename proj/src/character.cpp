#include "bst/character.hpp"

#include <numeric>
#include <stdexcept>

namespace bst {

long character::eval_exponent(const gelt& x) const
{
    long E = G.exponent();
    long t = 0;
    for (size_t i = 0; i < exps.size(); i++) {
        /* chi(gen_i^(x_i)) = zeta^(exps_i * x_i) */
        t = (t + (exps[i] % E) * (x[i] % E)) % E;
    }
    return (t % E + E) % E;
}

cyc character::eval(const gelt& x) const
{
    return cyc::root_of_unity(G.exponent(), eval_exponent(x));
}

cyc character::eval(const grq& a) const
{
    if (a.G != G) throw std::invalid_argument("character eval: group mismatch");
    cyc s(0);
    for (long i = 0; i < G.order(); i++) {
        if (a.c[(size_t)i] == 0) continue;
        s = cyc_add(s, cyc_mul(cyc(a.c[(size_t)i]), eval(G.elt_at(i))));
    }
    return s;
}

long character::order() const
{
    long E = G.exponent();
    if (E == 1) return 1;
    long g = E;
    for (long e : exps) g = std::gcd(g, e);
    return E / g;
}

bool character::is_trivial() const
{
    for (long e : exps)
        if (e % G.exponent() != 0) return false;
    return true;
}

bool character::is_odd(const gelt& conj) const
{
    long E = G.exponent();
    return eval_exponent(conj) == E / 2 && E % 2 == 0;
}

character character::inverse() const
{
    character z{G, exps};
    long E = G.exponent();
    for (auto& e : z.exps) e = (E - e) % E;
    return z;
}

character character::mul(const character& o) const
{
    if (G != o.G) throw std::invalid_argument("character mul: group mismatch");
    character z{G, exps};
    long E = G.exponent();
    for (size_t i = 0; i < exps.size(); i++) z.exps[i] = (exps[i] + o.exps[i]) % E;
    return z;
}

std::vector<character> enumerate_characters(const fab_group& G)
{
    /* chi(gen_i) must be a d_i-th root of unity: exps[i] in
     * { 0, E/d_i, 2E/d_i, ... } -- one choice of multiplier per generator. */
    std::vector<character> out;
    long E = G.exponent();
    std::vector<long> idx(G.ngens(), 0);
    for (;;) {
        character chi{G, std::vector<long>(G.ngens())};
        for (int i = 0; i < G.ngens(); i++) chi.exps[i] = idx[i] * (E / G.inv[i]);
        out.push_back(chi);
        int i = G.ngens() - 1;
        while (i >= 0 && ++idx[i] == G.inv[i]) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

static mpz_class pow_mod(mpz_class b, mpz_class e, const mpz_class& m)
{
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class root_of_unity_mod(long n, const mpz_class& p, int m)
{
    mpz_class pm1 = p - 1;
    if (pm1 % n != 0)
        throw std::runtime_error("root_of_unity_mod: order does not divide p-1 "
                                 "(group exponent outside the Z_p range)");
    mpz_class mod = 1;
    for (int i = 0; i < m; i++) mod *= p;
    /* find a primitive root mod p, lift: w^(p^(m-1)) has order p-1 mod p^m */
    for (mpz_class w = 2; w < p; w++) {
        bool prim = true;
        /* check order of w mod p is exactly p-1 */
        mpz_class q = 2;
        mpz_class t = pm1;
        std::vector<mpz_class> prime_factors;
        while (q * q <= t) {
            if (t % q == 0) {
                prime_factors.push_back(q);
                while (t % q == 0) t /= q;
            }
            q += 1;
        }
        if (t > 1) prime_factors.push_back(t);
        for (const auto& f : prime_factors)
            if (pow_mod(w, pm1 / f, p) == 1) { prim = false; break; }
        if (!prim) continue;
        mpz_class pm = 1;
        for (int i = 0; i < m - 1; i++) pm *= p;
        mpz_class r = pow_mod(w, pm * (pm1 / n), mod);
        return r;
    }
    throw std::runtime_error("root_of_unity_mod: no primitive root found");
}

mpz_class character::eval_mod(const gelt& x, const mpz_class& p, int m) const
{
    long E = G.exponent();
    mpz_class r = root_of_unity_mod(E, p, m); /* throws if E does not divide p-1 */
    mpz_class mod = 1;
    for (int i = 0; i < m; i++) mod *= p;
    mpz_class v;
    mpz_powm_ui(v.get_mpz_t(), r.get_mpz_t(), (unsigned long)eval_exponent(x), mod.get_mpz_t());
    return v;
}

} // namespace bst

#include "bst/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace bst {

long euler_phi(long n)
{
    long r = n;
    for (long p = 2; p * p <= n; p++)
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r -= r / n;
    return r;
}

/* Phi_e via repeated exact division: x^e - 1 divided by Phi_d for d | e, d < e. */
const std::vector<mpz_class>& cyclotomic_poly(long e)
{
    static std::map<long, std::vector<mpz_class>> cache;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;

    std::vector<mpz_class> num((size_t)e + 1, 0);
    num[0] = -1;
    num[(size_t)e] = 1;
    for (long d = 1; d < e; d++) {
        if (e % d != 0) continue;
        const std::vector<mpz_class>& phd = cyclotomic_poly(d);
        /* exact polynomial division num /= phd (phd is monic) */
        std::vector<mpz_class> q(num.size() - phd.size() + 1, 0);
        std::vector<mpz_class> r = num;
        for (size_t i = q.size(); i-- > 0;) {
            q[i] = r[i + phd.size() - 1];
            if (q[i] == 0) continue;
            for (size_t j = 0; j < phd.size(); j++) r[i + j] -= q[i] * phd[j];
        }
        for (const mpz_class& x : r)
            if (x != 0) throw std::logic_error("cyclotomic_poly: division not exact");
        num = q;
    }
    return cache.emplace(e, std::move(num)).first->second;
}

/* reduce a polynomial (ascending, any length) mod Phi_e, to length phi(e) */
static std::vector<mpq_class> reduce_mod_phi(std::vector<mpq_class> p, long e)
{
    const std::vector<mpz_class>& phi = cyclotomic_poly(e);
    size_t deg = phi.size() - 1; /* = euler_phi(e) */
    for (size_t i = p.size(); i-- > deg;) {
        mpq_class q = p[i];
        if (q == 0) continue;
        for (size_t j = 0; j < phi.size(); j++) p[i - deg + j] -= q * phi[j];
    }
    p.resize(deg);
    for (auto& x : p) x.canonicalize();
    return p;
}

cyc cyc::root_of_unity(long e, long k)
{
    if (e <= 0) throw std::invalid_argument("root_of_unity: order must be positive");
    k %= e;
    if (k < 0) k += e;
    /* use the smallest field containing zeta_e^k */
    long d = e / std::gcd(e, k);
    k = k * d / e; /* zeta_e^k = zeta_d^{k'} */
    cyc z;
    z.order = d;
    std::vector<mpq_class> p((size_t)k + 1, mpq_class(0));
    p[(size_t)k] = 1;
    z.c = reduce_mod_phi(std::move(p), d);
    return z;
}

static cyc lift_to(const cyc& x, long e)
{
    if (x.order == e) return x;
    if (e % x.order != 0) throw std::invalid_argument("cyc lift: bad order");
    long s = e / x.order;
    std::vector<mpq_class> p((x.c.size() - 1) * (size_t)s + 1, mpq_class(0));
    for (size_t i = 0; i < x.c.size(); i++) p[i * (size_t)s] = x.c[i];
    cyc z;
    z.order = e;
    z.c = reduce_mod_phi(std::move(p), e);
    return z;
}

/* drop to the smallest subfield we can certify cheaply: rationals */
static void normalize(cyc& x)
{
    bool rat = true;
    for (size_t i = 1; i < x.c.size(); i++)
        if (x.c[i] != 0) { rat = false; break; }
    if (rat) {
        x.c.resize(1);
        x.order = 1;
    }
}

cyc cyc_add(const cyc& x, const cyc& y)
{
    long e = std::lcm(x.order, y.order);
    cyc a = lift_to(x, e), b = lift_to(y, e);
    for (size_t i = 0; i < a.c.size(); i++) a.c[i] += b.c[i];
    normalize(a);
    return a;
}

cyc cyc_sub(const cyc& x, const cyc& y) { return cyc_add(x, cyc_neg(y)); }

cyc cyc_neg(const cyc& x)
{
    cyc z = x;
    for (auto& v : z.c) v = -v;
    return z;
}

cyc cyc_mul(const cyc& x, const cyc& y)
{
    long e = std::lcm(x.order, y.order);
    cyc a = lift_to(x, e), b = lift_to(y, e);
    std::vector<mpq_class> p(a.c.size() + b.c.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); j++) p[i + j] += a.c[i] * b.c[j];
    }
    cyc z;
    z.order = e;
    z.c = reduce_mod_phi(std::move(p), e);
    normalize(z);
    return z;
}

bool cyc_eq(const cyc& x, const cyc& y)
{
    cyc d = cyc_sub(x, y);
    return d.is_zero();
}

cyc cyc_pow(const cyc& x, long n)
{
    if (n < 0) throw std::invalid_argument("cyc_pow: negative exponent");
    cyc r(1), b = x;
    while (n) {
        if (n & 1) r = cyc_mul(r, b);
        b = cyc_mul(b, b);
        n >>= 1;
    }
    return r;
}

bool cyc::is_zero() const
{
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

bool cyc::is_rational() const
{
    for (size_t i = 1; i < c.size(); i++)
        if (c[i] != 0) return false;
    return true;
}

mpq_class cyc::rational_value() const
{
    if (!is_rational()) throw std::runtime_error("cyc: value is not rational");
    return c[0];
}

cyc cyc::conj() const
{
    /* zeta^i -> zeta^{order - i} */
    cyc z;
    z.order = order;
    std::vector<mpq_class> p((size_t)order, mpq_class(0));
    p[0] = c[0];
    for (size_t i = 1; i < c.size(); i++) p[(size_t)order - i] = c[i];
    z.c = reduce_mod_phi(std::move(p), order);
    normalize(z);
    return z;
}

} // namespace bst

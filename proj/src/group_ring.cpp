#include "bst/group_ring.hpp"

#include <stdexcept>

namespace bst {

grq grq::scalar(const fab_group& g, const mpq_class& v)
{
    grq z(g);
    z.c[0] = v; /* identity has index 0 */
    return z;
}

grq grq::of_element(const fab_group& g, const gelt& x)
{
    grq z(g);
    z.c[(size_t)g.index_of(x)] = 1;
    return z;
}

bool grq::is_zero() const
{
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

bool grq::is_integral() const
{
    for (const auto& v : c)
        if (v.get_den() != 1) return false;
    return true;
}

static void check_same(const grq& a, const grq& b)
{
    if (a.G != b.G) throw std::invalid_argument("group ring: mismatched groups");
}

grq gr_add(const grq& a, const grq& b)
{
    check_same(a, b);
    grq z = a;
    for (size_t i = 0; i < z.c.size(); i++) z.c[i] += b.c[i];
    return z;
}

grq gr_sub(const grq& a, const grq& b)
{
    check_same(a, b);
    grq z = a;
    for (size_t i = 0; i < z.c.size(); i++) z.c[i] -= b.c[i];
    return z;
}

grq gr_mul(const grq& a, const grq& b)
{
    check_same(a, b);
    grq z(a.G);
    long n = a.G.order();
    for (long i = 0; i < n; i++) {
        if (a.c[(size_t)i] == 0) continue;
        gelt gi = a.G.elt_at(i);
        for (long j = 0; j < n; j++) {
            if (b.c[(size_t)j] == 0) continue;
            long k = a.G.index_of(a.G.add(gi, a.G.elt_at(j)));
            z.c[(size_t)k] += a.c[(size_t)i] * b.c[(size_t)j];
        }
    }
    return z;
}

grq gr_smul(const mpq_class& s, const grq& a)
{
    grq z = a;
    for (auto& v : z.c) v *= s;
    return z;
}

grq gr_sharp(const grq& a)
{
    grq z(a.G);
    for (long i = 0; i < a.G.order(); i++)
        z.c[(size_t)a.G.index_of(a.G.neg(a.G.elt_at(i)))] = a.c[(size_t)i];
    return z;
}

mpq_class gr_augmentation(const grq& a)
{
    mpq_class s = 0;
    for (const auto& v : a.c) s += v;
    return s;
}

bool gr_eq(const grq& a, const grq& b)
{
    check_same(a, b);
    return a.c == b.c;
}

qmat gr_regular_matrix(const grq& a)
{
    long n = a.G.order();
    mpz_class den = 1;
    for (const auto& v : a.c) den = lcm(den, v.get_den());
    qmat m;
    m.den = den;
    m.num = imat((int)n, (int)n);
    /* row j = coordinates of a * [g_j] */
    for (long j = 0; j < n; j++) {
        gelt gj = a.G.elt_at(j);
        for (long i = 0; i < n; i++) {
            if (a.c[(size_t)i] == 0) continue;
            long k = a.G.index_of(a.G.add(a.G.elt_at(i), gj));
            mpq_class scaled = a.c[(size_t)i] * den;
            m.num.at((int)j, (int)k) += scaled.get_num();
        }
    }
    return m;
}

} // namespace bst

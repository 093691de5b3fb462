#include "bst/qexp.hpp"

#include "bst/stickelberger.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bst {

cyc qexpansion::c(long m) const
{
    if (m < 0) throw std::invalid_argument("qexpansion: negative index");
    if (m == 0) return c0;
    auto it = cache->find(m);
    if (it != cache->end()) return it->second;
    cyc v = provider(m);
    (*cache)[m] = v;
    return v;
}

grq gr_qexpansion::c(long m) const
{
    if (m < 1) throw std::invalid_argument("gr_qexpansion: index >= 1 required");
    auto it = cache->find(m);
    if (it != cache->end()) return it->second;
    grq v = provider(m);
    (*cache)[m] = v;
    return v;
}

static std::vector<long> sorted_unique(std::vector<long> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

static mpz_class pow_z(long b, long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)b, (unsigned long)e);
    return r;
}

/* psi viewed with modulus divisible by S: zero on anything touching S */
static cyc psi_S_value(const dirichlet_character& prim, const std::vector<long>& S, long a)
{
    for (long l : S)
        if (a % l == 0) return cyc();
    return prim.value(a);
}

qexpansion eisenstein_qexp(long k, const dirichlet_character& psi, const std::vector<long>& S)
{
    if (k < 1) throw std::invalid_argument("eisenstein_qexp: weight >= 1 required");
    dirichlet_character prim = psi.primitive();
    bool odd_k = (k % 2) != 0;
    if (prim.is_odd() != odd_k)
        throw std::invalid_argument("eisenstein_qexp: parity of the character must match the weight");

    std::vector<long> s = sorted_unique(S);
    long f = prim.conductor();
    long level = f;
    for (long l : s)
        if (f % l != 0) level *= l;

    qexpansion E;
    E.k = k;
    E.level = level;
    E.psi = prim;
    E.provider = [k, prim, s](long m) {
        cyc acc;
        for (long r = 1; r <= m; r++) {
            if (m % r != 0) continue;
            cyc p = psi_S_value(prim, s, m / r);
            if (p.is_zero()) continue;
            acc = cyc_add(acc, cyc_mul(p, cyc(mpq_class(pow_z(r, k - 1)))));
        }
        return acc;
    };
    if (k > 1) {
        E.c0 = (level == 1) ? cyc_mul(L_at_nonpositive(prim.inverse().primitive(), k),
                                      cyc(mpq_class(1, 2)))
                            : cyc();
    } else {
        if (level == 1) throw std::logic_error("eisenstein_qexp: no odd character of level 1");
        cyc v = L_at_nonpositive(prim, 1);
        for (long l : s)
            if (f % l != 0) v = cyc_mul(v, cyc_sub(cyc(mpq_class(1)), prim.value(l)));
        E.c0 = cyc_mul(v, cyc(mpq_class(1, 2)));
    }
    return E;
}

qexpansion qexp_one()
{
    qexpansion f;
    f.k = 0;
    f.level = 1;
    f.psi = trivial_character(1);
    f.c0 = cyc(mpq_class(1));
    f.provider = [](long) { return cyc(); };
    return f;
}

qexpansion qexp_add(const qexpansion& f, const qexpansion& g)
{
    if (f.k != g.k || f.level != g.level)
        throw std::invalid_argument("qexp_add: metadata mismatch");
    qexpansion h = f;
    h.cache = std::make_shared<std::map<long, cyc>>();
    h.c0 = cyc_add(f.c0, g.c0);
    h.provider = [f, g](long m) { return cyc_add(f.c(m), g.c(m)); };
    return h;
}

qexpansion qexp_scale(const cyc& s, const qexpansion& f)
{
    qexpansion h = f;
    h.cache = std::make_shared<std::map<long, cyc>>();
    h.c0 = cyc_mul(s, f.c0);
    h.provider = [s, f](long m) { return cyc_mul(s, f.c(m)); };
    return h;
}

static dirichlet_character psi_product(const dirichlet_character& a, const dirichlet_character& b)
{
    if (a.conductor() == 1) return b;
    if (b.conductor() == 1) return a;
    if (a.modulus != b.modulus)
        throw std::invalid_argument("qexp_mul: nebentypus moduli differ");
    return a.mul(b);
}

qexpansion qexp_mul(const qexpansion& f, const qexpansion& g)
{
    qexpansion h;
    h.k = f.k + g.k;
    h.level = std::lcm(f.level, g.level);
    h.psi = psi_product(f.psi, g.psi);
    h.c0 = cyc_mul(f.c0, g.c0);
    h.provider = [f, g](long m) {
        cyc acc = cyc_add(cyc_mul(f.c0, g.c(m)), cyc_mul(g.c0, f.c(m)));
        for (long i = 1; i < m; i++) acc = cyc_add(acc, cyc_mul(f.c(i), g.c(m - i)));
        return acc;
    };
    return h;
}

qexpansion qexp_pow(const qexpansion& f, long n)
{
    if (n < 0) throw std::invalid_argument("qexp_pow: n >= 0 required");
    qexpansion acc = qexp_one();
    qexpansion base = f;
    while (n > 0) {
        if (n & 1) acc = qexp_mul(acc, base);
        n >>= 1;
        if (n > 0) base = qexp_mul(base, base);
    }
    return acc;
}

qexpansion hecke_T(const qexpansion& f, long ell)
{
    if (ell < 2 || f.level % ell == 0)
        throw std::invalid_argument("hecke_T: prime must not divide the level");
    cyc pl = f.psi.value(ell);
    cyc w = cyc_mul(pl, cyc(mpq_class(pow_z(ell, f.k - 1))));
    qexpansion h = f;
    h.cache = std::make_shared<std::map<long, cyc>>();
    h.c0 = cyc_mul(f.c0, cyc_add(cyc(mpq_class(1)), w));
    h.provider = [f, ell, w](long m) {
        cyc acc = f.c(m * ell);
        if (m % ell == 0) acc = cyc_add(acc, cyc_mul(w, f.c(m / ell)));
        return acc;
    };
    return h;
}

qexpansion hecke_U(const qexpansion& f, long q)
{
    if (q < 2 || f.level % q != 0)
        throw std::invalid_argument("hecke_U: prime must divide the level");
    qexpansion h = f;
    h.cache = std::make_shared<std::map<long, cyc>>();
    h.provider = [f, q](long m) { return f.c(m * q); };
    return h;
}

qexpansion diamond(const qexpansion& f, long m)
{
    cyc v = f.psi.value(m);
    if (v.is_zero()) throw std::invalid_argument("diamond: index not coprime to the conductor");
    return qexp_scale(v, f);
}

qexpansion raise_level(const qexpansion& f, long q)
{
    if (q < 1) throw std::invalid_argument("raise_level: positive index required");
    qexpansion h = f;
    h.cache = std::make_shared<std::map<long, cyc>>();
    h.level = f.level * q;
    h.provider = [f, q](long m) { return m % q == 0 ? f.c(m / q) : cyc(); };
    return h;
}

qexpansion w_modified(long k, const dirichlet_character& psi, const std::vector<long>& P,
                      const std::vector<long>& T)
{
    dirichlet_character prim = psi.primitive();
    std::vector<long> t = sorted_unique(T), p = sorted_unique(P);
    if (t.empty()) throw std::invalid_argument("w_modified: empty smoothing set");
    for (long l : t) {
        if (prim.conductor() % l == 0)
            throw std::invalid_argument("w_modified: smoothing prime divides the conductor");
        if (std::find(p.begin(), p.end(), l) != p.end())
            throw std::invalid_argument("w_modified: smoothing and depletion sets overlap");
    }

    qexpansion E = eisenstein_qexp(k, prim, p);
    /* Moebius data over the squarefree divisors of prod(T) */
    struct term {
        long m;
        cyc coef;
    };
    std::vector<term> terms;
    size_t nt = t.size();
    for (unsigned mask = 0; mask < (1u << nt); mask++) {
        long m = 1;
        int bits = 0;
        for (size_t i = 0; i < nt; i++)
            if (mask & (1u << i)) {
                m *= t[i];
                bits++;
            }
        cyc coef = cyc_mul(prim.value(m), cyc(mpq_class(pow_z(m, k))));
        if (bits % 2) coef = cyc_neg(coef);
        terms.push_back({m, coef});
    }

    qexpansion W;
    W.k = k;
    W.psi = prim;
    W.level = E.level;
    for (long l : t) W.level *= l;
    cyc csum;
    for (const term& tm : terms) csum = cyc_add(csum, tm.coef);
    W.c0 = cyc_mul(E.c0, csum);
    W.provider = [E, terms](long j) {
        cyc acc;
        for (const term& tm : terms)
            if (j % tm.m == 0) acc = cyc_add(acc, cyc_mul(tm.coef, E.c(j / tm.m)));
        return acc;
    };

    /* coefficient identity at the smoothing primes */
    for (long l : t) {
        cyc lhs = W.c(l);
        cyc rhs = cyc_sub(E.c(l), cyc_mul(prim.value(l), cyc(mpq_class(pow_z(l, k)))));
        if (!cyc_eq(lhs, rhs)) throw std::logic_error("w_modified: coefficient identity fails");
    }
    return W;
}

congruence_report congruence_check(const qexpansion& f, const qexpansion& g,
                                   const mpz_class& pm, long N)
{
    congruence_report rep;
    for (long m = 0; m <= N; m++) {
        cyc d = cyc_sub(f.c(m), g.c(m));
        bool good = d.is_rational();
        if (good) {
            mpq_class q = d.rational_value();
            mpz_class gg = gcd(q.get_den(), pm);
            good = (gg == 1) && mpz_divisible_p(q.get_num().get_mpz_t(), pm.get_mpz_t());
        }
        if (!good) {
            rep.ok = false;
            rep.first_fail = m;
            return rep;
        }
    }
    return rep;
}

gr_qexpansion family_eisenstein(const abelian_field_q& F, long k)
{
    if (k < 1) throw std::invalid_argument("family_eisenstein: weight >= 1 required");
    gr_qexpansion fam;
    fam.k = k;
    fam.level = F.conductor;
    fam.G = F.G;
    long f = F.conductor;
    fam.provider = [F, f, k](long m) {
        grq acc(F.G);
        for (long r = 1; r <= m; r++) {
            if (m % r != 0) continue;
            long d = m / r;
            if (std::gcd(d, f) != 1) continue;
            acc.coeff(F.artin(d)) += mpq_class(pow_z(r, k - 1));
        }
        return acc;
    };
    return fam;
}

qexpansion specialize(const gr_qexpansion& fam, const abelian_field_q& F, const character& chi)
{
    qexpansion out;
    out.k = fam.k;
    out.level = fam.level;
    out.psi = pullback_character(F, chi).primitive();
    out.c0 = cyc();
    out.provider = [fam, chi](long m) { return chi.eval(fam.c(m)); };
    return out;
}

congruence_report congruence_check_gr(const gr_qexpansion& f, const gr_qexpansion& g,
                                      const ideal_lattice& L, long N)
{
    congruence_report rep;
    for (long m = 1; m <= N; m++) {
        if (!ideal_member(L, gr_sub(f.c(m), g.c(m)))) {
            rep.ok = false;
            rep.first_fail = m;
            return rep;
        }
    }
    return rep;
}

/* --- cusps and constant terms ------------------------------------------- */

cusp_datum make_cusp(long level, long a, long c)
{
    if (level < 1) throw std::invalid_argument("make_cusp: level >= 1 required");
    if (std::gcd(a, c) != 1) throw std::invalid_argument("make_cusp: a/c not in lowest terms");
    return cusp_datum{level, a, c};
}

bool cusp_in_C0(const cusp_datum& A, long b) { return std::gcd(b, A.c) == 1; }

bool cusp_in_Cinf(const cusp_datum& A, long b) { return A.c % b == 0; }

gauss_sum_symbol gauss_sum(const dirichlet_character& psi)
{
    gauss_sum_symbol out;
    out.psi = psi.primitive();
    long f = out.psi.conductor();
    if (f <= 40) {
        out.exact = true;
        cyc acc;
        for (long a = 1; a <= f; a++) {
            cyc v = out.psi.value(a);
            if (!v.is_zero()) acc = cyc_add(acc, cyc_mul(v, cyc::root_of_unity(f, a)));
        }
        out.value = acc;
    }
    return out;
}

cyc ct_eval(const ct_value& v, const gauss_sum_symbol& tau)
{
    if (v.tau_coef.is_zero()) return v.plain;
    if (!tau.exact) throw std::invalid_argument("ct_eval: symbolic Gauss sum cannot be evaluated");
    return cyc_add(v.plain, cyc_mul(v.tau_coef, tau.value));
}

bool ct_is_zero(const ct_value& v) { return v.plain.is_zero() && v.tau_coef.is_zero(); }

static long prod_of(const std::vector<long>& v)
{
    long p = 1;
    for (long x : v) p *= x;
    return p;
}

/* sgn(N(-c)) psi(c_A), with the zero-c convention psi^{-1}((a)) */
static cyc sgn_psi_cA(const dirichlet_character& prim, const cusp_datum& A)
{
    if (A.c == 0) {
        long a = A.a < 0 ? -A.a : A.a;
        return cyc_mul(prim.inverse().value(a), cyc(mpq_class(A.a < 0 ? -1 : 1)));
    }
    cyc v = prim.value(A.c < 0 ? -A.c : A.c);
    return A.c > 0 ? cyc_neg(v) : v; /* sgn(-c) */
}

ct_value constant_term_E_raised(long k, const dirichlet_character& psi,
                                const std::vector<long>& P, const std::vector<long>& T,
                                long m, const cusp_datum& A)
{
    dirichlet_character prim = psi.primitive();
    dirichlet_character inv = prim.inverse().primitive();
    if (prim.is_odd() != ((k % 2) != 0))
        throw std::invalid_argument("constant_term: parity of the character must match the weight");
    std::vector<long> p = sorted_unique(P), t = sorted_unique(T);
    long c0cond = prim.conductor();
    long cfr = std::lcm(c0cond, prod_of(p));
    long level = cfr * prod_of(t);
    if (A.level != level) throw std::invalid_argument("constant_term: cusp level mismatch");
    long tprod = prod_of(t);
    if (m < 1 || tprod % m != 0)
        throw std::invalid_argument("constant_term: raising index must divide the smoothing product");

    std::vector<long> Jm, Jmc;
    for (long l : t)
        if (m % l == 0) (cusp_in_C0(A, l) ? Jm : Jmc).push_back(l);

    auto euler_P = [&](long kk) {
        cyc e(mpq_class(1));
        for (long q : p)
            e = cyc_mul(e, cyc_sub(cyc(mpq_class(1)),
                                   cyc_mul(prim.value(q), cyc(mpq_class(1, pow_z(q, kk))))));
        return e;
    };
    auto prod_Jm_invpow = [&](long kk) {
        cyc e(mpq_class(1));
        for (long l : Jm) e = cyc_mul(e, cyc(mpq_class(1, pow_z(l, kk))));
        return e;
    };
    auto prod_Jmc_psiinv = [&]() {
        cyc e(mpq_class(1));
        for (long l : Jmc) e = cyc_mul(e, inv.value(l));
        return e;
    };

    ct_value out;
    if (k > 1) {
        if (!cusp_in_C0(A, cfr)) return out;
        cyc v = cyc(mpq_class(1, pow_z(c0cond, k)));
        v = cyc_mul(v, sgn_psi_cA(prim, A));
        v = cyc_mul(v, cyc_mul(L_at_nonpositive(inv, k), cyc(mpq_class(1, 2))));
        v = cyc_mul(v, euler_P(k));
        v = cyc_mul(v, prod_Jm_invpow(k));
        v = cyc_mul(v, prod_Jmc_psiinv());
        out.tau_coef = v;
        return out;
    }

    /* weight 1: the conductor is > 1, so the two regions are disjoint */
    if (cusp_in_Cinf(A, c0cond)) {
        long aa = A.a < 0 ? -A.a : A.a;
        cyc v = cyc_mul(inv.value(aa), cyc(mpq_class(A.a < 0 ? -1 : 1)));
        v = cyc_mul(v, cyc_mul(L_at_nonpositive(prim, 1), cyc(mpq_class(1, 2))));
        /* depletion splits over the cusp: unit factor when p avoids c */
        for (long q : p)
            v = cyc_mul(v, cusp_in_C0(A, q)
                               ? cyc(mpq_class(q - 1, q))
                               : cyc_sub(cyc(mpq_class(1)), prim.value(q)));
        for (long l : Jm) v = cyc_mul(v, cyc_mul(inv.value(l), cyc(mpq_class(1, l))));
        out.plain = v;
        return out;
    }
    if (cusp_in_C0(A, cfr)) {
        cyc v = cyc(mpq_class(1, c0cond));
        v = cyc_mul(v, sgn_psi_cA(prim, A));
        v = cyc_mul(v, cyc_mul(L_at_nonpositive(inv, 1), cyc(mpq_class(1, 2))));
        v = cyc_mul(v, euler_P(1));
        v = cyc_mul(v, prod_Jm_invpow(1));
        v = cyc_mul(v, prod_Jmc_psiinv());
        out.tau_coef = v;
        return out;
    }
    return out;
}

ct_value constant_term_W(long k, const dirichlet_character& psi, const std::vector<long>& P,
                         const std::vector<long>& T, const cusp_datum& A)
{
    dirichlet_character prim = psi.primitive();
    dirichlet_character inv = prim.inverse().primitive();
    if (prim.is_odd() != ((k % 2) != 0))
        throw std::invalid_argument("constant_term: parity of the character must match the weight");
    std::vector<long> p = sorted_unique(P), t = sorted_unique(T);
    long c0cond = prim.conductor();
    long cfr = std::lcm(c0cond, prod_of(p));
    long level = cfr * prod_of(t);
    if (A.level != level) throw std::invalid_argument("constant_term: cusp level mismatch");

    std::vector<long> Jt, Jtc, JP, JPc;
    for (long l : t) (cusp_in_C0(A, l) ? Jt : Jtc).push_back(l);
    for (long q : p) (cusp_in_C0(A, q) ? JP : JPc).push_back(q);

    auto euler_P = [&](long kk) {
        cyc e(mpq_class(1));
        for (long q : p)
            e = cyc_mul(e, cyc_sub(cyc(mpq_class(1)),
                                   cyc_mul(prim.value(q), cyc(mpq_class(1, pow_z(q, kk))))));
        return e;
    };
    auto smoothing_products = [&](long kk) {
        cyc e(mpq_class(1));
        for (long l : Jt) e = cyc_mul(e, cyc_sub(cyc(mpq_class(1)), prim.value(l)));
        for (long l : Jtc)
            e = cyc_mul(e, cyc_sub(cyc(mpq_class(1)), cyc(mpq_class(pow_z(l, kk)))));
        return e;
    };
    auto L_sT = [&]() { /* L_{S_inf, T}(psi, 0) */
        cyc v = L_at_nonpositive(prim, 1);
        for (long l : t)
            v = cyc_mul(v, cyc_sub(cyc(mpq_class(1)), cyc_mul(prim.value(l), cyc(mpq_class(l)))));
        return v;
    };
    auto depleted_unit_products = [&]() { /* prod_JP (1 - 1/Np) prod_JPc (1 - psi(p)) */
        cyc v(mpq_class(1));
        for (long q : JP) v = cyc_mul(v, cyc(mpq_class(q - 1, q)));
        for (long q : JPc) v = cyc_mul(v, cyc_sub(cyc(mpq_class(1)), prim.value(q)));
        return v;
    };

    ct_value out;
    if (k > 1) {
        if (!cusp_in_C0(A, cfr)) return out;
        cyc v = cyc(mpq_class(1, pow_z(c0cond, k)));
        v = cyc_mul(v, sgn_psi_cA(prim, A));
        v = cyc_mul(v, cyc_mul(L_at_nonpositive(inv, k), cyc(mpq_class(1, 2))));
        v = cyc_mul(v, euler_P(k));
        v = cyc_mul(v, smoothing_products(k));
        out.tau_coef = v;
        return out;
    }

    /* weight 1: the conductor is > 1, so the two regions are disjoint */
    if (cusp_in_Cinf(A, c0cond * prod_of(t))) {
        long aa = A.a < 0 ? -A.a : A.a;
        cyc sgn_psi_a = cyc_mul(inv.value(aa), cyc(mpq_class(A.a < 0 ? -1 : 1)));
        out.plain = cyc_mul(cyc_mul(sgn_psi_a, cyc_mul(L_sT(), cyc(mpq_class(1, 2)))),
                            depleted_unit_products());
        return out;
    }
    if (cusp_in_C0(A, cfr)) {
        cyc v = cyc(mpq_class(1, c0cond));
        v = cyc_mul(v, sgn_psi_cA(prim, A));
        v = cyc_mul(v, cyc_mul(L_at_nonpositive(inv, 1), cyc(mpq_class(1, 2))));
        v = cyc_mul(v, euler_P(1));
        v = cyc_mul(v, smoothing_products(1));
        out.tau_coef = v;
        return out;
    }
    return out;
}

} // namespace bst

#include "bst/dirichlet.hpp"

#include <numeric>
#include <stdexcept>

namespace bst {

cyc dirichlet_character::value(long a) const
{
    if (!U.is_unit(a)) return cyc(mpq_class(0));
    return chi.eval(U.dlog(a));
}

long dirichlet_character::value_exponent(long a) const
{
    return chi.eval_exponent(U.dlog(a));
}

bool dirichlet_character::is_odd() const
{
    long E = chi.G.exponent();
    long t = chi.eval_exponent(U.dlog(-1));
    return E % 2 == 0 && t == E / 2;
}

long dirichlet_character::conductor() const
{
    long n = modulus;
    for (long d = 1; d <= n; d++) {
        if (n % d != 0) continue;
        bool ok = true;
        for (long a = 1; a <= n && ok; a++) {
            if (!U.is_unit(a) || a % d != 1 % d) continue;
            if (chi.eval_exponent(U.dlog(a)) != 0) ok = false;
        }
        if (ok) return d;
    }
    return n;
}

dirichlet_character dirichlet_character::primitive() const
{
    long f = conductor();
    dirichlet_character out;
    out.modulus = f;
    out.U = make_unit_group(f);
    out.chi.G = out.U.grp;
    long En = chi.G.exponent(), Ef = out.U.grp.exponent();
    for (int j = 0; j < out.U.grp.ngens(); j++) {
        long r = out.U.gen_residues[(size_t)j];
        long s = r;
        while (!U.is_unit(s)) s += f; /* lift to a unit mod the original modulus */
        long t = chi.eval_exponent(U.dlog(s));
        if ((t * Ef) % En != 0)
            throw std::logic_error("primitive: value does not descend");
        out.chi.exps.push_back(((t * Ef) / En) % Ef);
    }
    return out;
}

dirichlet_character dirichlet_character::inverse() const
{
    dirichlet_character out = *this;
    out.chi = chi.inverse();
    return out;
}

dirichlet_character dirichlet_character::mul(const dirichlet_character& o) const
{
    if (modulus != o.modulus) throw std::invalid_argument("dirichlet mul: modulus mismatch");
    dirichlet_character out = *this;
    out.chi = chi.mul(o.chi);
    return out;
}

mpz_class dirichlet_character::value_mod(long a, const mpz_class& p, int m) const
{
    if (!U.is_unit(a)) return 0;
    return chi.eval_mod(U.dlog(a), p, m);
}

dirichlet_character trivial_character(long n)
{
    dirichlet_character out;
    out.modulus = n;
    out.U = make_unit_group(n);
    out.chi.G = out.U.grp;
    out.chi.exps.assign((size_t)out.U.grp.ngens(), 0);
    return out;
}

dirichlet_character quadratic_character(long D)
{
    long n = D < 0 ? -D : D;
    dirichlet_character out;
    out.modulus = n;
    out.U = make_unit_group(n);
    out.chi.G = out.U.grp;
    long E = out.U.grp.exponent();
    for (int j = 0; j < out.U.grp.ngens(); j++) {
        int v = mpz_kronecker(mpz_class(D).get_mpz_t(), mpz_class(out.U.gen_residues[(size_t)j]).get_mpz_t());
        if (v == 1) out.chi.exps.push_back(0);
        else if (v == -1) {
            if (E % 2 != 0) throw std::logic_error("quadratic_character: no order-2 value available");
            out.chi.exps.push_back(E / 2);
        } else
            throw std::logic_error("quadratic_character: generator not coprime to D");
    }
    return out;
}

std::vector<dirichlet_character> characters_mod(long n)
{
    unit_group_modm U = make_unit_group(n);
    std::vector<dirichlet_character> out;
    for (const character& c : enumerate_characters(U.grp)) {
        dirichlet_character d;
        d.modulus = n;
        d.U = U;
        d.chi = c;
        out.push_back(d);
    }
    return out;
}

mpq_class bernoulli_number(int k)
{
    static std::vector<mpq_class> cache = {mpq_class(1)};
    while ((int)cache.size() <= k) {
        int n = (int)cache.size();
        /* sum_{j=0}^{n} binom(n+1, j) B_j = 0 */
        mpq_class s = 0;
        mpz_class binom = 1; /* binom(n+1, 0) */
        for (int j = 0; j < n; j++) {
            s += mpq_class(binom) * cache[(size_t)j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        mpq_class b = -s / mpq_class(binom); /* binom(n+1, n) = n+1 */
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[(size_t)k];
}

mpq_class bernoulli_poly(int k, const mpq_class& x)
{
    /* B_k(x) = sum_i binom(k, i) B_i x^{k-i} */
    mpq_class s = 0;
    mpz_class binom = 1;
    for (int i = 0; i <= k; i++) {
        mpq_class pw = 1;
        for (int t = 0; t < k - i; t++) pw *= x;
        s += mpq_class(binom) * bernoulli_number(i) * pw;
        binom = binom * (k - i) / (i + 1);
    }
    s.canonicalize();
    return s;
}

cyc generalized_bernoulli(const dirichlet_character& chi, int k)
{
    if (!chi.is_primitive())
        throw std::invalid_argument("generalized_bernoulli: character not primitive");
    long f = chi.modulus;
    mpq_class fk = 1;
    for (int i = 1; i < k; i++) fk *= f;
    cyc s;
    for (long a = 1; a <= f; a++) {
        cyc v = chi.value(a);
        if (v.is_zero()) continue;
        mpq_class af(a, f);
        af.canonicalize();
        s = cyc_add(s, cyc_mul(v, cyc(bernoulli_poly(k, af))));
    }
    return cyc_mul(cyc(fk), s);
}

cyc L_at_nonpositive(const dirichlet_character& chi, int k)
{
    if (k < 1) throw std::invalid_argument("L_at_nonpositive: k >= 1 required");
    return cyc_mul(cyc(mpq_class(-1, k)), generalized_bernoulli(chi, k));
}

} // namespace bst

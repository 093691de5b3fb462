#include "bst/stickelberger.hpp"

#include "bst/character.hpp"
#include "bst/galois_structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bst {

mpq_class partial_zeta_zero(long m, long a)
{
    if (a < 1 || a > m || std::gcd(a, m) != 1)
        throw std::invalid_argument("partial_zeta_zero: residue not coprime to the modulus");
    mpq_class v = mpq_class(1, 2) - mpq_class(a, m);
    v.canonicalize();
    return v;
}

dirichlet_character pullback_character(const abelian_field_q& F, const character& chi)
{
    dirichlet_character out;
    out.modulus = F.conductor;
    out.U = F.U;
    out.chi.G = F.U.grp;
    long Eg = F.G.exponent(), Em = F.U.grp.exponent();
    if (Eg == 0 || Em % Eg != 0) throw std::logic_error("pullback_character: exponent mismatch");
    for (int j = 0; j < F.U.grp.ngens(); j++) {
        long t = chi.eval_exponent(F.to_galois.project_gen(j));
        out.chi.exps.push_back(t * (Em / Eg) % Em);
    }
    return out;
}

static void sort_unique(std::vector<long>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/* L_{S,T}(chi, 0) from the primitive L-value and explicit Euler factors */
static cyc l_value_st(const abelian_field_q& F, const character& chi,
                      const std::vector<long>& S_fin, const std::vector<long>& T)
{
    dirichlet_character prim = pullback_character(F, chi).primitive();
    cyc v = L_at_nonpositive(prim, 1);
    for (long p : S_fin) v = cyc_mul(v, cyc_sub(cyc(mpq_class(1)), prim.value(p)));
    for (long l : T)
        v = cyc_mul(v, cyc_sub(cyc(mpq_class(1)), cyc_mul(prim.value(l), cyc(mpq_class(l)))));
    return v;
}

/* base + Euler factors entirely inside Q[G]; valid when S_fin covers S_ram */
static grq theta_conductor_path(const abelian_field_q& F, const std::vector<long>& S_fin,
                                const std::vector<long>& T)
{
    long f = F.conductor;
    grq th(F.G);
    for (long a = 1; a <= f; a++) {
        if (!F.U.is_unit(a)) continue;
        th.coeff(F.G.neg(F.artin(a))) += partial_zeta_zero(f, a);
    }
    for (long p : S_fin) {
        if (f % p == 0) continue; /* conductor level already removes p | f */
        grq factor = gr_sub(grq::scalar(F.G, 1), grq::of_element(F.G, F.G.neg(F.artin(p))));
        th = gr_mul(th, factor);
    }
    for (long l : T) {
        grq factor = gr_sub(grq::scalar(F.G, 1),
                            gr_smul(mpq_class(l), grq::of_element(F.G, F.G.neg(F.artin(l)))));
        th = gr_mul(th, factor);
    }
    return th;
}

/* general S: assemble the coefficients from L-values character by character */
static grq theta_character_path(const abelian_field_q& F, const std::vector<long>& S_fin,
                                const std::vector<long>& T)
{
    long n = F.G.order();
    std::vector<character> chars = enumerate_characters(F.G);
    std::vector<cyc> lvals;
    for (const character& chi : chars) lvals.push_back(l_value_st(F, chi, S_fin, T));
    grq th(F.G);
    for (long g = 0; g < n; g++) {
        gelt x = F.G.elt_at(g);
        cyc c;
        for (size_t i = 0; i < chars.size(); i++)
            c = cyc_add(c, cyc_mul(lvals[i], chars[i].eval(x)));
        if (!c.is_rational())
            throw std::logic_error("theta: non-rational coefficient");
        mpq_class v = c.rational_value() / n;
        v.canonicalize();
        th.coeff(x) = v;
    }
    return th;
}

stickelberger_element theta(const abelian_field_q& F, std::vector<long> S_finite,
                            std::vector<long> T)
{
    sort_unique(S_finite);
    sort_unique(T);
    for (long l : T) {
        if (std::find(S_finite.begin(), S_finite.end(), l) != S_finite.end())
            throw std::invalid_argument("theta: S and T overlap");
        if (F.is_ramified(l))
            throw std::invalid_argument("theta: T contains a ramified prime");
    }
    bool covers_ram = true;
    for (long p : F.s_ram)
        if (std::find(S_finite.begin(), S_finite.end(), p) == S_finite.end()) covers_ram = false;

    stickelberger_element out;
    out.s_finite = S_finite;
    out.t_set = T;
    out.element = covers_ram ? theta_conductor_path(F, S_finite, T)
                             : theta_character_path(F, S_finite, T);
    return out;
}

drcond_report check_drcond(const abelian_field_q& F, const std::vector<long>& T)
{
    drcond_report rep;
    rep.roots_of_unity = F.num_roots_of_unity();
    std::vector<long> t = T;
    sort_unique(t);
    rep.two_residue_criterion = t.size() >= 2;
    if (t.empty()) {
        rep.ok = false;
        rep.reason = "empty T leaves all roots of unity congruent to 1";
        return rep;
    }
    if (rep.two_residue_criterion) {
        /* no root of order > 1 is a power of two different primes at once */
        rep.ok = true;
        rep.reason = "two residue characteristics";
        return rep;
    }
    long l = t[0];
    if (rep.roots_of_unity % l == 0) {
        rep.ok = false;
        rep.reason = "an order-" + std::to_string(l) + " root of unity is 1 above " +
                     std::to_string(l);
    } else {
        rep.ok = true;
        rep.reason = "no roots of unity of order a power of " + std::to_string(l);
    }
    return rep;
}

bool check_integrality(const stickelberger_element& th)
{
    return th.element.is_integral();
}

static ideal_lattice ks_ideal_impl(const abelian_field_q& F, const std::vector<long>& T,
                                   long p_skip)
{
    if (!check_drcond(F, T).ok)
        throw std::invalid_argument("sinnott_kurihara_ideal: smoothing condition fails");
    /* ramified primes entering the two-generator product */
    std::vector<long> prod_primes, base_primes;
    for (long q : F.s_ram)
        (q == p_skip ? base_primes : prod_primes).push_back(q);

    ambient_ring amb = group_ring_ambient(F.G);
    std::vector<std::vector<mpq_class>> gens;
    int r = (int)prod_primes.size();
    for (unsigned mask = 0; mask < (1u << r); mask++) {
        /* depleted set J = base ramified primes + chosen subset */
        std::vector<long> J = base_primes;
        for (int i = 0; i < r; i++)
            if (mask & (1u << i)) J.push_back(prod_primes[(size_t)i]);
        grq g = gr_sharp(theta(F, J, T).element);
        for (int i = 0; i < r; i++)
            if (!(mask & (1u << i)))
                g = gr_mul(g, canonical_element(F.gal, std::to_string(prod_primes[(size_t)i]),
                                                canonical_kind::norm_of_inertia));
        gens.push_back(g.c);
    }
    return ideal_from_generators(amb, gens);
}

ideal_lattice sinnott_kurihara_ideal(const abelian_field_q& F, const std::vector<long>& T)
{
    ideal_lattice I = ks_ideal_impl(F, T, 0);
    if (I.den != 1)
        throw std::logic_error("sinnott_kurihara_ideal: non-integral lattice");
    return I;
}

ideal_lattice sinnott_kurihara_ideal_p_modified(const abelian_field_q& F,
                                                const std::vector<long>& T, long p)
{
    if (p == 2) throw std::invalid_argument("p-modified ideal: p must be odd");
    ideal_lattice I = ks_ideal_impl(F, T, p);
    if (mpz_divisible_ui_p(I.den.get_mpz_t(), (unsigned long)p))
        throw std::logic_error("p-modified ideal: denominator divisible by p");
    return I;
}

} // namespace bst

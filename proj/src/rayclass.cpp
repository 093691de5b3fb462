#include "bst/rayclass.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bst {

static bool coprime_to(const quad_ideal& I, const std::vector<long>& T)
{
    mpz_class n = ideal_norm(I);
    for (long l : T)
        if (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)l)) return false;
    return true;
}

static quad_elt mu_generator(long D)
{
    if (D == -3) return quad_elt{1, 1};
    if (D == -4) return quad_elt{0, 1};
    return quad_elt{-2, 0};
}

static bool is_prime_l(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

static long z_val(mpz_class n, long l)
{
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)l)) {
        n /= l;
        v++;
    }
    return v;
}

/* valuation of a prime in an integral ideal, by containment of its basis */
static long ideal_val_in(const quad_ideal& P, const quad_ideal& I)
{
    quad_elt b1{2 * I.m * I.a, 0};
    quad_elt b2{I.m * I.b, I.m};
    for (long k = 0;; k++) {
        quad_ideal Pk = ideal_pow(P, k + 1);
        if (!(ideal_contains(Pk, b1) && ideal_contains(Pk, b2))) return k;
    }
}

/* Valuations of an element over the factor base: v at the chosen prime and
 * at its conjugate, one pair per base rational prime.  The residual norm
 * (norm with the base part divided out) is returned; smooth means 1. */
struct base_split {
    std::vector<long> v, vbar;
    mpz_class residual;
};

static base_split split_over_base(const ray_class_group_t& RC, const quad_elt& u,
                                  const mpz_class& known_divisor)
{
    base_split out;
    mpz_class n = qe_norm(RC.K.D, u) / known_divisor;
    for (size_t j = 0; j < RC.base_ells.size(); j++) {
        long tot = z_val(qe_norm(RC.K.D, u), RC.base_ells[j]);
        long v = ideal_valuation(RC.base_primes[j], u);
        out.v.push_back(v);
        out.vbar.push_back(tot - v);
        while (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)RC.base_ells[j]))
            n /= RC.base_ells[j];
    }
    out.residual = n;
    return out;
}

/* generator coordinates (residue slots + base-prime slots) of the class of
 * an ideal coprime to T: find alpha in I whose cofactor ideal is supported
 * on the base, then rewrite conjugate primes through (ell) = Q Qbar */
static std::vector<mpz_class> raw_class_vec(const ray_class_group_t& RC, const quad_ideal& I)
{
    size_t nc = RC.comps.size(), k = RC.base_ells.size();
    long D = RC.K.D;
    mpz_class NI = ideal_norm(I);
    quad_elt e1{2 * I.m * I.a, 0}, e2{I.m * I.b, I.m};
    for (long B = 4; B <= (1L << 22); B *= 2) {
        for (long s = -B; s <= B; s++)
            for (long t = 0; t <= B; t++) {
                if (s == 0 && t == 0) continue;
                quad_elt u{s * e1.x + t * e2.x, s * e1.y + t * e2.y};
                base_split bs = split_over_base(RC, u, NI);
                if (bs.residual != 1) continue;
                std::vector<mpz_class> vec(nc + k, 0);
                for (size_t i = 0; i < nc; i++) vec[i] = RC.comps[i].dlog(u);
                for (size_t j = 0; j < k; j++) {
                    long vI = ideal_val_in(RC.base_primes[j], I);
                    long vbarI = z_val(NI, RC.base_ells[j]) - vI;
                    long vj = bs.v[(size_t)j] - vI;
                    long vbarj = bs.vbar[(size_t)j] - vbarI;
                    vec[nc + j] = -(mpz_class(vj) - vbarj);
                    for (size_t i = 0; i < nc; i++)
                        vec[i] -= mpz_class(vbarj) * RC.comps[i].dlog(qe_int(RC.base_ells[j]));
                }
                return vec;
            }
    }
    throw std::logic_error("ray_class_group: no smooth element found in the ideal");
}

gelt ray_class_group_t::class_of_ideal(const quad_ideal& I) const
{
    if (!coprime_to(I, T))
        throw std::invalid_argument("ray_class_group: ideal not coprime to the modulus");
    return pres.project(raw_class_vec(*this, I));
}

gelt ray_class_group_t::class_of_elt(const quad_elt& u) const
{
    std::vector<mpz_class> v(comps.size() + base_ells.size(), 0);
    for (size_t i = 0; i < comps.size(); i++) v[i] = comps[i].dlog(u);
    return pres.project(v);
}

ray_class_group_t ray_class_group(long D, const std::vector<long>& T)
{
    ray_class_group_t RC;
    RC.K = make_imag_quad_field(D);
    RC.T = T;
    std::sort(RC.T.begin(), RC.T.end());
    RC.T.erase(std::unique(RC.T.begin(), RC.T.end()), RC.T.end());

    for (long l : RC.T) {
        splitting_result sp = prime_splitting(D, l);
        if (sp.type == splitting_type::ramified)
            throw std::invalid_argument("ray_class_group: ramified prime in T");
        int base = (int)RC.comps.size();
        if (sp.type == splitting_type::split) {
            RC.comps.push_back(make_residue_field(D, sp.primes[0], l, true));
            RC.comps.push_back(make_residue_field(D, sp.primes[1], l, true));
            RC.conj_comp.push_back(base + 1);
            RC.conj_comp.push_back(base);
        } else {
            RC.comps.push_back(make_residue_field(D, sp.primes[0], l, false));
            RC.conj_comp.push_back(base);
        }
    }

    RC.cl = form_class_group(D);
    int r = RC.cl.grp.ngens();
    size_t nc = RC.comps.size();

    /* smallest-norm coprime ideal representative for each class generator */
    for (int j = 0; j < r; j++) {
        bool found = false;
        for (long a = 1; a <= 1000 * (-D) && !found; a++) {
            bool bad = false;
            for (long l : RC.T)
                if (a % l == 0) bad = true;
            if (bad) continue;
            for (long b = 0; b < 2 * a && !found; b++) {
                if ((mpz_class(b) * b - D) % (4 * a) != 0) continue;
                quad_ideal I = make_ideal(D, 1, a, b);
                if (RC.cl.elt_of_ideal(I) == RC.cl.grp.gen(j)) {
                    RC.class_reps.push_back(I);
                    found = true;
                }
            }
        }
        if (!found) throw std::logic_error("ray_class_group: no coprime class representative");
    }

    /* factor base: split primes whose classes generate Cl, with headroom so
     * that short smooth relations exist */
    {
        std::vector<gelt> classes;
        bool full = subgroup_closure(RC.cl.grp, classes).size() == RC.cl.grp.order();
        for (long l = 2; l <= 5000; l++) {
            if ((long)RC.base_ells.size() >= 6 && full) break;
            if (!is_prime_l(l) || D % l == 0) continue;
            if (std::find(RC.T.begin(), RC.T.end(), l) != RC.T.end()) continue;
            splitting_result sp = prime_splitting(D, l);
            if (sp.type != splitting_type::split) continue;
            RC.base_ells.push_back(l);
            RC.base_primes.push_back(sp.primes[0]);
            classes.push_back(RC.cl.elt_of_ideal(sp.primes[0]));
            full = subgroup_closure(RC.cl.grp, classes).size() == RC.cl.grp.order();
        }
        if (!full) throw std::logic_error("ray_class_group: factor base does not generate");
    }
    size_t k = RC.base_ells.size();
    int n = (int)(nc + k);

    /* the order of Cl^T is known in advance from the unit-residue sequence:
     * #Cl^T = h * prod (q_i - 1) / #image(mu) */
    mpz_class target = RC.cl.h();
    for (size_t i = 0; i < nc; i++) target *= RC.comps[i].q - 1;
    {
        quad_elt zeta = mu_generator(D);
        long o = 1;
        for (size_t i = 0; i < nc; i++) {
            long m = RC.comps[i].q - 1;
            long d = RC.comps[i].dlog(zeta);
            long oi = m / std::gcd(m, d == 0 ? m : d);
            o = std::lcm(o, oi);
        }
        target /= o;
    }

    /* relations: residue orders, the image of mu, and one row per smooth
     * element (x + y sqrt(D))/2 whose ideal factors over the base; accumulate
     * until the presented order matches the known order */
    std::vector<std::vector<mpz_class>> rel;
    for (size_t i = 0; i < nc; i++) {
        std::vector<mpz_class> row((size_t)n, 0);
        row[i] = RC.comps[i].q - 1;
        rel.push_back(row);
    }
    {
        std::vector<mpz_class> row((size_t)n, 0);
        quad_elt zeta = mu_generator(D);
        for (size_t i = 0; i < nc; i++) row[i] = RC.comps[i].dlog(zeta);
        rel.push_back(row);
    }
    bool done = false;
    long y_lo = 0;
    for (long B = 16; B <= (1L << 22) && !done; B *= 2) {
        for (long y = y_lo; y <= B && !done; y++) {
            long xmax = 2 * B;
            for (long x = (y * D) % 2 == 0 ? 0 : 1; x <= xmax && !done; x += 2) {
                if (x == 0 && y == 0) continue;
                quad_elt u{x, y};
                base_split bs = split_over_base(RC, u, 1);
                if (bs.residual != 1) continue;
                std::vector<mpz_class> row((size_t)n, 0);
                for (size_t j = 0; j < k; j++) {
                    row[nc + j] = mpz_class(bs.v[j]) - bs.vbar[j];
                    for (size_t i = 0; i < nc; i++)
                        row[i] += mpz_class(bs.vbar[j]) * RC.comps[i].dlog(qe_int(RC.base_ells[j]));
                }
                for (size_t i = 0; i < nc; i++) row[i] -= RC.comps[i].dlog(u);
                rel.push_back(row);
            }
            /* periodic order check */
            if (y % 8 == 7 || y == B) {
                imat R((int)rel.size(), n);
                for (int i = 0; i < R.rows; i++)
                    for (int j2 = 0; j2 < n; j2++) R.at(i, j2) = rel[(size_t)i][(size_t)j2];
                try {
                    fab_presented pres = structure_from_relations(n, R);
                    if (pres.grp.order() == target) {
                        RC.pres = pres;
                        done = true;
                    }
                } catch (const std::runtime_error&) {
                    /* relations not yet of full rank; keep accumulating */
                }
            }
        }
        y_lo = B + 1;
    }
    if (!done) throw std::logic_error("ray_class_group: relation search did not close");
    RC.grp = RC.pres.grp;

    /* conjugation on each presentation generator, pushed to the quotient */
    std::vector<std::vector<mpz_class>> conj_img((size_t)n);
    for (size_t i = 0; i < nc; i++) {
        std::vector<mpz_class> v((size_t)n, 0);
        int ci = RC.conj_comp[i];
        v[(size_t)ci] = RC.comps[(size_t)ci].dlog(qe_conj(RC.comps[i].gen));
        conj_img[i] = v;
    }
    for (size_t j = 0; j < k; j++) {
        /* conj(Q) = (ell) / Q */
        std::vector<mpz_class> v((size_t)n, 0);
        v[nc + j] = -1;
        for (size_t i = 0; i < nc; i++) v[i] = RC.comps[i].dlog(qe_int(RC.base_ells[j]));
        conj_img[nc + j] = v;
    }

    int kg = RC.grp.ngens();
    imat A(kg, kg);
    for (int t = 0; t < kg; t++) {
        std::vector<mpz_class> acc((size_t)n, 0);
        for (int s = 0; s < n; s++)
            for (int u = 0; u < n; u++)
                acc[(size_t)u] += RC.pres.lift.at(t, s) * conj_img[(size_t)s][(size_t)u];
        gelt img = RC.pres.project(acc);
        for (int u = 0; u < kg; u++) A.at(t, u) = img[(size_t)u];
    }
    RC.mod.acting = fab_group({2});
    RC.mod.inv = RC.grp.inv;
    RC.mod.action = {A};
    RC.mod.validate();
    return RC;
}

} // namespace bst

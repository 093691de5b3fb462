#include "bst/verify.hpp"

#include "bst/ideal_lattice.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bst {

static long now_ms()
{
    using namespace std::chrono;
    return (long)duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

static bool is_prime_l(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

static std::vector<long> sorted_unique(std::vector<long> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

static mpz_class odd_part_z(mpz_class x)
{
    if (x < 0) x = -x;
    if (x == 0) return 0;
    while (mpz_even_p(x.get_mpz_t())) x /= 2;
    return x;
}

static long v_p(mpz_class x, long p)
{
    if (x < 0) x = -x;
    if (x == 0) throw std::invalid_argument("v_p of zero");
    long v = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), (unsigned long)p)) {
        x /= p;
        v++;
    }
    return v;
}

std::string verification_case::case_id() const
{
    std::ostringstream os;
    os << theorem;
    if (D != 0) os << ":D=" << D;
    if (D1 != 0) os << ":D1=" << D1 << ":D2=" << D2;
    os << ":T=";
    for (size_t i = 0; i < T.size(); i++) os << (i ? "," : "") << T[i];
    if (!S_extra.empty()) {
        os << ":S=";
        for (size_t i = 0; i < S_extra.size(); i++) os << (i ? "," : "") << S_extra[i];
    }
    if (p != 0) os << ":p=" << p;
    if (split_prime != 0) os << ":q=" << split_prime;
    return os.str();
}

static long kron(long D, long a)
{
    mpz_class d(D);
    return mpz_kronecker_si(d.get_mpz_t(), a);
}

abelian_field_q quad_field_q(long D)
{
    if (!is_fundamental_discriminant(D) || D >= 0)
        throw std::invalid_argument("quad_field_q: fundamental D < 0 required");
    long m = -D;
    std::vector<long> gens;
    for (long a = 1; a < m; a++)
        if (std::gcd(a, m) == 1 && kron(D, a) == 1) gens.push_back(a);
    abelian_field_q F = make_abelian_field(m, gens);
    if (F.degree() != 2) throw std::logic_error("quad_field_q: degree != 2");
    return F;
}

abelian_field_q biquad_field_q(long D1, long D2)
{
    if (!is_fundamental_discriminant(D1) || !is_fundamental_discriminant(D2) ||
        D1 >= 0 || D2 >= 0 || D1 == D2)
        throw std::invalid_argument("biquad_field_q: distinct fundamental D < 0 required");
    long m = std::lcm(-D1, -D2);
    std::vector<long> gens;
    for (long a = 1; a < m; a++)
        if (std::gcd(a, m) == 1 && kron(D1, a) == 1 && kron(D2, a) == 1) gens.push_back(a);
    abelian_field_q F = make_abelian_field(m, gens);
    if (F.degree() != 4 || F.G.exponent() != 2)
        throw std::logic_error("biquad_field_q: wrong Galois group");
    return F;
}

galois_module minus_odd_module(const galois_module& M)
{
    galois_module Mo = M.odd_quotient();
    int n = (int)Mo.inv.size();
    if (n == 0) return Mo;
    imat K(n, n);
    const imat& A = Mo.action[0];
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) K.at(i, j) = A.at(i, j) + (i == j ? 1 : 0);
    return quotient_module(Mo, K);
}

/* image lattice of (sigma + eps) on the generators */
static galois_module sign_quotient(const galois_module& M, int eps)
{
    int n = (int)M.inv.size();
    if (n == 0) return M;
    imat K(n, n);
    const imat& A = M.action[0];
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) K.at(i, j) = A.at(i, j) + (i == j ? eps : 0);
    return quotient_module(M, K);
}

bool fitting_equivalent(const galois_module& A, const galois_module& B)
{
    galois_module ao = A.odd_quotient(), bo = B.odd_quotient();
    std::vector<long> ia, ib;
    for (long d : ao.inv)
        if (d > 1) ia.push_back(d);
    for (long d : bo.inv)
        if (d > 1) ib.push_back(d);
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (ia != ib) return false;
    for (int eps : {1, -1})
        if (sign_quotient(ao, eps).order() != sign_quotient(bo, eps).order()) return false;
    fab_group g2({2});
    minus_ring mr = make_minus_ring(g2, g2.gen(0));
    ideal_lattice fa = fitting_ideal(module_presentation_minus(ao, mr));
    ideal_lattice fb = fitting_ideal(module_presentation_minus(bo, mr));
    return ideal_equals(fa, fb);
}

static verification_report start_report(const verification_case& c)
{
    verification_report r;
    r.vcase = c;
    r.status = "pass";
    return r;
}

static void finish(verification_report& r, long t0) { r.elapsed_ms = now_ms() - t0; }

static void add_witness(verification_report& r, const std::string& n, const std::string& v)
{
    r.witnesses.push_back({n, v});
}

static bool precheck(verification_report& r, const abelian_field_q& F,
                     const verification_case& c)
{
    for (long l : c.T) {
        if (F.conductor % l == 0) {
            r.status = "skipped";
            r.reason = "smoothing prime ramified";
            return false;
        }
        bool in_s = std::find(c.S_extra.begin(), c.S_extra.end(), l) != c.S_extra.end();
        if (in_s) {
            r.status = "skipped";
            r.reason = "S and T overlap";
            return false;
        }
    }
    drcond_report dr = check_drcond(F, c.T);
    if (!dr.ok) {
        r.status = "skipped";
        r.reason = "smoothing condition fails: " + dr.reason;
        return false;
    }
    return true;
}

static std::vector<long> s_with_extra(const abelian_field_q& F, const verification_case& c)
{
    std::vector<long> s = F.s_ram;
    s.insert(s.end(), c.S_extra.begin(), c.S_extra.end());
    return sorted_unique(s);
}

/* theta of an order-2 group as integers (n0 + n1 sigma) */
static void theta_coeffs(const stickelberger_element& th, mpz_class& n0, mpz_class& n1)
{
    if (th.element.c.size() != 2) throw std::logic_error("theta_coeffs: rank-2 group expected");
    if (th.element.c[0].get_den() != 1 || th.element.c[1].get_den() != 1)
        throw std::logic_error("theta_coeffs: non-integral element");
    n0 = th.element.c[0].get_num();
    n1 = th.element.c[1].get_num();
}

/* odd characters paired with the imaginary quadratic subfields they cut out */
struct odd_component {
    character chi;
    long D = 0;
};

static std::vector<odd_component> odd_components(const abelian_field_q& F, long D1, long D2)
{
    std::vector<odd_component> out;
    for (const character& chi : enumerate_characters(F.G)) {
        if (!chi.is_odd(F.gal.conj)) continue;
        dirichlet_character psi = pullback_character(F, chi).primitive();
        long D = 0;
        for (long cand : {D1, D2}) {
            if (psi.conductor() != -cand) continue;
            dirichlet_character q = quadratic_character(cand);
            bool same = true;
            for (long a = 1; a < -cand && same; a++)
                if (!cyc_eq(psi.value(a), q.value(a))) same = false;
            if (same) D = cand;
        }
        if (D == 0) throw std::logic_error("odd character matches no component field");
        out.push_back({chi, D});
    }
    if (out.size() != 2) throw std::logic_error("expected two odd characters");
    return out;
}

verification_report check_brumer_stark(const verification_case& c)
{
    long t0 = now_ms();
    verification_report r = start_report(c);
    abelian_field_q F = (c.D != 0) ? quad_field_q(c.D) : biquad_field_q(c.D1, c.D2);
    if (!precheck(r, F, c)) {
        finish(r, t0);
        return r;
    }
    stickelberger_element th = theta(F, s_with_extra(F, c), c.T);
    if (!check_integrality(th)) {
        r.status = "fail";
        r.reason = "theta element not integral";
        finish(r, t0);
        return r;
    }

    if (c.D != 0) {
        ray_class_group_t RC = ray_class_group(c.D, c.T);
        galois_module Mo = RC.mod.odd_quotient();
        mpz_class n0, n1;
        theta_coeffs(th, n0, n1);
        add_witness(r, "theta", n0.get_str() + (n1 >= 0 ? "+" : "") + n1.get_str() + "*s");
        add_witness(r, "odd_order", mpz_class(Mo.order()).get_str());
        int n = (int)Mo.inv.size();
        for (int t = 0; t < n && r.status == "pass"; t++) {
            for (int j = 0; j < n; j++) {
                mpz_class y = n1 * Mo.action[0].at(t, j) + (t == j ? n0 : mpz_class(0));
                if (y % Mo.inv[(size_t)j] != 0) {
                    r.status = "fail";
                    r.reason = "generator not annihilated";
                    add_witness(r, "generator", std::to_string(t));
                    break;
                }
            }
        }
    } else {
        for (const odd_component& oc : odd_components(F, c.D1, c.D2)) {
            cyc val = oc.chi.eval(th.element);
            mpq_class q = val.rational_value();
            if (q.get_den() != 1) throw std::logic_error("non-integral character value");
            mpz_class n = q.get_num();
            add_witness(r, "theta_component_" + std::to_string(oc.D), n.get_str());
            /* vanishing when the character is trivial on a depletion Frobenius */
            for (long l : c.S_extra)
                if (!F.is_ramified(l) && cyc_eq(oc.chi.eval(F.frobenius(l)), cyc(1)) && n != 0) {
                    r.status = "fail";
                    r.reason = "component survives a split depletion prime";
                }
            ray_class_group_t RC = ray_class_group(oc.D, c.T);
            galois_module Mm = minus_odd_module(RC.mod);
            for (long d : Mm.inv)
                if (n % d != 0) {
                    r.status = "fail";
                    r.reason = "component not annihilated";
                    add_witness(r, "component_invariant", std::to_string(d));
                }
        }
    }
    finish(r, t0);
    return r;
}

verification_report check_cnf(const verification_case& c)
{
    long t0 = now_ms();
    verification_report r = start_report(c);
    abelian_field_q F = (c.D != 0) ? quad_field_q(c.D) : biquad_field_q(c.D1, c.D2);
    if (!precheck(r, F, c)) {
        finish(r, t0);
        return r;
    }
    stickelberger_element th0 = theta(F, {}, c.T);
    mpq_class rhs = odd_product_det(th0.element, F.gal.conj);
    if (odd_part_z(rhs.get_den()) != 1) {
        r.status = "fail";
        r.reason = "L-value product has an odd denominator";
        finish(r, t0);
        return r;
    }
    mpz_class lhs = 1;
    if (c.D != 0) {
        lhs = minus_odd_module(ray_class_group(c.D, c.T).mod).order();
    } else {
        for (const odd_component& oc : odd_components(F, c.D1, c.D2))
            lhs *= minus_odd_module(ray_class_group(oc.D, c.T).mod).order();
    }
    mpz_class l = odd_part_z(lhs), rr = odd_part_z(rhs.get_num());
    add_witness(r, "class_side_odd", l.get_str());
    add_witness(r, "l_value_side_odd", rr.get_str());
    if (l != rr) {
        r.status = "fail";
        r.reason = "odd parts differ";
    }
    finish(r, t0);
    return r;
}

/* ideal image under the involution g -> g^{-1} */
static ideal_lattice ideal_sharp(const ideal_lattice& I, const fab_group& G)
{
    std::vector<std::vector<mpq_class>> gens;
    for (int i = 0; i < I.basis.rows; i++) {
        std::vector<mpq_class> v((size_t)I.basis.cols, 0);
        for (int j = 0; j < I.basis.cols; j++) {
            long jn = G.index_of(G.neg(G.elt_at(j)));
            v[(size_t)jn] = mpq_class(I.basis.at(i, j)) / mpq_class(I.den);
        }
        gens.push_back(v);
    }
    return ideal_from_generators(I.amb, gens);
}

verification_report check_kurihara(const verification_case& c)
{
    long t0 = now_ms();
    verification_report r = start_report(c);
    if (c.p == 2) throw std::invalid_argument("check_kurihara: p must be odd");
    if (!is_prime_l(c.p)) throw std::invalid_argument("check_kurihara: p must be prime");
    abelian_field_q F = (c.D != 0) ? quad_field_q(c.D) : biquad_field_q(c.D1, c.D2);
    if (!precheck(r, F, c)) {
        finish(r, t0);
        return r;
    }
    if (F.num_roots_of_unity() % c.p == 0) {
        r.status = "skipped";
        r.reason = "p divides the number of roots of unity";
        finish(r, t0);
        return r;
    }
    minus_ring mr = make_minus_ring(F.G, F.gal.conj);
    std::vector<std::vector<mpq_class>> fitt_gens;
    if (c.D != 0) {
        long a = v_p(minus_odd_module(ray_class_group(c.D, c.T).mod).order(), c.p);
        add_witness(r, "p_exponent", std::to_string(a));
        mpz_class pa;
        mpz_ui_pow_ui(pa.get_mpz_t(), (unsigned long)c.p, (unsigned long)a);
        std::vector<mpq_class> one = mr.amb.one();
        for (auto& x : one) x *= mpq_class(pa);
        fitt_gens.push_back(one);
    } else {
        for (const odd_component& oc : odd_components(F, c.D1, c.D2)) {
            long a = v_p(minus_odd_module(ray_class_group(oc.D, c.T).mod).order(), c.p);
            add_witness(r, "p_exponent_" + std::to_string(oc.D), std::to_string(a));
            /* p^a times the character idempotent, in minus coordinates */
            grq e(F.G);
            for (long idx = 0; idx < F.G.order(); idx++)
                e.c[(size_t)idx] =
                    oc.chi.eval(F.G.elt_at(idx)).rational_value() / F.G.order();
            mpz_class pa;
            mpz_ui_pow_ui(pa.get_mpz_t(), (unsigned long)c.p, (unsigned long)a);
            std::vector<mpq_class> v = mr.project(e);
            for (auto& x : v) x *= mpq_class(pa);
            fitt_gens.push_back(v);
        }
    }
    ideal_lattice fitt = ideal_from_generators(mr.amb, fitt_gens);
    /* The two-generator product ideal (no depletion at p): depleting at a
     * ramified p forces a zero at characters trivial on the decomposition
     * group there, which belongs to the Selmer-module refinement, not to the
     * class-module lattice compared here. */
    ideal_lattice ks = sinnott_kurihara_ideal(F, c.T);
    ideal_lattice ksm = ideal_minus_projection(ks, mr);
    if (!ideal_p_part_equals(fitt, ksm, c.p)) {
        r.status = "fail";
        r.reason = "p-parts of the minus lattices differ";
    }

    /* sharped full-S theta element lies in the Fitting lattice at p */
    stickelberger_element th = theta(F, s_with_extra(F, c), c.T);
    ideal_lattice th_sharp =
        ideal_from_generators(mr.amb, {mr.project(gr_sharp(th.element))});
    if (!ideal_p_part_contains(fitt, th_sharp, c.p)) {
        r.status = "fail";
        r.reason = "sharped theta escapes the Fitting lattice";
    }

    /* deduction chain on the concrete module, imaginary quadratic case */
    if (c.D != 0) {
        galois_module Mm = minus_odd_module(ray_class_group(c.D, c.T).mod);
        ideal_lattice fz = fitting_ideal(module_presentation(Mm));
        ideal_lattice ann = annihilator(Mm);
        if (!ideal_p_part_contains(ann, fz, c.p)) {
            r.status = "fail";
            r.reason = "Fitting ideal escapes the annihilator";
        }
        ideal_lattice annd = annihilator(Mm.dual());
        if (!ideal_equals(annd, ideal_sharp(ann, Mm.acting))) {
            r.status = "fail";
            r.reason = "dual annihilator differs from the sharped annihilator";
        }
    }
    finish(r, t0);
    return r;
}

static std::vector<quad_elt> roots_of_unity(long D)
{
    quad_elt z = D == -3 ? quad_elt{1, 1} : D == -4 ? quad_elt{0, 1} : quad_elt{-2, 0};
    std::vector<quad_elt> out;
    quad_elt cur = qe_int(1);
    long w = make_imag_quad_field(D).w();
    for (long i = 0; i < w; i++) {
        out.push_back(cur);
        cur = qe_mul(D, cur, z);
    }
    return out;
}

static std::vector<residue_field> smoothing_components(long D, const std::vector<long>& T)
{
    std::vector<residue_field> comps;
    for (long l : T) {
        splitting_result sp = prime_splitting(D, l);
        if (sp.type == splitting_type::ramified)
            throw std::invalid_argument("smoothing prime ramified");
        comps.push_back(make_residue_field(D, sp.primes[0], l, sp.type == splitting_type::split));
        if (sp.type == splitting_type::split)
            comps.push_back(make_residue_field(D, sp.primes[1], l, true));
    }
    return comps;
}

verification_report brumer_stark_unit(const verification_case& c, bs_unit_data* out)
{
    long t0 = now_ms();
    verification_report r = start_report(c);
    abelian_field_q F = quad_field_q(c.D);
    if (!precheck(r, F, c)) {
        finish(r, t0);
        return r;
    }
    long q = c.split_prime;
    if (q == 0 || c.D % q == 0 || std::find(c.T.begin(), c.T.end(), q) != c.T.end())
        throw std::invalid_argument("brumer_stark_unit: bad split prime");
    splitting_result sp = prime_splitting(c.D, q);
    if (sp.type != splitting_type::split)
        throw std::invalid_argument("brumer_stark_unit: prime does not split");

    stickelberger_element th = theta(F, s_with_extra(F, c), c.T);
    if (!check_integrality(th)) {
        r.status = "fail";
        r.reason = "theta element not integral";
        finish(r, t0);
        return r;
    }
    mpz_class n0, n1;
    theta_coeffs(th, n0, n1);
    if (n0 + n1 != 0) throw std::logic_error("theta has nonzero augmentation");
    if (n0 == 0) {
        r.status = "skipped";
        r.reason = "theta element vanishes";
        finish(r, t0);
        return r;
    }
    quad_ideal P = sp.primes[0], Pc = sp.primes[1];
    long n = (long)n0.get_si();
    if (n < 0) {
        std::swap(P, Pc);
        n = -n;
    }
    add_witness(r, "exponent", std::to_string(n));

    /* P^theta = P^(2n) / (q^n); find a generator of P^(2n) congruent to q^n.
     * The search only ever touches P^k for the class order k | 2n; the full
     * generator is the exact power g^(2n/k), keeping the enumeration bound at
     * norm q^k instead of q^(2n). */
    quad_ideal I = ideal_pow(P, 2 * n);
    principal_result pr;
    pr.principal = false;
    for (long k = 1; k <= 2 * n; k++) {
        if ((2 * n) % k != 0) continue;
        principal_result base = principal_generator(ideal_pow(P, k));
        if (!base.principal) continue;
        pr.principal = true;
        pr.gen = qe_int(1);
        for (long i = 0; i < (2 * n) / k; i++) pr.gen = qe_mul(c.D, pr.gen, base.gen);
        break;
    }
    if (!pr.principal) {
        r.status = "fail";
        r.reason = "theta power of the prime is not principal";
        finish(r, t0);
        return r;
    }
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), (unsigned long)q, (unsigned long)n);
    std::vector<residue_field> comps = smoothing_components(c.D, c.T);
    quad_elt target{2 * qn, 0}; /* the rational integer q^n */
    quad_elt num;
    bool found = false;
    for (const quad_elt& z : roots_of_unity(c.D)) {
        quad_elt cand = qe_mul(c.D, z, pr.gen);
        bool ok = true;
        for (const residue_field& rf : comps)
            if (rf.key(cand) != rf.key(target)) ok = false;
        if (ok) {
            num = cand;
            found = true;
            break;
        }
    }
    if (!found) {
        r.status = "fail";
        r.reason = "no unit congruent to 1 at the smoothing modulus";
        finish(r, t0);
        return r;
    }

    /* exact checks: generated ideal, valuations, anti-unit symmetry */
    if (!ideal_eq(ideal_of_elt(c.D, num), I)) {
        r.status = "fail";
        r.reason = "generator does not generate the theta power";
    }
    long vP = ideal_valuation(P, num), vPc = ideal_valuation(Pc, num);
    if (vP - n != n || vPc - n != -n) {
        r.status = "fail";
        r.reason = "valuation identity fails";
    }
    add_witness(r, "ord_P", std::to_string(vP - n));
    add_witness(r, "ord_P_conj", std::to_string(vPc - n));
    quad_elt lhs = qe_mul(c.D, num, qe_conj(num));
    quad_elt rhs = qe_mul(c.D, qe_conj(num), num);
    if (!qe_eq(lhs, rhs) || vP - vPc != 2 * n) {
        r.status = "fail";
        r.reason = "anti-unit identity fails";
    }
    if (out) {
        out->num = num;
        out->den = qn;
        out->n = n;
        out->P = P;
    }
    finish(r, t0);
    return r;
}

verification_report check_selmer_duality(const verification_case& c)
{
    long t0 = now_ms();
    verification_report r = start_report(c);
    abelian_field_q F = quad_field_q(c.D);
    if (!precheck(r, F, c)) {
        finish(r, t0);
        return r;
    }
    ray_class_group_t RC = ray_class_group(c.D, c.T);

    /* greedy auxiliary set: split primes whose classes generate Cl^T */
    std::vector<quad_ideal> primes;
    std::vector<gelt> classes;
    bool full = subgroup_closure(RC.grp, classes).size() == RC.grp.order();
    for (long l = 2; l <= 300 && !full; l++) {
        if (!is_prime_l(l) || c.D % l == 0) continue;
        if (std::find(c.T.begin(), c.T.end(), l) != c.T.end()) continue;
        splitting_result sp = prime_splitting(c.D, l);
        if (sp.type != splitting_type::split) continue;
        primes.push_back(sp.primes[0]);
        primes.push_back(sp.primes[1]);
        classes.push_back(RC.class_of_ideal(sp.primes[0]));
        classes.push_back(RC.class_of_ideal(sp.primes[1]));
        full = subgroup_closure(RC.grp, classes).size() == RC.grp.order();
    }
    if (!full) {
        r.status = "skipped";
        r.reason = "auxiliary set does not trivialize the class group";
        finish(r, t0);
        return r;
    }
    int g = (int)primes.size();

    galois_module sel;
    sel.acting = fab_group({2});
    if (g > 0) {
        /* valuation lattice of the T-congruent auxiliary units:
         * kernel of the class map into Cl^T */
        int rr = RC.grp.ngens();
        imat M(g, rr);
        for (int w = 0; w < g; w++) {
            gelt cl = classes[(size_t)w];
            for (int j = 0; j < rr; j++) M.at(w, j) = cl[(size_t)j];
        }
        imat Dm(rr, rr);
        for (int j = 0; j < rr; j++) Dm.at(j, j) = RC.grp.inv[(size_t)j];
        imat LK = left_kernel(mat_vstack(M, Dm));
        imat K0(LK.rows, g);
        for (int i = 0; i < LK.rows; i++)
            for (int j = 0; j < g; j++) K0.at(i, j) = LK.at(i, j);
        imat K = hnf_rows(K0);
        if (K.rows != g) throw std::logic_error("selmer: valuation lattice rank defect");

        /* conjugation on the unit lattice: swap the paired prime columns */
        imat Msig(g, g);
        for (int i = 0; i < g; i++) {
            std::vector<mpq_class> rhs((size_t)g);
            for (int j = 0; j < g; j++) rhs[(size_t)(j ^ 1)] = mpq_class(K.at(i, j));
            auto sol = rational_solve_left(K, rhs);
            if (!sol) throw std::logic_error("selmer: conjugation does not preserve the lattice");
            for (int j = 0; j < g; j++) {
                if ((*sol)[(size_t)j].get_den() != 1)
                    throw std::logic_error("selmer: non-integral conjugation");
                Msig.at(i, j) = (*sol)[(size_t)j].get_num();
            }
        }

        /* presentation of the cokernel of place-functionals inside the dual */
        fab_presented pres = structure_from_relations(g, mat_transpose(K));
        int k = pres.grp.ngens();
        imat A(k, k);
        for (int t = 0; t < k; t++) {
            std::vector<mpz_class> acc((size_t)g, 0);
            for (int s = 0; s < g; s++)
                for (int u = 0; u < g; u++)
                    acc[(size_t)u] += pres.lift.at(t, s) * Msig.at(u, s);
            gelt img = pres.project(acc);
            for (int u = 0; u < k; u++) A.at(t, u) = img[(size_t)u];
        }
        sel.inv = pres.grp.inv;
        sel.action = {A};
        sel.validate();
    } else {
        sel.inv = {};
        sel.action = {imat(0, 0)};
    }
    add_witness(r, "selmer_order", mpz_class(sel.order()).get_str());
    add_witness(r, "class_order", mpz_class(RC.order()).get_str());
    if (!fitting_equivalent(sel, RC.mod.dual())) {
        r.status = "fail";
        r.reason = "Selmer module not Fitting-equivalent to the dual class module";
    }
    finish(r, t0);
    return r;
}

} // namespace bst

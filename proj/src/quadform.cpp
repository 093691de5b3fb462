#include "bst/quadform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bst {

static bool squarefree(long n)
{
    if (n < 0) n = -n;
    for (long d = 2; d * d <= n; d++)
        if (n % (d * d) == 0) return false;
    return true;
}

bool is_fundamental_discriminant(long D)
{
    if (D >= 0) return false;
    long r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    if (r != 0) return false;
    long d = D / 4;
    long rd = ((d % 4) + 4) % 4;
    return (rd == 2 || rd == 3) && squarefree(d);
}

imag_quad_field make_imag_quad_field(long D)
{
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument("make_imag_quad_field: not a fundamental discriminant < 0");
    imag_quad_field K;
    K.D = D;
    return K;
}

/* parity digit of D: omega = (dd + sqrt(D)) / 2 is the non-rational basis elt */
static long dpar(long D) { return ((D % 2) + 2) % 2; }

quad_elt qe_int(long n) { return quad_elt{mpz_class(2 * n), mpz_class(0)}; }

quad_elt qe_add(const quad_elt& u, const quad_elt& v) { return quad_elt{u.x + v.x, u.y + v.y}; }

quad_elt qe_mul(long D, const quad_elt& u, const quad_elt& v)
{
    /* ((x1 + y1 s)(x2 + y2 s)) / 4 with s^2 = D; halves stay integral */
    mpz_class X = u.x * v.x + u.y * v.y * D;
    mpz_class Y = u.x * v.y + u.y * v.x;
    if (X % 2 != 0 || Y % 2 != 0) throw std::logic_error("qe_mul: parity violated");
    return quad_elt{X / 2, Y / 2};
}

quad_elt qe_conj(const quad_elt& u) { return quad_elt{u.x, -u.y}; }

mpz_class qe_norm(long D, const quad_elt& u)
{
    mpz_class n = u.x * u.x - D * u.y * u.y;
    if (n % 4 != 0) throw std::logic_error("qe_norm: parity violated");
    return n / 4;
}

bool qe_eq(const quad_elt& u, const quad_elt& v) { return u.x == v.x && u.y == v.y; }

long form_disc(const quad_form& f) { return f.b * f.b - 4 * f.a * f.c; }

bool form_is_reduced(const quad_form& f)
{
    long ab = f.b < 0 ? -f.b : f.b;
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return f.a > 0;
}

/* exact arithmetic throughout: inputs from large ideal powers overflow
 * machine words long before the reduced form does */
static quad_form reduce_form_z(mpz_class a, mpz_class b, mpz_class c)
{
    mpz_class D = b * b - 4 * a * c;
    for (int guard = 0; guard < 100000; guard++) {
        /* normalize: -a < b <= a */
        mpz_class k, num = b + a - 1, den = 2 * a;
        mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        b -= 2 * a * k;
        c = (b * b - D) / (4 * a);
        if (a > c) {
            mpz_class t = a;
            a = c;
            c = t;
            b = -b;
            continue;
        }
        if (a == c && b < 0) b = -b;
        if (!a.fits_slong_p() || !b.fits_slong_p() || !c.fits_slong_p())
            throw std::logic_error("reduce_form: reduced coefficients out of range");
        return quad_form{a.get_si(), b.get_si(), c.get_si()};
    }
    throw std::logic_error("reduce_form: no convergence");
}

quad_form reduce_form(quad_form f) { return reduce_form_z(f.a, f.b, f.c); }

quad_form principal_form(long D)
{
    long dd = dpar(D);
    return quad_form{1, dd, (dd - D) / 4};
}

quad_form inverse_form(const quad_form& f) { return reduce_form(quad_form{f.a, -f.b, f.c}); }

quad_form compose_forms(long D, const quad_form& f1, const quad_form& f2)
{
    long s = (f1.b + f2.b) / 2;
    long e = std::gcd(std::gcd(f1.a, f2.a), s);
    long a3 = (f1.a / e) * (f2.a / e);
    long step = 2 * f1.a / e;
    for (long k = 0; k * step < 2 * a3; k++) {
        long B = ((f1.b + k * step) % (2 * a3) + 2 * a3) % (2 * a3);
        if (((B - f2.b) % (2 * f2.a / e)) != 0) continue;
        if (((B * B - D) % (4 * a3)) != 0) continue;
        return reduce_form(quad_form{a3, B, (B * B - D) / (4 * a3)});
    }
    throw std::logic_error("compose_forms: no middle coefficient found");
}

/* --- ideals ------------------------------------------------------------- */

static mpz_class mod_pos(const mpz_class& x, const mpz_class& m)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

quad_ideal make_ideal(long D, const mpz_class& m, const mpz_class& a, const mpz_class& b)
{
    if (m < 1 || a < 1) throw std::invalid_argument("make_ideal: m, a >= 1 required");
    quad_ideal I;
    I.D = D;
    I.m = m;
    I.a = a;
    I.b = mod_pos(b, 2 * a);
    if ((I.b * I.b - D) % (4 * a) != 0)
        throw std::invalid_argument("make_ideal: a does not divide the generator norm");
    return I;
}

quad_ideal ideal_one(long D) { return make_ideal(D, 1, 1, dpar(D)); }

mpz_class ideal_norm(const quad_ideal& I) { return I.m * I.m * I.a; }

bool ideal_eq(const quad_ideal& I, const quad_ideal& J)
{
    return I.D == J.D && I.m == J.m && I.a == J.a && I.b == J.b;
}

bool ideal_contains(const quad_ideal& I, const quad_elt& u)
{
    if (u.y % I.m != 0) return false;
    mpz_class s = u.y / I.m;
    return (u.x - I.m * I.b * s) % (2 * I.a * I.m) == 0;
}

/* lattice spanned by quadratic integers -> (m, a, b) normal form */
static quad_ideal ideal_from_lattice(long D, const std::vector<quad_elt>& gens)
{
    imat M((int)gens.size(), 2);
    for (int i = 0; i < (int)gens.size(); i++) {
        M.at(i, 0) = gens[(size_t)i].y;
        M.at(i, 1) = gens[(size_t)i].x;
    }
    imat H = hnf_rows(M);
    if (H.rows != 2) throw std::logic_error("ideal_from_lattice: not a full lattice");
    mpz_class m = H.at(0, 0), e = H.at(0, 1), k = H.at(1, 1);
    if (k % (2 * m) != 0 || e % m != 0)
        throw std::logic_error("ideal_from_lattice: not an ideal lattice");
    return make_ideal(D, m, k / (2 * m), e / m);
}

static std::vector<quad_elt> ideal_basis(const quad_ideal& I)
{
    return {quad_elt{2 * I.a * I.m, 0}, quad_elt{I.m * I.b, I.m}};
}

quad_ideal ideal_mul(const quad_ideal& I, const quad_ideal& J)
{
    if (I.D != J.D) throw std::invalid_argument("ideal_mul: discriminant mismatch");
    std::vector<quad_elt> prods;
    for (const quad_elt& u : ideal_basis(I))
        for (const quad_elt& v : ideal_basis(J)) prods.push_back(qe_mul(I.D, u, v));
    return ideal_from_lattice(I.D, prods);
}

quad_ideal ideal_pow(const quad_ideal& I, long n)
{
    if (n < 0) throw std::invalid_argument("ideal_pow: n >= 0 required");
    quad_ideal R = ideal_one(I.D);
    for (long i = 0; i < n; i++) R = ideal_mul(R, I);
    return R;
}

quad_ideal ideal_conj(const quad_ideal& I)
{
    return make_ideal(I.D, I.m, I.a, -I.b);
}

quad_ideal ideal_of_elt(long D, const quad_elt& u)
{
    if (u.x == 0 && u.y == 0) throw std::invalid_argument("ideal_of_elt: zero element");
    quad_elt omega{dpar(D), 1};
    return ideal_from_lattice(D, {u, qe_mul(D, u, omega)});
}

quad_form ideal_to_form(const quad_ideal& I)
{
    mpz_class c = (I.b * I.b - I.D) / (4 * I.a);
    return reduce_form_z(I.a, I.b, c);
}

quad_ideal form_to_ideal(long D, const quad_form& f)
{
    return make_ideal(D, 1, f.a, f.b);
}

/* --- class group -------------------------------------------------------- */

form_class_group_t form_class_group(long D)
{
    form_class_group_t out;
    out.K = make_imag_quad_field(D);
    for (long a = 1; 3 * a * a <= -D; a++)
        for (long b = -a; b <= a; b++) {
            if (((b - D) % 2) != 0) continue;
            if ((b * b - D) % (4 * a) != 0) continue;
            quad_form f{a, b, (b * b - D) / (4 * a)};
            if (form_is_reduced(f) && f.c >= f.a) out.classes.push_back(f);
        }
    int h = (int)out.classes.size();

    /* presentation on one symbol per class: e_i + e_j = e_(i*j), e_1 = 0 */
    imat rel(h * h + 1, h);
    int r = 0;
    for (int i = 0; i < h; i++)
        for (int j = 0; j < h; j++, r++) {
            quad_form p = compose_forms(D, out.classes[(size_t)i], out.classes[(size_t)j]);
            int k = 0;
            while (!(out.classes[(size_t)k] == p)) k++;
            rel.at(r, i) += 1;
            rel.at(r, j) += 1;
            rel.at(r, k) -= 1;
        }
    rel.at(r, 0) = 1; /* the principal class */
    fab_presented pres = structure_from_relations(h, rel);
    out.grp = pres.grp;
    for (int i = 0; i < h; i++) {
        std::vector<mpz_class> e((size_t)h, 0);
        e[(size_t)i] = 1;
        out.class_elt.push_back(pres.project(e));
    }

    out.mod.acting = fab_group({2});
    out.mod.inv = out.grp.inv;
    imat inv_mat((int)out.grp.inv.size(), (int)out.grp.inv.size());
    for (int i = 0; i < inv_mat.rows; i++) inv_mat.at(i, i) = out.grp.inv[(size_t)i] - 1;
    out.mod.action = {inv_mat};
    return out;
}

long form_class_group_t::index_of(const quad_form& reduced) const
{
    for (size_t i = 0; i < classes.size(); i++)
        if (classes[i] == reduced) return (long)i;
    throw std::invalid_argument("form_class_group: not a reduced form of this discriminant");
}

gelt form_class_group_t::elt_of_ideal(const quad_ideal& I) const
{
    return class_elt[(size_t)index_of(ideal_to_form(I))];
}

/* --- splitting ---------------------------------------------------------- */

splitting_result prime_splitting(long D, long p)
{
    mpz_class Dz(D);
    int k = mpz_kronecker_si(Dz.get_mpz_t(), p);
    splitting_result out;
    if (k == -1) {
        out.type = splitting_type::inert;
        out.primes = {make_ideal(D, p, 1, dpar(D))};
        return out;
    }
    long b = -1;
    for (long t = 0; t < 2 * p; t++)
        if (((mpz_class(t) * t - D) % (4 * p)) == 0) {
            b = t;
            break;
        }
    if (b < 0) throw std::logic_error("prime_splitting: no square root of D");
    out.type = (k == 0) ? splitting_type::ramified : splitting_type::split;
    out.primes = {make_ideal(D, 1, p, b)};
    if (k == 1) out.primes.push_back(make_ideal(D, 1, p, 2 * p - b));
    return out;
}

/* --- residue fields ----------------------------------------------------- */

long residue_field::key(const quad_elt& u) const
{
    mpz_class l(ell);
    if (split) {
        mpz_class r = mod_pos((u.x - u.y * P.b) / 2, l);
        return r.get_si();
    }
    mpz_class uu = mod_pos((u.x - dpar(D) * u.y) / 2, l);
    mpz_class vv = mod_pos(u.y, l);
    return uu.get_si() * ell + vv.get_si();
}

bool residue_field::is_coprime(const quad_elt& u) const { return dlog_tab[(size_t)key(u)] >= 0; }

long residue_field::dlog(const quad_elt& u) const
{
    long t = dlog_tab[(size_t)key(u)];
    if (t < 0) throw std::invalid_argument("residue_field: element not coprime to the prime");
    return t;
}

static quad_elt elt_from_key(long D, long ell, bool split, long k)
{
    if (split) return quad_elt{2 * k, 0};
    long u = k / ell, v = k % ell;
    return quad_elt{2 * u + dpar(D) * v, v};
}

residue_field make_residue_field(long D, const quad_ideal& P, long ell, bool split)
{
    residue_field R;
    R.D = D;
    R.ell = ell;
    R.split = split;
    R.P = P;
    R.q = split ? ell : ell * ell;
    long one = R.key(qe_int(1));
    for (long c = 1; c < R.q; c++) {
        quad_elt g = elt_from_key(D, ell, split, c);
        if (R.key(g) != c) continue; /* skip non-canonical (key 0 row etc.) */
        long ord = 0, cur = one;
        do {
            cur = R.key(qe_mul(D, elt_from_key(D, ell, split, cur), g));
            ord++;
        } while (cur != one && ord <= R.q);
        if (cur != one) continue;
        if (ord == R.q - 1) {
            R.gen = g;
            R.dlog_tab.assign((size_t)R.q, -1);
            long cc = one;
            for (long t = 0; t < R.q - 1; t++) {
                R.dlog_tab[(size_t)cc] = t;
                cc = R.key(qe_mul(D, elt_from_key(D, ell, split, cc), g));
            }
            return R;
        }
    }
    throw std::logic_error("make_residue_field: no multiplicative generator found");
}

/* --- principal generators ----------------------------------------------- */

static quad_elt root_of_unity(long D)
{
    if (D == -3) return quad_elt{1, 1};  /* sixth root */
    if (D == -4) return quad_elt{0, 1};  /* i */
    return quad_elt{-2, 0};              /* -1 */
}

principal_result principal_generator(const quad_ideal& I,
                                     const std::vector<residue_field>* congruence)
{
    principal_result out;
    long D = I.D;
    if (!(ideal_to_form(I) == principal_form(D))) return out;
    out.principal = true;

    mpz_class N = ideal_norm(I);
    quad_elt found;
    bool have = false;
    for (mpz_class y = 0; !have; y++) {
        mpz_class t = 4 * N + D * y * y;
        if (t < 0) break;
        if (mpz_perfect_square_p(t.get_mpz_t())) {
            mpz_class x = sqrt(t);
            for (int sy = 0; sy < (y == 0 ? 1 : 2) && !have; sy++)
                for (int sx = 0; sx < (x == 0 ? 1 : 2) && !have; sx++) {
                    quad_elt cand{sx ? -x : x, sy ? -y : y};
                    if (ideal_contains(I, cand) && qe_norm(D, cand) == N) {
                        found = cand;
                        have = true;
                    }
                }
        }
    }
    if (!have) throw std::logic_error("principal_generator: no vector at the norm");
    out.gen = found;

    if (congruence) {
        imag_quad_field K = make_imag_quad_field(D);
        quad_elt zeta = root_of_unity(D);
        quad_elt cand = found;
        for (long k = 0; k < K.w(); k++) {
            bool all1 = true;
            for (const residue_field& R : *congruence)
                if (R.dlog(cand) != 0) all1 = false;
            if (all1) {
                out.gen = cand;
                out.congruent = true;
                return out;
            }
            cand = qe_mul(D, cand, zeta);
        }
        for (const residue_field& R : *congruence) out.obstruction.push_back(R.dlog(found));
    }
    return out;
}

long ideal_valuation(const quad_ideal& P, const quad_elt& u)
{
    if (u.x == 0 && u.y == 0) throw std::invalid_argument("ideal_valuation: zero element");
    for (long k = 0; k < 64; k++)
        if (!ideal_contains(ideal_pow(P, k + 1), u)) return k;
    throw std::logic_error("ideal_valuation: valuation out of range");
}

s_unit_data s_units(long D, const std::vector<long>& S)
{
    s_unit_data out;
    std::vector<long> s = S;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) {
        out.valuations = imat(0, 0);
        return out;
    }
    form_class_group_t cl = form_class_group(D);
    for (long p : s)
        for (const quad_ideal& P : prime_splitting(D, p).primes) {
            long n = cl.grp.elt_order(cl.elt_of_ideal(P));
            out.primes.push_back(P);
            out.gens.push_back(principal_generator(ideal_pow(P, n)).gen);
        }
    out.valuations = imat((int)out.gens.size(), (int)out.primes.size());
    for (int i = 0; i < out.valuations.rows; i++)
        for (int j = 0; j < out.valuations.cols; j++)
            out.valuations.at(i, j) = ideal_valuation(out.primes[(size_t)j], out.gens[(size_t)i]);
    return out;
}

} // namespace bst

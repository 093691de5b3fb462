#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bst/dirichlet.hpp"
#include "bst/quadform.hpp"
#include "bst/rayclass.hpp"

#include <numeric>

using namespace bst;

static std::vector<long> fundamental_up_to(long bound)
{
    std::vector<long> out;
    for (long D = -3; D >= -bound; D--)
        if (is_fundamental_discriminant(D)) out.push_back(D);
    return out;
}

TEST_CASE("fundamental discriminants")
{
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(-8));
    CHECK(is_fundamental_discriminant(-23));
    CHECK(!is_fundamental_discriminant(-9));
    CHECK(!is_fundamental_discriminant(-12));
    CHECK(!is_fundamental_discriminant(5));
    CHECK_THROWS(make_imag_quad_field(-12));
    CHECK(make_imag_quad_field(-3).w() == 6);
    CHECK(make_imag_quad_field(-4).w() == 4);
    CHECK(make_imag_quad_field(-7).w() == 2);
}

TEST_CASE("form reduction")
{
    /* scrambles of (2, 1, 3) for D = -23: apply b -> b + 2ka and flips */
    quad_form f{2, 1, 3};
    CHECK(form_is_reduced(f));
    CHECK(reduce_form(quad_form{2, 5, 6}) == f);          /* b shifted by 2a */
    CHECK(reduce_form(quad_form{3, -1, 2}) == f);         /* rotated */
    CHECK(reduce_form(quad_form{6, 7, 3}) == quad_form{2, 1, 3});
    CHECK(reduce_form(quad_form{1, 1, 6}) == quad_form{1, 1, 6});
    /* boundary: b = -a normalizes to b = a */
    CHECK(reduce_form(quad_form{3, -3, 4}) == quad_form{3, 3, 4});
}

TEST_CASE("class groups from reduced forms")
{
    form_class_group_t c4 = form_class_group(-4);
    CHECK(c4.h() == 1);
    CHECK(c4.classes[0] == quad_form{1, 0, 1});
    CHECK(c4.grp.order() == 1);

    form_class_group_t c23 = form_class_group(-23);
    CHECK(c23.h() == 3);
    CHECK(c23.classes[0] == quad_form{1, 1, 6});
    CHECK(c23.classes[1] == quad_form{2, -1, 3});
    CHECK(c23.classes[2] == quad_form{2, 1, 3});
    CHECK(c23.grp.inv == std::vector<long>({3}));

    form_class_group_t c47 = form_class_group(-47);
    CHECK(c47.h() == 5);
    CHECK(c47.grp.inv == std::vector<long>({5}));
}

TEST_CASE("composition axioms and the dictionary to ideals")
{
    for (long D : {-23L, -47L, -84L, -71L, -120L}) {
        form_class_group_t cl = form_class_group(D);
        long h = cl.h();
        quad_form one = principal_form(D);
        for (long i = 0; i < h; i++) {
            const quad_form& f = cl.classes[(size_t)i];
            CHECK(compose_forms(D, one, f) == f);
            CHECK(compose_forms(D, f, inverse_form(f)) == one);
            for (long j = 0; j < h; j++) {
                const quad_form& g = cl.classes[(size_t)j];
                CHECK(compose_forms(D, f, g) == compose_forms(D, g, f));
                /* class of the product ideal = composed class */
                quad_ideal prod = ideal_mul(form_to_ideal(D, f), form_to_ideal(D, g));
                CHECK(ideal_to_form(prod) == compose_forms(D, f, g));
                for (long k = 0; k < h; k++)
                    CHECK(compose_forms(D, compose_forms(D, f, g), cl.classes[(size_t)k]) ==
                          compose_forms(D, f, compose_forms(D, g, cl.classes[(size_t)k])));
            }
        }
        /* abstract structure matches: class -> element map is a bijective hom */
        for (long i = 0; i < h; i++)
            for (long j = 0; j < h; j++) {
                gelt sum = cl.grp.add(cl.class_elt[(size_t)i], cl.class_elt[(size_t)j]);
                long k = cl.index_of(compose_forms(D, cl.classes[(size_t)i], cl.classes[(size_t)j]));
                CHECK(sum == cl.class_elt[(size_t)k]);
            }
    }
}

TEST_CASE("ideal arithmetic")
{
    long D = -23;
    quad_elt omega{1, 1}; /* (1 + sqrt(-23))/2 */
    quad_ideal P = prime_splitting(D, 2).primes[0];
    /* closed under multiplication by omega */
    quad_elt b1{2 * 2, 0}, b2{P.b.get_si(), 1};
    CHECK(ideal_contains(P, qe_mul(D, omega, b1)));
    CHECK(ideal_contains(P, qe_mul(D, omega, b2)));
    /* norm multiplicativity over random products */
    std::vector<quad_ideal> pool;
    for (long p : {2L, 3L, 5L, 13L}) {
        splitting_result s = prime_splitting(D, p);
        for (const quad_ideal& I : s.primes) pool.push_back(I);
    }
    for (size_t i = 0; i < pool.size(); i++)
        for (size_t j = 0; j < pool.size(); j++) {
            quad_ideal IJ = ideal_mul(pool[i], pool[j]);
            CHECK(ideal_norm(IJ) == ideal_norm(pool[i]) * ideal_norm(pool[j]));
        }
    /* P * conj(P) = (p) */
    quad_ideal PPbar = ideal_mul(P, ideal_conj(P));
    CHECK(ideal_eq(PPbar, ideal_of_elt(D, qe_int(2))));
}

TEST_CASE("prime splitting")
{
    CHECK(prime_splitting(-3, 7).type == splitting_type::split);
    CHECK(prime_splitting(-4, 2).type == splitting_type::ramified);
    CHECK(prime_splitting(-23, 2).type == splitting_type::split);
    CHECK(prime_splitting(-23, 5).type == splitting_type::inert);
    CHECK(prime_splitting(-4, 3).type == splitting_type::inert);
    /* ramified square: prime above 2 in Q(i) squares to (2) */
    quad_ideal P2 = prime_splitting(-4, 2).primes[0];
    CHECK(ideal_norm(P2) == 2);
    CHECK(ideal_eq(ideal_mul(P2, P2), ideal_of_elt(-4, qe_int(2))));
    /* split norms */
    for (const quad_ideal& P : prime_splitting(-3, 7).primes) CHECK(ideal_norm(P) == 7);
}

TEST_CASE("principal ideal generators")
{
    /* the unit ideal */
    principal_result r1 = principal_generator(ideal_one(-7));
    CHECK(r1.principal);
    CHECK(qe_norm(-7, r1.gen) == 1);

    /* D = -7: the prime above 2 is generated by (1 + sqrt(-7))/2 */
    quad_ideal P = prime_splitting(-7, 2).primes[0];
    principal_result r2 = principal_generator(P);
    CHECK(r2.principal);
    CHECK(qe_norm(-7, r2.gen) == 2);
    CHECK(ideal_eq(ideal_of_elt(-7, r2.gen), P));

    /* D = -23: prime above 2 is not principal, its cube is */
    quad_ideal Q = prime_splitting(-23, 2).primes[0];
    CHECK(!principal_generator(Q).principal);
    CHECK(!principal_generator(ideal_pow(Q, 2)).principal);
    principal_result r3 = principal_generator(ideal_pow(Q, 3));
    CHECK(r3.principal);
    CHECK(qe_norm(-23, r3.gen) == 8);
    CHECK(ideal_eq(ideal_of_elt(-23, r3.gen), ideal_pow(Q, 3)));
}

TEST_CASE("S-units with valuation matrices")
{
    /* empty S */
    CHECK(s_units(-7, {}).gens.empty());

    /* Q(i), S = {5}: 5 splits, both primes principal */
    s_unit_data u5 = s_units(-4, {5});
    REQUIRE(u5.gens.size() == 2);
    CHECK(qe_norm(-4, u5.gens[0]) == 5);
    CHECK(qe_norm(-4, u5.gens[1]) == 5);
    CHECK(u5.valuations == imat::identity(2));

    /* D = -23, S = {2}: generators from the cubes */
    s_unit_data u2 = s_units(-23, {2});
    REQUIRE(u2.gens.size() == 2);
    imat expect = imat::identity(2);
    expect.at(0, 0) = 3;
    expect.at(1, 1) = 3;
    CHECK(u2.valuations == expect);

    /* inert prime: the rational prime itself */
    s_unit_data u3 = s_units(-4, {3});
    REQUIRE(u3.gens.size() == 1);
    CHECK(qe_norm(-4, u3.gens[0]) == 9);
    CHECK(u3.valuations.at(0, 0) == 1);
}

TEST_CASE("residue fields")
{
    /* inert 3 in Q(i): F_9 with cyclic unit group of order 8 */
    quad_ideal P3 = prime_splitting(-4, 3).primes[0];
    residue_field R = make_residue_field(-4, P3, 3, false);
    CHECK(R.q == 9);
    CHECK(R.dlog(qe_int(1)) == 0);
    /* dlog consistency against direct powering */
    quad_elt cur = qe_int(1);
    for (long k = 0; k < 8; k++) {
        CHECK(R.dlog(cur) == k);
        cur = qe_mul(-4, cur, R.gen);
    }
    CHECK(R.dlog(cur) == 0);
    /* i has order 4, so dlog is 2 or 6 */
    long di = R.dlog(quad_elt{0, 1});
    CHECK((di == 2 || di == 6));
}

TEST_CASE("ray class groups")
{
    /* Q(i), T empty */
    CHECK(ray_class_group(-4, {}).order() == 1);

    /* Q(i), T = {3}: (O/3)^* = Z/8 modulo mu_4 -> Z/2; independent residue
     * enumeration: cosets of <i> in (O/3)^* */
    ray_class_group_t r = ray_class_group(-4, {3});
    CHECK(r.grp.inv == std::vector<long>({2}));
    {
        residue_field& R = r.comps[0];
        std::vector<int> seen((size_t)R.q, 0);
        long cosets = 0;
        for (long k = 0; k < R.q; k++) {
            if (R.dlog_tab[(size_t)k] < 0 || seen[(size_t)k]) continue;
            cosets++;
            quad_elt x = quad_elt{0, 1}; /* i */
            quad_elt rep{2 * (k / 3) + 0, 0};
            /* mark the orbit of k under multiplication by i */
            long cur = k;
            for (int t = 0; t < 4; t++) {
                seen[(size_t)cur] = 1;
                /* multiply the residue by i via a representative element */
                long u = cur / 3, v = cur % 3;
                quad_elt e{2 * u, v};
                cur = R.key(qe_mul(-4, e, x));
            }
            (void)rep;
        }
        CHECK(cosets == 2);
    }
    /* class of a generator congruent to 1 is trivial; 1+i is not */
    CHECK(r.grp.is_zero(r.class_of_elt(qe_int(4)))); /* 4 = 1 mod 3 */
    gelt c1pi = r.class_of_elt(quad_elt{2, 1});
    CHECK(!r.grp.is_zero(c1pi));
    CHECK(r.grp.is_zero(r.grp.add(c1pi, c1pi)));

    /* D = -23, T = {3}: order h * (q-1)^2 / #mu-image = 3 * 4 / 2 = 6 */
    ray_class_group_t r23 = ray_class_group(-23, {3});
    CHECK(r23.order() == 6);
    CHECK(r23.grp.inv == std::vector<long>({6}));

    /* exact-sequence order count across several fields */
    struct probe {
        long D;
        std::vector<long> T;
    };
    for (const probe& pr : std::vector<probe>{{-4, {3}}, {-4, {5}}, {-23, {3}}, {-23, {5}},
                                              {-3, {7}}, {-7, {3}}, {-8, {5}}, {-47, {3}}}) {
        ray_class_group_t rc = ray_class_group(pr.D, pr.T);
        mpz_class res_order = 1;
        for (const residue_field& R : rc.comps) res_order *= (R.q - 1);
        /* order of the image of mu in prod (O/P)^* */
        quad_elt zeta = pr.D == -3 ? quad_elt{1, 1} : pr.D == -4 ? quad_elt{0, 1} : qe_int(-1);
        long mu_img = 1;
        for (const residue_field& R : rc.comps) {
            long d = R.dlog(zeta);
            mu_img = std::lcm(mu_img, (R.q - 1) / std::gcd(R.q - 1, d == 0 ? R.q - 1 : d));
        }
        CHECK(mpz_class(rc.order()) * mu_img == mpz_class(rc.cl.h()) * res_order);

        /* conjugation action is compatible with conjugation of ideals */
        for (long p : {2L, 7L, 11L, 13L}) {
            bool skip = p == pr.D || std::find(pr.T.begin(), pr.T.end(), p) != pr.T.end();
            mpz_class Dz(pr.D);
            if (skip || mpz_kronecker_si(Dz.get_mpz_t(), p) == 0) continue;
            quad_ideal I = prime_splitting(pr.D, p).primes[0];
            gelt c = rc.class_of_ideal(I);
            gelt cc = rc.class_of_ideal(ideal_conj(I));
            /* apply the stored action matrix */
            gelt img = rc.grp.zero();
            for (int t = 0; t < rc.grp.ngens(); t++)
                for (int u = 0; u < rc.grp.ngens(); u++)
                    img[(size_t)u] = (img[(size_t)u] +
                                      c[(size_t)t] * rc.mod.action[0].at(t, u).get_si()) %
                                     rc.grp.inv[(size_t)u];
            CHECK(img == cc);
        }
    }
}

TEST_CASE("class number against the L-value at 0")
{
    for (long D : fundamental_up_to(500)) {
        dirichlet_character chi = quadratic_character(D);
        mpq_class l = L_at_nonpositive(chi, 1).rational_value();
        mpq_class h = abs(l) * make_imag_quad_field(D).w() / 2;
        CHECK(h == form_class_group(D).h());
    }
}

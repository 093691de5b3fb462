#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bst/verify.hpp"

#include <algorithm>

using namespace bst;

TEST_CASE("quadratic and biquadratic fields over Q")
{
    abelian_field_q F3 = quad_field_q(-3);
    CHECK(F3.conductor == 3);
    CHECK(F3.degree() == 2);
    CHECK(F3.is_cm());
    CHECK(F3.num_roots_of_unity() == 6);

    abelian_field_q F4 = quad_field_q(-4);
    CHECK(F4.conductor == 4);
    CHECK(F4.num_roots_of_unity() == 4);

    abelian_field_q F23 = quad_field_q(-23);
    CHECK(F23.conductor == 23);
    CHECK(F23.s_ram == std::vector<long>{23});

    abelian_field_q H = biquad_field_q(-3, -4);
    CHECK(H.conductor == 12);
    CHECK(H.degree() == 4);
    CHECK(H.G.exponent() == 2);
    CHECK(H.num_roots_of_unity() == 12);
    /* Q(sqrt(-3), sqrt(-15)) contains the real field Q(sqrt(5)) */
    abelian_field_q H2 = biquad_field_q(-3, -15);
    CHECK(H2.conductor == 15);
    CHECK(H2.degree() == 4);
    CHECK(H2.num_roots_of_unity() == 6);

    CHECK_THROWS(quad_field_q(-12));
    CHECK_THROWS(quad_field_q(5));
    CHECK_THROWS(biquad_field_q(-3, -3));
}

TEST_CASE("minus odd part and Fitting equivalence")
{
    fab_group g2({2});
    galois_module inv15;  /* Z/15 with sigma = -1 */
    inv15.acting = g2;
    inv15.inv = {15};
    imat m(1, 1);
    m.at(0, 0) = -1;
    inv15.action = {m};
    inv15.validate();
    CHECK(minus_odd_module(inv15).order() == 15);

    galois_module triv15 = inv15;  /* sigma = +1: minus part dies */
    triv15.action[0].at(0, 0) = 1;
    triv15.validate();
    CHECK(minus_odd_module(triv15).order() == 1);

    galois_module inv30 = inv15;   /* 2-part discarded first */
    inv30.inv = {30};
    CHECK(minus_odd_module(inv30).order() == 15);

    CHECK(fitting_equivalent(inv15, inv15.dual()));
    CHECK(!fitting_equivalent(inv15, triv15));
    CHECK(fitting_equivalent(inv30, inv15));
}

TEST_CASE("theta annihilates the odd smoothed class group")
{
    verification_case c;
    c.theorem = "brumer-stark";
    c.D = -3;
    c.T = {7};
    verification_report r = check_brumer_stark(c);
    CHECK(r.status == "pass");
    CHECK(r.vcase.case_id() == "brumer-stark:D=-3:T=7");

    c.D = -23;
    c.T = {3};
    r = check_brumer_stark(c);
    CHECK(r.status == "pass");
    bool saw_theta = false;
    for (const witness& w : r.witnesses)
        if (w.name == "theta") {
            saw_theta = true;
            CHECK(w.value == "-3+3*s");
        }
    CHECK(saw_theta);

    c.D = -47;
    r = check_brumer_stark(c);
    CHECK(r.status == "pass");

    /* extra depletion prime */
    c.D = -23;
    c.S_extra = {5};
    r = check_brumer_stark(c);
    CHECK(r.status == "pass");
    c.S_extra = {};

    /* ramified smoothing prime and failing root-of-unity condition skip */
    c.D = -3;
    c.T = {3};
    CHECK(check_brumer_stark(c).status == "skipped");
    c.T = {2};
    CHECK(check_brumer_stark(c).status == "skipped");

    /* biquadratic: componentwise annihilation */
    verification_case b;
    b.theorem = "brumer-stark";
    b.D1 = -3;
    b.D2 = -4;
    b.T = {7};
    r = check_brumer_stark(b);
    CHECK(r.status == "pass");
    CHECK(r.witnesses.size() >= 2);

    b.D1 = -23;
    b.D2 = -4;
    b.T = {3};
    CHECK(check_brumer_stark(b).status == "pass");
}

TEST_CASE("odd class number equals the L-value product")
{
    verification_case c;
    c.theorem = "cnf";
    c.D = -4;
    c.T = {3};
    verification_report r = check_cnf(c);
    CHECK(r.status == "pass");
    for (const witness& w : r.witnesses) CHECK(w.value == "1");

    c.D = -23;
    r = check_cnf(c);
    CHECK(r.status == "pass");
    bool saw = false;
    for (const witness& w : r.witnesses)
        if (w.name == "class_side_odd") {
            saw = true;
            CHECK(w.value == "3");
        }
    CHECK(saw);

    c.D = -47;
    c.T = {3};
    CHECK(check_cnf(c).status == "pass"); /* h = 5, smoothing factor -4 */

    verification_case b;
    b.theorem = "cnf";
    b.D1 = -3;
    b.D2 = -15;
    b.T = {11};
    CHECK(check_cnf(b).status == "pass");
}

TEST_CASE("p-part of the minus Fitting lattice")
{
    verification_case c;
    c.theorem = "kurihara";
    c.D = -23;
    c.T = {3};
    c.p = 3;
    verification_report r = check_kurihara(c);
    CHECK(r.status == "pass");
    bool saw = false;
    for (const witness& w : r.witnesses)
        if (w.name == "p_exponent") {
            saw = true;
            CHECK(w.value == "1");
        }
    CHECK(saw);

    c.p = 5;
    CHECK(check_kurihara(c).status == "pass"); /* trivial 5-part on both sides */

    c.D = -47;
    c.T = {3};
    c.p = 5;
    CHECK(check_kurihara(c).status == "pass"); /* h = 5 */

    c.D = -3;
    c.T = {7};
    c.p = 3;
    CHECK(check_kurihara(c).status == "skipped"); /* p | #mu */
    c.p = 2;
    CHECK_THROWS(check_kurihara(c));
    c.p = 9;
    CHECK_THROWS(check_kurihara(c));

    verification_case b;
    b.theorem = "kurihara";
    b.D1 = -3;
    b.D2 = -15;
    b.T = {11};
    b.p = 7;
    CHECK(check_kurihara(b).status == "pass");
    b.p = 3;
    CHECK(check_kurihara(b).status == "skipped"); /* zeta_3 in H */
    b.D1 = -4;
    b.D2 = -23;
    b.T = {3};
    b.p = 5;
    CHECK(check_kurihara(b).status == "pass");
}

TEST_CASE("the unit cutting out the theta power of a split prime")
{
    verification_case c;
    c.theorem = "bs-unit";
    c.D = -23;
    c.T = {3};
    c.split_prime = 2;
    bs_unit_data u;
    verification_report r = brumer_stark_unit(c, &u);
    CHECK(r.status == "pass");
    CHECK(u.n == 3); /* theta = -3(1 - sigma), conjugate prime chosen */
    CHECK(u.den == 8);
    CHECK(ideal_norm(u.P) == 2);
    CHECK(qe_norm(c.D, u.num) == 64); /* |u| = 1 on the unit circle */
    CHECK(ideal_valuation(u.P, u.num) == 6);
    CHECK(ideal_valuation(ideal_conj(u.P), u.num) == 0);

    c.D = -3;
    c.T = {7};
    c.split_prime = 13;
    r = brumer_stark_unit(c, &u);
    CHECK(r.status == "pass");
    CHECK(u.n == 1);
    CHECK(u.den == 13);

    c.D = -47;
    c.T = {3};
    c.split_prime = 2;
    CHECK(brumer_stark_unit(c, &u).status == "pass");
    CHECK(u.n == 5);

    c.split_prime = 5;
    CHECK_THROWS(brumer_stark_unit(c)); /* 5 is inert in Q(sqrt(-47)) */
    c.split_prime = 3;
    CHECK_THROWS(brumer_stark_unit(c)); /* smoothing prime */
}

TEST_CASE("Selmer presentation matches the dual class module")
{
    verification_case c;
    c.theorem = "selmer";
    c.D = -4;
    c.T = {3};
    verification_report r = check_selmer_duality(c);
    CHECK(r.status == "pass");

    c.D = -23;
    c.T = {3};
    r = check_selmer_duality(c);
    CHECK(r.status == "pass");
    bool saw = false;
    for (const witness& w : r.witnesses)
        if (w.name == "selmer_order") {
            saw = true;
            CHECK(w.value == "6");
        }
    CHECK(saw);

    c.D = -47;
    c.T = {3};
    CHECK(check_selmer_duality(c).status == "pass");

    c.D = -31;
    c.T = {5};
    CHECK(check_selmer_duality(c).status == "pass");
}

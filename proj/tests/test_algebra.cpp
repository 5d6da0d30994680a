#include "polyo/groebner.hpp"
#include "polyo/ideal.hpp"
#include "polyo/ideal_ops.hpp"

#include "doctest.h"
#include "fixtures.hpp"

#include <algorithm>

using namespace polyo;

namespace {

std::shared_ptr<const Ring> xyz_ring(MonomialOrder order) {
    return std::make_shared<Ring>(
        std::vector<VarId>{VarId::aux("x"), VarId::aux("y"), VarId::aux("z"), VarId::aux("w")},
        order);
}

}  // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a({{0, 2}, {1, 1}});
    Monomial b({{1, 2}, {2, 1}});
    CHECK((a * b) == Monomial({{0, 2}, {1, 3}, {2, 1}}));
    CHECK(lcm(a, b) == Monomial({{0, 2}, {1, 2}, {2, 1}}));
    CHECK(gcd(a, b) == Monomial({{1, 1}}));
    CHECK(divides(gcd(a, b), a));
    CHECK_FALSE(divides(a, b));
    CHECK((lcm(a, b) / a) == Monomial({{1, 1}, {2, 1}}));
    CHECK(coprime(Monomial({{0, 1}}), Monomial({{5, 2}})));
    CHECK_FALSE(coprime(a, b));
    CHECK(Monomial({{0, 1}, {3, 1}}).squarefree());
    CHECK_FALSE(a.squarefree());
}

TEST_CASE("monomial orders") {
    auto drl = MonomialOrder::degrevlex();
    auto lex = MonomialOrder::lex();
    Monomial x({{0, 1}}), y({{1, 1}}), z({{2, 1}});
    Monomial x2({{0, 2}}), yz({{1, 1}, {2, 1}}), yw({{1, 1}, {3, 1}});

    CHECK(compare(x, y, drl) > 0);
    CHECK(compare(y, z, drl) > 0);
    CHECK(compare(x2, yz, drl) > 0);   // equal degree, revlex
    CHECK(compare(yz, yw, drl) > 0);   // z beats w in revlex
    CHECK(compare(x, yz, drl) < 0);    // degree wins
    CHECK(compare(x, yz, lex) > 0);    // lex ignores degree
    CHECK(compare(Monomial(), x, drl) < 0);

    // Elimination block {0}: any monomial using var 0 beats any without.
    auto elim = MonomialOrder::elim(1);
    CHECK(compare(x, Monomial({{1, 5}, {2, 5}}), elim) > 0);
    CHECK(compare(yz, yw, elim) > 0);
}

TEST_CASE("polynomial printing and exact parse round-trip") {
    auto ring = Ring::vertex_ring({{2, 1}, {4, 2}, {2, 2}, {4, 1}});
    QPoly f = inner_minor(Interval({2, 1}, {4, 2}), *ring);
    CHECK(to_string(f, *ring) == "x_2_1*x_4_2 - x_2_2*x_4_1");
    CHECK(parse_poly(to_string(f, *ring), *ring) == f);

    auto r2 = xyz_ring(MonomialOrder::degrevlex());
    QPoly g = parse_poly("3/2*x^2*y - z + 7", *r2);
    CHECK(to_string(g, *r2) == "3/2*x^2*y - z + 7");
    CHECK(parse_poly(to_string(g, *r2), *r2) == g);
    QPoly h = parse_poly("-x + y", *r2);
    CHECK(to_string(h, *r2) == "-x + y");
    CHECK(parse_poly("0", *r2).is_zero());
}

TEST_CASE("inner 2-minors") {
    auto ring = Ring::vertex_ring({{0, 0}, {1, 1}, {0, 1}, {1, 0}});
    CHECK(to_string(inner_minor(Interval({0, 0}, {1, 1}), *ring), *ring) ==
          "x_0_0*x_1_1 - x_0_1*x_1_0");

    auto d = Polyocollection::of(fixtures::d());
    auto ideal = ideal_of(d);
    const auto& ring_d = ideal.ring();
    CHECK(to_string(inner_minor(Interval({4, 2}, {5, 3}), ring_d), ring_d) ==
          "x_4_2*x_5_3 - x_4_3*x_5_2");
    CHECK(to_string(inner_minor(Interval({2, 3}, {4, 4}), ring_d), ring_d) ==
          "x_2_3*x_4_4 - x_2_4*x_4_3");
    CHECK_THROWS_AS(inner_minor(Interval({9, 9}, {11, 11}), ring_d), input_error);
}

TEST_CASE("ideal of D has exactly the six stated generators") {
    auto d = Polyocollection::of(fixtures::d());
    auto ideal = ideal_of(d);
    std::vector<std::string> got;
    for (const auto& g : ideal.gens()) got.push_back(to_string(g, ideal.ring()));
    std::sort(got.begin(), got.end());
    std::vector<std::string> expected = {
        "x_4_2*x_5_3 - x_4_3*x_5_2", "x_3_3*x_4_4 - x_3_4*x_4_3", "x_2_3*x_4_4 - x_2_4*x_4_3",
        "x_2_3*x_3_4 - x_2_4*x_3_3", "x_2_1*x_4_2 - x_2_2*x_4_1", "x_1_2*x_2_3 - x_1_3*x_2_2"};
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
    CHECK(ideal.ring().size() == 14);
}

TEST_CASE("reduced groebner basis: textbook cases") {
    auto lex = xyz_ring(MonomialOrder::lex());
    auto gb = reduced_groebner_basis(
        std::vector<QPoly>{parse_poly("x - y", *lex), parse_poly("y - z", *lex)}, lex->order());
    REQUIRE(gb.size() == 2);
    CHECK(to_string(gb[0], *lex) == "y - z");
    CHECK(to_string(gb[1], *lex) == "x - z");

    // Principal ideal: normalized monic generator.
    auto drl = xyz_ring(MonomialOrder::degrevlex());
    auto gb2 = reduced_groebner_basis(std::vector<QPoly>{parse_poly("2*x^2*y - 4*z", *drl)},
                                      drl->order());
    REQUIRE(gb2.size() == 1);
    CHECK(to_string(gb2[0], *drl) == "x^2*y - 2*z");

    // A standard non-trivial instance, certified by the S-pair criterion.
    auto gb3 = reduced_groebner_basis(
        std::vector<QPoly>{parse_poly("x^2 - y", *drl), parse_poly("x^3 - z", *drl)},
        drl->order());
    CHECK(is_groebner_basis(gb3, drl->order()));
    for (const auto& g : {parse_poly("x^2 - y", *drl), parse_poly("x^3 - z", *drl)})
        CHECK(normal_form(g, gb3, drl->order()).is_zero());
}

TEST_CASE("groebner determinism and pure-difference closure on I_D") {
    auto d = Polyocollection::of(fixtures::d());
    auto ideal = ideal_of(d);
    auto gb1 = reduced_groebner_basis(ideal.gens(), ideal.ring().order());
    auto gens_rev = ideal.gens();
    std::reverse(gens_rev.begin(), gens_rev.end());
    auto gb2 = reduced_groebner_basis(gens_rev, ideal.ring().order());
    CHECK(gb1 == gb2);
    CHECK(is_groebner_basis(gb1, ideal.ring().order()));
    for (const auto& g : gb1) CHECK(g.is_pure_difference_binomial());
}

TEST_CASE("membership and normal forms") {
    auto d = Polyocollection::of(fixtures::d());
    auto ideal = ideal_of(d);
    for (const auto& g : ideal.gens()) CHECK(member(g, ideal));

    // No variable lies in I_D.
    for (int i = 0; i < ideal.ring().size(); ++i) CHECK_FALSE(member(poly_variable(i), ideal));

    // Normal forms of homogeneous polynomials stay homogeneous.
    QPoly probe = multiply(ideal.gens()[0], ideal.gens()[1], ideal.ring().order());
    auto nf = normal_form(probe, ideal);
    CHECK(nf.is_zero());
    QPoly probe2 = parse_poly("x_2_1*x_4_2*x_1_2 - x_3_3*x_4_4*x_5_2", ideal.ring());
    auto nf2 = normal_form(probe2, ideal);
    CHECK(!nf2.is_zero());
    CHECK(nf2.is_homogeneous());

    // Membership agrees when recomputed from the reduced basis.
    Ideal regen(ideal.ring_ptr(), ideal.groebner());
    CHECK(member(probe, regen));
    CHECK_FALSE(member(probe2, regen));
}

TEST_CASE("intersection") {
    auto r = xyz_ring(MonomialOrder::degrevlex());
    Ideal ix(r, {parse_poly("x", *r)});
    Ideal iy(r, {parse_poly("y", *r)});
    auto meet = intersect(ix, iy);
    REQUIRE(meet.groebner().size() == 1);
    CHECK(to_string(meet.groebner()[0], *r) == "x*y");

    // Idempotence and containment.
    auto d = Polyocollection::of(fixtures::d());
    auto id = ideal_of(d);
    CHECK(ideal_equal(intersect(id, id), id));
    auto m2 = intersect(id, Ideal(id.ring_ptr(), {poly_variable(0)}));
    CHECK(contains(id, m2));
}

TEST_CASE("saturation and colon") {
    auto r = xyz_ring(MonomialOrder::degrevlex());
    Ideal ixy(r, {parse_poly("x*y", *r)});
    auto c = colon(ixy, Monomial({{0, 1}}));
    REQUIRE(c.groebner().size() == 1);
    CHECK(to_string(c.groebner()[0], *r) == "y");

    // Saturating an already saturated ideal is the identity.
    Ideal prime(r, {parse_poly("x - y", *r)});
    Monomial all({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    CHECK(ideal_equal(saturate(prime, all), prime));

    // (x^2*y) : x^inf = (y)
    Ideal thick(r, {parse_poly("x^2*y", *r)});
    auto sat = saturate(thick, Monomial({{0, 1}}));
    REQUIRE(sat.groebner().size() == 1);
    CHECK(to_string(sat.groebner()[0], *r) == "y");
}

TEST_CASE("krull dimension and height") {
    auto r = xyz_ring(MonomialOrder::degrevlex());
    Ideal zero(r, {});
    CHECK(krull_dimension(zero) == 4);
    CHECK(height(zero) == 0);

    Ideal unit(r, {poly_one()});
    CHECK_THROWS_AS(krull_dimension(unit), input_error);

    Ideal one_var(r, {parse_poly("x", *r)});
    CHECK(krull_dimension(one_var) == 3);

    auto d = Polyocollection::of(fixtures::d());
    auto id = ideal_of(d);
    CHECK(krull_dimension(id) == 9);
    CHECK(height(id) == 5);
    CHECK(krull_dimension(id) + height(id) == id.ring().size());
}

TEST_CASE("squarefree initial witness") {
    auto r = xyz_ring(MonomialOrder::degrevlex());
    CHECK_FALSE(squarefree_initial_witness(Ideal(r, {parse_poly("x^2", *r)})));
    CHECK(squarefree_initial_witness(Ideal(r, {parse_poly("x*y - z*w", *r)})));
}

TEST_CASE("prime-field pre-check agrees with rational GB on I_D leading terms") {
    auto d = Polyocollection::of(fixtures::d());
    auto id = ideal_of(d);
    std::vector<Poly<GF32003>> gens;
    for (const auto& g : id.gens()) gens.push_back(to_gf(g, id.ring().order()));
    auto gbq = id.groebner();
    auto gbp = reduced_groebner_basis(gens, id.ring().order());
    REQUIRE(gbq.size() == gbp.size());
    for (std::size_t i = 0; i < gbq.size(); ++i) CHECK(gbq[i].lm() == gbp[i].lm());
}

#include "logchern/cohomology.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace logchern;

TEST_CASE("single generator is its own basis") {
    RingPtr r = make_ring({{"x", 2}});
    IdealBasis b = buchberger({parse("x", r)});
    REQUIRE(b.completed());
    REQUIRE(b.basis().size() == 1);
    REQUIRE(b.basis()[0] == parse("x", r));
}

TEST_CASE("the two cubic relations reduce u^3") {
    RingPtr r = make_ring({{"u", 2}, {"v", 2}, {"alpha", 4}, {"beta", 6}});
    IdealBasis b = buchberger({parse("u^3 + alpha*u + beta", r), parse("v^3 + alpha*v - beta", r)});
    REQUIRE(normal_form(parse("u^3", r), b) == parse("-alpha*u - beta", r));
    REQUIRE(normal_form(parse("u^3 + alpha*u + beta", r), b).is_zero());
    REQUIRE_FALSE(is_member(parse("1", r), b));
}

TEST_CASE("reduction chain through two same-degree relations") {
    RingPtr r = make_ring({{"x", 2}, {"y", 2}});
    IdealBasis b = buchberger({parse("x^2 - y", r), parse("y^2 - x", r)});
    // x^4 = (x^2)^2 -> y^2 -> x
    REQUIRE(normal_form(parse("x^4", r), b) == parse("x", r));
}

TEST_CASE("a completion that actually adds elements") {
    RingPtr r = make_ring({{"x", 2}, {"y", 2}, {"z", 2}});
    std::vector<Polynomial> gens = {parse("x*y - z^2", r), parse("x^2 - y*z", r)};
    IdealBasis b = buchberger(gens);
    REQUIRE(b.basis().size() > 2);
    // Buchberger criterion: every S-polynomial reduces to zero
    const auto& g = b.basis();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            Monomial l = monomial_lcm(g[i].leading_monomial(), g[j].leading_monomial());
            Polynomial s =
                Polynomial::term(r, monomial_quot(l, g[i].leading_monomial()), Rational(1)) *
                    g[i] -
                Polynomial::term(r, monomial_quot(l, g[j].leading_monomial()), Rational(1)) * g[j];
            REQUIRE(normal_form(s, b).is_zero());
        }
    }
}

TEST_CASE("degree-truncated completion agrees below the bound") {
    RingPtr r = make_ring({{"x", 2}, {"y", 2}, {"z", 2}});
    std::vector<Polynomial> gens = {parse("x*y - z^2", r), parse("x^2 - y*z", r)};
    IdealBasis full = buchberger(gens);
    IdealBasis bounded = buchberger(gens, 10);
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = testing::random_poly(r, rng, 4, 2, 9).truncated(8);
        REQUIRE(normal_form(p, bounded) == normal_form(p, full));
    }
}

TEST_CASE("normal form requires a completed basis") {
    RingPtr r = make_ring({{"x", 2}});
    IdealBasis b(r, {parse("x", r)});
    REQUIRE_THROWS_AS(normal_form(parse("x", r), b), std::logic_error);
}

TEST_CASE("membership examples from the blow-up rings") {
    BlowupModel model;
    const QuotientRing& s1 = model.s1();
    Polynomial mu = parse(bundled::mu_class, s1.ring());
    REQUIRE(s1.contains(parse("xi", s1.ring()) * mu));

    const QuotientRing& bt = model.btilde();
    Polynomial ch8van = parse(bundled::ch8van_display, bt.ring());
    Polynomial upv = parse("u + v", bt.ring());
    REQUIRE(bt.contains(upv * ch8van));
    REQUIRE_FALSE(bt.contains(ch8van));
}

TEST_CASE("normal form properties on random inputs") {
    BlowupModel model;
    const QuotientRing& bt = model.btilde();
    const RingPtr& r = bt.ring();
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = testing::random_poly(r, rng, 5, 4, 20);
        Polynomial q = testing::random_poly(r, rng, 5, 4, 20);
        Polynomial np = bt.nf(p);
        REQUIRE(bt.nf(np) == np);                     // idempotent
        REQUIRE(bt.nf(p - np).is_zero());             // difference in the ideal
        Rational a(3), b(-7);
        REQUIRE(bt.nf(a * p + b * q) == a * bt.nf(p) + b * bt.nf(q)); // linear
    }
    for (int i = 0; i < 100; ++i) {
        Polynomial h = testing::random_homogeneous(r, rng, 10);
        Polynomial nh = bt.nf(h);
        REQUIRE(nh.is_homogeneous());
        if (!nh.is_zero()) REQUIRE(nh.degree() == 10);
    }
}

TEST_CASE("completion is canonical under generator shuffling") {
    RingPresentation pres = parse_presentation(bundled::btilde_presentation);
    std::vector<Polynomial> gens = pres.relations;
    IdealBasis reference = buchberger(gens);
    std::mt19937 rng(5);
    for (int round = 0; round < 6; ++round) {
        std::shuffle(gens.begin(), gens.end(), rng);
        IdealBasis shuffled = buchberger(gens);
        REQUIRE(shuffled.basis().size() == reference.basis().size());
        for (std::size_t i = 0; i < reference.basis().size(); ++i)
            REQUIRE(shuffled.basis()[i] == reference.basis()[i]);
        Polynomial probe = testing::random_poly(pres.ring, rng, 6, 4, 20);
        REQUIRE(normal_form(probe, shuffled) == normal_form(probe, reference));
    }
}

TEST_CASE("presentation files round-trip") {
    RingPresentation pres = parse_presentation(bundled::s1_presentation);
    RingPresentation again = parse_presentation(pres.to_text());
    REQUIRE(again.ring->same_as(*pres.ring));
    REQUIRE(again.relations.size() == pres.relations.size());
    for (std::size_t i = 0; i < pres.relations.size(); ++i)
        REQUIRE(again.relations[i] == pres.relations[i]);
    REQUIRE_THROWS_AS(parse_presentation("order grevlex x > y\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_presentation("var x deg 2\nfrob x\n"), std::invalid_argument);
}

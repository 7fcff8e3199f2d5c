#include "logchern/parser.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace logchern;

namespace {

RingPtr divisor_ring() {
    return make_ring({{"eta", 2}, {"u", 2}, {"v", 2}, {"alpha", 4}, {"beta", 6}});
}

} // namespace

TEST_CASE("parsing the blow-up relations") {
    RingPtr r = divisor_ring();
    Polynomial cubic = parse("u^3 + alpha*u + beta", r);
    REQUIRE(cubic.term_count() == 3);
    REQUIRE(cubic.is_homogeneous());
    REQUIRE(cubic.degree() == 6);
    REQUIRE(parse("0", r).is_zero());
    REQUIRE(parse("(1+u)^2 - 1 - 2*u - u^2", r).is_zero());
}

TEST_CASE("parse errors carry positions") {
    RingPtr r = divisor_ring();
    REQUIRE_THROWS_AS(parse("u + ", r), ParseError);
    REQUIRE_THROWS_AS(parse("u + q", r), ParseError);
    REQUIRE_THROWS_AS(parse("(u + v", r), ParseError);
    REQUIRE_THROWS_AS(parse("u^", r), ParseError);
    try {
        parse("u * zeta", r);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.position == 4);
    }
}

TEST_CASE("print and reparse is the identity") {
    RingPtr r = divisor_ring();
    for (const char* text : {"u^3 + alpha*u + beta", "-3*u*v + 1/2*beta", "0", "1", "-1",
                             "u - v", "2/3*alpha^2*beta - eta^3*u^2*v^2", "-u"}) {
        Polynomial p = parse(text, r);
        REQUIRE(parse(p.to_string(), r) == p);
    }
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = testing::random_poly(r, rng, 6, 3, 30);
        REQUIRE(parse(p.to_string(), r) == p);
    }
}

TEST_CASE("basic arithmetic identities") {
    RingPtr r = divisor_ring();
    REQUIRE(parse("(u+v)*(u+v)", r) == parse("u^2 + 2*u*v + v^2", r));
    // the divisor-class product in the mixed pullback variables
    RingPtr pe = make_ring({{"xi", 2}, {"eta", 2}, {"alpha", 4}, {"beta", 6}});
    REQUIRE(parse("(1-eta)*(1+3*xi+2*eta)", pe) ==
            parse("1 + 3*xi + eta - 3*xi*eta - 2*eta^2", pe));
    // xi * mu is the degree-18 base relation
    RingPtr s1 = make_ring({{"xi", 2}, {"alpha", 4}, {"beta", 6}});
    Polynomial mu = parse("xi^2*(xi^6 + 6*alpha*xi^4 + 9*alpha^2*xi^2 + 4*alpha^3 + 27*beta^2)", s1);
    REQUIRE(parse("xi", s1) * mu ==
            parse("xi^3*(xi^6 + 6*alpha*xi^4 + 9*alpha^2*xi^2 + 4*alpha^3 + 27*beta^2)", s1));
}

TEST_CASE("ambient mismatch is rejected") {
    RingPtr r1 = divisor_ring();
    RingPtr r2 = make_ring({{"x", 2}, {"y", 2}});
    REQUIRE_THROWS_AS(parse("u", r1) + parse("x", r2), std::invalid_argument);
}

TEST_CASE("truncation by cohomological degree") {
    RingPtr s1 = make_ring({{"xi", 2}, {"alpha", 4}, {"beta", 6}});
    // xi^8 has degree 16, xi^9 degree 18
    REQUIRE(parse("1 + xi + xi^8", s1).truncated(16) == parse("1 + xi + xi^8", s1));
    REQUIRE(parse("xi^9", s1).truncated(16).is_zero());
    REQUIRE(parse("beta^3", s1).truncated(16).is_zero());
}

TEST_CASE("graded substitution") {
    RingPtr pe = make_ring({{"xi", 2}, {"eta", 2}, {"alpha", 4}, {"beta", 6}});
    RingPtr bt = divisor_ring();
    std::vector<Polynomial> images = {
        parse("u + v", bt), Polynomial::variable(bt, "eta"),
        Polynomial::variable(bt, "alpha"), Polynomial::variable(bt, "beta")};
    REQUIRE(substitute(parse("xi^2", pe), images) == parse("u^2 + 2*u*v + v^2", bt));

    // fiber restriction: alpha, beta to zero
    std::vector<Polynomial> to_fiber = identity_images(bt);
    to_fiber[*bt->index_of("alpha")] = Polynomial::zero(bt);
    to_fiber[*bt->index_of("beta")] = Polynomial::zero(bt);
    REQUIRE(substitute(parse("u^3 + alpha*u + beta", bt), to_fiber) == parse("u^3", bt));

    REQUIRE(substitute(parse("u^3 + alpha*u + beta", bt), identity_images(bt)) ==
            parse("u^3 + alpha*u + beta", bt));

    // image of the wrong degree is refused
    std::vector<Polynomial> bad = identity_images(bt);
    bad[*bt->index_of("alpha")] = Polynomial::variable(bt, "u");
    REQUIRE_THROWS_AS(substitute(parse("alpha", bt), bad), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    RingPtr r = divisor_ring();
    std::mt19937 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Polynomial p = testing::random_poly(r, rng);
        Polynomial q = testing::random_poly(r, rng);
        Polynomial s = testing::random_poly(r, rng);
        REQUIRE(p + q == q + p);
        REQUIRE(p * q == q * p);
        REQUIRE((p + q) * s == p * s + q * s);
        REQUIRE((p * q) * s == p * (q * s));
        REQUIRE((p - p).is_zero());
    }
}

TEST_CASE("grading is additive and truncation is multiplicative") {
    RingPtr r = divisor_ring();
    std::mt19937 rng(43);
    for (int i = 0; i < 300; ++i) {
        Polynomial p = testing::random_homogeneous(r, rng, 6);
        Polynomial q = testing::random_homogeneous(r, rng, 8);
        if (!p.is_zero() && !q.is_zero() && !(p * q).is_zero()) {
            REQUIRE((p * q).is_homogeneous());
            REQUIRE((p * q).degree() == 14);
        }
        Polynomial a = testing::random_poly(r, rng, 5, 3);
        Polynomial b = testing::random_poly(r, rng, 5, 3);
        for (int d : {4, 8, 12})
            REQUIRE((a * b).truncated(d) == (a.truncated(d) * b.truncated(d)).truncated(d));
    }
}

TEST_CASE("canonical order puts the leading term first") {
    RingPtr r = divisor_ring();
    // graded reverse lex with precedence eta > u > v > alpha > beta
    Polynomial p = parse("beta + u^3 + eta*u*v + alpha*u", r);
    REQUIRE(p.to_string() == "u^3 + eta*u*v + u*alpha + beta");
    REQUIRE(p.leading_monomial() == parse("u^3", r).leading_monomial());
    REQUIRE(parse("eta^4 + 6*u*eta^3", r).leading_monomial() ==
            parse("eta^4", r).leading_monomial());
}

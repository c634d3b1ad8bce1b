#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scrollreg/polynomial.hpp"

using namespace scrollreg;

namespace {

RingPtr ring4() { return Ring::make(32003, 4); } // x0 > x1 > x2 > x3, grevlex

Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

} // namespace

TEST_CASE("monomial compare: reflexivity and spec cases") {
    RingPtr r3 = Ring::make_named(32003, {"x", "y", "z"});
    TermOrder grevlex = TermOrder::grevlex();
    TermOrder lex = TermOrder::lex();
    Monomial y2{0, 2, 0};
    Monomial xz{1, 0, 1};
    CHECK(grevlex.compare(y2, y2) == Ordering::EQ);
    CHECK(grevlex.compare(y2, xz) == Ordering::GT);
    RingPtr r2 = Ring::make_named(32003, {"x", "y"});
    Monomial x{1, 0};
    Monomial y5{0, 5};
    CHECK(lex.compare(x, y5) == Ordering::GT);
    Monomial bad{1, 0};
    Monomial other{0, 0, 1};
    CHECK_THROWS_AS(grevlex.compare(bad, other), DimensionError);
}

TEST_CASE("block order dominates eliminated variables") {
    // Variables 0,1 eliminated: any monomial touching them beats any free of them.
    TermOrder block = TermOrder::block(2);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        Monomial u(4), v(4);
        u.set(rng() % 2, 1 + rng() % 3); // touches the block
        u.set(2, rng() % 3);
        v.set(2, rng() % 4);
        v.set(3, rng() % 4); // block-free
        CHECK(block.compare(u, v) == Ordering::GT);
    }
}

TEST_CASE("leading terms") {
    RingPtr r = ring4();
    CHECK(P(r, "x0").leading_monomial() == Monomial{1, 0, 0, 0});
    Polynomial f = P(r, "x0*x2-x1^2");
    CHECK(f.leading_monomial() == Monomial{0, 2, 0, 0});
    CHECK(f.leading_coeff() == 32003 - 1); // -1 on x1^2
    CHECK_THROWS_AS(Polynomial::zero(r).leading_term(), ZeroPolynomialError);
}

TEST_CASE("substitution") {
    RingPtr r = ring4();
    RingPtr st = Ring::make_named(32003, {"s", "t"});
    // x0 -> s^3
    std::vector<Polynomial> imgs{P(st, "s^3"), P(st, "s^2*t"), P(st, "s*t^2"), P(st, "t^3")};
    CHECK(P(r, "x0").substitute(imgs) == P(st, "s^3"));
    CHECK(P(r, "x0*x2-x1^2").substitute(imgs).is_zero());

    RingPtr uv = Ring::make_named(32003, {"u", "v", "s", "t"});
    std::vector<Polynomial> segre{P(uv, "u*s"), P(uv, "u*t"), P(uv, "v*s"), P(uv, "v*t")};
    CHECK(P(r, "x0*x3-x1*x2").substitute(segre).is_zero());

    RingPtr one = Ring::make_named(32003, {"s"});
    RingPtr two = Ring::make_named(32003, {"x0", "x1"});
    std::vector<Polynomial> cancel{P(one, "s"), P(one, "-s")};
    CHECK(P(two, "x0+x1").substitute(cancel).is_zero());
}

TEST_CASE("ring axioms and degree multiplicativity on random homogeneous polynomials") {
    RingPtr r = ring4();
    std::mt19937_64 rng(11);
    auto random_homog = [&](int deg) {
        std::vector<Term> terms;
        for (int k = 0; k < 5; ++k) {
            Monomial m(4);
            int left = deg;
            for (int i = 0; i < 3; ++i) {
                int e = static_cast<int>(rng() % (left + 1));
                m.set(i, e);
                left -= e;
            }
            m.set(3, left);
            terms.push_back({m, static_cast<std::uint32_t>(1 + rng() % 32002)});
        }
        return Polynomial::collect(r, std::move(terms));
    };
    for (int k = 0; k < 100; ++k) {
        Polynomial f = random_homog(2), g = random_homog(3), h = random_homog(2);
        CHECK((f + g) - g == f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        if (!f.is_zero() && !g.is_zero()) {
            CHECK(f.is_homogeneous());
            CHECK((f * g).homogeneous_degree() == f.homogeneous_degree() + g.homogeneous_degree());
        }
    }
}

TEST_CASE("stored term lists are strictly descending") {
    RingPtr r = ring4();
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
        std::vector<Term> terms;
        for (int j = 0; j < 8; ++j) {
            Monomial m(4);
            for (int i = 0; i < 4; ++i) m.set(i, rng() % 4);
            terms.push_back({m, static_cast<std::uint32_t>(rng() % 32003)});
        }
        Polynomial f = Polynomial::collect(r, std::move(terms));
        for (std::size_t i = 0; i + 1 < f.terms().size(); ++i) {
            CHECK(r->order().compare(f.terms()[i].mono, f.terms()[i + 1].mono) == Ordering::GT);
            CHECK(f.terms()[i].coeff != 0);
        }
    }
}

TEST_CASE("parser round trips and implicit multiplication") {
    RingPtr r = ring4();
    CHECK(P(r, "x0x2-x1^2") == P(r, "x0*x2-x1^2"));
    CHECK(P(r, "2x0^2") == P(r, "x0^2+x0^2"));
    CHECK(P(r, "(x0+x1)^2") == P(r, "x0^2+2*x0*x1+x1^2"));
    CHECK(P(r, "-3") == Polynomial::constant(r, -3));
    Polynomial f = P(r, "x0^3-2*x1*x2*x3+5");
    CHECK(Polynomial::parse(r, f.str()) == f);
    CHECK_THROWS(P(r, "x9"));
    CHECK_THROWS(P(r, "x0++x1"));
}

TEST_CASE("exact division") {
    RingPtr r = ring4();
    Polynomial f = P(r, "x0^2-x1^2");
    Polynomial g = P(r, "x0-x1");
    CHECK(f.exact_div(g) == P(r, "x0+x1"));
    CHECK_THROWS_AS(P(r, "x0^2+x1").exact_div(g), DivisionByZeroError);
    CHECK_THROWS_AS(f.exact_div(Polynomial::zero(r)), DivisionByZeroError);
}

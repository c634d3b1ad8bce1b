#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scrollreg/hilbert.hpp"

using namespace scrollreg;

namespace {

RingPtr ring(int n) { return Ring::make(32003, n); }
Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

/// Count standard monomials of degree d directly against the lead terms.
long long count_standard_monomials(const RingPtr& r, const std::vector<Monomial>& leads, int d) {
    long long count = 0;
    for (const auto& m : monomials_of_degree(r, d)) {
        bool divisible = false;
        for (const auto& l : leads) {
            if (l.divides(m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("zero ideal in 4 variables") {
    RingPtr r = ring(4);
    GradedIdeal i(r, {});
    HilbertData h = hilbert_series(i);
    CHECK(h.dimension == 4);
    CHECK(h.degree == 1);
    CHECK(h.numerator == std::vector<long long>{1});
    CHECK(h.hilbert_function(3) == 20); // C(6,3)
}

TEST_CASE("twisted cubic: polynomial 3n+1, cone dimension 2, degree 3") {
    RingPtr r = ring(4);
    GradedIdeal i(r, {P(r, "x0*x2-x1^2"), P(r, "x0*x3-x1*x2"), P(r, "x1*x3-x2^2")});
    HilbertData h = hilbert_series(i);
    CHECK(h.dimension == 2);
    CHECK(h.degree == 3);
    for (long long n = 1; n <= 8; ++n) {
        CHECK(h.hilbert_polynomial(n) == 3 * n + 1);
        CHECK(h.hilbert_function(n) == 3 * n + 1);
    }
    auto [coeffs, den] = h.hilbert_polynomial_coeffs();
    CHECK(den == 1);
    CHECK(coeffs == std::vector<long long>{1, 3});
}

TEST_CASE("whole ring quotient is zero") {
    RingPtr r = ring(2);
    GradedIdeal i(r, {Polynomial::constant(r, 1)});
    HilbertData h = hilbert_series(i);
    CHECK(h.dimension == 0);
    CHECK(h.degree == 0);
    CHECK(h.hilbert_function(5) == 0);
}

TEST_CASE("random monomial ideals match direct counting") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3); // up to 4 variables
        RingPtr r = ring(n);
        std::vector<Monomial> gens;
        int g = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < g; ++k) {
            Monomial m(n);
            for (int i = 0; i < n; ++i) m.set(i, rng() % 4);
            if (m.degree() > 0) gens.push_back(m);
        }
        HilbertData h = hilbert_series_monomial(r, gens);
        for (int d = 0; d <= 10; ++d) {
            CHECK(h.hilbert_function(d) == count_standard_monomials(r, gens, d));
        }
    }
}

TEST_CASE("scheme length: points and fat points") {
    // Two distinct reduced points in P^2.
    RingPtr r3 = ring(3);
    // Points (1:0:0) and (0:1:0): ideal = intersection.
    GradedIdeal p1(r3, {P(r3, "x1"), P(r3, "x2")});
    GradedIdeal p2(r3, {P(r3, "x0"), P(r3, "x2")});
    auto two_points = intersect(p1, p2);
    CHECK(scheme_length(*two_points) == 2);

    // Double point in P^1.
    RingPtr r2 = ring(2);
    GradedIdeal dbl(r2, {P(r2, "x0^2")});
    CHECK(scheme_length(dbl) == 2);

    // Positive-dimensional input is rejected with its dimension.
    GradedIdeal curve(r3, {P(r3, "x0")});
    CHECK_THROWS_AS(scheme_length(curve), NotFiniteError);
    try {
        scheme_length(curve);
    } catch (const NotFiniteError& e) {
        CHECK(e.dimension == 1);
    }

    // Empty scheme has length 0.
    GradedIdeal empty(r2, {P(r2, "x0"), P(r2, "x1")});
    CHECK(scheme_length(empty) == 0);
}

TEST_CASE("hilbert series is term-order independent") {
    RingPtr r = ring(4);
    std::vector<Polynomial> gens = {P(r, "x0*x2-x1^2"), P(r, "x0*x3-x1*x2"), P(r, "x1*x3-x2^2")};
    GradedIdeal i(r, gens);
    HilbertData h1 = hilbert_series(i);
    RingPtr rb = r->with_order(TermOrder::block(1));
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(g.in_ring(rb));
    GradedIdeal ib(rb, moved);
    auto gb = ib.groebner(TermOrder::block(1));
    HilbertData h2 = hilbert_series_monomial(rb, gb->leading_monomials());
    CHECK(h1.numerator == h2.numerator);
    CHECK(h1.dimension == h2.dimension);
    CHECK(h1.degree == h2.degree);
}

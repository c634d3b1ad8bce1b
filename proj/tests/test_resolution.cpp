#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scrollreg/hilbert.hpp"
#include "scrollreg/resolution.hpp"
#include "scrollreg/util.hpp"

using namespace scrollreg;

namespace {

RingPtr ring(int n) { return Ring::make(32003, n); }
Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

} // namespace

TEST_CASE("syzygies: Koszul relation, twisted cubic, principal ideal") {
    RingPtr r = ring(2);
    auto syz = syzygies(std::vector<Polynomial>{P(r, "x0"), P(r, "x1")});
    auto minimal = minimalize_module_generators(syz);
    REQUIRE(minimal.size() == 1);
    // The relation (x1, -x0) up to sign/scale.
    Polynomial c0 = minimal[0].component(0, r);
    Polynomial c1 = minimal[0].component(1, r);
    CHECK((c0 * P(r, "x0") + c1 * P(r, "x1")).is_zero());
    CHECK(c0.degree() == 1);

    RingPtr r4 = ring(4);
    std::vector<Polynomial> minors = {P(r4, "x0*x2-x1^2"), P(r4, "x0*x3-x1*x2"),
                                      P(r4, "x1*x3-x2^2")};
    auto tc = minimalize_module_generators(syzygies(minors));
    REQUIRE(tc.size() == 2);
    for (const auto& s : tc) {
        CHECK(s.degree() == 3); // linear syzygies of quadrics
        Polynomial acc = Polynomial::zero(r4);
        for (std::uint32_t c = 0; c < 3; ++c) acc = acc + s.component(c, r4) * minors[c];
        CHECK(acc.is_zero());
    }

    auto none = syzygies(std::vector<Polynomial>{P(r, "x0^2+x1^2")});
    CHECK(minimalize_module_generators(none).empty());
}

TEST_CASE("Koszul complex of the irrelevant ideal") {
    for (int n : {3, 4}) {
        RingPtr r = ring(n);
        std::vector<Polynomial> vars;
        for (int i = 0; i < n; ++i) vars.push_back(Polynomial::variable(r, i));
        GradedIdeal i(r, vars);
        FreeResolution res = minimal_free_resolution(i);
        CHECK(res.minimal);
        CHECK(res.composes_to_zero());
        CHECK(res.entries_in_maximal_ideal());
        BettiTable b = res.betti();
        for (int k = 0; k <= n; ++k) CHECK(b.at(k, 0) == binom(n, k));
        RegDepth rd = reg_depth_from_betti(b);
        CHECK(rd.reg_module == 0);
        CHECK(rd.depth == 0);
        CHECK(rd.pd == n);
    }
}

TEST_CASE("twisted cubic resolution") {
    RingPtr r = ring(4);
    GradedIdeal i(r, {P(r, "x0*x2-x1^2"), P(r, "x0*x3-x1*x2"), P(r, "x1*x3-x2^2")});
    FreeResolution res = minimal_free_resolution(i);
    CHECK(res.composes_to_zero());
    CHECK(res.entries_in_maximal_ideal());
    BettiTable b = res.betti();
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(1, 1) == 3);
    CHECK(b.at(2, 1) == 2);
    long long total = 0;
    for (const auto& [k, v] : b.entries()) total += v;
    CHECK(total == 6);
    RegDepth rd = reg_depth_from_betti(b);
    CHECK(rd.reg_scheme == 2);
    CHECK(rd.pd == 2);
    CHECK(rd.depth == 2);
}

TEST_CASE("scroll S(1,2): Eagon-Northcott shape and depth") {
    RingPtr r = ring(5);
    // Hankel blocks for S(1,2): columns (x0;x1), (x2;x3), (x3;x4).
    GradedIdeal i(r, {P(r, "x0*x3-x1*x2"), P(r, "x0*x4-x1*x3"), P(r, "x2*x4-x3^2")});
    FreeResolution res = minimal_free_resolution(i);
    BettiTable b = res.betti();
    CHECK(b.at(1, 1) == 3);
    CHECK(b.at(2, 1) == 2);
    RegDepth rd = reg_depth_from_betti(b);
    CHECK(rd.pd == 2);
    CHECK(rd.depth == 3);
    CHECK(rd.reg_scheme == 2);
    CHECK(is_N2p(b, 2));
    CHECK(is_N2p(b, 5)); // 2-linear resolution: N_{2,p} for all p
}

TEST_CASE("N_{2,p} detection") {
    RingPtr r = ring(3);
    GradedIdeal quadric(r, {P(r, "x0*x2-x1^2")});
    BettiTable b = minimal_free_resolution(quadric).betti();
    CHECK(is_N2p(b, 1));
    // A cubic hypersurface fails N_{2,1}.
    GradedIdeal cubic(r, {P(r, "x0^3+x1^3+x2^3")});
    BettiTable bc = minimal_free_resolution(cubic).betti();
    CHECK_FALSE(is_N2p(bc, 1));
}

TEST_CASE("Euler characteristic ties the resolution to the Hilbert function") {
    RingPtr r = ring(4);
    GradedIdeal i(r, {P(r, "x0*x2-x1^2"), P(r, "x0*x3-x1*x2"), P(r, "x1*x3-x2^2")});
    FreeResolution res = minimal_free_resolution(i);
    HilbertData h = hilbert_series(i);
    for (long long n = 0; n <= reg_depth_from_betti(res.betti()).reg_module + 2; ++n) {
        CHECK(res.euler_characteristic(n) == h.hilbert_function(n));
    }
}

TEST_CASE("schreyer resolution minimizes to the same Betti numbers as direct checks") {
    RingPtr r = ring(3);
    GradedIdeal i(r, {P(r, "x0^2"), P(r, "x0*x1+x1^2")});
    FreeResolution raw = schreyer_resolution(i);
    CHECK(raw.composes_to_zero());
    FreeResolution min = raw;
    minimize(min);
    CHECK(min.composes_to_zero());
    CHECK(min.entries_in_maximal_ideal());
    HilbertData h = hilbert_series(i);
    for (long long n = 0; n <= 8; ++n) {
        CHECK(min.euler_characteristic(n) == h.hilbert_function(n));
        CHECK(raw.euler_characteristic(n) == h.hilbert_function(n));
    }
}

TEST_CASE("empty Betti table is rejected") {
    CHECK_THROWS_AS(reg_depth_from_betti(BettiTable(3, {})), Error);
}

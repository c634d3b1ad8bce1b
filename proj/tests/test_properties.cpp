#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "degreewise_oracle.hpp"

using namespace scrollreg;
using scrollreg::testing::DegreewiseIdeal;
using scrollreg::testing::computed_piece_dim;

namespace {

Polynomial random_homogeneous(const RingPtr& r, int deg, int terms, std::mt19937_64& rng) {
    std::vector<Term> acc;
    int n = r->nvars();
    for (int t = 0; t < terms; ++t) {
        Monomial m(n);
        int left = deg;
        for (int i = 0; i + 1 < n; ++i) {
            int e = static_cast<int>(rng() % (left + 1));
            m.set(i, e);
            left -= e;
        }
        m.set(n - 1, left);
        acc.push_back({m, static_cast<std::uint32_t>(rng() % 32003)});
    }
    return Polynomial::collect(r, std::move(acc));
}

std::vector<Polynomial> random_ideal_gens(const RingPtr& r, std::mt19937_64& rng) {
    std::vector<Polynomial> gens;
    int count = 2 + static_cast<int>(rng() % 2);
    for (int g = 0; g < count; ++g) {
        Polynomial f = random_homogeneous(r, 1 + static_cast<int>(rng() % 3), 3, rng);
        if (!f.is_zero()) gens.push_back(f);
    }
    return gens;
}

} // namespace

TEST_CASE("eliminate agrees with naive degreewise linear algebra") {
    std::mt19937_64 rng(101);
    RingPtr r = Ring::make(32003, 3);
    for (int trial = 0; trial < 12; ++trial) {
        auto gens = random_ideal_gens(r, rng);
        if (gens.empty()) continue;
        GradedIdeal ideal(r, gens);
        std::vector<int> block{static_cast<int>(rng() % 3)};
        auto computed = eliminate(ideal, block);
        // Measure the elimination ideal inside the subring K[rest].
        std::vector<int> keep;
        for (int v = 0; v < 3; ++v) {
            if (v != block[0]) keep.push_back(v);
        }
        RingPtr sub = Ring::make(32003, 2, "z");
        std::vector<Polynomial> sub_gens;
        for (const auto& g : computed->generators()) sub_gens.push_back(g.extracted(sub, keep));
        GradedIdeal sub_ideal(sub, sub_gens);
        DegreewiseIdeal brute = DegreewiseIdeal::from_generators(r, gens, 6);
        for (int d = 0; d <= 6; ++d) {
            CAPTURE(trial);
            CAPTURE(d);
            CHECK(computed_piece_dim(sub_ideal, d) == brute.eliminate_dim(block, d));
        }
        for (const auto& g : computed->generators()) {
            if (g.degree() <= 6) CHECK(brute.contains(g));
        }
    }
}

TEST_CASE("colon agrees with naive degreewise linear algebra") {
    std::mt19937_64 rng(102);
    RingPtr r = Ring::make(32003, 3);
    for (int trial = 0; trial < 12; ++trial) {
        auto gens = random_ideal_gens(r, rng);
        if (gens.empty()) continue;
        GradedIdeal ideal(r, gens);
        Polynomial f = random_homogeneous(r, 1 + static_cast<int>(rng() % 2), 2, rng);
        if (f.is_zero()) continue;
        auto computed = colon(ideal, f);
        DegreewiseIdeal brute =
            DegreewiseIdeal::from_generators(r, gens, 6 + f.homogeneous_degree());
        for (int d = 0; d <= 6; ++d) {
            CAPTURE(trial);
            CAPTURE(d);
            CHECK(computed_piece_dim(*computed, d) == brute.colon_dim(f, d));
        }
        for (const auto& g : computed->generators()) {
            if (g.degree() + f.degree() <= brute.maxdeg()) CHECK(brute.contains(g * f));
        }
    }
}

TEST_CASE("intersect agrees with naive degreewise linear algebra") {
    std::mt19937_64 rng(103);
    RingPtr r = Ring::make(32003, 3);
    for (int trial = 0; trial < 10; ++trial) {
        auto ga = random_ideal_gens(r, rng);
        auto gb = random_ideal_gens(r, rng);
        if (ga.empty() || gb.empty()) continue;
        GradedIdeal a(r, ga), b(r, gb);
        auto computed = intersect(a, b);
        DegreewiseIdeal ba = DegreewiseIdeal::from_generators(r, ga, 6);
        DegreewiseIdeal bb = DegreewiseIdeal::from_generators(r, gb, 6);
        for (int d = 0; d <= 6; ++d) {
            CAPTURE(trial);
            CAPTURE(d);
            CHECK(computed_piece_dim(*computed, d) == DegreewiseIdeal::intersection_dim(ba, bb, d));
        }
        for (const auto& g : computed->generators()) {
            if (g.degree() <= 6) {
                CHECK(ba.contains(g));
                CHECK(bb.contains(g));
            }
        }
    }
}

TEST_CASE("saturation by the irrelevant ideal agrees with iterated naive colon") {
    std::mt19937_64 rng(104);
    RingPtr r = Ring::make(32003, 3);
    for (int trial = 0; trial < 10; ++trial) {
        auto gens = random_ideal_gens(r, rng);
        if (gens.empty()) continue;
        GradedIdeal ideal(r, gens);
        auto computed = saturate_irrelevant(ideal);
        // Brute saturation: iterate (J : S_+) until the low-degree pieces stop moving.
        DegreewiseIdeal brute = DegreewiseIdeal::from_generators(r, gens, 16);
        for (int round = 0; round < 8; ++round) {
            DegreewiseIdeal next = brute.colon_by_irrelevant();
            bool stable = true;
            for (int d = 0; d <= 7 && d <= next.maxdeg(); ++d) {
                if (next.dim(d) != brute.dim(d)) stable = false;
            }
            brute = std::move(next);
            if (stable) break;
        }
        REQUIRE(brute.maxdeg() >= 6);
        for (int d = 0; d <= 6; ++d) {
            CAPTURE(trial);
            CAPTURE(d);
            CHECK(computed_piece_dim(*computed, d) == brute.dim(d));
        }
    }
}

TEST_CASE("saturation is idempotent and grows the ideal") {
    std::mt19937_64 rng(105);
    RingPtr r = Ring::make(32003, 3);
    for (int trial = 0; trial < 6; ++trial) {
        auto gens = random_ideal_gens(r, rng);
        if (gens.empty()) continue;
        GradedIdeal ideal(r, gens);
        auto sat = saturate_irrelevant(ideal);
        auto sat2 = saturate_irrelevant(*sat);
        CHECK(ideal_equal(*sat, *sat2));
        for (const auto& g : ideal.generators()) CHECK(sat->contains(g));
    }
}

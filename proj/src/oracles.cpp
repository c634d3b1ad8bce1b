#include "scrollreg/oracles.hpp"

#include "scrollreg/util.hpp"

namespace scrollreg {
namespace oracles {

namespace {

void require_divisor_hypotheses(int a, int r, long long d) {
    if (!(5 <= r && r < d)) throw HypothesisError("need 5 <= r < d");
    if (!(1 <= a && 2 * a <= r - 2)) throw HypothesisError("need 1 <= a <= (r-2)/2");
}

} // namespace

long long h1_divisor_surface(int a, int r, long long d) {
    require_divisor_hypotheses(a, r, d);
    if (a >= 2) return 1;
    if (r >= 6) return d - r;
    return binom(d - 3, 2); // a = 1, r = 5
}

long long beta1_divisor_surface(int a, int r, long long d) {
    require_divisor_hypotheses(a, r, d);
    if (a >= 2) return 1;
    if (r >= 6) return d - r + 3;
    return binom(d - 1, 2); // a = 1, r = 5
}

long long DepthTwoBettiProfile::third_block(int i) const { return binom(r - 2, i - 1); }

DepthTwoBettiProfile depth_two_betti_profile(int r, long long d) {
    if (!(5 <= r && r < d)) throw HypothesisError("need 5 <= r < d");
    if (d > 2 * r - 5) throw HypothesisError("need d <= 2r-5");
    DepthTwoBettiProfile out;
    out.r = r;
    out.d = d;
    out.a.assign(r + 1, 0);
    out.c.assign(r + 1, 0);
    out.u.assign(r + 1, {});
    out.v.assign(r + 1, std::nullopt);
    for (int i = 1; i <= r; ++i) {
        out.a[i] = (d - r + 1) * binom(r - 1, i) + binom(r - 2, i - 1);
        out.c[i] = (d - 1) * binom(r - 2, i) - binom(r - 2, i + 1);
    }
    long long hi = 2 * r - d - 3;
    for (int i = 1; i <= r; ++i) {
        if (i == 1) {
            out.u[i] = {binom(r, 2) - d - 1, true};
        } else if (i <= hi) {
            out.u[i] = {out.c[i] - out.a[i], true};
        } else if (i <= r - 1) {
            out.u[i] = {out.c[i], false};
        } else {
            out.u[i] = {0, true}; // i = r: beyond the projective dimension of a depth-2 surface
        }
    }
    for (int i = 1; i <= r; ++i) {
        if (i <= 2 * r - d - 4 || i == r) out.v[i] = 0;
        // v_i = u_{i+1} + a_{i+1} - c_{i+1} for 2r-d-3 <= i <= r-3: exact only
        // when u_{i+1} is exact, which holds just at the band edge.
        if (i >= 2 * r - d - 3 && i <= r - 3 && out.u[i + 1].exact) {
            out.v[i] = out.u[i + 1].value + out.a[i + 1] - out.c[i + 1];
        }
    }
    out.v[r - 2] = d - r;
    out.v_r_minus_2 = d - r;
    return out;
}

long long TypeEightBettiProfile::third_block(int i) const { return binom(r - 2, i - 1); }

TypeEightBettiProfile type_eight_betti_profile(int r) {
    if (r < 5) throw HypothesisError("need r >= 5");
    TypeEightBettiProfile out;
    out.r = r;
    out.u.assign(r + 1, std::nullopt);
    out.v.assign(r + 1, std::nullopt);
    for (int i = 1; i <= r; ++i) {
        if (i == 1) {
            out.u[i] = binom(r - 1, 2) - 3;
        } else if (i <= r - 4) {
            out.u[i] = (r - 1) * binom(r - 2, i) - binom(r - 2, i + 1) - 3 * binom(r - 2, i - 1);
        } else if (i >= r - 2) {
            out.u[i] = 0;
        }
    }
    out.u_r_minus_3_candidates = {0, r - 2};
    for (int i = 1; i <= r; ++i) {
        if ((i >= 1 && i <= r - 5) || i >= r - 1) out.v[i] = 0;
    }
    out.v_r_minus_4_offset = (r - 1) * binom(r - 2, 2) - 3 * binom(r - 2, 3) - r + 2;
    out.v[r - 3] = 2 * r - 4;
    out.v[r - 2] = 3;
    return out;
}

long long h2_depth_two_table(int r, long long d, long long n) {
    if (n <= 0) return binom(d - r + 2, 2);
    if (n <= d - r) return binom(d - r - n + 2, 2);
    return 0;
}

std::set<std::pair<int, int>> tau_cases(int r, long long d) {
    if (!(5 <= r && r < d)) throw HypothesisError("need 5 <= r < d");
    if (d <= 2 * r - 4) return {{2, 3}};
    if (d <= 3 * r - 7) return {{1, 1}, {2, 2}, {2, 3}};
    return {{1, 1}, {2, 2}};
}

std::vector<IdentityCheck> planar_case_identities(const PlanarCaseInputs& in) {
    std::vector<IdentityCheck> out;
    int r = in.r;
    long long d = in.d;
    int jx = static_cast<int>(d - r + 2);
    for (int i = 1; i <= r; ++i) {
        out.push_back({"betti_row_diff[i=" + std::to_string(i) + "]",
                       in.betti_x.at(i, jx) - in.betti_y.at(i, jx), binom(r - 2, i - 1)});
    }
    auto h2x = [&](long long n) {
        auto it = in.h2_x.find(static_cast<int>(n));
        return it == in.h2_x.end() ? 0LL : it->second;
    };
    auto h2y = [&](long long n) {
        auto it = in.h2_y.find(static_cast<int>(n));
        return it == in.h2_y.end() ? 0LL : it->second;
    };
    out.push_back({"h2_x_at_d_minus_r", h2x(d - r), 1});
    for (long long n = d - r + 1; n <= d - r + 2; ++n) {
        out.push_back({"h2_x_vanishing[n=" + std::to_string(n) + "]", h2x(n), 0});
    }
    for (long long n = 0; n <= d - r + 1; ++n) {
        out.push_back({"h2_ladder[n=" + std::to_string(n) + "]", h2x(n),
                       h2y(n) + std::max(0LL, binom(-n + d - r + 2, 2))});
    }
    out.push_back({"e_x_formula", in.e_x, h2y(0) + binom(d - r + 2, 2)});
    return out;
}

} // namespace oracles
} // namespace scrollreg

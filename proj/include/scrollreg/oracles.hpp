#ifndef SCROLLREG_ORACLES_HPP
#define SCROLLREG_ORACLES_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scrollreg/resolution.hpp"

namespace scrollreg {
namespace oracles {

/// Closed-form reference values for the computed invariants. These never
/// touch the compute pipeline: plain integer arithmetic only, with the
/// convention binom(n, k) = 0 for n < k or negative arguments.

/// h^1 of the twisted ideal sheaf at n = d-r+1 for a degree-d surface cut on
/// S(1,a,r-a-3) by a divisor in |H+(d-r+2)F|.
long long h1_divisor_surface(int a, int r, long long d);

/// Number of degree-(d-r+3) minimal generators (beta_{1,d-r+2}) for the same family.
long long beta1_divisor_surface(int a, int r, long long d);

struct BoundOrExact {
    long long value = 0;
    bool exact = false; // false: value is only an upper bound
};

/// Betti-number profile of a depth-2 surface of maximal sectional regularity
/// with r < d <= 2r-5: Tor_i = K^{u_i}(-i-1) + K^{v_i}(-i-2) + K^{binom(r-2,i-1)}(-i-(d-r+2)).
struct DepthTwoBettiProfile {
    int r = 0;
    long long d = 0;
    std::vector<long long> a;        // a_i, 1-based in [1, r]
    std::vector<long long> c;        // c_i
    std::vector<BoundOrExact> u;     // u_i: exact for i = 1 and 2 <= i <= 2r-d-3
    std::vector<std::optional<long long>> v; // v_i when pinned; relations otherwise
    long long v_r_minus_2 = 0;
    long long third_block(int i) const; // binom(r-2, i-1)
    int exact_u_hi() const { return static_cast<int>(2 * r - d - 3); }
};

DepthTwoBettiProfile depth_two_betti_profile(int r, long long d);

/// Same profile for the degree r+1 surfaces of maximal sectional regularity
/// and depth 2; u_{r-3} is only pinned to the two-element candidate set {0, r-2}.
struct TypeEightBettiProfile {
    int r = 0;
    std::vector<std::optional<long long>> u; // nullopt at i = r-3
    std::vector<std::optional<long long>> v; // v_{r-4} depends on u_{r-3}
    std::pair<long long, long long> u_r_minus_3_candidates{0, 0};
    long long v_r_minus_4_offset = 0; // v_{r-4} = u_{r-3} + offset
    long long third_block(int i) const;
};

TypeEightBettiProfile type_eight_betti_profile(int r);

/// h^2 of the twisted ideal sheaf for the Cohen-Macaulay-truncation case
/// (tau = (2,3)): binom(d-r+2,2) for n <= 0, binom(d-r-n+2,2) for 0 < n <= d-r, 0 beyond.
long long h2_depth_two_table(int r, long long d, long long n);

/// Admissible tau(X) = (depth X, depth X∪F) pairs per degree band.
std::set<std::pair<int, int>> tau_cases(int r, long long d);

struct IdentityCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool pass() const { return lhs == rhs; }
};

struct PlanarCaseInputs {
    int r = 0;
    long long d = 0;
    BettiTable betti_x;
    BettiTable betti_y;
    long long e_x = 0;
    std::map<int, long long> h2_x; // window n -> h^2(S/I_X)_n
    std::map<int, long long> h2_y;
};

/// Planar-case identities: the Betti row difference in degree d-r+2, the h^2
/// ladder between X and Y = X ∪ F, and the e(X) formula.
std::vector<IdentityCheck> planar_case_identities(const PlanarCaseInputs& in);

} // namespace oracles
} // namespace scrollreg

#endif

#ifndef SCROLLREG_RESOLUTION_HPP
#define SCROLLREG_RESOLUTION_HPP

#include <map>
#include <vector>

#include "scrollreg/free_module.hpp"
#include "scrollreg/groebner.hpp"

namespace scrollreg {

/// Graded Betti numbers beta_{i,j} of S/I (entry key (i, j), internal degree i+j).
class BettiTable {
public:
    BettiTable() = default;
    BettiTable(int ambient_r, std::map<std::pair<int, int>, long long> entries)
        : r_(ambient_r), entries_(std::move(entries)) {}

    long long at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
    int ambient_r() const { return r_; }

    int max_i() const;
    int max_j() const;

    /// reg(S/I) = max j with a nonzero entry (0 for the table of S itself).
    int regularity() const { return std::max(0, max_j()); }
    int projective_dimension() const { return std::max(0, max_i()); }
    /// Auslander-Buchsbaum: depth = (r+1) - pd.
    int depth() const { return r_ + 1 - projective_dimension(); }

    /// Row-major text grid, rows j ascending, columns i ascending.
    std::string grid() const;
    /// Explicit (i, j, beta) triples, one per line.
    std::string triples() const;

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

private:
    int r_ = 0;
    std::map<std::pair<int, int>, long long> entries_;
};

/// Green-Lazarsfeld property N_{2,p}: beta_{i,j} = 0 for 1 <= i <= p, j != 1.
bool is_N2p(const BettiTable& table, int p);

/// Graded free resolution 0 <- S/I <- F_0 <- F_1 <- ... with explicit maps.
/// maps[k] is the matrix of d_{k+1}: F_{k+1} -> F_k (rows = target basis).
class FreeResolution {
public:
    RingPtr ring;
    std::vector<std::vector<int>> twists;            // per homological index
    std::vector<std::vector<std::vector<Polynomial>>> maps; // maps[k][row][col]
    bool minimal = false;

    int length() const { return static_cast<int>(twists.size()) - 1; }

    BettiTable betti() const;

    /// Exact composition check d_k ∘ d_{k+1} = 0 for every consecutive pair.
    bool composes_to_zero() const;

    /// Every matrix entry has zero constant term.
    bool entries_in_maximal_ideal() const;

    /// Alternating sum of twisted free-module Hilbert functions at degree n.
    long long euler_characteristic(long long n) const;
};

/// Minimal graded free resolution of S/I by iterated Schreyer syzygies
/// followed by constant-pivot minimization.
FreeResolution minimal_free_resolution(const GradedIdeal& ideal);

/// The (possibly non-minimal) Schreyer resolution, exposed for tests.
FreeResolution schreyer_resolution(const GradedIdeal& ideal);

/// Cancel unit-constant pivots in place until the complex is minimal.
void minimize(FreeResolution& res);

struct RegDepth {
    int reg_module;  // reg(S/I)
    int reg_scheme;  // reg(X) = reg(S/I) + 1
    int pd;
    int depth;
};

/// reg / pd / depth read off a complete Betti table.
RegDepth reg_depth_from_betti(const BettiTable& table);

} // namespace scrollreg

#endif

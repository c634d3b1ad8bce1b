#ifndef SCROLLREG_REPORT_HPP
#define SCROLLREG_REPORT_HPP

#include <optional>
#include <string>

#include "scrollreg/cohomology.hpp"
#include "scrollreg/recipe.hpp"

namespace scrollreg {

struct InvariantOptions {
    int h_lo = -2;
    int h_hi = 10; // extended automatically to cover reg
    bool with_plane = false;
    unsigned jobs = 1;
};

/// Full invariant report of a compiled surface: Betti table, reg/pd/depth,
/// index of normality, e(X), cohomology windows, and (with a known extremal
/// plane) the invariants of Y = X ∪ F and tau(X).
struct InvariantReport {
    std::string description;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    int r = 0;
    int dim = 0;
    long long degree = 0;

    BettiTable betti_x;
    int reg_x = 0; // reg(X) = reg(S/I) + 1
    int pd = 0;
    int depth = 0;

    std::optional<int> normality; // N(X); nullopt encodes -infinity
    std::optional<long long> e_x; // stable h^2 for n <= 0; absent when the window cannot certify it
    CohomologyTable h1;
    CohomologyTable h2;

    std::optional<BettiTable> betti_y;
    std::optional<int> depth_y;
    std::optional<std::pair<int, int>> tau;
    std::optional<CohomologyTable> h2_y;

    std::vector<std::uint64_t> seeds_used;
    std::map<std::string, double> stage_ms;
    std::string caveat;

    bool consistent = true; // Betti-vs-cohomology cross-checks
    std::string consistency_note;

    std::string to_json() const;
    std::string to_text() const;
};

InvariantReport compute_invariants(const CompiledVariety& variety, const InvariantOptions& opts);

/// Resolution of S/I_Y for Y = X ∪ F given the plane's linear forms.
IdealPtr union_with_plane(const GradedIdeal& x_ideal, const std::vector<Polynomial>& plane_forms);

/// Extremal-plane candidate for a surface whose construction did not pin it:
/// F = (sat(I_{<= d-r+2}) : I) saturated, accepted only if it is a plane
/// meeting X in a curve of degree d-r+3.
std::optional<std::vector<Polynomial>> derive_extremal_plane(const GradedIdeal& x_ideal,
                                                             long long d, int r);

/// Ideal file format: provenance comments, then
///   ring <char> <name> <name> ...
/// and one polynomial per line.
struct IdealFile {
    IdealPtr ideal;
    std::map<std::string, std::string> provenance;
};

void write_ideal_file(const std::string& path, const GradedIdeal& ideal,
                      const std::map<std::string, std::string>& provenance);
IdealFile read_ideal_file(const std::string& path);

} // namespace scrollreg

#endif

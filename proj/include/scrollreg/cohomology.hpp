#ifndef SCROLLREG_COHOMOLOGY_HPP
#define SCROLLREG_COHOMOLOGY_HPP

#include <map>
#include <mutex>
#include <optional>

#include "scrollreg/hilbert.hpp"
#include "scrollreg/resolution.hpp"

namespace scrollreg {

/// Dimensions h^i(S/I)_n of graded local cohomology over a degree window,
/// computed through the twisted dual of a minimal free resolution
/// (h^i(S/I)_n = dim Ext^{r+1-i}(S/I, S(-r-1))_{-n}).
struct CohomologyTable {
    int i = 0;
    int lo = 0, hi = 0;
    std::map<int, long long> dims; // n -> h^i(S/I)_n

    long long at(int n) const {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    bool all_zero() const {
        for (const auto& [n, v] : dims) {
            if (v != 0) return false;
        }
        return true;
    }
};

/// Dual complex of a minimal resolution. Graded homology dimensions are the
/// rank deficits of the two boundary maps in each degree; the image
/// dimensions come from one module Groebner basis per map (lead-module
/// monomial counting), so evaluating a whole degree window is cheap.
class CohomologySolver {
public:
    explicit CohomologySolver(const FreeResolution& res);
    ~CohomologySolver();
    CohomologySolver(const CohomologySolver&) = delete;
    CohomologySolver& operator=(const CohomologySolver&) = delete;

    /// h^i(S/I)_n for a single degree.
    long long h(int i, int n) const;

    /// Table of h^i over [lo, hi].
    CohomologyTable window(int i, int lo, int hi, unsigned jobs = 1) const;

    /// Index of normality N = max{n : h^1 != 0}, or nullopt for -infinity.
    std::optional<int> index_of_normality(unsigned jobs = 1) const;

    /// Eventual value of h^2 for n << 0: evaluated at n = 0, -1, -2 and
    /// required to stabilize, otherwise WindowInconclusiveError.
    long long stable_h2() const;

    int nvars() const { return nv_; }
    int reg_module() const { return reg_; }

private:
    struct ImageData;

    long long dim_dual(int k, int m) const;
    long long dim_image(int k, int m) const;
    const ImageData& image(int k, int max_m) const;

    const FreeResolution* res_;
    int pd_;
    int reg_;
    int nv_;
    int codim_ = 0;
    mutable std::mutex mutex_;
    mutable std::map<int, ImageData> images_;
};

} // namespace scrollreg

#endif

#include "scrollreg/cohomology.hpp"

#include <mutex>

#include "scrollreg/free_module.hpp"
#include "scrollreg/util.hpp"

namespace scrollreg {

/// Graded image data of one dual map delta_k: G_k -> G_{k+1}: a module
/// Groebner basis of the row module, condensed to per-component Hilbert data
/// of the lead modules. Degreewise image dimensions then reduce to counting
/// monomials inside monomial ideals, so whole windows cost one GB each.
struct CohomologySolver::ImageData {
    int valid_to = -1;                  // module degrees covered by the truncated basis
    std::vector<int> comp_twist;        // twist of each target component
    std::vector<HilbertData> lead_data; // Hilbert data of S / (leads on component c)
};

CohomologySolver::CohomologySolver(const FreeResolution& res) : res_(&res) {
    BettiTable b = res.betti();
    pd_ = b.projective_dimension();
    reg_ = b.regularity();
    nv_ = res.ring->nvars();
    // Krull dimension of S/I from the resolution's Hilbert numerator;
    // Ext^k(S/I, S) vanishes below codim = nv - dim, which turns the image
    // dimensions of the left part of the dual complex into alternating sums.
    std::vector<long long> numerator;
    int sign = 1;
    for (const auto& level : res.twists) {
        for (int a : level) {
            if (static_cast<int>(numerator.size()) <= a) numerator.resize(a + 1, 0);
            numerator[a] += sign;
        }
        sign = -sign;
    }
    int dim = nv_;
    auto value_at_one = [](const std::vector<long long>& n) {
        long long s = 0;
        for (long long c : n) s += c;
        return s;
    };
    std::vector<long long> q = numerator;
    bool zero = std::all_of(q.begin(), q.end(), [](long long c) { return c == 0; });
    while (!zero && dim > 0 && value_at_one(q) == 0) {
        std::vector<long long> next(q.size() > 1 ? q.size() - 1 : 1, 0);
        long long carry = 0;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            carry += q[i];
            next[i] = carry;
        }
        q = std::move(next);
        --dim;
        zero = std::all_of(q.begin(), q.end(), [](long long c) { return c == 0; });
    }
    codim_ = zero ? nv_ + 1 : nv_ - dim;
}

CohomologySolver::~CohomologySolver() = default;

long long CohomologySolver::dim_dual(int k, int m) const {
    if (k < 0 || k >= static_cast<int>(res_->twists.size())) return 0;
    long long out = 0;
    for (int a : res_->twists[k]) out += binom(m + a - 1, nv_ - 1);
    return out;
}

const CohomologySolver::ImageData& CohomologySolver::image(int k, int max_m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = images_.find(k);
    if (it != images_.end() && it->second.valid_to >= max_m) return it->second;

    const RingPtr& ring = res_->ring;
    const auto& d = res_->maps[k]; // d_{k+1}: rows = F_k, cols = F_{k+1}
    const auto& src_tw = res_->twists[k];
    const auto& dst_tw = res_->twists[k + 1];

    ImageData data;
    data.valid_to = max_m;
    data.comp_twist.reserve(dst_tw.size());
    for (int a : dst_tw) data.comp_twist.push_back(nv_ - a);

    std::vector<int> module_twists = data.comp_twist;
    auto target = std::make_shared<FreeModule>(ring, module_twists, FreeModule::PlainOrder::TOP);
    std::vector<ModulePoly> rows;
    rows.reserve(src_tw.size());
    for (std::size_t g = 0; g < src_tw.size(); ++g) {
        std::vector<ModTerm> terms;
        for (std::size_t c = 0; c < dst_tw.size(); ++c) {
            for (const auto& t : d[g][c].terms()) {
                terms.push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
            }
        }
        ModulePoly row = ModulePoly::collect(target, std::move(terms));
        if (!row.is_zero()) rows.push_back(std::move(row));
    }
    // Degree-truncated basis: lead terms of module degree <= max_m are
    // complete, which is all the graded counting below ever reads.
    std::vector<ModulePoly> gb = module_buchberger(std::move(rows), max_m);

    std::vector<std::vector<Monomial>> leads(dst_tw.size());
    for (const auto& g : gb) {
        const ModTerm& lt = g.leading_term();
        if (lt.mono.degree() + module_twists[lt.comp] > max_m) continue;
        leads[lt.comp].push_back(lt.mono);
    }
    data.lead_data.reserve(dst_tw.size());
    for (std::size_t c = 0; c < dst_tw.size(); ++c) {
        data.lead_data.push_back(hilbert_series_monomial(ring, leads[c]));
    }
    auto pos = images_.insert_or_assign(k, std::move(data)).first;
    return pos->second;
}

long long CohomologySolver::dim_image(int k, int m) const {
    if (k < 0 || k >= static_cast<int>(res_->maps.size())) return 0;
    if (res_->twists[k].empty() || res_->twists[k + 1].empty()) return 0;
    if (k < codim_) {
        // Exact range of the dual complex: im(d*_k) = G_k - im(d*_{k-1}).
        long long out = 0;
        int sign = 1;
        for (int j = k; j >= 0; --j) {
            out += sign * dim_dual(j, m);
            sign = -sign;
        }
        return out;
    }
    const ImageData& data = image(k, std::max(m, 2));
    long long out = 0;
    for (std::size_t c = 0; c < data.comp_twist.size(); ++c) {
        long long e = m - data.comp_twist[c];
        if (e < 0) continue;
        long long full = binom(e + nv_ - 1, nv_ - 1);
        out += full - data.lead_data[c].hilbert_function(e);
    }
    return out;
}

long long CohomologySolver::h(int i, int n) const {
    int k = nv_ - i; // Ext index
    if (k < 0 || k > pd_) return 0;
    int m = -n;
    long long dim_gk = dim_dual(k, m);
    if (dim_gk == 0) return 0;
    return dim_gk - dim_image(k, m) - dim_image(k - 1, m);
}

CohomologyTable CohomologySolver::window(int i, int lo, int hi, unsigned jobs) const {
    CohomologyTable out;
    out.i = i;
    out.lo = lo;
    out.hi = hi;
    if (lo > hi) return out;
    // Force the image data once; per-degree evaluation is then just counting.
    int k = nv_ - i;
    int max_m = std::max(-lo, 2);
    if (k >= 0 && k <= pd_) {
        if (k < static_cast<int>(res_->maps.size())) image(k, max_m);
        if (k - 1 >= 0 && k - 1 < static_cast<int>(res_->maps.size())) image(k - 1, max_m);
    }
    std::vector<long long> vals(hi - lo + 1, 0);
    parallel_for(vals.size(), jobs, [&](std::size_t idx) {
        vals[idx] = h(i, lo + static_cast<int>(idx));
    });
    for (std::size_t idx = 0; idx < vals.size(); ++idx) {
        out.dims[lo + static_cast<int>(idx)] = vals[idx];
    }
    return out;
}

std::optional<int> CohomologySolver::index_of_normality(unsigned jobs) const {
    // h^1 vanishes above reg(S/I) - 1; scan down from there and require the
    // window to exhibit the zero forced by regularity.
    int hi = reg_;
    CohomologyTable t = window(1, -2, hi, jobs);
    if (h(1, hi + 1) != 0) {
        throw WindowInconclusiveError("h^1 window does not exhibit trailing zeros");
    }
    for (int n = hi; n >= t.lo; --n) {
        if (t.at(n) != 0) return n;
    }
    return std::nullopt;
}

long long CohomologySolver::stable_h2() const {
    long long v0 = h(2, 0);
    long long v1 = h(2, -1);
    long long v2 = h(2, -2);
    if (v0 != v1 || v1 != v2) {
        throw WindowInconclusiveError("h^2 did not stabilize over n = 0, -1, -2");
    }
    return v0;
}

} // namespace scrollreg

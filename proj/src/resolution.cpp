#include "scrollreg/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "scrollreg/util.hpp"

namespace scrollreg {

int BettiTable::max_i() const {
    int m = 0;
    for (const auto& [key, val] : entries_) {
        if (val != 0) m = std::max(m, key.first);
    }
    return m;
}

int BettiTable::max_j() const {
    int m = 0;
    for (const auto& [key, val] : entries_) {
        if (val != 0 && key.first > 0) m = std::max(m, key.second);
    }
    return m;
}

std::string BettiTable::grid() const {
    int imax = std::max(1, max_i());
    int jmax = std::max(1, max_j());
    std::ostringstream out;
    out << "j\\i ";
    for (int i = 1; i <= imax; ++i) out << '\t' << i;
    out << '\n';
    for (int j = 1; j <= jmax; ++j) {
        out << j << ':';
        for (int i = 1; i <= imax; ++i) out << '\t' << at(i, j);
        out << '\n';
    }
    return out.str();
}

std::string BettiTable::triples() const {
    std::ostringstream out;
    for (const auto& [key, val] : entries_) {
        if (val != 0) out << key.first << ' ' << key.second << ' ' << val << '\n';
    }
    return out.str();
}

bool is_N2p(const BettiTable& table, int p) {
    for (const auto& [key, val] : table.entries()) {
        auto [i, j] = key;
        if (val != 0 && i >= 1 && i <= p && j != 1) return false;
    }
    return true;
}

BettiTable FreeResolution::betti() const {
    std::map<std::pair<int, int>, long long> entries;
    for (std::size_t level = 0; level < twists.size(); ++level) {
        for (int a : twists[level]) {
            entries[{static_cast<int>(level), a - static_cast<int>(level)}] += 1;
        }
    }
    return BettiTable(ring->nvars() - 1, std::move(entries));
}

bool FreeResolution::composes_to_zero() const {
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        const auto& A = maps[k];     // d_{k+1}: F_{k+1} -> F_k
        const auto& B = maps[k + 1]; // d_{k+2}: F_{k+2} -> F_{k+1}
        if (A.empty() || B.empty()) continue;
        std::size_t rows = A.size();
        std::size_t mid = B.size();
        std::size_t cols = B.empty() ? 0 : B[0].size();
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                Polynomial acc = Polynomial::zero(ring);
                for (std::size_t m = 0; m < mid; ++m) {
                    if (A[r][m].is_zero() || B[m][c].is_zero()) continue;
                    acc = acc + A[r][m] * B[m][c];
                }
                if (!acc.is_zero()) return false;
            }
        }
    }
    return true;
}

bool FreeResolution::entries_in_maximal_ideal() const {
    for (const auto& mat : maps) {
        for (const auto& row : mat) {
            for (const auto& entry : row) {
                if (!entry.is_zero() && entry.leading_monomial().is_one()) return false;
            }
        }
    }
    return true;
}

long long FreeResolution::euler_characteristic(long long n) const {
    long long out = 0;
    int nv = ring->nvars();
    int sign = 1;
    for (const auto& level : twists) {
        for (int a : level) out += sign * binom(n - a + nv - 1, nv - 1);
        sign = -sign;
    }
    return out;
}

namespace {

/// One Schreyer step: given a GB (elements of module F), build the frame
/// F_next and a GB of the syzygy module under the induced order.
struct SchreyerStep {
    FreeModulePtr next_module;
    std::vector<ModulePoly> syzygy_basis;
};

SchreyerStep schreyer_syzygies(const FreeModulePtr& F, const std::vector<ModulePoly>& gb) {
    const RingPtr& ring = F->ring();
    const PrimeField& field = ring->field();
    std::vector<int> twists;
    std::vector<FreeModule::SchreyerTag> tags;
    twists.reserve(gb.size());
    for (const auto& g : gb) {
        twists.push_back(g.degree());
        const ModTerm& lt = g.leading_term();
        tags.push_back({lt.mono, lt.comp});
    }
    auto next = std::make_shared<FreeModule>(ring, twists, tags, F);

    // Candidate pairs: same lead component, i < j. For each i keep only the
    // pairs whose quotient monomial lcm/lt_i is divisibility-minimal; those
    // leads generate the full lead module of the syzygies.
    std::vector<ModulePoly> syz;
    for (std::size_t i = 0; i < gb.size(); ++i) {
        poll_deadline("schreyer syzygies");
        const ModTerm& li = gb[i].leading_term();
        std::vector<std::pair<Monomial, std::size_t>> cands;
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            const ModTerm& lj = gb[j].leading_term();
            if (lj.comp != li.comp) continue;
            cands.push_back({Monomial::lcm(li.mono, lj.mono) / li.mono, j});
        }
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            return a.first.degree() < b.first.degree();
        });
        std::vector<std::pair<Monomial, std::size_t>> minimal;
        for (auto& cand : cands) {
            bool dominated = false;
            for (auto& kept : minimal) {
                if (kept.first.divides(cand.first)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) minimal.push_back(cand);
        }
        for (auto& [quot_i, j] : minimal) {
            const ModTerm& lj = gb[j].leading_term();
            Monomial lcm = quot_i * li.mono;
            Monomial quot_j = lcm / lj.mono;
            std::uint32_t ci = field.inv(li.coeff);
            std::uint32_t cj = field.inv(lj.coeff);
            ModulePoly spair =
                gb[i].times_term(quot_i, ci).sub_mult(gb[j], quot_j, cj);
            std::vector<ReductionStep> steps;
            ModulePoly rem = module_normal_form(spair, gb, &steps);
            if (!rem.is_zero()) {
                throw Error("internal: S-pair of a Groebner basis did not reduce to zero");
            }
            std::vector<ModTerm> tau;
            tau.push_back({quot_i, static_cast<std::uint32_t>(i), ci});
            tau.push_back({quot_j, static_cast<std::uint32_t>(j), field.neg(cj)});
            for (const auto& st : steps) {
                tau.push_back({st.mono, static_cast<std::uint32_t>(st.index), field.neg(st.coeff)});
            }
            syz.push_back(ModulePoly::collect(next, std::move(tau)));
        }
    }
    // Sort by (lead component, lex-descending lead monomial); this ordering
    // makes the iterated construction terminate within nvars steps.
    TermOrder lex = TermOrder::lex();
    std::sort(syz.begin(), syz.end(), [&](const ModulePoly& a, const ModulePoly& b) {
        const ModTerm& la = a.leading_term();
        const ModTerm& lb = b.leading_term();
        if (la.comp != lb.comp) return la.comp < lb.comp;
        return lex.compare(la.mono, lb.mono) == Ordering::GT;
    });
    return {next, std::move(syz)};
}

} // namespace

FreeResolution schreyer_resolution(const GradedIdeal& ideal) {
    const RingPtr& ring = ideal.ring();
    FreeResolution res;
    res.ring = ring;
    res.twists.push_back({0});

    auto base = std::make_shared<FreeModule>(ring, std::vector<int>{0});
    auto gb = ideal.groebner(ring->order());
    std::vector<ModulePoly> level;
    level.reserve(gb->size());
    for (const auto& g : gb->elements()) {
        level.push_back(ModulePoly::from_polynomial(base, g, 0));
    }
    // Sort the ideal GB lex-descending by lead for the termination bound.
    TermOrder lex = TermOrder::lex();
    std::sort(level.begin(), level.end(), [&](const ModulePoly& a, const ModulePoly& b) {
        return lex.compare(a.leading_term().mono, b.leading_term().mono) == Ordering::GT;
    });

    FreeModulePtr current = base;
    int guard = ring->nvars() + 2;
    while (!level.empty()) {
        if (--guard < 0) throw Error("internal: resolution did not terminate");
        SchreyerStep step = schreyer_syzygies(current, level);
        // Record this level: twists and the matrix of the map into `current`.
        std::vector<int> twists = step.next_module->twists();
        std::vector<std::vector<Polynomial>> matrix(
            current->rank(), std::vector<Polynomial>(level.size(), Polynomial::zero(ring)));
        for (std::size_t col = 0; col < level.size(); ++col) {
            for (std::size_t row = 0; row < current->rank(); ++row) {
                matrix[row][col] = level[col].component(static_cast<std::uint32_t>(row), ring);
            }
        }
        res.twists.push_back(twists);
        res.maps.push_back(std::move(matrix));
        current = step.next_module;
        level = std::move(step.syzygy_basis);
    }
    return res;
}

void minimize(FreeResolution& res) {
    const RingPtr& ring = res.ring;
    const PrimeField& F = ring->field();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < res.maps.size(); ++k) {
            auto& mat = res.maps[k]; // d_{k+1}: F_{k+1} -> F_k
            for (std::size_t r = 0; r < mat.size(); ++r) {
                poll_deadline("resolution minimization");
                std::size_t ncols = mat.empty() ? 0 : mat[r].size();
                std::size_t pivot_col = ncols;
                for (std::size_t c = 0; c < ncols; ++c) {
                    const Polynomial& e = mat[r][c];
                    if (!e.is_zero() && e.leading_monomial().is_one()) {
                        pivot_col = c;
                        break;
                    }
                }
                if (pivot_col == ncols) continue;
                changed = true;
                std::size_t c = pivot_col;
                std::uint32_t cinv = F.inv(mat[r][c].leading_coeff());

                // Clear the pivot row by column operations (basis change in F_{k+1}),
                // mirrored as row operations on d_{k+2}.
                for (std::size_t c2 = 0; c2 < ncols; ++c2) {
                    if (c2 == c || mat[r][c2].is_zero()) continue;
                    Polynomial q = mat[r][c2].scaled(cinv);
                    for (std::size_t rr = 0; rr < mat.size(); ++rr) {
                        if (mat[rr][c].is_zero()) continue;
                        mat[rr][c2] = mat[rr][c2] - q * mat[rr][c];
                    }
                    if (k + 1 < res.maps.size() && !res.maps[k + 1].empty()) {
                        auto& next = res.maps[k + 1];
                        for (std::size_t cc = 0; cc < next[c].size(); ++cc) {
                            if (next[c2][cc].is_zero()) continue;
                            next[c][cc] = next[c][cc] + q * next[c2][cc];
                        }
                    }
                }
                // Clear the pivot column by row operations (basis change in F_k),
                // mirrored as column operations on d_k.
                for (std::size_t r2 = 0; r2 < mat.size(); ++r2) {
                    if (r2 == r || mat[r2][c].is_zero()) continue;
                    Polynomial q = mat[r2][c].scaled(cinv);
                    for (std::size_t c2 = 0; c2 < ncols; ++c2) {
                        if (mat[r][c2].is_zero()) continue;
                        mat[r2][c2] = mat[r2][c2] - q * mat[r][c2];
                    }
                    if (k > 0 && !res.maps[k - 1].empty()) {
                        auto& prev = res.maps[k - 1];
                        for (std::size_t rr = 0; rr < prev.size(); ++rr) {
                            if (prev[rr][r2].is_zero()) continue;
                            prev[rr][r] = prev[rr][r] + q * prev[rr][r2];
                        }
                    }
                }
                // Drop basis element c of F_{k+1} and basis element r of F_k.
                for (auto& row : mat) row.erase(row.begin() + c);
                res.twists[k + 1].erase(res.twists[k + 1].begin() + c);
                if (k + 1 < res.maps.size()) {
                    res.maps[k + 1].erase(res.maps[k + 1].begin() + c);
                }
                mat.erase(mat.begin() + r);
                res.twists[k].erase(res.twists[k].begin() + r);
                if (k > 0) {
                    for (auto& row : res.maps[k - 1]) row.erase(row.begin() + r);
                }
                --r; // revisit this row index after the deletion shift
            }
        }
    }
    // Drop empty tail levels.
    while (!res.twists.empty() && res.twists.back().empty()) {
        res.twists.pop_back();
        res.maps.pop_back();
    }
    res.minimal = true;
}

FreeResolution minimal_free_resolution(const GradedIdeal& ideal) {
    FreeResolution res = schreyer_resolution(ideal);
    minimize(res);
    return res;
}

RegDepth reg_depth_from_betti(const BettiTable& table) {
    if (table.entries().empty()) throw Error("empty Betti table");
    RegDepth out{};
    out.reg_module = table.regularity();
    out.reg_scheme = out.reg_module + 1;
    out.pd = table.projective_dimension();
    out.depth = table.depth();
    return out;
}

} // namespace scrollreg

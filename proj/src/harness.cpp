#include "scrollreg/harness.hpp"

#include <sstream>

namespace scrollreg {

namespace {

std::vector<GoldenExample> make_golden() {
    std::vector<GoldenExample> out;
    out.push_back({"example-7.3", 3, 5, 6, 8, 6, 4,
                   {{1, 1, 6}, {2, 1, 8}, {3, 1, 3},
                    {1, 2, 4}, {2, 2, 12}, {3, 2, 12}, {4, 2, 4},
                    {1, 4, 1}, {2, 4, 4}, {3, 4, 6}, {4, 4, 4}, {5, 4, 1}},
                   {2, 3}, 120});
    out.push_back({"example-7.4-f1", 3, 8, 6, 11, 6, 7,
                   {{1, 1, 6}, {2, 1, 8}, {3, 1, 3},
                    {1, 3, 4}, {2, 3, 12}, {3, 3, 12}, {4, 3, 4},
                    {1, 5, 1}, {2, 5, 4}, {3, 5, 6}, {4, 5, 4}, {5, 5, 1},
                    {1, 7, 1}, {2, 7, 4}, {3, 7, 6}, {4, 7, 4}, {5, 7, 1}},
                   {2, 2}, 600});
    out.push_back({"example-7.4-f2", 3, 8, 6, 11, 6, 7,
                   {{1, 1, 5}, {2, 1, 5},
                    {1, 2, 1}, {3, 2, 1},
                    {1, 3, 1}, {2, 3, 9}, {3, 3, 11}, {4, 3, 4},
                    {1, 4, 4}, {2, 4, 18}, {3, 4, 32}, {4, 4, 28}, {5, 4, 12}, {6, 4, 2},
                    {1, 7, 1}, {2, 7, 4}, {3, 7, 6}, {4, 7, 4}, {5, 7, 1}},
                   {1, 1}, 600});
    out.push_back({"example-7.4-f3", 3, 8, 6, 11, 5, 7,
                   {{1, 1, 3}, {2, 1, 2},
                    {1, 2, 10}, {2, 2, 27}, {3, 2, 24}, {4, 2, 7},
                    {1, 7, 1}, {2, 7, 4}, {3, 7, 6}, {4, 7, 4}, {5, 7, 1}},
                   {2, 3}, 600});
    out.push_back({"example-7.5-f1", 3, 9, 6, 12, 6, 8,
                   {{1, 1, 6}, {2, 1, 8}, {3, 1, 3},
                    {1, 3, 2}, {2, 3, 4},
                    {1, 4, 1}, {2, 4, 4}, {3, 4, 10}, {4, 4, 6}, {5, 4, 1},
                    {1, 6, 1}, {2, 6, 4}, {3, 6, 6}, {4, 6, 4}, {5, 6, 1},
                    {1, 8, 1}, {2, 8, 4}, {3, 8, 6}, {4, 8, 4}, {5, 8, 1}},
                   {2, 2}, 900});
    out.push_back({"example-7.5-f2", 3, 9, 6, 12, 6, 8,
                   {{1, 1, 5}, {2, 1, 5},
                    {3, 2, 1},
                    {1, 3, 5}, {2, 3, 15}, {3, 3, 15}, {4, 3, 5},
                    {1, 5, 5}, {2, 5, 23}, {3, 5, 42}, {4, 5, 38}, {5, 5, 17}, {6, 5, 3},
                    {1, 8, 1}, {2, 8, 4}, {3, 8, 6}, {4, 8, 4}, {5, 8, 1}},
                   {1, 1}, 900});
    return out;
}

} // namespace

const std::vector<GoldenExample>& golden_examples() {
    static const std::vector<GoldenExample> tables = make_golden();
    return tables;
}

const GoldenExample& golden_example(const std::string& name) {
    for (const auto& g : golden_examples()) {
        if (g.name == name) return g;
    }
    throw Error("no golden example named " + name);
}

void TargetResult::check(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "  [ok]   " : "  [FAIL] ") + what);
    passed = passed && ok;
}

void TargetResult::note(const std::string& what) { details.push_back("  [note] " + what); }

const SurfaceAnalysis& AnalysisCache::get(const std::string& builtin, std::uint32_t prime) {
    auto key = std::make_pair(builtin, prime);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    set_stage_deadline(Deadline(opts_.stage_timeout_seconds));
    RecipeOptions ropts;
    ropts.characteristic = prime;
    ropts.seed = opts_.seed;
    ropts.jobs = opts_.jobs;
    SurfaceAnalysis analysis;
    analysis.variety = compile_builtin(builtin, ropts);
    InvariantOptions iopts;
    iopts.with_plane = analysis.variety.extremal_plane_forms.has_value();
    iopts.jobs = opts_.jobs;
    analysis.report = compute_invariants(analysis.variety, iopts);
    clear_stage_deadline();
    auto [pos, inserted] = cache_.emplace(key, std::move(analysis));
    return pos->second;
}

namespace {

std::string grid_diff(const BettiTable& computed, const GoldenExample& g) {
    std::ostringstream out;
    out << "expected (rows j = 1.." << g.grid_jmax << ", cols i = 1.." << g.grid_imax << "):\n";
    BettiTable expected(g.r, [&] {
        std::map<std::pair<int, int>, long long> entries;
        entries[{0, 0}] = 1;
        for (const auto& [i, j, b] : g.betti) entries[{i, j}] = b;
        return entries;
    }());
    out << expected.grid();
    out << "computed:\n" << computed.grid();
    return out.str();
}

bool betti_matches_golden(const BettiTable& computed, const GoldenExample& g) {
    BettiTable expected(g.r, [&] {
        std::map<std::pair<int, int>, long long> entries;
        for (const auto& [i, j, b] : g.betti) entries[{i, j}] = b;
        return entries;
    }());
    for (int i = 1; i <= g.grid_imax; ++i) {
        for (int j = 1; j <= g.grid_jmax; ++j) {
            if (computed.at(i, j) != expected.at(i, j)) return false;
        }
    }
    // Nothing outside the printed grid.
    for (const auto& [key, val] : computed.entries()) {
        auto [i, j] = key;
        if (val == 0 || i == 0) continue;
        if (i > g.grid_imax || j > g.grid_jmax) return false;
    }
    return true;
}

} // namespace

TargetResult run_example_target(const std::string& name, AnalysisCache& cache) {
    TargetResult result{name};
    Stopwatch sw;
    const GoldenExample& g = golden_example(name);
    std::vector<const BettiTable*> per_prime;
    for (std::uint32_t prime : cache.options().primes) {
        const SurfaceAnalysis& a = cache.get(name, prime);
        const InvariantReport& rep = a.report;
        std::string tag = name + " @ GF(" + std::to_string(prime) + ")";
        bool betti_ok = betti_matches_golden(rep.betti_x, g);
        result.check(betti_ok, tag + ": Betti table matches the reference grid");
        if (!betti_ok) result.note(grid_diff(rep.betti_x, g));
        result.check(rep.reg_x == g.d - g.r + 3,
                     tag + ": reg(X) = " + std::to_string(rep.reg_x) + " (expect d-r+3 = " +
                         std::to_string(g.d - g.r + 3) + ")");
        result.check(rep.depth == g.tau.first, tag + ": depth(X) = " + std::to_string(rep.depth));
        bool tau_ok = rep.tau && *rep.tau == g.tau;
        result.check(tau_ok, tag + ": tau(X) = (" + std::to_string(g.tau.first) + "," +
                                 std::to_string(g.tau.second) + ")");
        double secs = rep.stage_ms.count("total") ? rep.stage_ms.at("total") / 1000.0 : 0;
        result.check(secs < g.time_budget_seconds,
                     tag + ": runtime " + std::to_string(secs) + " s within " +
                         std::to_string(g.time_budget_seconds) + " s");
        per_prime.push_back(&rep.betti_x);
    }
    for (std::size_t k = 1; k < per_prime.size(); ++k) {
        if (!(*per_prime[k] == *per_prime[0])) {
            result.check(false, name + ": Betti tables differ between primes (reported, not resolved)");
        }
    }
    result.seconds = sw.ms() / 1000.0;
    return result;
}

TargetResult run_regularity_law_target(const std::string& name, AnalysisCache& cache) {
    TargetResult result{"reg-law " + name};
    Stopwatch sw;
    const GoldenExample& g = golden_example(name);
    std::uint32_t prime = cache.options().primes.front();
    const SurfaceAnalysis& a = cache.get(name, prime);
    result.check(a.report.reg_x == g.d - g.r + 3, name + ": reg(X) = d-r+3");

    set_stage_deadline(Deadline(cache.options().stage_timeout_seconds));
    Rng rng(cache.options().seed + 77);
    HyperplaneSection section =
        general_hyperplane_section(*a.variety.ideal, rng, 2, a.variety.degree);
    FreeResolution res = minimal_free_resolution(*section.ideal);
    RegDepth rd = reg_depth_from_betti(res.betti());
    clear_stage_deadline();
    result.check(rd.reg_scheme == g.d - g.r + 3,
                 name + ": seeded hyperplane section has reg(C) = " + std::to_string(rd.reg_scheme) +
                     " (expect " + std::to_string(g.d - g.r + 3) + ")");
    result.seconds = sw.ms() / 1000.0;
    return result;
}

TargetResult run_s111_divisor_target(long long d, AnalysisCache& cache) {
    TargetResult result{"s111-divisor d=" + std::to_string(d)};
    Stopwatch sw;
    std::uint32_t prime = cache.options().primes.front();
    const SurfaceAnalysis& a = cache.get("divisor-s111-d" + std::to_string(d), prime);
    const InvariantReport& rep = a.report;
    result.check(rep.degree == d && rep.dim == 2, "surface of degree d on S(1,1,1)");
    long long beta1 = rep.betti_x.at(1, static_cast<int>(d - 3));
    result.check(beta1 == binom(d - 1, 2),
                 "beta_{1,d-3} = " + std::to_string(beta1) + " = binom(d-1,2)");
    long long h1 = rep.h1.at(static_cast<int>(d - 4));
    result.check(h1 == binom(d - 3, 2), "h^1 at d-4 = " + std::to_string(h1) + " = binom(d-3,2)");
    result.check(rep.normality && *rep.normality == d - 4,
                 "N(X) = " + (rep.normality ? std::to_string(*rep.normality) : std::string("-inf")));
    result.check(rep.depth == 1, "depth(X) = 1");
    result.check(rep.h2.all_zero(), "h^2 window identically zero");
    result.check(rep.e_x && *rep.e_x == 0, "e(X) = 0");
    result.seconds = sw.ms() / 1000.0;
    return result;
}

TargetResult run_divisor_formula_target(int a, int r, long long d, AnalysisCache& cache) {
    TargetResult result{"divisor-formulas a=" + std::to_string(a) + " r=" + std::to_string(r) +
                        " d=" + std::to_string(d)};
    Stopwatch sw;
    int b = r - a - 3;
    std::string builtin = (a == 1 && b == 1) ? ("divisor-s111-d" + std::to_string(d))
                                             : ("divisor-1-" + std::to_string(a) + "-" +
                                                std::to_string(b) + "-d" + std::to_string(d));
    std::uint32_t prime = cache.options().primes.front();
    const SurfaceAnalysis& analysis = cache.get(builtin, prime);
    const InvariantReport& rep = analysis.report;
    long long h1 = rep.h1.at(static_cast<int>(d - r + 1));
    long long h1_expected = oracles::h1_divisor_surface(a, r, d);
    result.check(h1 == h1_expected, "h^1 at d-r+1 = " + std::to_string(h1) + " (oracle " +
                                        std::to_string(h1_expected) + ")");
    if (a == 1 && r >= 6 && h1 != h1_expected && h1 == d - r + 1) {
        result.note("the quoted case value d-r is an off-by-one in the source display: its own "
                    "pushforward argument counts the d-r+1 monomials on the two degree-1 bundle "
                    "summands, matching the computed value; N(Y) = d-r+1 = " +
                    std::to_string(*rep.normality) + " is consistent");
    }
    long long beta1 = rep.betti_x.at(1, static_cast<int>(d - r + 2));
    long long beta1_expected = oracles::beta1_divisor_surface(a, r, d);
    result.check(beta1 == beta1_expected, "beta_{1,d-r+2} = " + std::to_string(beta1) +
                                              " (oracle " + std::to_string(beta1_expected) + ")");
    result.seconds = sw.ms() / 1000.0;
    return result;
}

TargetResult run_census_target(char regime, AnalysisCache& cache) {
    TargetResult result{std::string("census case ") + regime};
    Stopwatch sw;
    std::uint32_t prime = cache.options().primes.front();
    RecipeOptions ropts;
    ropts.characteristic = prime;
    ropts.seed = cache.options().seed;
    set_stage_deadline(Deadline(cache.options().stage_timeout_seconds));
    CompiledVariety x;
    if (regime == 'B') {
        x = build_divisor_surface({1, 2, 3}, 9, {"zero", "random", "random"}, ropts);
    } else if (regime == 'C') {
        x = build_divisor_surface({1, 2, 3}, 9, {"random", "random", "random"}, ropts);
    } else if (regime == 'E') {
        x = build_divisor_surface({1, 1, 1}, 6, {"random", "random", "random"}, ropts);
    } else {
        throw Error("unknown census regime");
    }
    Rng rng(cache.options().seed + 101);
    SecantCensusReport census = extremal_secant_census(
        *x.ideal, *x.scroll_exponents, x.degree, x.r, rng, 50, 5, cache.options().jobs);
    clear_stage_deadline();
    long long structured = 0;
    for (const auto& rec : census.lines) {
        if (!rec.family_parameter.empty() || rec.cls == SecantClass::Contained) ++structured;
    }
    if (regime == 'B') {
        result.check(census.extremal_count == 0, "no proper extremal secant line");
        result.check(census.contained_count >= 1, "line section contained in X");
        result.check(census.family_dim_estimate == -1, "d-estimate = -1");
    } else if (regime == 'C') {
        result.check(census.extremal_count == 1, "exactly one proper extremal secant line");
        result.check(census.family_dim_estimate == 0, "d-estimate = 0");
    } else {
        long long extremal_structured = 0;
        for (const auto& rec : census.lines) {
            if (!rec.family_parameter.empty() && rec.cls == SecantClass::ProperExtremal) {
                ++extremal_structured;
            }
        }
        result.check(extremal_structured >= 50,
                     std::to_string(extremal_structured) + " line sections are (d-2)-secant");
        bool lengths_ok = true;
        for (const auto& rec : census.lines) {
            if (!rec.family_parameter.empty() && rec.cls == SecantClass::ProperExtremal &&
                rec.length != x.degree - 2) {
                lengths_ok = false;
            }
        }
        result.check(lengths_ok, "every structured secant has length d-2");
        result.check(census.span_dim == 5, "extremal lines span P^5");
        result.check(census.family_dim_estimate == 2, "d-estimate = 2");
    }
    result.seconds = sw.ms() / 1000.0;
    return result;
}

TargetResult run_planar_identities_target(const std::string& name, AnalysisCache& cache) {
    TargetResult result{"planar-identities " + name};
    Stopwatch sw;
    const GoldenExample& g = golden_example(name);
    std::uint32_t prime = cache.options().primes.front();
    const SurfaceAnalysis& a = cache.get(name, prime);
    const InvariantReport& rep = a.report;
    if (!rep.betti_y || !rep.h2_y) {
        result.check(false, "extremal plane analysis unavailable");
        return result;
    }
    oracles::PlanarCaseInputs in;
    in.r = g.r;
    in.d = g.d;
    in.betti_x = rep.betti_x;
    in.betti_y = *rep.betti_y;
    if (!rep.e_x) {
        result.check(false, "e(X) window inconclusive");
        return result;
    }
    in.e_x = *rep.e_x;
    in.h2_x = rep.h2.dims;
    in.h2_y = rep.h2_y->dims;
    for (const auto& check : oracles::planar_case_identities(in)) {
        result.check(check.pass(), check.name + ": " + std::to_string(check.lhs) + " vs " +
                                       std::to_string(check.rhs));
    }
    // Normality criterion: N(X) <= d-r iff beta_{r,d-r+2}(X) = 0.
    bool lhs = !rep.normality || *rep.normality <= g.d - g.r;
    bool rhs = rep.betti_x.at(g.r, static_cast<int>(g.d - g.r + 2)) == 0;
    result.check(lhs == rhs, "N(X) <= d-r iff beta_{r,d-r+2}(X) = 0 (" +
                                 std::string(lhs ? "true" : "false") + " vs " +
                                 std::string(rhs ? "true" : "false") + ")");
    result.seconds = sw.ms() / 1000.0;
    return result;
}

TargetResult run_depth_two_profile_target(AnalysisCache& cache) {
    TargetResult result{"depth-two-profile (a,b)=(4,5)"};
    Stopwatch sw;
    std::uint32_t prime = cache.options().primes.front();
    const SurfaceAnalysis& a = cache.get("proj-4-5", prime);
    const InvariantReport& rep = a.report;
    int r = 8;
    long long d = 9;
    result.check(rep.r == r && rep.degree == d && rep.dim == 2, "surface in P^8 of degree 9");
    result.check(rep.depth == 2, "depth(X) = 2");
    result.check(rep.reg_x == d - r + 3, "reg(X) = d-r+3 = 4");
    auto profile = oracles::depth_two_betti_profile(r, d);
    for (int i = 1; i <= r; ++i) {
        long long u = rep.betti_x.at(i, 1);
        long long v = rep.betti_x.at(i, 2);
        long long w = rep.betti_x.at(i, 3);
        result.check(w == profile.third_block(i),
                     "beta_{" + std::to_string(i) + ",3} = " + std::to_string(w) + " = binom(r-2,i-1)");
        if (profile.u[i].exact) {
            result.check(u == profile.u[i].value, "u_" + std::to_string(i) + " = " +
                                                      std::to_string(u) + " (oracle " +
                                                      std::to_string(profile.u[i].value) + ")");
        } else {
            result.check(u <= profile.u[i].value, "u_" + std::to_string(i) + " = " +
                                                      std::to_string(u) + " <= c_i = " +
                                                      std::to_string(profile.u[i].value));
        }
        if (profile.v[i]) {
            bool ok = v == *profile.v[i];
            result.check(ok, "v_" + std::to_string(i) + " = " + std::to_string(v) + " (oracle " +
                                 std::to_string(*profile.v[i]) + ")");
            if (!ok && i == r - 2 && v == d - r + 2) {
                result.note("the quoted display value v_{r-2} = d-r is inconsistent with the "
                            "source's own recursion: extending v_i = u_{i+1}+a_{i+1}-c_{i+1} to "
                            "i = r-2 (u_r <= c_r = 0 forces u_r = 0) gives a_r = d-r+2, matching "
                            "the computed value, the Euler characteristic, and the degree-(r+1) "
                            "profile's v_{r-2} = 3");
            }
        }
    }
    // Middle-range relation v_i = u_{i+1} + a_{i+1} - c_{i+1} with computed u.
    for (int i = 2 * r - static_cast<int>(d) - 3; i <= r - 3; ++i) {
        long long v = rep.betti_x.at(i, 2);
        long long rel = rep.betti_x.at(i + 1, 1) + profile.a[i + 1] - profile.c[i + 1];
        result.check(v == rel,
                     "v_" + std::to_string(i) + " = u_{i+1} + a_{i+1} - c_{i+1} = " + std::to_string(rel));
    }
    // No Betti entries outside the three predicted columns.
    for (const auto& [key, val] : rep.betti_x.entries()) {
        auto [i, j] = key;
        if (i == 0 || val == 0) continue;
        if (j != 1 && j != 2 && j != 3) {
            result.check(false, "unexpected Betti entry at (i,j)=(" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
        }
    }
    result.seconds = sw.ms() / 1000.0;
    return result;
}

TargetResult run_type_eight_target(AnalysisCache& cache) {
    TargetResult result{"type-eight profile (degree r+1)"};
    Stopwatch sw;
    std::uint32_t prime = cache.options().primes.front();
    const SurfaceAnalysis& a = cache.get("proj-4-5", prime);
    const InvariantReport& rep = a.report;
    int r = 8;
    auto profile = oracles::type_eight_betti_profile(r);
    result.check(rep.depth == 2 && rep.reg_x == 4, "type-8 invariants: sreg 4, depth 2");
    for (int i = 1; i <= r; ++i) {
        long long u = rep.betti_x.at(i, 1);
        long long v = rep.betti_x.at(i, 2);
        if (profile.u[i]) {
            result.check(u == *profile.u[i], "u_" + std::to_string(i) + " = " + std::to_string(u) +
                                                 " (oracle " + std::to_string(*profile.u[i]) + ")");
        }
        if (profile.v[i]) {
            result.check(v == *profile.v[i], "v_" + std::to_string(i) + " = " + std::to_string(v) +
                                                 " (oracle " + std::to_string(*profile.v[i]) + ")");
        }
    }
    long long u_r3 = rep.betti_x.at(r - 3, 1);
    result.check(u_r3 == profile.u_r_minus_3_candidates.first ||
                     u_r3 == profile.u_r_minus_3_candidates.second,
                 "u_{r-3} = " + std::to_string(u_r3) + " in {0, r-2}");
    long long v_r4 = rep.betti_x.at(r - 4, 2);
    result.check(v_r4 == u_r3 + profile.v_r_minus_4_offset,
                 "v_{r-4} = u_{r-3} + offset = " + std::to_string(u_r3 + profile.v_r_minus_4_offset));
    result.seconds = sw.ms() / 1000.0;
    return result;
}

std::vector<TargetResult> run_selector(const std::string& selector, AnalysisCache& cache) {
    std::vector<TargetResult> out;
    auto add = [&](TargetResult r) { out.push_back(std::move(r)); };
    bool all = selector == "all";
    if (all || selector == "7.3") add(run_example_target("example-7.3", cache));
    if (all || selector == "7.4") {
        add(run_example_target("example-7.4-f1", cache));
        add(run_example_target("example-7.4-f2", cache));
        add(run_example_target("example-7.4-f3", cache));
    }
    if (all || selector == "7.5") {
        add(run_example_target("example-7.5-f1", cache));
        add(run_example_target("example-7.5-f2", cache));
    }
    if (all || selector == "reg-law") {
        for (const auto& g : golden_examples()) add(run_regularity_law_target(g.name, cache));
    }
    if (all || selector == "thm-4.11") {
        for (long long d : {6, 7, 8}) add(run_s111_divisor_target(d, cache));
    }
    if (all || selector == "lemma-4.10") {
        add(run_divisor_formula_target(1, 5, 6, cache));
        add(run_divisor_formula_target(1, 6, 9, cache));
        add(run_divisor_formula_target(2, 7, 10, cache));
    }
    if (all || selector == "constr-7.1") {
        add(run_census_target('B', cache));
        add(run_census_target('C', cache));
        add(run_census_target('E', cache));
    }
    if (all || selector == "planar-identities") {
        for (const auto& g : golden_examples()) add(run_planar_identities_target(g.name, cache));
    }
    if (all || selector == "thm-3.4c") add(run_depth_two_profile_target(cache));
    if (all || selector == "cor-3.5") add(run_type_eight_target(cache));
    if (out.empty()) throw Error("unknown verification selector: " + selector);
    return out;
}

} // namespace scrollreg

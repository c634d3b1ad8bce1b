#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "scrollreg/harness.hpp"

using namespace scrollreg;

namespace {

struct CommonFlags {
    std::uint32_t characteristic = PrimeField::kDefaultPrime;
    std::uint64_t seed = 1;
    double timeout = 600;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--char", flags.characteristic, "odd prime characteristic");
    cmd->add_option("--seed", flags.seed, "seed for all general-position choices");
    cmd->add_option("--timeout", flags.timeout, "per-stage timeout in seconds");
    cmd->add_option("--jobs", flags.jobs, "worker threads for independent subtasks");
}

CompiledVariety load_input(const std::string& arg, const CommonFlags& flags) {
    RecipeOptions opts;
    opts.characteristic = flags.characteristic;
    opts.seed = flags.seed;
    if (is_builtin_recipe(arg)) return compile_builtin(arg, opts);
    std::ifstream file(arg);
    if (file) {
        std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
        if (text.rfind("ring", 0) == 0 || text.find("\nring ") != std::string::npos ||
            text.rfind("#", 0) == 0) {
            IdealFile f = read_ideal_file(arg);
            CompiledVariety v;
            v.ideal = f.ideal;
            v.r = f.ideal->ring()->nvars() - 1;
            v.seed = flags.seed;
            v.description = arg;
            HilbertData h = hilbert_series(*f.ideal);
            v.dim = h.dimension - 1;
            v.degree = h.degree;
            return v;
        }
        return compile_recipe_text(text, opts);
    }
    // Treat the argument itself as inline recipe text ("scroll 1 1 1").
    return compile_recipe_text(arg, opts);
}

int cmd_construct(const std::string& input, const std::string& output, const CommonFlags& flags) {
    set_stage_deadline(Deadline(flags.timeout));
    CompiledVariety v = load_input(input, flags);
    clear_stage_deadline();
    std::map<std::string, std::string> provenance{
        {"recipe", v.description},
        {"seed", std::to_string(v.seed)},
        {"prime", std::to_string(flags.characteristic)},
        {"degree", std::to_string(v.degree)},
        {"dim", std::to_string(v.dim)},
    };
    if (output.empty() || output == "-") {
        std::cout << "# recipe: " << v.description << "\n# seed: " << v.seed << "\n";
        std::cout << "ring " << v.ideal->ring()->field().modulus();
        for (const auto& n : v.ideal->ring()->names()) std::cout << ' ' << n;
        std::cout << "\n";
        for (const auto& g : v.ideal->generators()) std::cout << g.str() << "\n";
    } else {
        write_ideal_file(output, *v.ideal, provenance);
        std::cout << "wrote " << v.ideal->generators().size() << " generators to " << output
                  << "\n";
    }
    return 0;
}

int cmd_invariants(const std::string& input, const CommonFlags& flags, bool with_plane,
                   const std::string& window, const std::string& json_path) {
    set_stage_deadline(Deadline(flags.timeout));
    CompiledVariety v = load_input(input, flags);
    if (with_plane && !v.extremal_plane_forms) {
        if (v.dim != 2) {
            std::cerr << "refusing --with-plane: input has dimension " << v.dim
                      << ", plane analysis needs a surface\n";
            return 2;
        }
        v.extremal_plane_forms = derive_extremal_plane(*v.ideal, v.degree, v.r);
        if (!v.extremal_plane_forms) {
            std::cerr << "refusing --with-plane: no extremal plane candidate found\n";
            return 2;
        }
    }
    InvariantOptions opts;
    opts.with_plane = with_plane;
    opts.jobs = flags.jobs;
    if (!window.empty()) {
        auto dots = window.find("..");
        if (dots == std::string::npos) throw Error("--h-window expects lo..hi");
        opts.h_lo = std::stoi(window.substr(0, dots));
        opts.h_hi = std::stoi(window.substr(dots + 2));
    }
    InvariantReport rep = compute_invariants(v, opts);
    clear_stage_deadline();
    std::cout << rep.to_text();
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << rep.to_json() << "\n";
        std::cout << "structured report written to " << json_path << "\n";
    } else {
        std::cout << rep.to_json() << "\n";
    }
    return rep.consistent ? 0 : 3;
}

int cmd_verify(const std::string& selector, const CommonFlags& flags,
               std::vector<std::uint32_t> primes, int a, int r, long long d, std::string census_case) {
    HarnessOptions opts;
    if (!primes.empty()) opts.primes = primes;
    else opts.primes = {flags.characteristic, PrimeField::kCrossCheckPrime};
    if (opts.primes.size() == 1) opts.primes.push_back(PrimeField::kCrossCheckPrime);
    opts.seed = flags.seed;
    opts.jobs = flags.jobs;
    opts.stage_timeout_seconds = flags.timeout;
    AnalysisCache cache(opts);

    std::vector<TargetResult> results;
    if (selector == "lemma-4.10" && r > 0) {
        results.push_back(run_divisor_formula_target(a, r, d, cache));
    } else if (selector == "constr-7.1" && !census_case.empty()) {
        results.push_back(run_census_target(census_case[0], cache));
    } else {
        results = run_selector(selector, cache);
    }
    bool all_pass = true;
    for (const auto& res : results) {
        std::cout << (res.passed ? "PASS " : "FAIL ") << res.name << "  ("
                  << res.seconds << " s)\n";
        for (const auto& line : res.details) std::cout << line << "\n";
        all_pass = all_pass && res.passed;
    }
    std::cout << (all_pass ? "ALL TARGETS PASSED" : "SOME TARGETS FAILED") << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of projected scroll surfaces: Groebner bases, Betti tables, "
                 "regularity, cohomology and secant censuses over GF(p)"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string input, output = "-";
    auto* construct = app.add_subcommand("construct", "compile a recipe into an ideal file");
    construct->add_option("recipe", input, "builtin name, recipe file, or inline recipe text")
        ->required();
    construct->add_option("-o,--output", output, "output ideal file ('-' for stdout)");
    add_common(construct, flags);

    std::string inv_input, h_window, json_path;
    bool with_plane = false;
    auto* invariants = app.add_subcommand("invariants", "compute the invariant report of an ideal");
    invariants->add_option("ideal", inv_input, "ideal file or builtin recipe name")->required();
    invariants->add_flag("--with-plane", with_plane,
                         "also analyze Y = X u F for the extremal plane F");
    invariants->add_option("--h-window", h_window, "cohomology degree window lo..hi");
    invariants->add_option("--json", json_path, "write the structured report to a file");
    add_common(invariants, flags);

    std::string selector, census_case;
    std::vector<std::uint32_t> primes;
    int opt_a = 0, opt_r = 0;
    long long opt_d = 0;
    auto* verify = app.add_subcommand("verify-paper",
                                      "reproduce the bundled reference tables and formulas");
    verify
        ->add_option("selector", selector,
                     "one of: 7.3, 7.4, 7.5, lemma-4.10, thm-4.11, thm-3.4c, cor-3.5, "
                     "constr-7.1, reg-law, planar-identities, all")
        ->required();
    verify->add_option("--prime", primes, "verification primes (repeatable)");
    verify->add_option("--a", opt_a, "parameter a for lemma-4.10");
    verify->add_option("--r", opt_r, "parameter r for lemma-4.10");
    verify->add_option("--d", opt_d, "parameter d for lemma-4.10");
    verify->add_option("--case", census_case, "census regime (B, C or E) for constr-7.1");
    add_common(verify, flags);

    CLI11_PARSE(app, argc, argv);
    try {
        if (construct->parsed()) return cmd_construct(input, output, flags);
        if (invariants->parsed()) {
            return cmd_invariants(inv_input, flags, with_plane, h_window, json_path);
        }
        if (verify->parsed()) {
            return cmd_verify(selector, flags, primes, opt_a, opt_r, opt_d, census_case);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

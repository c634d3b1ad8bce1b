#include "scrollreg/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace scrollreg {

IdealPtr union_with_plane(const GradedIdeal& x_ideal, const std::vector<Polynomial>& plane_forms) {
    GradedIdeal plane(x_ideal.ring(), plane_forms);
    return intersect(x_ideal, plane);
}

std::optional<std::vector<Polynomial>> derive_extremal_plane(const GradedIdeal& x_ideal,
                                                             long long d, int r) {
    int cap = static_cast<int>(d) - r + 2;
    if (cap < 1) return std::nullopt;
    GradedIdeal trunc = x_ideal.truncated(cap);
    if (trunc.generators().empty()) return std::nullopt;
    IdealPtr j = saturate_irrelevant(trunc);
    IdealPtr q = saturate_irrelevant(*colon_ideal(*j, x_ideal));
    std::vector<Polynomial> forms;
    for (const auto& g : q->groebner()->elements()) {
        if (g.degree() != 1) return std::nullopt;
        forms.push_back(g);
    }
    if (static_cast<int>(forms.size()) != r - 2) return std::nullopt;
    auto meet = ideal_sum(x_ideal, GradedIdeal(x_ideal.ring(), forms));
    HilbertData h = hilbert_series(*meet);
    if (h.dimension != 2 || h.degree != d - r + 3) return std::nullopt;
    return forms;
}

InvariantReport compute_invariants(const CompiledVariety& variety, const InvariantOptions& opts) {
    InvariantReport rep;
    rep.description = variety.description;
    rep.prime = variety.ideal->ring()->field().modulus();
    rep.seed = variety.seed;
    rep.seeds_used = variety.seeds_used;
    rep.r = variety.r;
    rep.dim = variety.dim;
    rep.degree = variety.degree;
    rep.caveat =
        "computed over GF(p); Betti tables of some surfaces vary with the characteristic, "
        "so cross-prime agreement is evidence, not proof, of the characteristic-zero table";

    Stopwatch total;
    {
        Stopwatch sw;
        FreeResolution res = minimal_free_resolution(*variety.ideal);
        rep.stage_ms["resolution_x"] = sw.ms();
        rep.betti_x = res.betti();
        RegDepth rd = reg_depth_from_betti(rep.betti_x);
        rep.reg_x = rd.reg_scheme;
        rep.pd = rd.pd;
        rep.depth = rd.depth;

        Stopwatch sw2;
        CohomologySolver coh(res);
        int hi = std::max(opts.h_hi, rd.reg_module + 1);
        rep.h1 = coh.window(1, opts.h_lo, hi, opts.jobs);
        rep.h2 = coh.window(2, opts.h_lo, hi, opts.jobs);
        rep.normality = coh.index_of_normality(opts.jobs);
        try {
            rep.e_x = coh.stable_h2();
        } catch (const WindowInconclusiveError&) {
            rep.e_x = std::nullopt; // h^2 not constant over n = 0,-1,-2
        }
        rep.stage_ms["cohomology_x"] = sw2.ms();

        // Internal consistency: the regularity read off the Betti table must
        // match the cohomology vanishing pattern (reg = max over i of end(h^i) + i).
        int m = rd.reg_module;
        bool attained = false;
        std::ostringstream note;
        for (int i = 1; i <= 3; ++i) {
            if (coh.h(i, m - i) != 0) attained = true;
            if (coh.h(i, m - i + 1) != 0) {
                rep.consistent = false;
                note << "h^" << i << " nonzero above the Betti regularity; ";
            }
        }
        if (!attained) {
            rep.consistent = false;
            note << "no h^i attains the Betti regularity; ";
        }
        if (rep.depth != rep.r + 1 - rep.pd) {
            rep.consistent = false;
            note << "Auslander-Buchsbaum mismatch; ";
        }
        rep.consistency_note = note.str();
    }

    if (opts.with_plane && variety.extremal_plane_forms) {
        Stopwatch sw;
        IdealPtr y = union_with_plane(*variety.ideal, *variety.extremal_plane_forms);
        rep.stage_ms["intersection_y"] = sw.ms();
        Stopwatch sw2;
        FreeResolution res_y = minimal_free_resolution(*y);
        rep.stage_ms["resolution_y"] = sw2.ms();
        rep.betti_y = res_y.betti();
        RegDepth rdy = reg_depth_from_betti(*rep.betti_y);
        rep.depth_y = rdy.depth;
        rep.tau = std::make_pair(rep.depth, rdy.depth);
        Stopwatch sw3;
        CohomologySolver coh_y(res_y);
        int hi = std::max(opts.h_hi, rdy.reg_module + 1);
        rep.h2_y = coh_y.window(2, opts.h_lo, hi, opts.jobs);
        rep.stage_ms["cohomology_y"] = sw3.ms();
    }
    rep.stage_ms["total"] = total.ms();
    return rep;
}

namespace {

nlohmann::json betti_to_json(const BettiTable& b) {
    nlohmann::json triples = nlohmann::json::array();
    for (const auto& [key, val] : b.entries()) {
        if (val != 0) triples.push_back({key.first, key.second, val});
    }
    return triples;
}

nlohmann::json window_to_json(const CohomologyTable& t) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [n, v] : t.dims) out[std::to_string(n)] = v;
    return out;
}

} // namespace

std::string InvariantReport::to_json() const {
    nlohmann::json j;
    j["description"] = description;
    j["prime"] = prime;
    j["seed"] = seed;
    j["seeds_used"] = seeds_used;
    j["r"] = r;
    j["dim"] = dim;
    j["degree"] = degree;
    j["reg"] = reg_x;
    j["pd"] = pd;
    j["depth"] = depth;
    j["normality_index"] = normality ? nlohmann::json(*normality) : nlohmann::json("-inf");
    j["e"] = e_x ? nlohmann::json(*e_x) : nlohmann::json("inconclusive");
    j["betti_x"] = betti_to_json(betti_x);
    j["h1"] = window_to_json(h1);
    j["h2"] = window_to_json(h2);
    if (betti_y) j["betti_y"] = betti_to_json(*betti_y);
    if (depth_y) j["depth_y"] = *depth_y;
    if (tau) j["tau"] = {tau->first, tau->second};
    if (h2_y) j["h2_y"] = window_to_json(*h2_y);
    j["stage_ms"] = stage_ms;
    j["consistent"] = consistent;
    if (!consistency_note.empty()) j["consistency_note"] = consistency_note;
    j["caveat"] = caveat;
    return j.dump(2);
}

std::string InvariantReport::to_text() const {
    std::ostringstream out;
    out << "== " << description << " ==\n";
    out << "prime " << prime << ", seed " << seed << "\n";
    out << "r = " << r << ", dim = " << dim << ", degree = " << degree << "\n";
    out << "reg(X) = " << reg_x << ", pd = " << pd << ", depth = " << depth << "\n";
    out << "N(X) = " << (normality ? std::to_string(*normality) : std::string("-inf"))
        << ", e(X) = " << (e_x ? std::to_string(*e_x) : std::string("inconclusive")) << "\n";
    if (tau) out << "tau(X) = (" << tau->first << "," << tau->second << ")\n";
    out << "Betti table of X (rows j, columns i):\n" << betti_x.grid();
    out << "triples (i j beta):\n" << betti_x.triples();
    if (betti_y) out << "Betti table of Y = X u F:\n" << betti_y->grid();
    out << "h^1 window:";
    for (const auto& [n, v] : h1.dims) out << " " << n << ":" << v;
    out << "\nh^2 window:";
    for (const auto& [n, v] : h2.dims) out << " " << n << ":" << v;
    out << "\n";
    if (!consistent) out << "WARNING: consistency checks failed: " << consistency_note << "\n";
    return out.str();
}

void write_ideal_file(const std::string& path, const GradedIdeal& ideal,
                      const std::map<std::string, std::string>& provenance) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    for (const auto& [k, v] : provenance) out << "# " << k << ": " << v << "\n";
    out << "ring " << ideal.ring()->field().modulus();
    for (const auto& n : ideal.ring()->names()) out << ' ' << n;
    out << "\n";
    for (const auto& g : ideal.generators()) out << g.str() << "\n";
}

IdealFile read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    IdealFile out;
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::string line;
    while (std::getline(in, line)) {
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (stripped[0] == '#') {
            auto colon = stripped.find(':');
            if (colon != std::string::npos) {
                out.provenance[trim(stripped.substr(1, colon - 1))] = trim(stripped.substr(colon + 1));
            }
            continue;
        }
        if (stripped.rfind("ring", 0) == 0) {
            std::istringstream ls(stripped.substr(4));
            std::uint32_t p;
            ls >> p;
            std::vector<std::string> names;
            std::string n;
            while (ls >> n) names.push_back(n);
            ring = Ring::make_named(p, names);
            continue;
        }
        if (!ring) throw Error("ideal file must start with a ring line");
        gens.push_back(Polynomial::parse(ring, stripped));
    }
    if (!ring) throw Error("ideal file has no ring line");
    out.ideal = make_ideal(ring, std::move(gens));
    return out;
}

} // namespace scrollreg

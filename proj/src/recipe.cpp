#include "scrollreg/recipe.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace scrollreg {

namespace {

/// Hilbert-based verification shared by all compilers.
void verify_surface(CompiledVariety& out, int expected_dim, long long expected_degree) {
    HilbertData h = hilbert_series(*out.ideal);
    out.dim = h.dimension - 1;
    out.degree = h.degree;
    if (expected_dim >= 0 && out.dim != expected_dim) {
        throw RecipeError("compiled variety has dimension " + std::to_string(out.dim) +
                          ", expected " + std::to_string(expected_dim));
    }
    if (expected_degree >= 0 && out.degree != expected_degree) {
        throw RecipeError("compiled variety has degree " + std::to_string(out.degree) +
                          ", expected " + std::to_string(expected_degree));
    }
    for (const auto& g : out.ideal->generators()) {
        if (g.degree() == 1) throw RecipeError("compiled variety is degenerate (linear form in ideal)");
    }
}

std::vector<std::string> infer_param_names(const std::string& text) {
    // Single identifiers: a letter followed by digits; dedupe and sort.
    std::vector<std::string> names;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            names.push_back(text.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

Polynomial random_binary_form(const RingPtr& st, int degree, Rng& rng) {
    std::vector<Term> terms;
    for (int j = 0; j <= degree; ++j) {
        std::uint32_t c = rng.uniform(st->field().modulus());
        if (c != 0) {
            Monomial m(2);
            m.set(0, degree - j);
            m.set(1, j);
            terms.push_back({m, c});
        }
    }
    return Polynomial::collect(st, std::move(terms));
}

} // namespace

CompiledVariety build_xf_surface(int a, int b, const std::string& f_text,
                                 const RecipeOptions& opts) {
    if (a < 3 || b < a) throw RecipeError("need 3 <= a <= b");
    RingPtr pring = Ring::make_named(opts.characteristic, {"s", "t", "u", "v"});
    Polynomial f = Polynomial::parse(pring, f_text);
    if (f.is_zero() || f.degree() != b || !f.is_homogeneous()) {
        throw RecipeError("f must be homogeneous of degree b");
    }
    Polynomial s = Polynomial::variable(pring, 0);
    Polynomial t = Polynomial::variable(pring, 1);
    Polynomial u = Polynomial::variable(pring, 2);
    Polynomial v = Polynomial::variable(pring, 3);
    std::vector<Polynomial> forms;
    for (int j = 0; j <= a; ++j) {
        Polynomial mono = u;
        for (int q = 0; q < a - j; ++q) mono = mono * s;
        for (int q = 0; q < j; ++q) mono = mono * t;
        forms.push_back(mono);
    }
    Polynomial sb = v, tb = v;
    for (int q = 0; q < b; ++q) {
        sb = sb * s;
        tb = tb * t;
    }
    forms.push_back(sb);
    forms.push_back(v * f);
    forms.push_back(tb);

    CompiledVariety out;
    out.ideal = parametrized_image_ideal(forms, pring).ideal;
    out.r = a + 3;
    out.seed = opts.seed;
    out.description = "surface X_f, (a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
                      "), f=" + f_text;
    const RingPtr& xr = out.ideal->ring();
    std::vector<Polynomial> plane;
    for (int i = 0; i <= a; ++i) plane.push_back(Polynomial::variable(xr, i));
    out.extremal_plane_forms = plane;
    verify_surface(out, 2, a + b);
    return out;
}

CompiledVariety build_xf_by_projection(int a, int b, const std::string& f_text,
                                       const RecipeOptions& opts) {
    IdealPtr scroll = scroll_ideal({a, b}, opts.characteristic);
    const RingPtr& ring = scroll->ring();
    RingPtr st = Ring::make_named(opts.characteristic, {"s", "t"});
    Polynomial f = Polynomial::parse(st, f_text);
    // Map coordinates: the degree-a block passes through; the degree-b block
    // (coordinates a+1 .. a+b+1, dual to s^b, s^{b-1}t, ..., t^b) maps by the
    // rows (s^b)*, f*, (t^b)*.
    std::vector<Polynomial> center_forms;
    for (int i = 0; i <= a; ++i) center_forms.push_back(Polynomial::variable(ring, i));
    std::vector<std::uint32_t> frow(b + 1, 0);
    for (const auto& term : f.terms()) frow[term.mono[1]] = term.coeff; // index by t-power
    center_forms.push_back(Polynomial::variable(ring, a + 1)); // s^b coefficient slot
    {
        std::vector<Term> terms;
        for (int j = 0; j <= b; ++j) {
            if (frow[j] != 0) {
                terms.push_back({Monomial::variable(ring->nvars(), a + 1 + j), frow[j]});
            }
        }
        center_forms.push_back(Polynomial::collect(ring, std::move(terms)));
    }
    center_forms.push_back(Polynomial::variable(ring, a + 1 + b)); // t^b slot

    CompiledVariety out;
    out.ideal = project(*scroll, center_forms, "x");
    out.r = a + 3;
    out.seed = opts.seed;
    out.description = "surface X_f via projection of S(" + std::to_string(a) + "," +
                      std::to_string(b) + ")";
    verify_surface(out, 2, a + b);
    return out;
}

CompiledVariety build_divisor_surface(const std::vector<int>& scroll, long long d,
                                      const std::vector<std::string>& section_spec,
                                      const RecipeOptions& opts) {
    long long deg_scroll = 0;
    for (int a : scroll) deg_scroll += a;
    long long k = d - deg_scroll;
    if (k < 0) throw RecipeError("degree too small for this scroll");
    RingPtr st = Ring::make_named(opts.characteristic, {"s", "t"});

    CompiledVariety out;
    out.seed = opts.seed;
    out.scroll_exponents = scroll;
    out.r = 0;
    for (int a : scroll) out.r += a + 1;
    out.r -= 1;
    std::ostringstream desc;
    desc << "divisor in |H+" << k << "F| on S(";
    for (std::size_t i = 0; i < scroll.size(); ++i) desc << (i ? "," : "") << scroll[i];
    desc << ")";
    out.description = desc.str();

    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
        Rng rng = Rng(opts.seed).fork(attempt);
        out.seeds_used.push_back(opts.seed + attempt);
        std::vector<Polynomial> sections;
        for (std::size_t i = 0; i < scroll.size(); ++i) {
            int deg = scroll[i] + static_cast<int>(k);
            std::string spec = i < section_spec.size() ? section_spec[i] : "random";
            if (spec == "random") {
                sections.push_back(random_binary_form(st, deg, rng));
            } else if (spec == "zero") {
                sections.push_back(Polynomial::zero(st));
            } else {
                sections.push_back(Polynomial::parse(st, spec));
            }
        }
        try {
            out.ideal = divisor_on_scroll_ideal(scroll, static_cast<int>(k), sections);
            verify_surface(out, static_cast<int>(scroll.size()) - 1, d);
            return out;
        } catch (const RecipeError&) {
            if (attempt + 1 == opts.max_retries) throw;
        }
    }
    throw RecipeError("divisor recipe failed for all seeds");
}

CompiledVariety build_projection_surface(int a, int b, const RecipeOptions& opts) {
    if (a < 3 || b < a) throw RecipeError("need 3 <= a <= b");
    IdealPtr scroll = scroll_ideal({a, b}, opts.characteristic);
    const RingPtr& ring = scroll->ring();
    const PrimeField& F = ring->field();

    CompiledVariety out;
    out.seed = opts.seed;
    out.r = b + 3;
    out.description =
        "projection of S(" + std::to_string(a) + "," + std::to_string(b) + ") from P^" +
        std::to_string(a - 3) + " in the span of the degree-" + std::to_string(a) + " block";

    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
        Rng rng = Rng(opts.seed).fork(1000 + attempt);
        out.seeds_used.push_back(opts.seed + attempt);
        // Center: cut the span of the first block by 3 random forms in x_0..x_a.
        std::vector<Polynomial> center_forms;
        for (int row = 0; row < 3; ++row) {
            std::vector<Term> terms;
            for (int i = 0; i <= a; ++i) {
                std::uint32_t c = rng.uniform(F.modulus());
                if (c != 0) terms.push_back({Monomial::variable(ring->nvars(), i), c});
            }
            center_forms.push_back(Polynomial::collect(ring, std::move(terms)));
        }
        for (int i = a + 1; i < ring->nvars(); ++i) {
            center_forms.push_back(Polynomial::variable(ring, i));
        }
        try {
            out.ideal = project(*scroll, center_forms, "x");
            const RingPtr& xr = out.ideal->ring();
            std::vector<Polynomial> plane;
            for (int i = 3; i < xr->nvars(); ++i) plane.push_back(Polynomial::variable(xr, i));
            out.extremal_plane_forms = plane;
            verify_surface(out, 2, a + b);
            return out;
        } catch (const Error&) {
            if (attempt + 1 == opts.max_retries) throw;
        }
    }
    throw RecipeError("projection recipe failed for all seeds");
}

namespace {

const std::map<std::string, std::pair<std::pair<int, int>, std::string>> kXfExamples = {
    {"example-7.3", {{3, 5}, "s^4*t+s^3*t^2+s^2*t^3+s*t^4"}},
    {"example-7.4-f1", {{3, 8}, "s^7*t+s^6*t^2+s^5*t^3+s^4*t^4+s^3*t^5+s^2*t^6+s*t^7"}},
    {"example-7.4-f2", {{3, 8}, "s^7*t+s^6*t^2+s^5*t^3+s^4*t^4+s^3*t^5+s^2*t^6"}},
    {"example-7.4-f3", {{3, 8}, "s^7*t+s^6*t^2+s^5*t^3+s^4*t^4"}},
    {"example-7.5-f1", {{3, 9}, "s^8*t+s^7*t^2+s^6*t^3+s^5*t^4+s^4*t^5+s^3*t^6+s^2*t^7+s*t^8"}},
    {"example-7.5-f2", {{3, 9}, "s^8*t+s^7*t^2+s^6*t^3+s^5*t^4+s^4*t^5+s^3*t^6+s^2*t^7"}},
};

} // namespace

bool is_builtin_recipe(const std::string& name) {
    return kXfExamples.count(name) > 0 || name.rfind("divisor-s111-d", 0) == 0 ||
           name.rfind("divisor-1-", 0) == 0 || name.rfind("proj-", 0) == 0;
}

std::vector<std::string> builtin_recipe_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : kXfExamples) names.push_back(k);
    names.push_back("divisor-s111-d<degree>");
    names.push_back("proj-<a>-<b>");
    return names;
}

CompiledVariety compile_builtin(const std::string& name, const RecipeOptions& opts) {
    auto it = kXfExamples.find(name);
    if (it != kXfExamples.end()) {
        CompiledVariety out =
            build_xf_surface(it->second.first.first, it->second.first.second, it->second.second, opts);
        out.description = name;
        return out;
    }
    if (name.rfind("divisor-s111-d", 0) == 0) {
        long long d = std::stoll(name.substr(std::string("divisor-s111-d").size()));
        return build_divisor_surface({1, 1, 1}, d, {"random", "random", "random"}, opts);
    }
    if (name.rfind("divisor-1-", 0) == 0) {
        // divisor-1-<a>-<b>-d<d>: random divisor surface on S(1,a,b).
        auto parts = split(name.substr(std::string("divisor-1-").size()), '-');
        if (parts.size() != 3 || parts[2].empty() || parts[2][0] != 'd') {
            throw RecipeError("expected divisor-1-<a>-<b>-d<degree>");
        }
        int a = std::stoi(parts[0]);
        int b = std::stoi(parts[1]);
        long long d = std::stoll(parts[2].substr(1));
        return build_divisor_surface({1, a, b}, d, {"random", "random", "random"}, opts);
    }
    if (name.rfind("proj-", 0) == 0) {
        auto parts = split(name.substr(5), '-');
        if (parts.size() != 2) throw RecipeError("expected proj-<a>-<b>");
        return build_projection_surface(std::stoi(parts[0]), std::stoi(parts[1]), opts);
    }
    throw RecipeError("unknown builtin recipe: " + name);
}

CompiledVariety compile_recipe_text(const std::string& text, const RecipeOptions& opts) {
    std::istringstream in(text);
    std::string line;
    CompiledVariety out;
    out.seed = opts.seed;
    bool have_ideal = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::istringstream ls(stripped);
        std::string op;
        ls >> op;
        try {
            if (op == "builtin") {
                std::string name;
                ls >> name;
                out = compile_builtin(name, opts);
                have_ideal = true;
            } else if (op == "scroll") {
                std::vector<int> exps;
                int a;
                while (ls >> a) exps.push_back(a);
                out = CompiledVariety{};
                out.seed = opts.seed;
                out.ideal = scroll_ideal(exps, opts.characteristic);
                out.scroll_exponents = exps;
                out.r = out.ideal->ring()->nvars() - 1;
                out.description = stripped;
                HilbertData h = hilbert_series(*out.ideal);
                out.dim = h.dimension - 1;
                out.degree = h.degree;
                have_ideal = true;
            } else if (op == "divisor") {
                if (!have_ideal || !out.scroll_exponents) {
                    throw RecipeError("divisor needs a preceding scroll line");
                }
                std::string cls, kw;
                ls >> cls >> kw;
                if (kw != "section") throw RecipeError("expected: divisor H+<k>F section ...");
                if (cls.rfind("H+", 0) != 0 || cls.back() != 'F') {
                    throw RecipeError("divisor class must have the shape H+<k>F");
                }
                int k = std::stoi(cls.substr(2, cls.size() - 3));
                std::string rest;
                std::getline(ls, rest);
                std::vector<std::string> specs;
                for (auto& piece : split(rest, ',')) {
                    std::string sp = trim(piece);
                    auto eq = sp.find('=');
                    if (eq != std::string::npos && sp.find_first_of("^*()") > eq) {
                        sp = trim(sp.substr(eq + 1));
                    }
                    specs.push_back(sp);
                }
                long long deg_scroll = 0;
                for (int a : *out.scroll_exponents) deg_scroll += a;
                auto scroll_exps = *out.scroll_exponents;
                out = build_divisor_surface(scroll_exps, deg_scroll + k, specs, opts);
            } else if (op == "param") {
                std::string rest;
                std::getline(ls, rest);
                std::string names_part, forms_part = rest;
                auto colon = rest.find(':');
                if (colon != std::string::npos) {
                    names_part = rest.substr(0, colon);
                    forms_part = rest.substr(colon + 1);
                }
                std::vector<std::string> names;
                if (!names_part.empty()) {
                    std::istringstream ns(names_part);
                    std::string n;
                    while (ns >> n) names.push_back(n);
                } else {
                    names = infer_param_names(forms_part);
                }
                RingPtr pring = Ring::make_named(opts.characteristic, names);
                std::vector<Polynomial> forms;
                for (auto& piece : split(forms_part, ',')) {
                    forms.push_back(Polynomial::parse(pring, trim(piece)));
                }
                out = CompiledVariety{};
                out.seed = opts.seed;
                auto res = parametrized_image_ideal(forms, pring);
                out.ideal = res.ideal;
                out.r = static_cast<int>(forms.size()) - 1;
                out.description = stripped;
                HilbertData h = hilbert_series(*out.ideal);
                out.dim = h.dimension - 1;
                out.degree = h.degree;
                have_ideal = true;
            } else if (op == "project") {
                if (!have_ideal) throw RecipeError("project needs a preceding construction");
                std::string kw;
                ls >> kw;
                if (kw != "center") throw RecipeError("expected: project center ...");
                std::string rest;
                std::getline(ls, rest);
                rest = trim(rest);
                const RingPtr& ring = out.ideal->ring();
                std::vector<Polynomial> center_forms;
                if (rest.rfind("random", 0) == 0) {
                    // random dim=<k> span=<v,...> (span optional = whole space)
                    int dim = -1;
                    std::vector<int> span_vars;
                    std::istringstream rs(rest.substr(6));
                    std::string tok;
                    while (rs >> tok) {
                        if (tok.rfind("dim=", 0) == 0) dim = std::stoi(tok.substr(4));
                        if (tok.rfind("span=", 0) == 0) {
                            for (auto& v : split(tok.substr(5), ',')) {
                                int idx = ring->var_index(trim(v));
                                if (idx < 0) throw RecipeError("unknown variable in span: " + v);
                                span_vars.push_back(idx);
                            }
                        }
                    }
                    if (dim < 0) throw RecipeError("random center needs dim=<k>");
                    if (span_vars.empty()) {
                        for (int i = 0; i < ring->nvars(); ++i) span_vars.push_back(i);
                    }
                    Rng rng(opts.seed);
                    // Cut the span down to dimension `dim` by random forms in
                    // the span variables; coordinates outside the span come first.
                    int cuts = static_cast<int>(span_vars.size()) - 1 - dim;
                    for (int c = 0; c < cuts; ++c) {
                        std::vector<Term> terms;
                        for (int v : span_vars) {
                            std::uint32_t coef = rng.uniform(ring->field().modulus());
                            if (coef != 0) {
                                terms.push_back({Monomial::variable(ring->nvars(), v), coef});
                            }
                        }
                        center_forms.push_back(Polynomial::collect(ring, std::move(terms)));
                    }
                    std::vector<bool> in_span(ring->nvars(), false);
                    for (int v : span_vars) in_span[v] = true;
                    for (int i = 0; i < ring->nvars(); ++i) {
                        if (!in_span[i]) center_forms.push_back(Polynomial::variable(ring, i));
                    }
                } else {
                    for (auto& piece : split(rest, ';')) {
                        std::string sp = trim(piece);
                        if (!sp.empty()) center_forms.push_back(Polynomial::parse(ring, sp));
                    }
                }
                IdealPtr image = project(*out.ideal, center_forms, "x");
                CompiledVariety next;
                next.seed = opts.seed;
                next.ideal = image;
                next.r = image->ring()->nvars() - 1;
                next.description = out.description + " | " + stripped;
                HilbertData h = hilbert_series(*image);
                next.dim = h.dimension - 1;
                next.degree = h.degree;
                out = next;
            } else {
                throw RecipeError("unknown recipe directive: " + op);
            }
        } catch (const Error& e) {
            throw RecipeError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_ideal && !out.ideal) throw RecipeError("recipe does not produce an ideal");
    return out;
}

} // namespace scrollreg

#include "scrollreg/geometry.hpp"

#include <algorithm>

#include "scrollreg/free_module.hpp"
#include "scrollreg/linalg.hpp"

namespace scrollreg {

LinearSubspace::LinearSubspace(RingPtr ring, std::vector<Polynomial> forms)
    : ring_(std::move(ring)), forms_(std::move(forms)) {
    Matrix coeffs(0, ring_->nvars());
    for (const auto& f : forms_) {
        if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous()) {
            throw DimensionError("linear subspace requires independent linear forms");
        }
        std::vector<std::uint32_t> row(ring_->nvars(), 0);
        for (const auto& t : f.terms()) {
            for (int i = 0; i < ring_->nvars(); ++i) {
                if (t.mono[i] == 1) row[i] = t.coeff;
            }
        }
        coeffs.append_row(row);
    }
    if (coeffs.rank(ring_->field()) != forms_.size()) {
        throw DimensionError("linear forms are not independent");
    }
}

IdealPtr LinearSubspace::ideal() const { return make_ideal(ring_, forms_); }

std::vector<std::vector<std::uint32_t>> LinearSubspace::spanning_points() const {
    Matrix coeffs(0, ring_->nvars());
    for (const auto& f : forms_) {
        std::vector<std::uint32_t> row(ring_->nvars(), 0);
        for (const auto& t : f.terms()) {
            for (int i = 0; i < ring_->nvars(); ++i) {
                if (t.mono[i] == 1) row[i] = t.coeff;
            }
        }
        coeffs.append_row(row);
    }
    Matrix ns = coeffs.nullspace(ring_->field());
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        out.emplace_back(ns.row(r), ns.row(r) + ns.cols());
    }
    return out;
}

LinearSubspace LinearSubspace::line_through(const RingPtr& ring,
                                            const std::vector<std::uint32_t>& p,
                                            const std::vector<std::uint32_t>& q) {
    // Forms cutting the line = nullspace of the 2 x n matrix with rows p, q.
    Matrix pts(0, ring->nvars());
    pts.append_row(p);
    pts.append_row(q);
    if (pts.rank(ring->field()) != 2) throw DimensionError("line through equal points");
    Matrix ns = pts.nullspace(ring->field());
    std::vector<Polynomial> forms;
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        std::vector<Term> terms;
        for (int i = 0; i < ring->nvars(); ++i) {
            if (ns.at(r, i) != 0) terms.push_back({Monomial::variable(ring->nvars(), i), ns.at(r, i)});
        }
        forms.push_back(Polynomial::collect(ring, std::move(terms)));
    }
    return LinearSubspace(ring, std::move(forms));
}

LinearSubspace LinearSubspace::random(const RingPtr& ring, int dim, Rng& rng) {
    int codim = ring->nvars() - 1 - dim;
    std::vector<Polynomial> forms;
    for (int k = 0; k < codim; ++k) {
        std::vector<Term> terms;
        for (int i = 0; i < ring->nvars(); ++i) {
            std::uint32_t c = rng.uniform(ring->field().modulus());
            if (c != 0) terms.push_back({Monomial::variable(ring->nvars(), i), c});
        }
        forms.push_back(Polynomial::collect(ring, std::move(terms)));
    }
    return LinearSubspace(ring, std::move(forms)); // throws if degenerate; caller retries
}

IdealPtr scroll_ideal(const std::vector<int>& exponents, std::uint32_t characteristic) {
    int total = 0;
    bool all_zero = true;
    for (int a : exponents) {
        if (a < 0) throw DimensionError("scroll exponents must be nonnegative");
        if (a > 0) all_zero = false;
        total += a + 1;
    }
    if (exponents.empty() || all_zero) {
        throw DimensionError("degenerate scroll: all exponents zero");
    }
    RingPtr ring = Ring::make(characteristic, total);
    // Hankel blocks: block i occupies coordinates [off, off + a_i] and
    // contributes columns (x_off..x_{off+a_i-1}; x_{off+1}..x_{off+a_i}).
    std::vector<std::pair<int, int>> columns; // (top index, bottom index)
    int off = 0;
    for (int a : exponents) {
        for (int j = 0; j < a; ++j) columns.push_back({off + j, off + j + 1});
        off += a + 1;
    }
    std::vector<Polynomial> minors;
    for (std::size_t u = 0; u < columns.size(); ++u) {
        for (std::size_t v = u + 1; v < columns.size(); ++v) {
            Polynomial m = Polynomial::variable(ring, columns[u].first) *
                               Polynomial::variable(ring, columns[v].second) -
                           Polynomial::variable(ring, columns[u].second) *
                               Polynomial::variable(ring, columns[v].first);
            if (!m.is_zero()) minors.push_back(m);
        }
    }
    return make_ideal(ring, std::move(minors));
}

ImplicitizationResult parametrized_image_ideal(const std::vector<Polynomial>& forms,
                                               const RingPtr& param_ring,
                                               const std::string& var_stem) {
    if (forms.size() < 3) throw DimensionError("parametrization needs at least 3 forms");
    int np = param_ring->nvars();
    int nx = static_cast<int>(forms.size());
    std::vector<std::string> names = param_ring->names();
    for (int i = 0; i < nx; ++i) names.push_back(var_stem + std::to_string(i));
    RingPtr big = Ring::make_named(param_ring->field().modulus(), names, TermOrder::block(np));

    std::vector<int> param_map(np);
    for (int i = 0; i < np; ++i) param_map[i] = i;
    std::vector<Polynomial> gens;
    gens.reserve(nx);
    for (int i = 0; i < nx; ++i) {
        gens.push_back(Polynomial::variable(big, np + i) - forms[i].embedded(big, param_map));
    }
    std::vector<Polynomial> gb = buchberger(std::move(gens));

    RingPtr xring = Ring::make(param_ring->field().modulus(), nx, var_stem);
    std::vector<int> keep(nx);
    for (int i = 0; i < nx; ++i) keep[i] = np + i;
    std::vector<Polynomial> image;
    ImplicitizationResult out;
    for (const auto& g : gb) {
        bool param_free = true;
        for (const auto& t : g.terms()) {
            for (int i = 0; i < np && param_free; ++i) {
                if (t.mono[i] != 0) param_free = false;
            }
            if (!param_free) break;
        }
        if (!param_free) continue;
        Polynomial h = g.extracted(xring, keep);
        if (h.degree() == 1) out.degenerate = true;
        image.push_back(std::move(h));
    }
    // The eliminated basis generates but is rarely minimal; prune to a
    // minimal homogeneous generating set for readable output.
    GradedIdeal raw(xring, std::move(image));
    out.ideal = make_ideal(xring, raw.minimal_generators());
    return out;
}

namespace {

/// Univariate coefficient view of a binary form: coefficients of s^j; also
/// reports divisibility by t (a root at infinity).
struct BinaryForm {
    std::vector<std::uint32_t> coeff; // index = power of s
    bool divisible_by_t = false;
};

BinaryForm binary_view(const Polynomial& g) {
    BinaryForm out;
    int d = g.degree();
    out.coeff.assign(d + 1, 0);
    int max_s = 0;
    for (const auto& t : g.terms()) {
        out.coeff[t.mono[0]] = t.coeff;
        max_s = std::max(max_s, t.mono[0]);
    }
    out.coeff.resize(max_s + 1);
    out.divisible_by_t = max_s < d;
    return out;
}

std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b, const PrimeField& F) {
    while (a.size() >= b.size() && !a.empty()) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        std::uint32_t q = F.div(a.back(), b.back());
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

/// Degree of gcd of the dehomogenized sections, plus the common t-root flag.
bool sections_share_a_zero(const std::vector<Polynomial>& sections, const PrimeField& F) {
    std::vector<std::uint32_t> g;
    bool all_t = true;
    for (const auto& s : sections) {
        if (s.is_zero()) continue;
        BinaryForm bf = binary_view(s);
        all_t = all_t && bf.divisible_by_t;
        if (g.empty()) {
            g = bf.coeff;
        } else {
            std::vector<std::uint32_t> a = g, b = bf.coeff;
            while (!b.empty()) {
                auto r = poly_mod(a, b, F);
                a = std::move(b);
                b = std::move(r);
            }
            g = std::move(a);
        }
    }
    if (g.empty()) return true; // all sections zero on the ruling
    return g.size() > 1 || all_t;
}

} // namespace

IdealPtr divisor_on_scroll_ideal(const std::vector<int>& exponents, int k,
                                 const std::vector<Polynomial>& sections) {
    if (k < 0) throw RecipeError("divisor class H + kF needs k >= 0");
    if (sections.empty() || sections.size() != exponents.size()) {
        throw RecipeError("need one section form per scroll block");
    }
    const RingPtr st = sections[0].ring();
    const PrimeField& F = st->field();
    bool all_zero = true;
    for (std::size_t i = 0; i < sections.size(); ++i) {
        if (sections[i].is_zero()) continue;
        all_zero = false;
        if (sections[i].degree() != exponents[i] + k || !sections[i].is_homogeneous()) {
            throw RecipeError("section form " + std::to_string(i) + " must be homogeneous of degree " +
                              std::to_string(exponents[i] + k));
        }
    }
    if (all_zero) throw RecipeError("section is identically zero");
    if (sections_share_a_zero(sections, F)) {
        throw NonReducedRecipeError("section vanishes on a ruling component");
    }

    // Kernel of (g_0 ... g_{m-1}): free of rank m-1; its generators
    // parametrize the fibers of the divisor.
    std::vector<ModulePoly> kernel_gens = minimalize_module_generators(syzygies(sections));
    std::size_t m = sections.size();
    if (kernel_gens.size() != m - 1) {
        throw RecipeError("section kernel is not free of the expected rank");
    }

    // Parameter ring: s, t and one auxiliary coordinate per kernel generator.
    std::vector<std::string> pnames = st->names();
    for (std::size_t jj = 0; jj < kernel_gens.size(); ++jj) pnames.push_back("@u" + std::to_string(jj));
    RingPtr pring = Ring::make_named(F.modulus(), pnames);
    std::vector<int> stmap{0, 1};

    // u_i(s,t,aux) = sum_j aux_j * (kernel_j)_i.
    std::vector<Polynomial> fiber(m, Polynomial::zero(pring));
    for (std::size_t jj = 0; jj < kernel_gens.size(); ++jj) {
        Polynomial aux = Polynomial::variable(pring, 2 + static_cast<int>(jj));
        for (std::size_t i = 0; i < m; ++i) {
            Polynomial ci = kernel_gens[jj].component(static_cast<std::uint32_t>(i), st);
            if (!ci.is_zero()) fiber[i] = fiber[i] + aux * ci.embedded(pring, stmap);
        }
    }

    Polynomial s = Polynomial::variable(pring, 0);
    Polynomial t = Polynomial::variable(pring, 1);
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < m; ++i) {
        for (int j = 0; j <= exponents[i]; ++j) {
            Polynomial mono = Polynomial::constant(pring, 1);
            for (int a = 0; a < exponents[i] - j; ++a) mono = mono * s;
            for (int a = 0; a < j; ++a) mono = mono * t;
            forms.push_back(fiber[i] * mono);
        }
    }
    auto result = parametrized_image_ideal(forms, pring);
    return result.ideal;
}

IdealPtr project(const GradedIdeal& ideal, const std::vector<Polynomial>& center_forms,
                 const std::string& var_stem) {
    const RingPtr& ring = ideal.ring();
    const PrimeField& F = ring->field();
    int n = ring->nvars();
    int r_plus_1 = static_cast<int>(center_forms.size());
    if (r_plus_1 > n) throw DimensionError("too many center forms");
    if (r_plus_1 == n) {
        // Empty center: the projection is a coordinate change only.
        ;
    }
    // Disjointness: V(I + center) must be empty.
    {
        auto meet = ideal_sum(ideal, GradedIdeal(ring, center_forms));
        HilbertData h = hilbert_series(*meet);
        if (h.dimension > 0) {
            throw CenterMeetsVarietyError(
                "projection center meets the variety: intersection has projective dimension " +
                std::to_string(h.dimension - 1) + " (Hilbert degree " + std::to_string(h.degree) +
                ")");
        }
    }
    // Coordinate change y = M x whose first r+1 coordinates are the center forms.
    Matrix M(0, n);
    for (const auto& f : center_forms) {
        std::vector<std::uint32_t> row(n, 0);
        for (const auto& t : f.terms()) {
            for (int i = 0; i < n; ++i) {
                if (t.mono[i] == 1) row[i] = t.coeff;
            }
        }
        M.append_row(row);
    }
    // Complete to an invertible matrix with unit vectors.
    for (int i = 0; i < n && static_cast<int>(M.rows()) < n; ++i) {
        Matrix probe = M;
        std::vector<std::uint32_t> unit(n, 0);
        unit[i] = 1;
        probe.append_row(unit);
        if (probe.rank(F) == probe.rows()) M = std::move(probe);
    }
    if (static_cast<int>(M.rows()) != n) throw DimensionError("center forms are not independent");
    Matrix Minv = M.inverse(F);

    // Substitute x_i = (M^{-1} y)_i into the generators.
    RingPtr yring = Ring::make(F.modulus(), n, "@y");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < n; ++j) {
            if (Minv.at(i, j) != 0) {
                terms.push_back({Monomial::variable(n, j), Minv.at(i, j)});
            }
        }
        images.push_back(Polynomial::collect(yring, std::move(terms)));
    }
    std::vector<Polynomial> transformed;
    transformed.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) transformed.push_back(g.substitute(images));

    GradedIdeal moved(yring, std::move(transformed));
    std::vector<int> block;
    for (int i = r_plus_1; i < n; ++i) block.push_back(i);
    IdealPtr eliminated = eliminate(moved, block);

    RingPtr target = Ring::make(F.modulus(), r_plus_1, var_stem);
    std::vector<int> keep(r_plus_1);
    for (int i = 0; i < r_plus_1; ++i) keep[i] = i;
    std::vector<Polynomial> out;
    for (const auto& g : eliminated->generators()) out.push_back(g.extracted(target, keep));
    return make_ideal(target, std::move(out));
}

HyperplaneSection hyperplane_section(const GradedIdeal& ideal, const Polynomial& h) {
    const RingPtr& ring = ideal.ring();
    const PrimeField& F = ring->field();
    int n = ring->nvars();
    if (h.is_zero() || h.degree() != 1) throw DimensionError("hyperplane form must be linear");
    if (ideal.contains(h)) {
        throw DimensionError("hyperplane form lies in the ideal (degenerate section)");
    }
    // Coordinate change with h as the last coordinate.
    Matrix M(0, n);
    std::vector<std::uint32_t> hrow(n, 0);
    for (const auto& t : h.terms()) {
        for (int i = 0; i < n; ++i) {
            if (t.mono[i] == 1) hrow[i] = t.coeff;
        }
    }
    for (int i = 0; i < n && static_cast<int>(M.rows()) < n - 1; ++i) {
        Matrix probe = M;
        std::vector<std::uint32_t> unit(n, 0);
        unit[i] = 1;
        probe.append_row(unit);
        probe.append_row(hrow);
        if (probe.rank(F) == probe.rows()) {
            M.append_row(unit);
        }
    }
    M.append_row(hrow);
    Matrix Minv = M.inverse(F);

    RingPtr sub = Ring::make(F.modulus(), n - 1);
    std::vector<Polynomial> images;
    for (int i = 0; i < n; ++i) {
        // x_i = (M^{-1} y)_i with y_{n-1} = 0 (restriction to the hyperplane).
        std::vector<Term> terms;
        for (int j = 0; j < n - 1; ++j) {
            if (Minv.at(i, j) != 0) {
                terms.push_back({Monomial::variable(n - 1, j), Minv.at(i, j)});
            }
        }
        images.push_back(Polynomial::collect(sub, std::move(terms)));
    }
    std::vector<Polynomial> restricted;
    for (const auto& g : ideal.generators()) {
        Polynomial img = g.substitute(images);
        if (!img.is_zero()) restricted.push_back(img);
    }
    GradedIdeal raw(sub, std::move(restricted));
    IdealPtr saturated = saturate_irrelevant(raw);
    return {saturated, h};
}

HyperplaneSection general_hyperplane_section(const GradedIdeal& ideal, Rng& rng,
                                             int expected_dim_cone, long long expected_degree,
                                             int max_tries) {
    const RingPtr& ring = ideal.ring();
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Term> terms;
        for (int i = 0; i < ring->nvars(); ++i) {
            std::uint32_t c = rng.uniform(ring->field().modulus());
            if (c != 0) terms.push_back({Monomial::variable(ring->nvars(), i), c});
        }
        Polynomial h = Polynomial::collect(ring, std::move(terms));
        if (h.is_zero() || ideal.contains(h)) continue;
        HyperplaneSection section = hyperplane_section(ideal, h);
        HilbertData hd = hilbert_series(*section.ideal);
        if (hd.dimension == expected_dim_cone && hd.degree == expected_degree) return section;
    }
    throw Error("no general hyperplane found within the retry budget");
}

std::string secant_class_name(SecantClass c) {
    switch (c) {
        case SecantClass::Disjoint: return "disjoint";
        case SecantClass::SubExtremal: return "sub-extremal";
        case SecantClass::ProperExtremal: return "proper extremal";
        case SecantClass::Contained: return "contained";
    }
    return "?";
}

SecantRecord secant_length(const GradedIdeal& x_ideal, const LinearSubspace& line, long long d,
                           int r) {
    SecantRecord rec{line};
    const RingPtr& ring = x_ideal.ring();
    // Containment: substitute a parametrization of L into the basis.
    auto pts = line.spanning_points();
    if (pts.size() != 2) throw DimensionError("secant test requires a line");
    RingPtr st = Ring::make(ring->field().modulus(), 2, "s");
    std::vector<Polynomial> images;
    images.reserve(ring->nvars());
    for (int i = 0; i < ring->nvars(); ++i) {
        std::vector<Term> terms;
        if (pts[0][i] != 0) terms.push_back({Monomial::variable(2, 0), pts[0][i]});
        if (pts[1][i] != 0) terms.push_back({Monomial::variable(2, 1), pts[1][i]});
        images.push_back(Polynomial::collect(st, std::move(terms)));
    }
    bool contained = true;
    for (const auto& g : x_ideal.groebner()->elements()) {
        if (!g.substitute(images).is_zero()) {
            contained = false;
            break;
        }
    }
    if (contained) {
        rec.cls = SecantClass::Contained;
        return rec;
    }
    auto joint = ideal_sum(x_ideal, *line.ideal());
    rec.length = scheme_length(*joint);
    if (rec.length == d - r + 3) {
        rec.cls = SecantClass::ProperExtremal;
    } else if (rec.length == 0) {
        rec.cls = SecantClass::Disjoint;
    } else {
        rec.cls = SecantClass::SubExtremal;
    }
    return rec;
}

SecantCensusReport extremal_secant_census(const GradedIdeal& x_ideal,
                                          const std::vector<int>& scroll_exponents, long long d,
                                          int r, Rng& rng, int samples_per_family,
                                          int control_lines, unsigned jobs) {
    const RingPtr& ring = x_ideal.ring();
    const PrimeField& F = ring->field();
    if (ring->nvars() != r + 1) throw DimensionError("census ring has unexpected dimension");

    // Line sections of S(exponents): a fixed direction supported on the
    // exponent-1 blocks, swept along the ruling.
    std::vector<int> one_blocks;
    std::vector<int> offsets;
    int off = 0;
    for (std::size_t i = 0; i < scroll_exponents.size(); ++i) {
        offsets.push_back(off);
        if (scroll_exponents[i] == 1) one_blocks.push_back(static_cast<int>(i));
        off += scroll_exponents[i] + 1;
    }
    if (one_blocks.empty()) {
        throw RecipeError("census requires a scroll with at least one exponent-1 block");
    }

    std::vector<std::vector<std::uint32_t>> params;
    if (one_blocks.size() == 1) {
        params.push_back({1});
    } else {
        // Seeded samples of the projective parameter space of line sections,
        // always including the coordinate directions.
        std::size_t m = one_blocks.size();
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::uint32_t> e(m, 0);
            e[i] = 1;
            params.push_back(e);
        }
        while (static_cast<int>(params.size()) < samples_per_family) {
            std::vector<std::uint32_t> q(m);
            bool nonzero = false;
            for (auto& c : q) {
                c = rng.uniform(F.modulus());
                nonzero = nonzero || c != 0;
            }
            if (nonzero) params.push_back(q);
        }
    }

    std::vector<SecantRecord> records(params.size() + control_lines,
                                      SecantRecord{LinearSubspace(ring, {})});
    std::vector<Rng> line_rngs;
    for (std::size_t k = 0; k < records.size(); ++k) line_rngs.push_back(rng.fork(k));

    parallel_for(records.size(), jobs, [&](std::size_t idx) {
        if (idx < params.size()) {
            const auto& q = params[idx];
            // Points of the section: sum over chosen blocks of q_i * (s, t) slots.
            std::vector<std::uint32_t> p0(ring->nvars(), 0), p1(ring->nvars(), 0);
            for (std::size_t bi = 0; bi < one_blocks.size(); ++bi) {
                int o = offsets[one_blocks[bi]];
                p0[o] = q[bi];
                p1[o + 1] = q[bi];
            }
            LinearSubspace line = LinearSubspace::line_through(ring, p0, p1);
            records[idx] = secant_length(x_ideal, line, d, r);
            records[idx].family_parameter = q;
        } else {
            // Seeded random control line.
            Rng local = line_rngs[idx];
            for (int tries = 0; tries < 16; ++tries) {
                try {
                    LinearSubspace line = LinearSubspace::random(ring, 1, local);
                    records[idx] = secant_length(x_ideal, line, d, r);
                    return;
                } catch (const DimensionError&) {
                    continue;
                }
            }
            throw Error("could not sample a control line");
        }
    });

    SecantCensusReport report;
    report.lines = std::move(records);
    RowSpace span(ring->nvars());
    RowSpace family_span(one_blocks.size());
    for (std::size_t idx = 0; idx < report.lines.size(); ++idx) {
        const auto& rec = report.lines[idx];
        if (rec.cls == SecantClass::Contained) ++report.contained_count;
        if (rec.cls != SecantClass::ProperExtremal) continue;
        ++report.extremal_count;
        for (const auto& p : rec.line.spanning_points()) span.add(p, F);
        if (!rec.family_parameter.empty()) {
            family_span.add(rec.family_parameter, F);
        }
    }
    report.span_dim = static_cast<int>(span.rank()) - 1;
    report.family_dim_estimate = static_cast<int>(family_span.rank()) - 1;
    return report;
}

} // namespace scrollreg

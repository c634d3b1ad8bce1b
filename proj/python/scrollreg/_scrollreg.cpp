#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scrollreg/harness.hpp"

namespace py = pybind11;
using namespace scrollreg;

namespace {

py::dict betti_dict(const BettiTable& b) {
    py::dict out;
    for (const auto& [key, val] : b.entries()) {
        if (val != 0) out[py::make_tuple(key.first, key.second)] = val;
    }
    return out;
}

py::dict report_dict(const InvariantReport& rep) {
    py::dict out;
    out["description"] = rep.description;
    out["prime"] = rep.prime;
    out["r"] = rep.r;
    out["dim"] = rep.dim;
    out["degree"] = rep.degree;
    out["reg"] = rep.reg_x;
    out["pd"] = rep.pd;
    out["depth"] = rep.depth;
    out["normality_index"] = rep.normality ? py::object(py::int_(*rep.normality))
                                           : py::object(py::none());
    out["e"] = rep.e_x ? py::object(py::int_(*rep.e_x)) : py::object(py::none());
    out["betti_x"] = betti_dict(rep.betti_x);
    if (rep.betti_y) out["betti_y"] = betti_dict(*rep.betti_y);
    if (rep.tau) out["tau"] = py::make_tuple(rep.tau->first, rep.tau->second);
    py::dict h1, h2;
    for (const auto& [n, v] : rep.h1.dims) h1[py::int_(n)] = v;
    for (const auto& [n, v] : rep.h2.dims) h2[py::int_(n)] = v;
    out["h1"] = h1;
    out["h2"] = h2;
    out["consistent"] = rep.consistent;
    return out;
}

} // namespace

PYBIND11_MODULE(_scrollreg, m) {
    m.doc() = "exact invariants of projected scroll surfaces over GF(p): Groebner bases, "
              "Betti tables, regularity, graded cohomology, secant censuses";

    py::register_exception<Error>(m, "ScrollregError");

    struct PyRing {
        RingPtr ptr;
    };
    py::class_<PyRing>(m, "Ring")
        .def(py::init([](std::uint32_t p, std::vector<std::string> names) {
                 return PyRing{Ring::make_named(p, std::move(names))};
             }),
             py::arg("characteristic"), py::arg("names"))
        .def_property_readonly("nvars", [](const PyRing& r) { return r.ptr->nvars(); })
        .def_property_readonly("characteristic",
                               [](const PyRing& r) { return r.ptr->field().modulus(); })
        .def_property_readonly("names", [](const PyRing& r) { return r.ptr->names(); });

    py::class_<Polynomial>(m, "Polynomial")
        .def("__str__", &Polynomial::str)
        .def("__repr__", [](const Polynomial& f) { return "<poly " + f.str() + ">"; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("is_zero", &Polynomial::is_zero)
        .def("degree", &Polynomial::degree)
        .def("is_homogeneous", &Polynomial::is_homogeneous);

    m.def(
        "parse", [](const PyRing& r, const std::string& text) { return Polynomial::parse(r.ptr, text); },
        py::arg("ring"), py::arg("text"), "parse a polynomial in the ring's variables");

    py::class_<GradedIdeal, IdealPtr>(m, "GradedIdeal")
        .def(py::init([](const PyRing& ring, std::vector<Polynomial> gens) {
                 return make_ideal(ring.ptr, std::move(gens));
             }),
             py::arg("ring"), py::arg("generators"))
        .def_property_readonly("generators", &GradedIdeal::generators)
        .def("groebner_basis",
             [](const GradedIdeal& i) { return i.groebner()->elements(); })
        .def("contains", &GradedIdeal::contains)
        .def("normal_form",
             [](const GradedIdeal& i, const Polynomial& f) { return i.groebner()->normal_form(f); });

    m.def("eliminate", [](const GradedIdeal& i, const std::vector<int>& block) {
        return eliminate(i, block);
    });
    m.def("colon", [](const GradedIdeal& i, const Polynomial& f) { return colon(i, f); });
    m.def("saturate",
          [](const GradedIdeal& i, const GradedIdeal& j) { return saturate(i, j); });
    m.def("saturate_irrelevant",
          [](const GradedIdeal& i) { return saturate_irrelevant(i); });
    m.def("intersect",
          [](const GradedIdeal& a, const GradedIdeal& b) { return intersect(a, b); });
    m.def("ideal_equal", &ideal_equal);

    m.def("hilbert", [](const GradedIdeal& i) {
        HilbertData h = hilbert_series(i);
        py::dict out;
        out["dimension"] = h.dimension;
        out["degree"] = h.degree;
        out["numerator"] = h.numerator;
        return out;
    });
    m.def("scheme_length", [](const GradedIdeal& i) { return scheme_length(i); });

    m.def("betti_table", [](const GradedIdeal& i) {
        FreeResolution res = minimal_free_resolution(i);
        return betti_dict(res.betti());
    });
    m.def("reg_depth", [](const GradedIdeal& i) {
        FreeResolution res = minimal_free_resolution(i);
        RegDepth rd = reg_depth_from_betti(res.betti());
        py::dict out;
        out["reg"] = rd.reg_scheme;
        out["pd"] = rd.pd;
        out["depth"] = rd.depth;
        return out;
    });
    m.def("cohomology_window", [](const GradedIdeal& i, int index, int lo, int hi) {
        FreeResolution res = minimal_free_resolution(i);
        CohomologySolver coh(res);
        py::dict out;
        for (const auto& [n, v] : coh.window(index, lo, hi).dims) out[py::int_(n)] = v;
        return out;
    });

    m.def("scroll_ideal", [](const std::vector<int>& exps, std::uint32_t p) {
        return scroll_ideal(exps, p);
    });

    m.def(
        "compile_recipe",
        [](const std::string& text, std::uint32_t p, std::uint64_t seed) {
            RecipeOptions opts;
            opts.characteristic = p;
            opts.seed = seed;
            CompiledVariety v =
                is_builtin_recipe(text) ? compile_builtin(text, opts) : compile_recipe_text(text, opts);
            py::dict out;
            out["ideal"] = v.ideal;
            out["r"] = v.r;
            out["dim"] = v.dim;
            out["degree"] = v.degree;
            out["description"] = v.description;
            return out;
        },
        py::arg("text"), py::arg("characteristic") = PrimeField::kDefaultPrime,
        py::arg("seed") = 1);

    m.def(
        "invariants",
        [](const std::string& recipe, std::uint32_t p, std::uint64_t seed, bool with_plane) {
            RecipeOptions opts;
            opts.characteristic = p;
            opts.seed = seed;
            CompiledVariety v = is_builtin_recipe(recipe) ? compile_builtin(recipe, opts)
                                                          : compile_recipe_text(recipe, opts);
            InvariantOptions iopts;
            iopts.with_plane = with_plane && v.extremal_plane_forms.has_value();
            return report_dict(compute_invariants(v, iopts));
        },
        py::arg("recipe"), py::arg("characteristic") = PrimeField::kDefaultPrime,
        py::arg("seed") = 1, py::arg("with_plane") = false);

    py::module_ oracles = m.def_submodule("oracles", "closed-form reference values");
    oracles.def("h1_divisor_surface", &oracles::h1_divisor_surface);
    oracles.def("beta1_divisor_surface", &oracles::beta1_divisor_surface);
    oracles.def("h2_depth_two_table", &oracles::h2_depth_two_table);
    oracles.def("tau_cases", [](int r, long long d) {
        py::list out;
        for (const auto& [a, b] : oracles::tau_cases(r, d)) out.append(py::make_tuple(a, b));
        return out;
    });

    m.def("verify", [](const std::string& selector, std::uint32_t p) {
        HarnessOptions opts;
        opts.primes = {p};
        AnalysisCache cache(opts);
        py::list out;
        for (const auto& res : run_selector(selector, cache)) {
            py::dict d;
            d["name"] = res.name;
            d["passed"] = res.passed;
            d["details"] = res.details;
            out.append(d);
        }
        return out;
    });
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "scrollreg/harness.hpp"

using namespace scrollreg;

TEST_CASE("recipe text: scroll, divisor, param, project compose top-down") {
    RecipeOptions opts;
    CompiledVariety scroll = compile_recipe_text("scroll 1 1 1", opts);
    CHECK(scroll.r == 5);
    CHECK(scroll.dim == 3);
    CHECK(scroll.degree == 3);

    CompiledVariety divisor = compile_recipe_text(
        "scroll 1 1 1\n"
        "divisor H+3F section g0=random, g1=random, g2=random\n",
        opts);
    CHECK(divisor.r == 5);
    CHECK(divisor.dim == 2);
    CHECK(divisor.degree == 6);
    CHECK(divisor.scroll_exponents == std::vector<int>{1, 1, 1});

    CompiledVariety param = compile_recipe_text(
        "param s^3, s^2*t, s*t^2, t^3", opts);
    CHECK(param.r == 3);
    CHECK(param.dim == 1);
    CHECK(param.degree == 3);

    CompiledVariety proj = compile_recipe_text(
        "param s^3, s^2*t, s*t^2, t^3\n"
        "project center x0; x1+x3; x2\n",
        opts);
    CHECK(proj.r == 2);
    CHECK(proj.degree == 3);

    CHECK_THROWS_AS(compile_recipe_text("divisor H+1F section random", opts), RecipeError);
    CHECK_THROWS_AS(compile_recipe_text("frobnicate 1 2", opts), RecipeError);
}

TEST_CASE("random centers inside a span") {
    RecipeOptions opts;
    CompiledVariety v = compile_recipe_text(
        "scroll 3 5\n"
        "project center random dim=0 span=x0,x1,x2,x3\n",
        opts);
    CHECK(v.r == 8);
    CHECK(v.dim == 2);
    CHECK(v.degree == 8);
}

TEST_CASE("builtin recipes and determinism") {
    RecipeOptions opts;
    CHECK(is_builtin_recipe("example-7.3"));
    CHECK(is_builtin_recipe("divisor-s111-d7"));
    CHECK(is_builtin_recipe("proj-4-5"));
    CHECK_FALSE(is_builtin_recipe("example-9.9"));

    CompiledVariety a = compile_builtin("example-7.3", opts);
    CompiledVariety b = compile_builtin("example-7.3", opts);
    REQUIRE(a.ideal->generators().size() == b.ideal->generators().size());
    for (std::size_t i = 0; i < a.ideal->generators().size(); ++i) {
        CHECK(a.ideal->generators()[i] == b.ideal->generators()[i].in_ring(a.ideal->ring()));
    }
    CHECK(a.degree == 8);
    CHECK(a.r == 6);
    REQUIRE(a.extremal_plane_forms.has_value());
    CHECK(a.extremal_plane_forms->size() == 4);
}

TEST_CASE("the two compilation routes for X_f agree") {
    RecipeOptions opts;
    CompiledVariety direct = build_xf_surface(3, 5, "s^4*t+s^3*t^2+s^2*t^3+s*t^4", opts);
    CompiledVariety projected = build_xf_by_projection(3, 5, "s^4*t+s^3*t^2+s^2*t^3+s*t^4", opts);
    GradedIdeal moved(direct.ideal->ring(), projected.ideal->generators());
    CHECK(ideal_equal(*direct.ideal, moved));
}

TEST_CASE("ideal files round trip with provenance") {
    RecipeOptions opts;
    CompiledVariety v = compile_builtin("example-7.3", opts);
    std::string path = "/tmp/scrollreg_test_ideal.txt";
    write_ideal_file(path, *v.ideal, {{"recipe", "example-7.3"}, {"seed", "1"}});
    IdealFile f = read_ideal_file(path);
    CHECK(f.provenance.at("recipe") == "example-7.3");
    CHECK(ideal_equal(*f.ideal, *v.ideal));
    std::remove(path.c_str());
}

TEST_CASE("invariant reports are deterministic and serialize") {
    RecipeOptions opts;
    CompiledVariety v = compile_builtin("divisor-s111-d6", opts);
    InvariantOptions iopts;
    InvariantReport rep1 = compute_invariants(v, iopts);
    InvariantReport rep2 = compute_invariants(v, iopts);
    auto strip_timing = [](std::string json) {
        auto at = json.find("\"stage_ms\"");
        if (at != std::string::npos) {
            auto end = json.find('}', at);
            json.erase(at, end - at + 1);
        }
        return json;
    };
    CHECK(strip_timing(rep1.to_json()) == strip_timing(rep2.to_json()));
    CHECK(rep1.consistent);
    CHECK(rep1.to_json().find("\"depth\": 1") != std::string::npos);
    CHECK(rep1.to_text().find("reg(X) = 4") != std::string::npos);
}

TEST_CASE("derived extremal plane matches the constructed one") {
    RecipeOptions opts;
    CompiledVariety v = compile_builtin("example-7.3", opts);
    auto derived = derive_extremal_plane(*v.ideal, v.degree, v.r);
    REQUIRE(derived.has_value());
    GradedIdeal from_recipe(v.ideal->ring(), *v.extremal_plane_forms);
    GradedIdeal from_quotient(v.ideal->ring(), *derived);
    CHECK(ideal_equal(from_recipe, from_quotient));
}

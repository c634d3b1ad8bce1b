#ifndef SCROLLREG_RECIPE_HPP
#define SCROLLREG_RECIPE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scrollreg/geometry.hpp"

namespace scrollreg {

/// A compiled variety: the ideal plus the bookkeeping the analyses need.
struct CompiledVariety {
    IdealPtr ideal;
    int r = 0;            // ambient projective dimension
    int dim = 0;          // projective dimension of the variety
    long long degree = 0;
    std::string description;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> seeds_used;
    std::optional<std::vector<int>> scroll_exponents; // structure behind censuses
    std::optional<std::vector<Polynomial>> extremal_plane_forms; // known F(X) candidate
};

struct RecipeOptions {
    std::uint32_t characteristic = PrimeField::kDefaultPrime;
    std::uint64_t seed = 1;
    int max_retries = 8;
    unsigned jobs = 1;
};

/// Compile a textual recipe (one construction step per line, applied top-down):
///   scroll 1 1 1
///   divisor H+3F section g0=s^4+t^4, g1=random, g2=zero
///   param u*s^3, u*s^2*t, u*s*t^2, u*t^3, v*s^5, v*(s^4*t+s*t^4), v*t^5
///   project center x0-x3; x1+x2; ...
///   project center random dim=0 span=x0,x1,x2,x3
///   builtin example-7.3
CompiledVariety compile_recipe_text(const std::string& text, const RecipeOptions& opts);

bool is_builtin_recipe(const std::string& name);
std::vector<std::string> builtin_recipe_names();
CompiledVariety compile_builtin(const std::string& name, const RecipeOptions& opts);

/// Surface X_f in P^{a+3}: image of (u s^a : ... : u t^a : v s^b : v f : v t^b).
CompiledVariety build_xf_surface(int a, int b, const std::string& f_text,
                                 const RecipeOptions& opts);

/// Same surface by the projection route (center inside the span of the degree-b
/// block chosen so the block maps by (s^b : f : t^b)); used as a cross-check.
CompiledVariety build_xf_by_projection(int a, int b, const std::string& f_text,
                                       const RecipeOptions& opts);

/// Degree-d surface cut on the scroll by a divisor in |H + (d - deg Z) F|
/// with seeded random sections; spec entries: "random", "zero", or a binary form.
CompiledVariety build_divisor_surface(const std::vector<int>& scroll, long long d,
                                      const std::vector<std::string>& section_spec,
                                      const RecipeOptions& opts);

/// Projection of S(a,b) from a seeded random (a-3)-dimensional center inside
/// the span of the degree-a block; lands in P^{b+3}.
CompiledVariety build_projection_surface(int a, int b, const RecipeOptions& opts);

} // namespace scrollreg

#endif

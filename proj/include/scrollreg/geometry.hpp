#ifndef SCROLLREG_GEOMETRY_HPP
#define SCROLLREG_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "scrollreg/hilbert.hpp"
#include "scrollreg/util.hpp"

namespace scrollreg {

/// Linear subspace of P^r given by independent degree-1 forms.
class LinearSubspace {
public:
    LinearSubspace(RingPtr ring, std::vector<Polynomial> forms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& forms() const { return forms_; }
    int codim() const { return static_cast<int>(forms_.size()); }
    int dim() const { return ring_->nvars() - 1 - codim(); }

    IdealPtr ideal() const;

    /// Points spanning the subspace (rows of the nullspace of the coefficient matrix).
    std::vector<std::vector<std::uint32_t>> spanning_points() const;

    /// A line through s*P + t*Q.
    static LinearSubspace line_through(const RingPtr& ring,
                                       const std::vector<std::uint32_t>& p,
                                       const std::vector<std::uint32_t>& q);

    /// Seeded random subspace of the given dimension (codim = r - dim forms).
    static LinearSubspace random(const RingPtr& ring, int dim, Rng& rng);

private:
    RingPtr ring_;
    std::vector<Polynomial> forms_;
};

/// Ideal of the rational normal scroll S(a_1,...,a_k): 2x2 minors of the
/// concatenated 2-row Hankel blocks, in a fresh ring with sum(a_i + 1) variables.
IdealPtr scroll_ideal(const std::vector<int>& exponents, std::uint32_t characteristic);

struct ImplicitizationResult {
    IdealPtr ideal;
    bool degenerate = false; // image lies in a hyperplane
};

/// Prime ideal of the closure of the image of a parametrization: graph ideal
/// <x_i - form_i> with the parameters eliminated by a block order.
ImplicitizationResult parametrized_image_ideal(const std::vector<Polynomial>& forms,
                                               const RingPtr& param_ring,
                                               const std::string& var_stem = "x");

/// Ideal of the divisor in |H + kF| on the scroll S(exponents) cut out by the
/// section (g_0,...,g_{m-1}) with deg g_i = a_i + k: the section's kernel is
/// parametrized by auxiliary coordinates and the parameters eliminated.
/// NonReducedRecipeError if the g_i share a common zero on P^1.
IdealPtr divisor_on_scroll_ideal(const std::vector<int>& exponents, int k,
                                 const std::vector<Polynomial>& sections);

/// Image of V(I) under the linear projection with center V(center_forms);
/// the center must avoid the variety. Returns the ideal in a ring whose
/// variables are the images of the center forms.
IdealPtr project(const GradedIdeal& ideal, const std::vector<Polynomial>& center_forms,
                 const std::string& var_stem = "y");

struct HyperplaneSection {
    IdealPtr ideal; // saturated ideal of X ∩ H in r coordinates
    Polynomial h;
};

/// Saturated ideal of X ∩ {h = 0} in one fewer variable (after a linear
/// change sending h to the last coordinate).
HyperplaneSection hyperplane_section(const GradedIdeal& ideal, const Polynomial& h);

/// Seeded general hyperplane section: retries until the section has the
/// expected dimension and degree.
HyperplaneSection general_hyperplane_section(const GradedIdeal& ideal, Rng& rng,
                                             int expected_dim_cone, long long expected_degree,
                                             int max_tries = 8);

enum class SecantClass { Disjoint, SubExtremal, ProperExtremal, Contained };

struct SecantRecord {
    LinearSubspace line;
    long long length = 0; // meaningless when contained
    SecantClass cls = SecantClass::Disjoint;
    std::vector<std::uint32_t> family_parameter; // homogeneous parameter of structured lines
};

std::string secant_class_name(SecantClass c);

/// Classify a line against X: contained (via parametrized membership in the
/// Groebner basis), or proper extremal iff #(X ∩ L) = d - r + 3.
SecantRecord secant_length(const GradedIdeal& x_ideal, const LinearSubspace& line, long long d,
                           int r);

struct SecantCensusReport {
    std::vector<SecantRecord> lines;
    long long extremal_count = 0;
    long long contained_count = 0;
    int span_dim = -1;        // projective dimension of the span of extremal lines
    int family_dim_estimate = -1; // d-estimate over the supplied family
};

/// Census over the line sections of the scroll Z = S(exponents) (fixed
/// directions on the exponent-1 blocks) plus seeded random control lines.
SecantCensusReport extremal_secant_census(const GradedIdeal& x_ideal,
                                          const std::vector<int>& scroll_exponents, long long d,
                                          int r, Rng& rng, int samples_per_family = 50,
                                          int control_lines = 5, unsigned jobs = 1);

} // namespace scrollreg

#endif

#ifndef SCROLLREG_FREE_MODULE_HPP
#define SCROLLREG_FREE_MODULE_HPP

#include <memory>
#include <vector>

#include "scrollreg/polynomial.hpp"

namespace scrollreg {

class FreeModule;
using FreeModulePtr = std::shared_ptr<const FreeModule>;

/// Graded free module F = ⊕ S(-twist_i) with a module term order.
///
/// Two order flavours: position-over-term on a plain module (components
/// compared first, earlier components greater), and the Schreyer order
/// induced by a Gröbner basis one level down (module monomials compared via
/// their images, ties broken by smaller component index).
class FreeModule {
public:
    struct SchreyerTag {
        Monomial mono;      // lead monomial of the image g_comp
        std::uint32_t comp; // lead component of the image
    };

    /// Order flavour for plain (non-Schreyer) modules: position-over-term
    /// (earlier components dominate; the elimination shape the syzygy trick
    /// needs) or degree-then-term-over-position (usually far better behaved
    /// for image-module bases).
    enum class PlainOrder { POT, TOP };

    /// Plain module.
    FreeModule(RingPtr ring, std::vector<int> twists, PlainOrder order = PlainOrder::POT)
        : ring_(std::move(ring)), twists_(std::move(twists)), plain_order_(order) {}

    /// Schreyer module over parent: basis element i maps to an element with
    /// lead term tags[i] in parent.
    FreeModule(RingPtr ring, std::vector<int> twists, std::vector<SchreyerTag> tags,
               FreeModulePtr parent)
        : ring_(std::move(ring)), twists_(std::move(twists)), tags_(std::move(tags)),
          parent_(std::move(parent)) {
        cumulative_.reserve(tags_.size());
        for (const auto& t : tags_) {
            cumulative_.push_back(parent_->is_schreyer()
                                      ? t.mono * parent_->cumulative_[t.comp]
                                      : t.mono);
        }
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return twists_.size(); }
    int twist(std::uint32_t comp) const { return twists_[comp]; }
    const std::vector<int>& twists() const { return twists_; }
    bool is_schreyer() const { return !tags_.empty() || parent_ != nullptr; }
    const FreeModulePtr& parent() const { return parent_; }

    Ordering compare(const Monomial& m1, std::uint32_t c1, const Monomial& m2,
                     std::uint32_t c2) const;

private:
    RingPtr ring_;
    std::vector<int> twists_;
    PlainOrder plain_order_ = PlainOrder::POT;
    std::vector<SchreyerTag> tags_;
    std::vector<Monomial> cumulative_; // tag product down to the base module
    FreeModulePtr parent_;
};

struct ModTerm {
    Monomial mono;
    std::uint32_t comp;
    std::uint32_t coeff;
};

/// Element of a free module, terms strictly descending in the module order.
class ModulePoly {
public:
    ModulePoly() = default;
    explicit ModulePoly(FreeModulePtr module) : module_(std::move(module)) {}

    static ModulePoly collect(FreeModulePtr module, std::vector<ModTerm> terms);
    static ModulePoly basis_element(FreeModulePtr module, std::uint32_t comp);
    /// f * e_comp.
    static ModulePoly from_polynomial(FreeModulePtr module, const Polynomial& f,
                                      std::uint32_t comp);

    const FreeModulePtr& module() const { return module_; }
    const std::vector<ModTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const ModTerm& leading_term() const;

    /// Total degree of a homogeneous element (term degree + component twist).
    int degree() const;
    bool is_homogeneous() const;

    ModulePoly sub_mult(const ModulePoly& g, const Monomial& m, std::uint32_t c) const;
    ModulePoly times_term(const Monomial& m, std::uint32_t c) const;
    ModulePoly monic() const;
    ModulePoly operator+(const ModulePoly& o) const;
    ModulePoly operator-(const ModulePoly& o) const;
    bool operator==(const ModulePoly& o) const;

    /// Coefficient polynomial of a component.
    Polynomial component(std::uint32_t comp, const RingPtr& ring) const;

private:
    FreeModulePtr module_;
    std::vector<ModTerm> terms_;
};

/// Remainder of full tail reduction against divisors (lead component must
/// match and lead monomial divide). Optionally records the quotients:
/// f = sum (coeff * mono * divisors[index]) + remainder.
struct ReductionStep {
    std::size_t index;
    Monomial mono;
    std::uint32_t coeff;
};

ModulePoly module_normal_form(const ModulePoly& f, const std::vector<ModulePoly>& divisors,
                              std::vector<ReductionStep>* steps = nullptr);

/// Buchberger for submodules of a free module (chain criterion only; the
/// coprime criterion is not valid for modules). Output is interreduced and monic.
/// For homogeneous input a finite max_degree stops once every S-pair of that
/// degree is processed; lead terms of degree <= max_degree are then complete,
/// which suffices for graded dimension counts up to that degree.
std::vector<ModulePoly> module_buchberger(std::vector<ModulePoly> gens,
                                          int max_degree = -1);

std::vector<ModulePoly> module_interreduce(std::vector<ModulePoly> basis);

/// Generators of the first syzygy module of gens (not necessarily minimal),
/// computed by the augmented-module elimination trick. The result lives in a
/// plain free module with twists = degrees of gens.
std::vector<ModulePoly> syzygies(const std::vector<ModulePoly>& gens);

/// Syzygies of ring elements g_i in S^1.
std::vector<ModulePoly> syzygies(const std::vector<Polynomial>& gens);

/// Drop generators that lie in the submodule spanned by the others
/// (graded greedy pruning, low degrees first).
std::vector<ModulePoly> minimalize_module_generators(std::vector<ModulePoly> gens);

} // namespace scrollreg

#endif

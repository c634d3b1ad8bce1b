#ifndef SCROLLREG_RING_HPP
#define SCROLLREG_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "scrollreg/prime_field.hpp"
#include "scrollreg/term_order.hpp"

namespace scrollreg {

/// Immutable polynomial-ring context: GF(p)[names...] with an active term
/// order. Variants of the same ring under a different order share the field
/// and names; polynomials are converted explicitly when the order changes.
class Ring {
public:
    Ring(std::uint32_t characteristic, std::vector<std::string> names,
         TermOrder order = TermOrder::grevlex())
        : field_(characteristic), names_(std::move(names)), order_(order) {
        if (static_cast<int>(names_.size()) > Monomial::kMaxVars) {
            throw DimensionError("too many variables");
        }
    }

    static std::shared_ptr<const Ring> make(std::uint32_t characteristic, int nvars,
                                            const std::string& stem = "x",
                                            TermOrder order = TermOrder::grevlex()) {
        std::vector<std::string> names;
        names.reserve(nvars);
        for (int i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i));
        return std::make_shared<Ring>(characteristic, std::move(names), order);
    }

    static std::shared_ptr<const Ring> make_named(std::uint32_t characteristic,
                                                  std::vector<std::string> names,
                                                  TermOrder order = TermOrder::grevlex()) {
        return std::make_shared<Ring>(characteristic, std::move(names), order);
    }

    int nvars() const { return static_cast<int>(names_.size()); }
    const PrimeField& field() const { return field_; }
    const TermOrder& order() const { return order_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }

    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i) {
            if (names_[i] == name) return i;
        }
        return -1;
    }

    std::shared_ptr<const Ring> with_order(TermOrder order) const {
        return std::make_shared<Ring>(field_.modulus(), names_, order);
    }

    bool compatible(const Ring& o) const {
        return nvars() == o.nvars() && field_.modulus() == o.field_.modulus();
    }

private:
    PrimeField field_;
    std::vector<std::string> names_;
    TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

} // namespace scrollreg

#endif

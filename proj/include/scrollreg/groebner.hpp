#ifndef SCROLLREG_GROEBNER_HPP
#define SCROLLREG_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "scrollreg/polynomial.hpp"

namespace scrollreg {

/// Reduced, monic-normalized Gröbner basis under the ring's active order.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
        : ring_(std::move(ring)), elements_(std::move(elements)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
    bool is_one() const;

    std::vector<Monomial> leading_monomials() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> elements_;
};

using GroebnerPtr = std::shared_ptr<const GroebnerBasis>;

/// Remainder of f on division by divisors (full tail reduction).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger with sugar-guided normal selection, Gebauer-Moller pair
/// elimination and the coprime-lead criterion; output reduced and monic.
/// Generators need not be homogeneous.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens);

/// Interreduce a basis: drop lead-redundant elements, tail-reduce, normalize.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis);

/// Homogeneous ideal with cached reduced Gröbner bases per term order.
class GradedIdeal {
public:
    GradedIdeal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// Reduced GB under the given order (computed once and cached).
    GroebnerPtr groebner(const TermOrder& order) const;
    GroebnerPtr groebner() const { return groebner(ring_->order()); }

    bool contains(const Polynomial& f) const { return groebner()->contains(f); }
    bool is_zero_ideal() const;
    bool is_one_ideal() const { return groebner()->is_one(); }

    /// Minimal homogeneous generating set (graded greedy pruning).
    std::vector<Polynomial> minimal_generators() const;

    /// Generators of degree <= cap (as polynomials from the minimal set).
    GradedIdeal truncated(int cap) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::string, GroebnerPtr> cache_;
};

using IdealPtr = std::shared_ptr<GradedIdeal>;

IdealPtr make_ideal(RingPtr ring, std::vector<Polynomial> gens);

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b);

IdealPtr ideal_sum(const GradedIdeal& a, const GradedIdeal& b);

/// I ∩ K[variables not in block]; generators still live in the ambient ring.
IdealPtr eliminate(const GradedIdeal& ideal, const std::vector<int>& block);

/// Quotient (I : f) for homogeneous nonzero f.
IdealPtr colon(const GradedIdeal& ideal, const Polynomial& f);

/// Quotient (I : J) = ∩ over generators of J.
IdealPtr colon_ideal(const GradedIdeal& ideal, const GradedIdeal& j);

/// Saturation (I : J^∞) as a stabilized iterated colon.
IdealPtr saturate(const GradedIdeal& ideal, const GradedIdeal& j);

/// Saturation by the irrelevant ideal: intersection of the single-variable
/// saturations (I : x_i^∞), each via the reverse-lex leading-term shortcut.
IdealPtr saturate_irrelevant(const GradedIdeal& ideal);

/// (I : x_i^∞) computed from a grevlex basis with x_i ranked cheapest.
IdealPtr saturate_variable(const GradedIdeal& ideal, int var);

/// I ∩ J via one auxiliary variable in a leading block.
IdealPtr intersect(const GradedIdeal& a, const GradedIdeal& b);

/// Monomials of S_d not in the lead-term ideal have no meaning here; this is
/// the plain K-basis of the ideal's degree-d piece (for degreewise oracles).
std::vector<Polynomial> ideal_degree_piece(const GradedIdeal& ideal, int degree);

/// All monomials of total degree d in the ring (descending in ring order).
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d);

} // namespace scrollreg

#endif

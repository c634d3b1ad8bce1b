#ifndef SCROLLREG_POLYNOMIAL_HPP
#define SCROLLREG_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scrollreg/ring.hpp"

namespace scrollreg {

struct Term {
    Monomial mono;
    std::uint32_t coeff; // nonzero canonical residue
};

/// Sparse multivariate polynomial over GF(p).
///
/// Terms are kept strictly descending in the ring's active term order and
/// never store zero coefficients, so the leading term is terms()[0] and
/// structural equality is term-list equality.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, long long c);
    static Polynomial variable(RingPtr ring, int i, int power = 1);
    static Polynomial from_term(RingPtr ring, Monomial m, std::uint32_t c);

    /// Build from unsorted (monomial, coefficient) pairs; combines duplicates.
    static Polynomial collect(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Order-maximal term; ZeroPolynomialError on the zero polynomial.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    std::uint32_t leading_coeff() const { return leading_term().coeff; }

    int degree() const; // max total degree; -1 for zero
    bool is_homogeneous() const;
    /// Common degree of all terms, or -1 for zero/inhomogeneous input.
    int homogeneous_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    Polynomial scaled(std::uint32_t c) const;
    Polynomial times_term(const Monomial& m, std::uint32_t c) const;
    Polynomial monic() const;

    /// this - c * m * g, fused for reduction loops.
    Polynomial sub_mult(const Polynomial& g, const Monomial& m, std::uint32_t c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Re-sort terms for a ring variant (same variables/field, new order).
    Polynomial in_ring(const RingPtr& other) const;

    /// Image under x_i -> images[i] (ring map into the images' ring).
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Map into a ring that contains this ring's variables at position var_map[i].
    Polynomial embedded(const RingPtr& target, const std::vector<int>& var_map) const;

    /// Inverse of embedded: target variable i reads source variable source_vars[i];
    /// all other exponents must vanish.
    Polynomial extracted(const RingPtr& target, const std::vector<int>& source_vars) const;

    /// Exact quotient this / divisor; DivisionByZeroError if not divisible.
    Polynomial exact_div(const Polynomial& divisor) const;

    /// Largest power of variable i dividing every term (0 for the zero poly).
    int min_exponent(int i) const;
    /// Divide out x_i^k.
    Polynomial div_variable_power(int i, int k) const;

    std::string str() const;
    static Polynomial parse(const RingPtr& ring, const std::string& text);

private:
    void validate_sorted() const;

    RingPtr ring_;
    std::vector<Term> terms_; // strictly descending in ring_->order()
};

} // namespace scrollreg

#endif

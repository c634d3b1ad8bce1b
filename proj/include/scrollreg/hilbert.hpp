#ifndef SCROLLREG_HILBERT_HPP
#define SCROLLREG_HILBERT_HPP

#include <vector>

#include "scrollreg/groebner.hpp"

namespace scrollreg {

/// Hilbert data of a graded quotient S/I: the series numerator over
/// (1-t)^nvars, the Hilbert polynomial, the Krull dimension of S/I (the
/// affine cone; a projective surface has dimension 3 here) and the degree.
struct HilbertData {
    std::vector<long long> numerator;  // full numerator N(t), index = power of t
    std::vector<long long> simplified; // Q(t) with Q(1) != 0 (zero polynomial if S/I = 0)
    int nvars = 0;
    int dimension = 0;  // Krull dimension of S/I
    long long degree = 0; // Q(1); > 0 for nonzero quotients

    /// Hilbert function of S/I at degree n (exact for every n >= 0).
    long long hilbert_function(long long n) const;

    /// Hilbert polynomial value at n (agrees with the function for large n).
    long long hilbert_polynomial(long long n) const;

    /// Numerator coefficients and common denominator of the Hilbert
    /// polynomial in the monomial basis {n^k}: HP(n) = (sum c_k n^k) / den.
    std::pair<std::vector<long long>, long long> hilbert_polynomial_coeffs() const;

    /// Least n0 such that function and polynomial agree for all n >= n0.
    int agreement_bound() const { return static_cast<int>(numerator.size()); }
};

/// Hilbert series of S/I from the lead-term ideal of a grevlex basis.
HilbertData hilbert_series(const GradedIdeal& ideal);

/// Hilbert series of S/M for a monomial ideal given by generators.
HilbertData hilbert_series_monomial(const RingPtr& ring, std::vector<Monomial> gens);

/// Length of a finite scheme: the constant Hilbert polynomial of S/I.
/// NotFiniteError (carrying the projective dimension) on positive-dimensional input.
long long scheme_length(const GradedIdeal& ideal);

/// Projective dimension of V(I): cone dimension - 1; -1 for the empty scheme.
int projective_dimension(const GradedIdeal& ideal);

} // namespace scrollreg

#endif

#ifndef SCROLLREG_LINALG_HPP
#define SCROLLREG_LINALG_HPP

#include <cstdint>
#include <vector>

#include "scrollreg/prime_field.hpp"

namespace scrollreg {

/// Dense matrix over GF(p); just enough exact linear algebra for graded
/// pieces: row reduction, rank, nullspace, solving, inversion.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
    const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }

    void append_row(const std::vector<std::uint32_t>& r);

    /// In-place row echelon reduction; returns the rank.
    std::size_t rref(const PrimeField& F);

    std::size_t rank(const PrimeField& F) const;

    /// Basis of the right nullspace, one vector per row of the result.
    Matrix nullspace(const PrimeField& F) const;

    /// Inverse of a square invertible matrix; throws if singular.
    Matrix inverse(const PrimeField& F) const;

    Matrix multiply(const Matrix& o, const PrimeField& F) const;

    /// Row-reduce `vec` against the rows of an rref matrix in place.
    /// Returns true if the reduced vector is zero (i.e. vec lies in the row space).
    bool reduces_to_zero(std::vector<std::uint32_t> vec, const PrimeField& F) const;

private:
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> data_;
};

/// Incremental row-space builder: add vectors, track rank, test membership.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    /// Reduce and insert; returns true if the vector enlarged the space.
    bool add(std::vector<std::uint32_t> vec, const PrimeField& F);
    bool contains(std::vector<std::uint32_t> vec, const PrimeField& F) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::vector<std::uint32_t>>& basis() const { return rows_; }

private:
    void reduce(std::vector<std::uint32_t>& vec, const PrimeField& F) const;

    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> rows_; // reduced, sorted by pivot
    std::vector<std::size_t> pivots_;
};

} // namespace scrollreg

#endif

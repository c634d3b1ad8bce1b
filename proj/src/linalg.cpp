#include "scrollreg/linalg.hpp"

#include <algorithm>

#include "scrollreg/errors.hpp"

namespace scrollreg {

void Matrix::append_row(const std::vector<std::uint32_t>& r) {
    if (r.size() != cols_) throw DimensionError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

std::size_t Matrix::rref(const PrimeField& F) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
        }
        std::uint32_t inv = F.inv(at(rank, col));
        for (std::size_t c = col; c < cols_; ++c) at(rank, c) = F.mul(at(rank, c), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            std::uint32_t f = at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < cols_; ++c) {
                at(r, c) = F.sub(at(r, c), F.mul(f, at(rank, c)));
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t Matrix::rank(const PrimeField& F) const {
    Matrix copy = *this;
    // Forward elimination only; no need for the reduced form.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < copy.cols_ && rank < copy.rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < copy.rows_ && copy.at(pivot, col) == 0) ++pivot;
        if (pivot == copy.rows_) continue;
        if (pivot != rank) {
            for (std::size_t c = col; c < copy.cols_; ++c) std::swap(copy.at(pivot, c), copy.at(rank, c));
        }
        std::uint32_t inv = F.inv(copy.at(rank, col));
        for (std::size_t r = rank + 1; r < copy.rows_; ++r) {
            std::uint32_t f = copy.at(r, col);
            if (f == 0) continue;
            std::uint32_t scale = F.mul(f, inv);
            for (std::size_t c = col; c < copy.cols_; ++c) {
                copy.at(r, c) = F.sub(copy.at(r, c), F.mul(scale, copy.at(rank, c)));
            }
        }
        ++rank;
    }
    return rank;
}

Matrix Matrix::nullspace(const PrimeField& F) const {
    Matrix red = *this;
    red.rref(F);
    std::vector<long long> pivot_of_col(cols_, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        if (red.at(r, c) != 0) {
            pivot_of_col[c] = static_cast<long long>(r);
            ++r;
        }
    }
    Matrix out(0, cols_);
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<std::uint32_t> v(cols_, 0);
        v[free_col] = 1;
        for (std::size_t c = 0; c < free_col; ++c) {
            if (pivot_of_col[c] >= 0) {
                std::uint32_t val = red.at(static_cast<std::size_t>(pivot_of_col[c]), free_col);
                v[c] = F.neg(val);
            }
        }
        out.append_row(v);
    }
    return out;
}

Matrix Matrix::inverse(const PrimeField& F) const {
    if (rows_ != cols_) throw DimensionError("inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    std::size_t rank = aug.rref(F);
    if (rank != rows_) throw Error("matrix is singular");
    Matrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = aug.at(r, cols_ + c);
    }
    return out;
}

Matrix Matrix::multiply(const Matrix& o, const PrimeField& F) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                out.at(i, j) = F.add(out.at(i, j), F.mul(a, o.at(k, j)));
            }
        }
    }
    return out;
}

bool Matrix::reduces_to_zero(std::vector<std::uint32_t> vec, const PrimeField& F) const {
    // Assumes *this is in rref.
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        if (at(r, c) == 0) continue;
        if (vec[c] != 0) {
            std::uint32_t f = vec[c];
            for (std::size_t k = c; k < cols_; ++k) vec[k] = F.sub(vec[k], F.mul(f, at(r, k)));
        }
        ++r;
    }
    return std::all_of(vec.begin(), vec.end(), [](std::uint32_t v) { return v == 0; });
}

void RowSpace::reduce(std::vector<std::uint32_t>& vec, const PrimeField& F) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t f = vec[pivots_[i]];
        if (f == 0) continue;
        const auto& basis_row = rows_[i];
        for (std::size_t c = pivots_[i]; c < cols_; ++c) {
            vec[c] = F.sub(vec[c], F.mul(f, basis_row[c]));
        }
    }
}

bool RowSpace::add(std::vector<std::uint32_t> vec, const PrimeField& F) {
    reduce(vec, F);
    std::size_t pivot = cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (vec[c] != 0) {
            pivot = c;
            break;
        }
    }
    if (pivot == cols_) return false;
    std::uint32_t inv = F.inv(vec[pivot]);
    for (std::size_t c = pivot; c < cols_; ++c) vec[c] = F.mul(vec[c], inv);
    // Keep existing rows reduced against the new one.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t f = rows_[i][pivot];
        if (f == 0) continue;
        for (std::size_t c = pivot; c < cols_; ++c) {
            rows_[i][c] = F.sub(rows_[i][c], F.mul(f, vec[c]));
        }
    }
    std::size_t insert_at = 0;
    while (insert_at < pivots_.size() && pivots_[insert_at] < pivot) ++insert_at;
    rows_.insert(rows_.begin() + insert_at, std::move(vec));
    pivots_.insert(pivots_.begin() + insert_at, pivot);
    return true;
}

bool RowSpace::contains(std::vector<std::uint32_t> vec, const PrimeField& F) const {
    reduce(vec, F);
    return std::all_of(vec.begin(), vec.end(), [](std::uint32_t v) { return v == 0; });
}

} // namespace scrollreg

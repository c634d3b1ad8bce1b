#ifndef SCROLLREG_PRIME_FIELD_HPP
#define SCROLLREG_PRIME_FIELD_HPP

#include <cstdint>

#include "scrollreg/errors.hpp"

namespace scrollreg {

/// Coefficient domain GF(p) for an odd word-sized prime p.
///
/// Elements are canonical residues in [0, p), stored as uint32_t; all
/// arithmetic reduces eagerly so values stay canonical after every operation.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultPrime = 32003;
    static constexpr std::uint32_t kCrossCheckPrime = 1000003;

    /// Rejects p = 2 and composite p (trial division; p is word-sized).
    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t reduce_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0) m += p_;
        return static_cast<std::uint32_t>(m);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<std::uint32_t>(s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    /// Multiplicative inverse by the extended Euclidean algorithm; inv(0) is an error.
    std::uint32_t inv(std::uint32_t a) const;

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }
    bool operator!=(const PrimeField& other) const { return p_ != other.p_; }

private:
    std::uint32_t p_;
};

bool is_odd_prime(std::uint32_t p);

} // namespace scrollreg

#endif

#ifndef SCROLLREG_MONOMIAL_HPP
#define SCROLLREG_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>

#include "scrollreg/errors.hpp"

namespace scrollreg {

/// Exponent vector with cached total degree, packed into a fixed-size array.
///
/// Rings in this toolkit stay small (at most kMaxVars variables, single
/// exponents below 256), so monomials are plain values with no heap storage;
/// comparison and divisibility are tight loops over bytes.
class Monomial {
public:
    static constexpr int kMaxVars = 16;

    Monomial() : nvars_(0), deg_(0) { e_.fill(0); }

    explicit Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)), deg_(0) {
        if (nvars < 0 || nvars > kMaxVars) throw DimensionError("variable count out of range");
        e_.fill(0);
    }

    Monomial(std::initializer_list<int> exps) : Monomial(static_cast<int>(exps.size())) {
        int i = 0;
        for (int v : exps) set(i++, v);
    }

    int nvars() const { return nvars_; }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[i]; }

    void set(int i, int v) {
        if (v < 0 || v > 255) throw DimensionError("exponent out of range");
        deg_ = static_cast<std::int16_t>(deg_ - e_[i] + v);
        e_[i] = static_cast<std::uint8_t>(v);
    }

    bool is_one() const { return deg_ == 0; }

    bool operator==(const Monomial& o) const {
        return nvars_ == o.nvars_ && deg_ == o.deg_ &&
               std::memcmp(e_.data(), o.e_.data(), nvars_) == 0;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    Monomial operator*(const Monomial& o) const {
        Monomial out(nvars_);
        for (int i = 0; i < nvars_; ++i) out.e_[i] = static_cast<std::uint8_t>(e_[i] + o.e_[i]);
        out.deg_ = static_cast<std::int16_t>(deg_ + o.deg_);
        return out;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (int i = 0; i < nvars_; ++i) {
            if (e_[i] > o.e_[i]) return false;
        }
        return true;
    }

    /// this / o; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial out(nvars_);
        for (int i = 0; i < nvars_; ++i) out.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
        out.deg_ = static_cast<std::int16_t>(deg_ - o.deg_);
        return out;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out(a.nvars_);
        int d = 0;
        for (int i = 0; i < a.nvars_; ++i) {
            out.e_[i] = std::max(a.e_[i], b.e_[i]);
            d += out.e_[i];
        }
        out.deg_ = static_cast<std::int16_t>(d);
        return out;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars_; ++i) {
            if (a.e_[i] && b.e_[i]) return false;
        }
        return true;
    }

    static Monomial variable(int nvars, int i, int power = 1) {
        Monomial out(nvars);
        out.set(i, power);
        return out;
    }

    /// Keep the first k exponents (used when moving between elimination rings).
    Monomial truncated(int k) const {
        Monomial out(k);
        for (int i = 0; i < k; ++i) out.set(i, e_[i]);
        return out;
    }

    /// Re-embed into a ring with nvars variables, writing exponents at offset.
    Monomial embedded(int nvars, int offset) const {
        Monomial out(nvars);
        for (int i = 0; i < nvars_; ++i) out.set(offset + i, e_[i]);
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        for (int i = 0; i < nvars_; ++i) {
            h ^= e_[i];
            h *= 1099511628211ULL;
        }
        return h;
    }

private:
    std::array<std::uint8_t, kMaxVars> e_;
    std::uint8_t nvars_;
    std::int16_t deg_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace scrollreg

#endif

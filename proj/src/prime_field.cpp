#include "scrollreg/prime_field.hpp"

namespace scrollreg {

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_odd_prime(p)) {
        throw Error("characteristic must be an odd prime, got " + std::to_string(p));
    }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZeroError("division by zero in GF(" + std::to_string(p_) + ")");
    // Extended Euclid on (a, p); p prime so gcd is 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t out = 1 % p_;
    std::uint32_t base = a % p_;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

} // namespace scrollreg

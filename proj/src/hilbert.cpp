#include "scrollreg/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "scrollreg/util.hpp"

namespace scrollreg {

namespace {

using Numerator = std::vector<long long>;

void add_scaled(Numerator& dst, const Numerator& src, int shift) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += src[i];
}

/// Remove generators divisible by another generator.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() < b.degree();
    });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool dominated = false;
        for (const auto& kept : out) {
            if (kept.divides(m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(m);
    }
    return out;
}

std::string memo_key(const std::vector<Monomial>& gens, int nvars) {
    std::string key;
    key.reserve(gens.size() * nvars);
    for (const auto& m : gens) {
        for (int i = 0; i < nvars; ++i) key.push_back(static_cast<char>(m[i]));
        key.push_back('\x7f');
    }
    return key;
}

struct SeriesBuilder {
    int nvars;
    std::unordered_map<std::string, Numerator> memo;

    /// Numerator of the Hilbert series of S/(gens) over (1-t)^nvars.
    /// Pivot recursion: N(I) = N(I + (x_v)) + t * N(I : x_v).
    Numerator run(std::vector<Monomial> gens) {
        gens = minimalize(std::move(gens));
        if (gens.empty()) return {1};
        if (gens[0].degree() == 0) return {0};

        std::string key = memo_key(gens, nvars);
        auto hit = memo.find(key);
        if (hit != memo.end()) return hit->second;

        Numerator result;
        bool disjoint_supports = true;
        for (std::size_t i = 0; i < gens.size() && disjoint_supports; ++i) {
            for (std::size_t j = i + 1; j < gens.size() && disjoint_supports; ++j) {
                if (!Monomial::coprime(gens[i], gens[j])) disjoint_supports = false;
            }
        }
        if (disjoint_supports) {
            // Complete intersection of monomials: product of (1 - t^deg).
            result = {1};
            for (const auto& m : gens) {
                Numerator next(result.size() + m.degree(), 0);
                for (std::size_t i = 0; i < result.size(); ++i) {
                    next[i] += result[i];
                    next[i + m.degree()] -= result[i];
                }
                result = std::move(next);
            }
        } else {
            // Pivot on the most frequent variable.
            std::vector<int> freq(nvars, 0);
            for (const auto& m : gens) {
                for (int v = 0; v < nvars; ++v) {
                    if (m[v] > 0) ++freq[v];
                }
            }
            int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

            std::vector<Monomial> plus;  // I + (x_pivot)
            std::vector<Monomial> quot;  // I : x_pivot
            plus.push_back(Monomial::variable(nvars, pivot));
            for (const auto& m : gens) {
                if (m[pivot] == 0) {
                    plus.push_back(m);
                    quot.push_back(m);
                } else {
                    Monomial q = m;
                    q.set(pivot, m[pivot] - 1);
                    quot.push_back(q);
                }
            }
            result = run(std::move(plus));
            Numerator colon_part = run(std::move(quot));
            add_scaled(result, colon_part, 1);
        }
        memo.emplace(std::move(key), result);
        return result;
    }
};

} // namespace

long long HilbertData::hilbert_function(long long n) const {
    if (n < 0) return 0;
    long long out = 0;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        if (numerator[k] == 0) continue;
        out += numerator[k] * binom(n - static_cast<long long>(k) + nvars - 1, nvars - 1);
    }
    return out;
}

long long HilbertData::hilbert_polynomial(long long n) const {
    if (dimension == 0) return 0;
    long long out = 0;
    for (std::size_t k = 0; k < simplified.size(); ++k) {
        if (simplified[k] == 0) continue;
        // C(n - k + D - 1, D - 1) as a polynomial in n of degree D-1.
        long long top = n - static_cast<long long>(k) + dimension - 1;
        long long val = 1;
        for (int j = 0; j < dimension - 1; ++j) val *= (top - j);
        for (int j = 2; j <= dimension - 1; ++j) val /= j;
        out += simplified[k] * val;
    }
    return out;
}

std::pair<std::vector<long long>, long long> HilbertData::hilbert_polynomial_coeffs() const {
    int d = dimension - 1;
    if (d < 0) return {{0}, 1};
    // Expand sum_k q_k * prod_{j=0..d-1} (n - k + d - j) / d!.
    std::vector<long long> coeffs(d + 1, 0);
    for (std::size_t k = 0; k < simplified.size(); ++k) {
        if (simplified[k] == 0) continue;
        std::vector<long long> prod{1};
        for (int j = 0; j < d; ++j) {
            long long c = -static_cast<long long>(k) + d - j;
            std::vector<long long> next(prod.size() + 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] += prod[i];
                next[i] += prod[i] * c;
            }
            prod = std::move(next);
        }
        for (std::size_t i = 0; i < prod.size(); ++i) coeffs[i] += simplified[k] * prod[i];
    }
    long long den = 1;
    for (int j = 2; j <= d; ++j) den *= j;
    long long g = den;
    for (long long c : coeffs) g = std::gcd(g, std::abs(c));
    if (g > 1) {
        den /= g;
        for (auto& c : coeffs) c /= g;
    }
    return {coeffs, den};
}

HilbertData hilbert_series_monomial(const RingPtr& ring, std::vector<Monomial> gens) {
    SeriesBuilder builder{ring->nvars(), {}};
    HilbertData out;
    out.nvars = ring->nvars();
    out.numerator = builder.run(std::move(gens));
    // Cancel (1-t) factors: synthetic division while N(1) == 0.
    out.simplified = out.numerator;
    out.dimension = ring->nvars();
    auto value_at_one = [](const Numerator& n) {
        long long s = 0;
        for (long long c : n) s += c;
        return s;
    };
    auto is_zero = [](const Numerator& n) {
        return std::all_of(n.begin(), n.end(), [](long long c) { return c == 0; });
    };
    if (is_zero(out.simplified)) {
        out.dimension = 0;
        out.degree = 0;
        out.simplified = {0};
        return out;
    }
    while (out.dimension > 0 && value_at_one(out.simplified) == 0) {
        // Divide by (1-t): Q(t) = N(t) / (1-t), i.e. partial sums with sign.
        Numerator q(out.simplified.size() - 1, 0);
        long long carry = 0;
        for (std::size_t i = 0; i + 1 < out.simplified.size(); ++i) {
            carry += out.simplified[i];
            q[i] = carry;
        }
        out.simplified = std::move(q);
        if (out.simplified.empty()) out.simplified = {0};
        --out.dimension;
        if (is_zero(out.simplified)) {
            out.dimension = 0;
            out.degree = 0;
            out.simplified = {0};
            return out;
        }
    }
    out.degree = value_at_one(out.simplified);
    return out;
}

HilbertData hilbert_series(const GradedIdeal& ideal) {
    auto gb = ideal.groebner(TermOrder::grevlex());
    std::vector<Monomial> leads = gb->leading_monomials();
    return hilbert_series_monomial(ideal.ring(), std::move(leads));
}

long long scheme_length(const GradedIdeal& ideal) {
    HilbertData h = hilbert_series(ideal);
    if (h.dimension > 1) throw NotFiniteError(h.dimension - 1);
    if (h.dimension == 0) return 0; // empty scheme
    return h.degree;
}

int projective_dimension(const GradedIdeal& ideal) {
    return hilbert_series(ideal).dimension - 1;
}

} // namespace scrollreg

#ifndef SCROLLREG_UTIL_HPP
#define SCROLLREG_UTIL_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace scrollreg {

/// Deterministic source of "general" choices (centers, hyperplanes, sample lines).
/// Every run records which seed produced each choice so results are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint32_t uniform(std::uint32_t bound) {
        std::uniform_int_distribution<std::uint32_t> d(0, bound - 1);
        return d(engine_);
    }

    /// Nonzero value in [1, bound).
    std::uint32_t uniform_nonzero(std::uint32_t bound) {
        std::uniform_int_distribution<std::uint32_t> d(1, bound - 1);
        return d(engine_);
    }

    /// Derive an independent stream for a sub-task.
    Rng fork(std::uint64_t salt) const {
        return Rng(seed_ * 0x9e3779b97f4a7c15ULL + salt + 1);
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

/// Cooperative per-stage deadline. Heavy loops poll expired() and raise TimeoutError.
class Deadline {
public:
    Deadline() = default;
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                      std::chrono::duration<double>(seconds))) {}

    bool expired() const {
        return end_ && std::chrono::steady_clock::now() > *end_;
    }

    void check(const char* stage) const;

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

/// Wall-clock stopwatch for per-stage timings in reports.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Run tasks in a bounded worker pool; rethrows the first task exception.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

/// Thread-local stage deadline polled by the heavy kernels.
void set_stage_deadline(const Deadline& d);
void clear_stage_deadline();
void poll_deadline(const char* where);

/// Binomial coefficient with C(n, k) = 0 for n < k or n < 0 (and k < 0).
long long binom(long long n, long long k);

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

} // namespace scrollreg

#endif

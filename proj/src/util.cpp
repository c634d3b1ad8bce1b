#include "scrollreg/util.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "scrollreg/errors.hpp"

namespace scrollreg {

void Deadline::check(const char* stage) const {
    if (expired()) {
        throw TimeoutError(std::string("stage timed out: ") + stage);
    }
}

namespace {
thread_local Deadline t_stage_deadline;
}

void set_stage_deadline(const Deadline& d) { t_stage_deadline = d; }
void clear_stage_deadline() { t_stage_deadline = Deadline(); }
void poll_deadline(const char* where) { t_stage_deadline.check(where); }

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
    if (jobs <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    unsigned workers = std::min<std::size_t>(jobs, n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (long long i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace scrollreg

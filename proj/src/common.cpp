#include "fmen/common.hpp"

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

namespace fmen {

namespace {
int g_threads = 1;
}

int thread_count() { return g_threads; }

void set_thread_count(int n) { g_threads = n < 1 ? 1 : n; }

void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& fn) {
    const std::int64_t total = end - begin;
    if (total <= 0) return;
    const int workers = static_cast<int>(
        std::min<std::int64_t>(g_threads, total));
    if (workers <= 1) {
        fn(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::int64_t chunk = (total + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        const std::int64_t lo = begin + t * chunk;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& th : pool) th.join();
}

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // u1 in (0, 1] so the log is finite
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

}  // namespace fmen

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace fmen {

// Contract violations surface as typed exceptions; the CLI maps them to
// nonzero exit codes.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Engine-wide worker count. Kernels partition work by output plane, so the
// result is bitwise identical for every thread count; 1 is the default.
int thread_count();
void set_thread_count(int n);

// Runs fn(begin, end) over contiguous sub-ranges of [begin, end), one range
// per worker. With thread_count() == 1 this is a plain call.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

// mt19937_64 with hand-rolled uniform/normal transforms. The standard pins
// the engine's output sequence but not the distributions, so the transforms
// live here to keep seeded runs identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // N(0, 1) via Box-Muller, pair cached
    double normal();

    // [0, n)
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace fmen

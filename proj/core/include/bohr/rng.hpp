#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace bohr {

/// Splittable counter-based generator (SplitMix64 over a keyed counter).
/// A (seed, stream) pair fully determines the draw sequence, so concurrent
/// trials with distinct stream indices are deterministic and race-free.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(stream + 0xBF58476D1CE4E5B9ULL)) {}

    std::uint64_t next_u64() {
        std::uint64_t z = key_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
        return mix(z);
    }

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(next_u64() % span);
    }

    /// Area-uniform point on the closed disk of the given radius.
    std::complex<double> uniform_disk(double radius) {
        const double r = radius * std::sqrt(uniform01());
        const double theta = 2.0 * M_PI * uniform01();
        return std::polar(r, theta);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace bohr

#pragma once

#include <cstdint>

#include "tenorlab/math.hpp"

namespace tenorlab {

/// Counter-based random stream: output i is a stateless mix of (key, i), so
/// streams keyed by (seed, path index) are order-independent and any path can
/// be generated on any thread with identical results. The mixer is the
/// splitmix64 finalizer.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) {
        key_ = mix(mix(seed + 0x9E3779B97F4A7C15ull) ^ mix(stream + 0xD1B54A32D192ED03ull));
    }

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

    /// Uniform on the open interval (0,1).
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via the inverse CDF.
    double next_gaussian() { return inverse_norm_cdf(next_uniform()); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace tenorlab

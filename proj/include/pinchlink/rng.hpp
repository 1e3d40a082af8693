#ifndef PINCHLINK_RNG_HPP
#define PINCHLINK_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace pinchlink {

/// Counter-based stream generator (splitmix64). Each (seed, stream) pair
/// yields an independent deterministic sequence, so Monte-Carlo trial i can
/// be keyed as stream i and draws identically no matter which worker runs it.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
        state_ = mix(state_ ^ 0xBF58476D1CE4E5B9ULL);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in (0, 1]; never returns 0 so it is safe under log().
    double uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Two independent standard normals (Box-Muller).
    std::array<double, 2> normal_pair();

    /// Circularly-symmetric complex Gaussian with unit variance:
    /// real and imaginary parts each N(0, 1/2).
    std::complex<double> complex_normal();

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
};

} // namespace pinchlink

#endif

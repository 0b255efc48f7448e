#pragma once

#include <cstdint>
#include <random>

namespace hausdim {

/// Seeded generator with a platform-independent mapping to [0, 1).
///
/// std::mt19937_64 is fully specified by the standard, but the standard
/// distributions are not, so uniform reals are built from the raw 64-bit
/// output here. Identical seeds give identical streams on every toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace hausdim

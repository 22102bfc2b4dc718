#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>

namespace stsc {

// splitmix64 finalizer (Steele/Lea/Flood); the seed-folding and stream
// seeding primitive used throughout.
std::uint64_t mix64(std::uint64_t x);

// Fold one field into a seed state.
inline std::uint64_t seed_absorb(std::uint64_t state, std::uint64_t field) {
    return mix64(state ^ field);
}

// xoshiro256++ stream seeded via splitmix64. Fixed draw consumption:
// next_bit and next_unit take one u64, every normal pair / complex Gaussian
// takes exactly two.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit();

    unsigned next_bit() { return static_cast<unsigned>(next_u64() >> 63); }

    // Independent N(0,1) pair via Box-Muller (no rejection).
    std::pair<double, double> next_normal_pair();

    // Circularly-symmetric complex Gaussian, mean 0, E|z|^2 = 1.
    std::complex<double> next_cgauss();

  private:
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace stsc

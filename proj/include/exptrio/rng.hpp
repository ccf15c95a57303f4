#ifndef EXPTRIO_RNG_HPP
#define EXPTRIO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace exptrio {

// 64-bit avalanche finalizer (the SplitMix64 output function).
// Used both as the generator's output stage and to derive independent
// substream seeds from (master seed, index) pairs.
inline constexpr std::uint64_t avalanche64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Seed for the index-th substream of a master stream. Equivalent to the
// index-th output of a SplitMix64 sequence started at `master`, so distinct
// indices give statistically independent streams regardless of the order
// in which they are consumed.
inline constexpr std::uint64_t derive_substream(std::uint64_t master, std::uint64_t index) noexcept {
    return avalanche64(master + 0x9E3779B97F4A7C15ull * (index + 1));
}

// SplitMix64: tiny splittable generator with an explicit 64-bit seed.
// A generator instance is single-owner; for concurrent work create one
// instance per task from derive_substream().
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        return avalanche64(state_);
    }

    // Uniform on the open interval (0, 1): never 0 or 1, so logs and
    // log-complements stay finite.
    double next_unit() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Unbiased integer in [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Standard normal via Box-Muller; consumes exactly two uniforms.
    double next_normal() noexcept {
        const double u1 = next_unit();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    std::uint64_t state_;
};

}  // namespace exptrio

#endif  // EXPTRIO_RNG_HPP

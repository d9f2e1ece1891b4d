#ifndef POLYINV_RNG_HPP
#define POLYINV_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace polyinv {

/// SplitMix64 (Steele, Lea & Flood's mix64 variant 13 finalizer). Chosen as
/// the project-wide generator because it is trivially portable: the whole
/// algorithm fits below, so any implementation in any language reproduces the
/// streams from the seed alone.
///
/// Derived values:
///  - next_double(): 53-bit mantissa scaled into [0, 1).
///  - uniform(lo, hi): lo + next_double() * (hi - lo).
///  - normal(): Box-Muller on two next_double() draws; the second variate of
///    each pair is cached and returned by the following call.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Seed for an independent substream. stream_seed(master, k) equals the
/// (k+1)-th raw output of SplitMix64(master), so parallel trials get
/// reproducible, non-overlapping generators from one master seed.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace polyinv

#endif  // POLYINV_RNG_HPP

#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace spgen {

/// Deterministic seeded random source. mt19937_64 has a standard-pinned
/// output sequence, and the draw helpers below avoid
/// std::uniform_int_distribution (whose mapping is implementation-defined),
/// so identical seeds produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi], both bounds inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw_below(span));
  }

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    return static_cast<std::size_t>(draw_below(n));
  }

 private:
  // Uniform in [0, span) by rejection; span == 0 means the full 64-bit range.
  std::uint64_t draw_below(std::uint64_t span) {
    if (span == 0) return engine_();
    const std::uint64_t min_valid = (0 - span) % span;  // 2^64 mod span
    std::uint64_t x = engine_();
    while (x < min_valid) x = engine_();
    return x % span;
  }

  std::mt19937_64 engine_;
};

}  // namespace spgen

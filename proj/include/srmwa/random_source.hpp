#pragma once

#include <cstdint>
#include <random>

namespace srmwa {

/// Deterministic stream of uniform selections seeded by a 64-bit integer.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded integers use Lemire's multiply-and-reject method and reals
/// take the top 53 bits of one draw, so a seed yields the same selections with
/// any standard library (std::uniform_int_distribution is implementation-defined).
class RandomSource {
  __extension__ using Wide = unsigned __int128;

 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n). Pre: n >= 1.
  std::uint64_t index(std::uint64_t n) {
    Wide product = static_cast<Wide>(engine_()) * n;
    auto low = static_cast<std::uint64_t>(product);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        product = static_cast<Wide>(engine_()) * n;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform real in [0, 1) on the 2^-53 lattice.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace srmwa

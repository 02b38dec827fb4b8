#pragma once

#include <cstddef>
#include <cstdint>

namespace wtd {

// 64-bit LCG (Knuth's MMIX constants). Pinned so that generated corpora are
// reproducible across platforms and implementations.
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }
  // Uniform-ish index in [0, n) from the high 32 bits. n must be > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>((next() >> 32) % n); }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace wtd

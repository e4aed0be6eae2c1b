#pragma once

#include <cstdint>

namespace matchgame {

// SplitMix64: tiny deterministic generator. Used instead of <random>
// distributions so that seeded runs are bit-identical across standard
// libraries (golden files depend on this).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); n > 0. Modulo bias is irrelevant here.
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

 private:
  uint64_t state_;
};

}  // namespace matchgame

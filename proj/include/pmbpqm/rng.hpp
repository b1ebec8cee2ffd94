// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace pmbpqm {

// SplitMix64: counter-based generator with a 64-bit state. All Monte-Carlo
// draws in this project go through it so that results are bit-identical
// across platforms and independent of thread count (each work item owns a
// generator derived from the run seed and the item index).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53-bit resolution
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform index in [0, n); n > 0
  std::uint64_t next_below(std::uint64_t n) {
    // multiply-shift; bias is < 2^-64 * n, negligible for population sizes here
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(m >> 64);
  }

private:
  std::uint64_t state_;
};

// Mixes a run seed with stream indices (iteration, sample, grid point, ...)
// into an independent generator seed.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
  SplitMix64 g(a ^ (b * 0x9e3779b97f4a7c15ull) ^ (c * 0xd1b54a32d192ed03ull));
  g.next_u64();
  return g.next_u64();
}

}  // namespace pmbpqm

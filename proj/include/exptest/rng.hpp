#pragma once

#include <cstdint>

namespace exptest {

// SplitMix64 (Steele, Lea & Flood 2014). Small, fast, and seedable from a
// single 64-bit word, which is what the simulation engine needs: every
// replication owns a stream derived from (master seed, replication index),
// so results do not depend on how replications are scheduled across threads.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Finalizer-style hash combine of a master seed and a stream index.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                           std::uint64_t stream_index) {
  std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (stream_index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// The stream for one Monte Carlo replication.
inline SplitMix64 replication_stream(std::uint64_t master_seed,
                                     std::uint64_t replication_index) {
  return SplitMix64(derive_stream_seed(master_seed, replication_index));
}

}  // namespace exptest

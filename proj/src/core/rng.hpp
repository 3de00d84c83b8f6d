// Counter-based randomness: every label is a pure function of
// (master_seed, stream_id, kind, x, y), so parallel Monte Carlo replicas are
// reproducible regardless of scheduling and thread count.
#pragma once

#include <cstdint>

namespace pg {

// splitmix64 finalizer: good avalanche, cheap, and platform-independent.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Identifies which random label a draw belongs to, so that distinct label
// families never share randomness.
enum class LabelKind : std::uint64_t {
  vertex = 1,
  edge_right = 2,
  edge_up = 3,
  pca_cell = 4,
};

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

inline std::uint64_t counter_hash(const SeedSpec& seed, LabelKind kind,
                                  std::uint64_t x, std::uint64_t y) {
  std::uint64_t h = mix64(seed.master_seed);
  h = mix64(h ^ seed.stream_id);
  h = mix64(h ^ static_cast<std::uint64_t>(kind));
  h = mix64(h ^ x);
  h = mix64(h ^ y);
  return h;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double counter_u01(const SeedSpec& seed, LabelKind kind,
                          std::uint64_t x, std::uint64_t y) {
  return static_cast<double>(counter_hash(seed, kind, x, y) >> 11) * 0x1.0p-53;
}

}  // namespace pg

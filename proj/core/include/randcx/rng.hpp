#pragma once

#include <cstdint>
#include <span>

namespace randcx {

/// SplitMix64 finaliser. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based key for a simplex: depends only on (seed, vertex set), so a
/// simplex receives the same draw regardless of the order in which it is
/// visited.
inline std::uint64_t simplex_key(std::uint64_t seed, std::span<const std::int32_t> sorted_vertices) {
  std::uint64_t h = mix64(seed ^ 0x5851F42D4C957F2DULL);
  for (auto v : sorted_vertices) {
    h = mix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x632BE59BD9B4E019ULL));
  }
  return mix64(h ^ sorted_vertices.size());
}

/// Uniform draw in (0, 1] from a 64-bit key.
constexpr double unit_open_closed(std::uint64_t key) {
  return static_cast<double>((key >> 11) + 1) * 0x1.0p-53;
}

/// Deterministic seed for trial `trial` of a campaign, derived from the
/// campaign seed and a stream tag (typically n).
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  return mix64(mix64(seed ^ mix64(stream + 0x2545F4914F6CDD1DULL)) + trial);
}

}  // namespace randcx

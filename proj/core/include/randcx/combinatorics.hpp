#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace randcx {

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n. Saturates at
/// UINT64_MAX instead of overflowing.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Binomial coefficient as a double, for exponents and normalisations.
double binomial_real(std::int64_t n, std::int64_t k);

/// Colexicographic rank of a strictly increasing vertex tuple:
/// sum_i C(v_i, i + 1). Ranks of all (k+1)-subsets of {0..n-1} are exactly
/// 0 .. C(n, k+1) - 1.
inline std::uint64_t colex_rank(std::span<const std::int32_t> sorted_vertices) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted_vertices.size(); ++i) {
    r += binomial(sorted_vertices[i], static_cast<std::int64_t>(i) + 1);
  }
  return r;
}

/// All strictly increasing (size)-tuples of {0..n-1}, flattened, in colex
/// order (so tuple j has colex rank j).
std::vector<std::int32_t> colex_combinations(int n, int size);

double factorial(int n);

}  // namespace randcx

#include "randcx/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace randcx {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

double binomial_real(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r < 9.0e15 ? std::round(r) : r;
}

std::vector<std::int32_t> colex_combinations(int n, int size) {
  std::vector<std::int32_t> out;
  if (size < 0 || size > n) return out;
  if (size == 0) return out;
  out.reserve(binomial(n, size) * static_cast<std::size_t>(size));
  std::vector<std::int32_t> c(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.insert(out.end(), c.begin(), c.end());
    // colex successor: bump the lowest position that can move
    int i = 0;
    while (i + 1 < size && c[static_cast<std::size_t>(i)] + 1 == c[static_cast<std::size_t>(i) + 1]) ++i;
    if (i == size - 1 && c[static_cast<std::size_t>(i)] + 1 >= n) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
  }
  return out;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace randcx

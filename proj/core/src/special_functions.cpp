#include "randcx/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "randcx/error.hpp"

namespace randcx {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t stirling_first(int n, int i) {
  if (n < 0 || i < 0) throw DomainError("stirling_first needs non-negative arguments");
  if (i > n) return 0;
  // Row recurrence [m+1, j] = m [m, j] + [m, j-1].
  std::vector<std::uint64_t> row{1};
  for (int m = 0; m < n; ++m) {
    std::vector<std::uint64_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < next.size(); ++j) {
      u128 v = 0;
      if (j < row.size()) v += static_cast<u128>(row[j]) * static_cast<unsigned>(m);
      if (j > 0) v += row[j - 1];
      if (v > std::numeric_limits<std::uint64_t>::max()) throw DomainError("stirling_first overflows 64 bits");
      next[j] = static_cast<std::uint64_t>(v);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

// Borwein's accelerated alternating series; error below 3 / (3 + sqrt 8)^n.
double zeta(int s) {
  if (s < 2) throw DomainError("zeta is provided for integers s >= 2");
  constexpr int n = 32;
  static const std::array<double, n + 1> d = [] {
    std::array<double, n + 1> out{};
    double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      if (i > 0) term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1) * (2.0 * i));
      acc += term;
      out[static_cast<std::size_t>(i)] = n * acc;
    }
    return out;
  }();
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = (d[static_cast<std::size_t>(k)] - d[n]) / std::pow(k + 1.0, s);
    sum += (k % 2 == 0) ? t : -t;
  }
  return -sum / (d[n] * (1.0 - std::ldexp(1.0, 1 - s)));
}

double polylog(int s, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("polylog is provided for x in [0, 1]");
  if (x == 1.0) {
    if (s <= 1) throw DomainError("polylog diverges at x = 1 for s <= 1, got s = " + std::to_string(s));
    return zeta(s);
  }
  if (x == 0.0) return 0.0;
  if (s == 1) return -std::log1p(-x);
  if (s == 0) return x / (1.0 - x);
  // Terms k^{-s} x^k peak near k = -s / log x for negative s, then decay
  // geometrically.
  const double peak = s < 0 ? -s / -std::log(x) : 0.0;
  double sum = 0.0;
  double carry = 0.0;
  double xk = 1.0;
  for (long k = 1; k < 100000000L; ++k) {
    xk *= x;
    const double term = xk * std::pow(static_cast<double>(k), -s);
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    if (k > peak && term <= 1e-18 * sum) return sum;
  }
  throw ResourceError("polylog series did not converge");
}

}  // namespace randcx

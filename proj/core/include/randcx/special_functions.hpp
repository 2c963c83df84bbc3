#pragma once

#include <cstdint>

namespace randcx {

/// Unsigned Stirling number of the first kind [n, i]: the coefficient of x^i
/// in x(x+1)...(x+n-1). [0, 0] = 1. Throws DomainError on overflow.
std::uint64_t stirling_first(int n, int i);

/// Riemann zeta at an integer s >= 2.
double zeta(int s);

/// Li_s(x) = sum_{k>=1} x^k / k^s for integer s (any sign) and x in [0, 1).
/// At x = 1 returns zeta(s) for s >= 2 and throws DomainError for s <= 1.
double polylog(int s, double x);

}  // namespace randcx

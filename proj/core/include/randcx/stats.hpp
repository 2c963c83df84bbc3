#pragma once

#include <cstddef>
#include <span>

namespace randcx {

struct Moments {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation (n - 1 denominator)
  std::size_t count = 0;
};

/// Welford accumulation.
Moments moments(std::span<const double> xs);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Ordinary least squares y = a + b x. Needs at least two distinct x.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

/// Upper tail P(chi^2_dof >= x).
double chi_square_tail(double x, int dof);

}  // namespace randcx

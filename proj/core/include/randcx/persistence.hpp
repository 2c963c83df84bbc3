#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "randcx/models.hpp"

namespace randcx {

/// Right-continuous step function t -> beta_k(X(t)). values[i] holds on
/// [times[i], times[i+1]); the last value holds on [times.back(), inf).
/// times[0] = 0 and consecutive values differ.
struct BettiStepFunction {
  int k = 0;
  std::vector<double> times;
  std::vector<std::size_t> values;
  std::size_t events = 0;  // simplex arrivals of dimension k and k + 1

  std::size_t at(double t) const;
  /// integral_0^T beta dt; +inf for T = inf when the last value is nonzero.
  double integral(double T = std::numeric_limits<double>::infinity()) const;
  /// sum_i beta_i ((t_{i+1})^alpha - (t_i)^alpha). Needs a nonincreasing
  /// function (every bar born at 0), else throws UnsupportedCase.
  double alpha_integral(double alpha) const;
  bool nonincreasing() const;
};

/// beta_k along the filtration, maintained incrementally as
/// f_k - rank d_k - rank d_{k+1}. Ranks of d_1 come from union-find, higher
/// ones from column reduction over Z/p. Needs k + 1 <= proc.top_dim().
BettiStepFunction betti_steps(const WeightedComplexProcess& proc, int k);

/// Same function, recomputed from scratch on the snapshot at every
/// breakpoint. Slow; meant for cross-checks.
BettiStepFunction betti_steps_by_snapshots(const WeightedComplexProcess& proc, int k);

struct LifetimeSummary {
  int k = 0;
  double L = 0.0;  // +inf when beta_k stays positive forever
  std::vector<double> T;
  std::vector<double> L_T;  // (L_k)_T for each requested T
  std::size_t events = 0;
};

LifetimeSummary lifetime_sum(const WeightedComplexProcess& proc, int k, const std::vector<double>& T = {});

/// L_{d-1}^{(alpha)} = sum over bars of (death)^alpha. Throws UnsupportedCase
/// when some bar of dimension d - 1 is born after time 0.
double alpha_lifetime_sum(const WeightedComplexProcess& proc, int d, double alpha);

}  // namespace randcx

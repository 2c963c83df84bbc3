#pragma once

#include <optional>

namespace randcx {

/// psi_d(t) = -log t / (1 - t)^d on (0, 1).
double psi(int d, double t);

struct CriticalPoint {
  int d;
  double t_star;
  double c_star;
};

/// t_d* is the root in (0, 1) of (d+1)(1-t) + (1+dt) log t = 0 and
/// c_d* = psi_d(t_d*); for d = 1 both are 1.
CriticalPoint critical_point(int d);

/// Smallest root of psi_d(t) = c, for c >= c_d*. Throws DomainError below.
double t_c(int d, double c);

/// Limiting normalised beta_d of the LM complex at p = c/n.
double g(int d, double c);
/// Limiting normalised beta_{d-1}: 1 - c/(d+1) + g_d(c), clamped at 0.
double h(int d, double c);

/// I_{d-1}^{(alpha)} = alpha/d! * integral_0^inf h_d(s) s^{alpha-1} ds. The
/// affine part on [0, c_d*] is integrated exactly; the rest by adaptive
/// Gauss-Kronrod up to s = cutoff (default 1e4 * c_d*).
double I_quadrature(int d, double alpha, std::optional<double> cutoff = std::nullopt);

/// Closed form of I_{d-1}^{(alpha)} for integer alpha >= 1 through Stirling
/// numbers and polylogarithms at t_d*; for d = 1 through zeta values.
double I_series(int d, int alpha);

struct ConstantReport {
  int d;
  double alpha;
  double I_quadrature;
  std::optional<double> I_series;  // only for integer alpha
  double discrepancy;              // |series - quadrature|, 0 without a series
};

/// Both evaluations, cached per (d, alpha). Thread-safe.
ConstantReport constant_report(int d, double alpha);

}  // namespace randcx

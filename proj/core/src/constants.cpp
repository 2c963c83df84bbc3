#include "randcx/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "randcx/combinatorics.hpp"
#include "randcx/error.hpp"
#include "randcx/special_functions.hpp"

namespace randcx {

namespace {

// Everything below is parametrised by u = -log t, which keeps the large-c
// tail (t_c -> 0) free of cancellation.

double psi_u(int d, double u) {
  if (u == 0.0) return d == 1 ? 1.0 : std::numeric_limits<double>::infinity();
  return u / std::pow(-std::expm1(-u), d);
}

// h_d at c = psi(u), u >= u*. With t = e^-u and s = 1 - t,
// h = t (1 + u) - u (1 - s^{d+1}) / ((d+1) s^d).
double h_u(int d, double u) {
  const double t = std::exp(-u);
  const double s = -std::expm1(-u);
  if (s == 0.0) return 1.0 - 1.0 / (d + 1);
  const double one_minus = -std::expm1((d + 1) * std::log1p(-t));
  return t * (1.0 + u) - u * one_minus / ((d + 1) * std::pow(s, d));
}

// dc/du = s^{-d-1} (s - d u t).
double dpsi_u(int d, double u) {
  const double t = std::exp(-u);
  const double s = -std::expm1(-u);
  double diff;
  if (d == 1 && u < 0.05) {
    // s - u t = sum_{k>=2} (-1)^k (k-1) u^k / k!
    diff = 0.0;
    double term = u;
    for (int k = 2; k < 14; ++k) {
      term *= u / k;
      diff += ((k % 2 == 0) ? 1.0 : -1.0) * (k - 1) * term;
    }
  } else {
    diff = s - d * u * t;
  }
  return diff / std::pow(s, d + 1);
}

double u_star(int d) { return d == 1 ? 0.0 : -std::log(critical_point(d).t_star); }

double u_of_c(int d, double c) {
  const auto cp = critical_point(d);
  if (c < cp.c_star * (1.0 - 1e-15)) {
    throw DomainError("t_c needs c >= c_d* = " + std::to_string(cp.c_star));
  }
  double lo = u_star(d);
  if (c <= cp.c_star) return lo;
  double hi = std::max(c, lo) + 1.0;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (psi_u(d, mid) < c ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double psi(int d, double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("psi needs t in (0, 1)");
  return -std::log(t) / std::pow(1.0 - t, d);
}

CriticalPoint critical_point(int d) {
  if (d < 1) throw DomainError("critical_point needs d >= 1");
  if (d == 1) return {1, 1.0, 1.0};
  auto f = [d](double t) { return (d + 1) * (1.0 - t) + (1.0 + d * t) * std::log(t); };
  double lo = 1e-300;
  double hi = 0.5;
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  const double t = std::abs(f(lo)) < std::abs(f(hi)) ? lo : hi;
  return {d, t, psi(d, t)};
}

double t_c(int d, double c) { return std::exp(-u_of_c(d, c)); }

double g(int d, double c) {
  if (d < 1) throw DomainError("g needs d >= 1");
  if (c < critical_point(d).c_star) return 0.0;
  const double u = u_of_c(d, c);
  const double t = std::exp(-u);
  const double s = -std::expm1(-u);
  // c t s^d + c s^{d+1}/(d+1) - s with c = u / s^d
  return u * t + u * s / (d + 1) - s;
}

double h(int d, double c) {
  if (d < 1) throw DomainError("h needs d >= 1");
  if (c < 0.0) throw DomainError("h needs c >= 0");
  if (c < critical_point(d).c_star) return 1.0 - c / (d + 1);
  return std::max(0.0, h_u(d, u_of_c(d, c)));
}

double I_quadrature(int d, double alpha, std::optional<double> cutoff) {
  if (d < 1) throw DomainError("I_quadrature needs d >= 1");
  if (!(alpha > 0.0)) throw DomainError("I_quadrature needs alpha > 0");
  const auto cp = critical_point(d);
  const double S = cutoff.value_or(1e4 * cp.c_star);
  const double cs = std::min(cp.c_star, S);
  double total = std::pow(cs, alpha) / alpha - std::pow(cs, alpha + 1) / ((d + 1) * (alpha + 1));
  if (S > cp.c_star) {
    auto f = [&](double u) { return h_u(d, u) * std::pow(psi_u(d, u), alpha - 1) * dpsi_u(d, u); };
    const double u_end = std::min(u_of_c(d, S), 800.0);
    double a = u_star(d);
    while (a < u_end) {
      const double b = std::min(u_end, a + std::max(1.0, a));
      total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-15);
      a = b;
    }
  }
  return alpha / factorial(d) * total;
}

double I_series(int d, int alpha) {
  if (d < 1) throw DomainError("I_series needs d >= 1");
  if (alpha < 1) throw DomainError("I_series needs an integer alpha >= 1");
  if (d == 1) {
    double sum = 0.0;
    for (int i = 0; i <= alpha - 1; ++i) sum += static_cast<double>(stirling_first(alpha - 1, i)) * zeta(alpha + 2 - i);
    return alpha * sum;
  }
  const auto cp = critical_point(d);
  const double L = -std::log(cp.t_star);
  const int m = d * alpha - 1;
  double sum = 0.0;
  for (int i = 0; i <= m; ++i) {
    const auto st = stirling_first(m, i);
    if (st == 0) continue;
    double inner = 0.0;
    double pw = 1.0;  // L^j / j!
    for (int j = 0; j <= alpha + 1; ++j) {
      if (j > 0) pw *= L / j;
      inner += pw * polylog(alpha + 2 - i - j, cp.t_star);
    }
    sum += static_cast<double>(st) * inner;
  }
  const double head = factorial(alpha) / factorial(m) * sum;
  const double boundary = std::pow(cp.c_star, alpha) * (L - (1.0 - cp.t_star)) / (d * (alpha + 1.0));
  return (head + boundary) / factorial(d);
}

ConstantReport constant_report(int d, double alpha) {
  static std::mutex mu;
  static std::map<std::pair<int, double>, ConstantReport> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({d, alpha}); it != cache.end()) return it->second;
  }
  ConstantReport r{d, alpha, I_quadrature(d, alpha), std::nullopt, 0.0};
  if (alpha == std::floor(alpha) && alpha >= 1.0 && alpha <= 64.0) {
    r.I_series = I_series(d, static_cast<int>(alpha));
    r.discrepancy = std::abs(*r.I_series - r.I_quadrature);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(d, alpha), r);
  return r;
}

}  // namespace randcx

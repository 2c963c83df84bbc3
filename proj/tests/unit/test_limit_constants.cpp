#include <catch_amalgamated.hpp>

#include <chrono>
#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "randcx/combinatorics.hpp"
#include "randcx/constants.hpp"
#include "randcx/error.hpp"
#include "randcx/special_functions.hpp"

using namespace randcx;
using Catch::Approx;

namespace {

double bz(int s) { return boost::math::zeta(static_cast<double>(s)); }

// Li_2(x) = -integral_0^x log(1 - s) / s ds
double li2(double x) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate([](double s) { return s == 0.0 ? 1.0 : -std::log1p(-s) / s; }, 0.0, x);
}

// Substituting s = psi_d(t) in the defining integral gives
// (1/(d!(alpha+1))) [int_0^{t*} (-log s)^{alpha+1} / (1-s)^{d alpha} ds
//                    + (c*)^alpha int_{t*}^1 (-log s) ds]
double I_by_substitution(int d, double alpha) {
  const auto cp = critical_point(d);
  boost::math::quadrature::tanh_sinh<double> q;
  const double head = q.integrate(
      [&](double s) { return s <= 0.0 ? 0.0 : std::pow(-std::log(s), alpha + 1) / std::pow(1.0 - s, d * alpha); }, 0.0,
      cp.t_star);
  const double t = cp.t_star;
  const double tail = (1.0 - t) + t * std::log(t);  // int_t^1 -log s ds
  return (head + std::pow(cp.c_star, alpha) * tail) / (factorial(d) * (alpha + 1));
}

}  // namespace

TEST_CASE("special function examples") {
  CHECK(polylog(1, 0.3) == Approx(-std::log(0.7)).margin(1e-12));
  CHECK(polylog(2, 0.5) == Approx(M_PI * M_PI / 12 - std::log(2.0) * std::log(2.0) / 2).margin(1e-13));
  CHECK(polylog(0, 0.25) == Approx(0.25 / 0.75).margin(1e-14));
  CHECK(polylog(-1, 0.5) == Approx(0.5 / 0.25).margin(1e-12));
  CHECK(polylog(-3, 0.2) == Approx(0.2 * (1 + 4 * 0.2 + 0.04) / std::pow(0.8, 4)).margin(1e-12));
  CHECK(polylog(3, 1.0) == Approx(bz(3)).margin(1e-14));
  CHECK_THROWS_AS(polylog(1, 1.0), DomainError);
  CHECK(li2(0.3) == Approx(polylog(2, 0.3)).margin(1e-13));

  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(3, 1) == 2);
  CHECK(stirling_first(3, 2) == 3);
  CHECK(stirling_first(3, 3) == 1);
  CHECK(stirling_first(5, 0) == 0);
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t sum = 0;
    for (int i = 0; i <= n; ++i) sum += stirling_first(n, i);
    CHECK(sum == static_cast<std::uint64_t>(factorial(n)));
  }

  CHECK(zeta(3) == Approx(1.2020569031595942).margin(1e-12));
  for (int s = 2; s <= 16; ++s) CHECK(zeta(s) == Approx(bz(s)).margin(1e-14));
}

TEST_CASE("psi and critical points") {
  CHECK(psi(2, 0.5) == Approx(4 * std::log(2.0)));
  CHECK(psi(1, 1 - 1e-9) == Approx(1.0).margin(1e-8));
  CHECK_THROWS_AS(psi(2, 1.5), DomainError);
  CHECK_THROWS_AS(psi(2, 0.0), DomainError);

  const auto c1 = critical_point(1);
  CHECK(c1.t_star == 1.0);
  CHECK(c1.c_star == 1.0);
  for (int d = 2; d <= 6; ++d) {
    const auto c = critical_point(d);
    const double t = c.t_star;
    CHECK(t > 0.0);
    CHECK(t < 1.0);
    CHECK(std::abs((d + 1) * (1 - t) + (1 + d * t) * std::log(t)) < 1e-12);
    CHECK(c.c_star == Approx(psi(d, t)));
    CHECK(c.c_star > 0.0);
  }
}

TEST_CASE("t_c, g and h") {
  for (int d = 1; d <= 4; ++d) {
    const auto cp = critical_point(d);
    CHECK(t_c(d, cp.c_star) == Approx(cp.t_star).margin(1e-12));
    for (double c : {cp.c_star * 1.01, cp.c_star * 2, cp.c_star * 10, 50.0}) {
      if (c < cp.c_star) continue;
      const double t = t_c(d, c);
      CHECK(t <= cp.t_star);
      CHECK(std::abs(psi(d, t) - c) < 1e-11 * std::max(1.0, c));
    }
    CHECK_THROWS_AS(t_c(d, cp.c_star * 0.9), DomainError);
    CHECK(g(d, 0.0) == 0.0);
    CHECK(std::abs(g(d, cp.c_star)) < 1e-9);
    CHECK(h(d, 0.0) == 1.0);
    CHECK(h(d, cp.c_star * 0.5) == Approx(1 - cp.c_star * 0.5 / (d + 1)));
    double prev = -1.0;
    for (double c = 0.0; c < 40.0; c += 0.25) {
      CHECK(g(d, c) >= prev - 1e-12);
      prev = g(d, c);
      CHECK(h(d, c) >= 0.0);
    }
  }
  CHECK(t_c(1, 1e6) < 1e-5);
  CHECK(h(1, 50.0) < 1e-3);
}

TEST_CASE("limit constant for d = 1 equals zeta combinations") {
  CHECK(I_quadrature(1, 1) == Approx(1.2020569031595942).margin(1e-8));
  CHECK(I_quadrature(1, 2) == Approx(2 * bz(3)).margin(1e-8));
  CHECK(I_quadrature(1, 3) == Approx(3 * (bz(3) + bz(4))).margin(1e-8));
  CHECK(I_series(1, 1) == Approx(bz(3)).margin(1e-12));
  CHECK(I_series(1, 2) == Approx(2 * bz(3)).margin(1e-12));
  CHECK(I_series(1, 3) == Approx(3 * (bz(3) + bz(4))).margin(1e-12));
  CHECK(I_series(1, 4) == Approx(4 * (bz(3) + 3 * bz(4) + 2 * bz(5))).margin(1e-12));
  CHECK(I_series(1, 5) == Approx(5 * (bz(3) + 6 * bz(4) + 11 * bz(5) + 6 * bz(6))).margin(1e-12));
}

TEST_CASE("closed forms for I_1 and I_2") {
  const double t2 = critical_point(2).t_star;
  const double l2 = std::log(t2);
  const double I1 = 0.5 * (li2(t2) + l2 * std::log(1 - t2) + t2 * l2 * l2 / (2 * (1 - t2)) +
                           l2 * (l2 + (1 - t2)) / (4 * (1 - t2) * (1 - t2)));
  CHECK(I_series(2, 1) == Approx(I1).margin(1e-10));

  const double t3 = critical_point(3).t_star;
  const double l3 = std::log(t3);
  const double I2 = (li2(t3) + (l3 - 1) * std::log(1 - t3) + t3 * l3 * (l3 - 2) / (2 * (1 - t3)) +
                     t3 * l3 * l3 / (2 * (1 - t3) * (1 - t3)) + l3 * (l3 + (1 - t3)) / (3 * std::pow(1 - t3, 3))) /
                    12.0;
  CHECK(I_series(3, 1) == Approx(I2).margin(1e-10));
}

TEST_CASE("series and quadrature agree") {
  const auto start = std::chrono::steady_clock::now();
  for (int d = 1; d <= 3; ++d) {
    for (int a = 1; a <= 3; ++a) {
      const double s = I_series(d, a);
      const double q = I_quadrature(d, a);
      CHECK(std::abs(s - q) < 1e-8);
      CHECK(q == Approx(I_by_substitution(d, a)).epsilon(1e-9));
      CHECK(q > 0.0);
      const auto r = constant_report(d, a);
      REQUIRE(r.I_series);
      CHECK(r.discrepancy < 1e-8);
    }
  }
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 5.0);

  // fractional alpha: quadrature only
  const auto frac = constant_report(2, 1.5);
  CHECK_FALSE(frac.I_series);
  CHECK(frac.I_quadrature == Approx(I_by_substitution(2, 1.5)).epsilon(1e-9));

  // the tail beyond the default cutoff is negligible
  for (int d = 1; d <= 3; ++d) {
    const double S = 1e4 * critical_point(d).c_star;
    for (int a = 1; a <= 3; ++a) CHECK(std::abs(I_quadrature(d, a, 2 * S) - I_quadrature(d, a, S)) < 1e-12);
  }
}

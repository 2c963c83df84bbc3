#include "randcx/stats.hpp"

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "randcx/error.hpp"

namespace randcx {

Moments moments(std::span<const double> xs) {
  Moments m;
  double m2 = 0.0;
  for (double x : xs) {
    ++m.count;
    const double delta = x - m.mean;
    m.mean += delta / static_cast<double>(m.count);
    m2 += delta * (x - m.mean);
  }
  if (m.count > 1) m.std = std::sqrt(m2 / static_cast<double>(m.count - 1));
  return m;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("linear_fit needs two equally long series of length >= 2");
  const auto mx = moments(x).mean;
  const auto my = moments(y).mean;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("linear_fit needs distinct x values");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0.0 ? 1.0 : sxy * sxy / (sxx * syy);
  return f;
}

double chi_square_tail(double x, int dof) {
  if (dof < 1) throw DomainError("chi_square_tail needs dof >= 1");
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

}  // namespace randcx

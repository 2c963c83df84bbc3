#include "randcx/models.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "randcx/combinatorics.hpp"
#include "randcx/error.hpp"
#include "randcx/rng.hpp"
#include "randcx/stats.hpp"

namespace randcx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double powc(double base, double exponent) {
  if (exponent == 0.0) return 1.0;
  if (base == 0.0) return 0.0;
  return std::pow(base, exponent);
}

// Keep iff the simplex's own draw is <= p. Draws are skipped when the answer
// does not depend on them.
bool keep(std::uint64_t seed, std::span<const Vertex> vs, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return unit_open_closed(simplex_key(seed, vs)) <= p;
}

double appearance_time(const ParamFunction& f, std::uint64_t seed, std::span<const Vertex> vs) {
  if (f.kind() == ParamFunction::Kind::constant) return f.parameter() >= 1.0 ? 0.0 : (f.parameter() <= 0.0 ? kInf : f.inverse(unit_open_closed(simplex_key(seed, vs))));
  if (f.kind() == ParamFunction::Kind::step) return f.parameter();
  return f.inverse(unit_open_closed(simplex_key(seed, vs)));
}

double saturation_up_to(const ParamFunctions& pf, int max_dim) {
  double s = 0.0;
  for (int i = 0; i <= max_dim; ++i) s = std::max(s, pf.at(i).saturation_time());
  return s;
}

}  // namespace

void MultiParameter::validate() const {
  for (double x : p) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("multi-parameter entries must lie in [0, 1]");
  }
}

MultiParameter MultiParameter::lm(int d, double p) {
  MultiParameter m;
  m.p.assign(static_cast<std::size_t>(d), 1.0);
  m.p.push_back(p);
  return m;
}

MultiParameter MultiParameter::clique(int n, double p) {
  MultiParameter m;
  m.p.assign(static_cast<std::size_t>(std::max(n, 2)), 1.0);
  m.p[1] = p;
  return m;
}

double DerivedParams::q(int k) const {
  if (k < -1 || k + 1 >= static_cast<int>(q_values.size())) throw DomainError("q: k out of range");
  return q_values[static_cast<std::size_t>(k + 1)];
}

double DerivedParams::r(int k) const {
  if (k < -1 || k + 1 >= static_cast<int>(r_values.size())) throw DomainError("r: k out of range");
  return r_values[static_cast<std::size_t>(k + 1)];
}

double q_param(const MultiParameter& p, int k) {
  double q = 1.0;
  for (int i = 0; i <= k; ++i) q *= powc(p[i], binomial_real(k + 1, i + 1));
  return q;
}

double r_param(const MultiParameter& p, int k) {
  double r = 1.0;
  for (int i = 0; i <= k + 1; ++i) r *= powc(p[i], binomial_real(k + 1, i));
  return r;
}

DerivedParams derive_params(const MultiParameter& p, int k_max) {
  p.validate();
  DerivedParams d;
  for (int k = -1; k <= k_max; ++k) {
    d.q_values.push_back(q_param(p, k));
    d.r_values.push_back(r_param(p, k));
  }
  return d;
}

SimplicialComplex sample_static(int n, const MultiParameter& p, std::uint64_t seed, int max_dim) {
  p.validate();
  if (n < 0) throw DomainError("sample_static needs n >= 0");
  std::vector<std::vector<Simplex>> levels(1);
  std::vector<Vertex> present;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex vs[1] = {i};
    if (keep(seed, vs, p[0])) {
      levels[0].push_back(Simplex::from_sorted(vs));
      present.push_back(i);
    }
  }
  std::vector<Vertex> buf;
  for (int j = 1; (max_dim < 0 || j <= max_dim) && p[j] > 0.0 && !levels.back().empty(); ++j) {
    const auto& lower = levels.back();
    std::unordered_set<Simplex, SimplexHash> lower_set(lower.begin(), lower.end());
    std::vector<Simplex> next;
    for (const auto& s : lower) {
      for (auto it = std::upper_bound(present.begin(), present.end(), s.vertices().back()); it != present.end(); ++it) {
        buf.assign(s.begin(), s.end());
        buf.push_back(*it);
        bool faces = true;
        for (std::size_t drop = 0; drop + 1 < buf.size() && faces; ++drop) {
          std::vector<Vertex> f;
          f.reserve(buf.size() - 1);
          for (std::size_t m = 0; m < buf.size(); ++m) {
            if (m != drop) f.push_back(buf[m]);
          }
          faces = lower_set.count(Simplex::from_sorted(f)) > 0;
        }
        if (faces && keep(seed, buf, p[j])) next.push_back(Simplex::from_sorted(buf));
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return SimplicialComplex::from_levels(n, std::move(levels));
}

WeightedComplexProcess::WeightedComplexProcess(int n, int top_dim, std::uint64_t seed)
    : n_(n), top_dim_(top_dim), seed_(seed) {
  if (top_dim < 0 || top_dim > n - 1) throw DomainError("process dimension must lie in [0, n - 1]");
  if (binomial(n, top_dim + 1) > (std::uint64_t{1} << 26)) throw ResourceError("process would materialise too many simplices");
  for (int j = 0; j <= top_dim; ++j) {
    vertices_.push_back(colex_combinations(n, j + 1));
    weights_.emplace_back(binomial(n, j + 1), 0.0);
  }
}

std::span<const std::int32_t> WeightedComplexProcess::vertices(int j, std::size_t slot) const {
  const auto len = static_cast<std::size_t>(j) + 1;
  return std::span<const std::int32_t>(vertices_[static_cast<std::size_t>(j)]).subspan(slot * len, len);
}

double WeightedComplexProcess::weight(const Simplex& s) const {
  if (s.dim() < 0 || s.dim() > top_dim_) throw DomainError("weight: dimension not materialised");
  if (s.vertices().back() >= n_) throw DomainError("weight: vertex out of range");
  return weights_[static_cast<std::size_t>(s.dim())][colex_rank(s.vertices())];
}

std::size_t WeightedComplexProcess::facet_slot(int j, std::size_t slot, int i) const {
  const auto v = vertices(j, slot);
  std::uint64_t r = 0;
  for (int m = 0; m <= j; ++m) {
    if (m < i) r += binomial(v[static_cast<std::size_t>(m)], m + 1);
    if (m > i) r += binomial(v[static_cast<std::size_t>(m)], m);
  }
  return static_cast<std::size_t>(r);
}

SimplicialComplex WeightedComplexProcess::snapshot(double t) const {
  std::vector<std::vector<Simplex>> levels;
  for (int j = 0; j <= top_dim_; ++j) {
    std::vector<Simplex> level;
    const auto& w = weights_[static_cast<std::size_t>(j)];
    for (std::size_t s = 0; s < w.size(); ++s) {
      if (w[s] <= t) level.push_back(Simplex::from_sorted(vertices(j, s)));
    }
    if (level.empty()) break;
    levels.push_back(std::move(level));
  }
  return SimplicialComplex::from_levels(n_, std::move(levels));
}

WeightedComplexProcess sample_process(int n, const ParamFunctions& pf, int k_max, std::uint64_t seed) {
  if (k_max < 0 || k_max + 1 > n - 1) throw DomainError("sample_process needs 0 <= k_max and k_max + 1 <= n - 1");
  WeightedComplexProcess proc(n, k_max + 1, seed);
  for (int j = 0; j <= k_max + 1; ++j) {
    const auto& f = pf.at(j);
    auto& w = proc.weights_[static_cast<std::size_t>(j)];
    for (std::size_t s = 0; s < w.size(); ++s) {
      double u = appearance_time(f, seed, proc.vertices(j, s));
      if (j > 0) {
        for (int i = 0; i <= j; ++i) u = std::max(u, proc.weights_[static_cast<std::size_t>(j) - 1][proc.facet_slot(j, s, i)]);
      }
      w[s] = u;
    }
  }
  return proc;
}

double q_of_t(const ParamFunctions& pf, int k, double t) {
  double q = 1.0;
  for (int i = 0; i <= k && q > 0.0; ++i) q *= powc(pf.at(i)(t), binomial_real(k + 1, i + 1));
  return q;
}

double r_of_t(const ParamFunctions& pf, int k, double t) {
  double r = 1.0;
  for (int i = 0; i <= k + 1 && r > 0.0; ++i) r *= powc(pf.at(i)(t), binomial_real(k + 1, i));
  return r;
}

double r_inverse(const ParamFunctions& pf, int k, double u) {
  if (r_of_t(pf, k, 0.0) > u) return 0.0;
  double hi = saturation_up_to(pf, k + 1);
  if (!(r_of_t(pf, k, hi) > u)) return kInf;
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (r_of_t(pf, k, mid) > u ? hi : lo) = mid;
  }
  return hi;
}

double Q_integral(const ParamFunctions& pf, int k, double t) {
  if (t <= 0.0) return 0.0;
  const double sat = saturation_up_to(pf, k);
  if (std::isinf(t)) {
    if (q_of_t(pf, k, sat) > 0.0) return kInf;
    t = sat;
  }
  std::vector<double> cuts{0.0};
  for (double b : pf.breakpoints(k)) {
    if (b > 0.0 && b < std::min(t, sat)) cuts.push_back(b);
  }
  cuts.push_back(std::min(t, sat));
  double total = 0.0;
  auto q = [&](double s) { return q_of_t(pf, k, s); };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) {
      total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(q, cuts[i], cuts[i + 1], 15, 1e-13);
    }
  }
  if (t > sat) total += q_of_t(pf, k, sat) * (t - sat);
  return total;
}

PhiPsi phi_psi(const ParamFunctions& pf, int k, double u) {
  if (k < 0) throw DomainError("phi_psi needs k >= 0");
  if (!(u >= 0.0 && u < 1.0)) throw DomainError("phi_psi needs u in [0, 1)");
  return {Q_integral(pf, k, r_inverse(pf, k, u)), Q_integral(pf, k, r_inverse(pf, k - 1, u))};
}

LinkProbeReport link_distribution_probe(int n, const MultiParameter& p, int k, int trials, std::uint64_t seed) {
  if (k < 0 || k > n) throw DomainError("link_distribution_probe needs 0 <= k <= n");
  if (trials < 1) throw DomainError("link_distribution_probe needs trials >= 1");
  const int m = n - k;
  LinkProbeReport rep;
  rep.histogram.assign(static_cast<std::size_t>(m) + 1, 0);
  std::vector<Vertex> tau_vs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) tau_vs[static_cast<std::size_t>(i)] = i;
  const Simplex tau = Simplex::from_sorted(tau_vs);
  for (int t = 0; t < trials; ++t) {
    const auto X = sample_static(n, p, trial_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)), k);
    if (!X.contains(tau)) continue;
    int N = 0;
    for (Vertex v = k; v < n; ++v) {
      if (X.contains(tau.with_vertex(v))) ++N;
    }
    ++rep.conditioned;
    ++rep.histogram[static_cast<std::size_t>(N)];
  }
  const double r = r_param(p, k - 1);
  if (r <= 0.0 || r >= 1.0) {
    rep.degenerate = true;
    const int expected = r >= 1.0 ? m : 0;
    rep.p_value = rep.histogram[static_cast<std::size_t>(expected)] == rep.conditioned ? 1.0 : 0.0;
    rep.inconclusive = rep.conditioned == 0;
    return rep;
  }
  if (rep.conditioned < 50) {
    rep.inconclusive = true;
    return rep;
  }
  const boost::math::binomial_distribution<double> law(m, r);
  std::vector<double> expected_groups;
  std::vector<double> observed_groups;
  double e_acc = 0.0;
  double o_acc = 0.0;
  for (int x = 0; x <= m; ++x) {
    e_acc += rep.conditioned * boost::math::pdf(law, x);
    o_acc += rep.histogram[static_cast<std::size_t>(x)];
    if (e_acc >= 5.0) {
      expected_groups.push_back(e_acc);
      observed_groups.push_back(o_acc);
      e_acc = o_acc = 0.0;
    }
  }
  if (!expected_groups.empty()) {
    expected_groups.back() += e_acc;
    observed_groups.back() += o_acc;
  }
  if (expected_groups.size() < 2) {
    rep.inconclusive = true;
    return rep;
  }
  for (std::size_t g = 0; g < expected_groups.size(); ++g) {
    const double diff = observed_groups[g] - expected_groups[g];
    rep.chi_square += diff * diff / expected_groups[g];
  }
  rep.dof = static_cast<int>(expected_groups.size()) - 1;
  rep.p_value = chi_square_tail(rep.chi_square, rep.dof);
  return rep;
}

}  // namespace randcx

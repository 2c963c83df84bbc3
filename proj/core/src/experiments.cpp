#include "randcx/experiments.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "randcx/combinatorics.hpp"
#include "randcx/constants.hpp"
#include "randcx/error.hpp"
#include "randcx/homology.hpp"
#include "randcx/persistence.hpp"
#include "randcx/rng.hpp"
#include "randcx/special_functions.hpp"
#include "randcx/spectral.hpp"

namespace randcx {

namespace {

void check_grid(const std::vector<int>& n_grid, int trials) {
  if (n_grid.empty()) throw DomainError("empty n grid");
  if (trials < 1) throw DomainError("trials must be >= 1");
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1]) throw DomainError("n grid must be strictly ascending");
  }
}

template <class Stat>
CampaignRow run_row(const std::string& model, int n, int k, double alpha, int trials, std::uint64_t seed, Stat stat) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    xs.push_back(stat(trial_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t))));
  }
  const auto m = moments(xs);
  CampaignRow row;
  row.model = model;
  row.n = n;
  row.k = k;
  row.alpha = alpha;
  row.trials = trials;
  row.mean = m.mean;
  row.std = m.std;
  return row;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : std::string(); }

}  // namespace

CampaignResult run_frieze(const std::vector<int>& n_grid, int trials, std::uint64_t seed) {
  check_grid(n_grid, trials);
  CampaignResult res;
  res.name = "frieze";
  res.reference = zeta(3);
  const auto pf = ParamFunctions::lm(1);
  for (int n : n_grid) {
    if (n < 2) throw DomainError("frieze needs n >= 2");
    auto row = run_row("er", n, 0, 1.0, trials, seed, [&](std::uint64_t s) {
      return lifetime_sum(sample_process(n, pf, 0, s), 0).L;
    });
    row.reference = res.reference;
    res.rows.push_back(row);
  }
  return res;
}

CampaignResult run_lm_limit(int d, const std::vector<int>& n_grid, int trials, double alpha, std::uint64_t seed) {
  check_grid(n_grid, trials);
  if (d < 1) throw DomainError("lm campaign needs d >= 1");
  CampaignResult res;
  res.name = "lm";
  const auto report = constant_report(d, alpha);
  res.reference = report.I_series.value_or(report.I_quadrature);
  const auto pf = ParamFunctions::lm(d);
  for (int n : n_grid) {
    if (n < d + 1) throw DomainError("lm campaign needs n > d");
    const double norm = std::pow(static_cast<double>(n), d - alpha);
    auto row = run_row(pf.name, n, d - 1, alpha, trials, seed, [&](std::uint64_t s) {
      return alpha_lifetime_sum(sample_process(n, pf, d - 1, s), d, alpha) / norm;
    });
    row.reference = res.reference;
    res.rows.push_back(row);
  }
  return res;
}

double predicted_flag_exponent(int d, int k) {
  if (d < 1 || k < d - 1) throw DomainError("flag exponent needs d >= 1 and k >= d - 1");
  return (k + 2.0) * d / (d + 1.0) - 1.0 / binomial_real(k + 1, d);
}

CampaignResult run_clique_exponent(int k, const std::vector<int>& n_grid, int trials, std::uint64_t seed, int d) {
  check_grid(n_grid, trials);
  CampaignResult res;
  res.name = "clique";
  res.reference = predicted_flag_exponent(d, k);
  const auto pf = ParamFunctions::flag(d);
  std::vector<double> lx;
  std::vector<double> ly;
  for (int n : n_grid) {
    if (n < k + 2) throw DomainError("clique campaign needs n >= k + 2");
    auto row = run_row(pf.name, n, k, 1.0, trials, seed, [&](std::uint64_t s) {
      return lifetime_sum(sample_process(n, pf, k, s), k).L;
    });
    row.reference = res.reference;
    res.rows.push_back(row);
    if (row.mean > 0.0) {
      lx.push_back(std::log(static_cast<double>(n)));
      ly.push_back(std::log(row.mean));
    }
  }
  if (lx.size() >= 2) {
    res.fit = linear_fit(lx, ly);
    for (auto& row : res.rows) {
      row.slope = res.fit->slope;
      row.r2 = res.fit->r2;
    }
  }
  return res;
}

InstanceCheck check_morse_euler(const SimplicialComplex& X, const std::vector<std::size_t>& betti) {
  InstanceCheck c;
  const auto f = f_vector(X);
  long long chi_f = 0;
  long long chi_b = 0;
  for (int k = 0; k <= X.dim(); ++k) {
    const auto b = k < static_cast<int>(betti.size()) ? static_cast<long long>(betti[static_cast<std::size_t>(k)]) : 0LL;
    const auto fk = static_cast<long long>(f.f(k));
    const auto lower = fk - static_cast<long long>(f.f(k + 1)) - static_cast<long long>(f.f(k - 1));
    if (b < lower || b > fk) c.morse = false;
    chi_f += (k % 2 == 0 ? 1 : -1) * fk;
    chi_b += (k % 2 == 0 ? 1 : -1) * b;
  }
  if (!X.empty() && chi_b != chi_f - 1) c.euler = false;
  return c;
}

AuditReport run_bound_audit(const std::string& model, const MultiParameter& p, int n, int k, int trials,
                            std::uint64_t seed, const AuditOptions& options) {
  if (k < 0) throw DomainError("audit needs k >= 0");
  if (trials < 1) throw DomainError("trials must be >= 1");
  AuditReport rep;
  rep.model = model;
  rep.n = n;
  rep.k = k;
  rep.trials = trials;
  std::vector<double> bs;
  int nonzero = 0;
  for (int t = 0; t < trials; ++t) {
    const auto X = sample_static(n, p, trial_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)));
    const auto betti = betti_all(X, std::max(X.dim(), k));
    const auto bk = betti[static_cast<std::size_t>(k)];
    bs.push_back(static_cast<double>(bk));
    if (bk) ++nonzero;
    const auto chk = check_morse_euler(X, betti);
    rep.morse_violations += !chk.morse;
    rep.euler_violations += !chk.euler;
    if (betti_upper_bound(X, k + 1).bound < bk) ++rep.bound_violations;
    if (bk > 0 && vanishing_check(X, k + 1)) ++rep.vanishing_violations;
  }
  const auto m = moments(bs);
  rep.mean_betti = m.mean;
  rep.std_betti = m.std;
  rep.nonzero_freq = static_cast<double>(nonzero) / trials;
  const double nd = n;
  rep.scale = std::pow(nd, k + 1) * q_param(p, k);
  rep.vanish_bound = rep.scale * std::pow(nd * r_param(p, k - 1), -options.rho);
  rep.decay_bound = rep.scale * std::min(1.0, std::pow(nd * r_param(p, k), -options.l));
  return rep;
}

std::string campaign_csv(const CampaignResult& result, bool header) {
  std::ostringstream os;
  if (header) os << "model,n,k,alpha,trials,mean,std,reference,slope,r2\n";
  for (const auto& r : result.rows) {
    os << r.model << ',' << r.n << ',' << r.k << ',' << fmt(r.alpha) << ',' << r.trials << ',' << fmt(r.mean) << ','
       << fmt(r.std) << ',' << fmt(r.reference) << ',' << fmt(r.slope) << ',' << fmt(r.r2) << '\n';
  }
  return os.str();
}

std::string campaign_json_lines(const CampaignResult& result) {
  std::ostringstream os;
  for (const auto& r : result.rows) {
    nlohmann::json j{{"campaign", result.name}, {"model", r.model}, {"n", r.n},         {"k", r.k},
                     {"alpha", r.alpha},        {"trials", r.trials}, {"mean", r.mean}, {"std", r.std},
                     {"reference", r.reference}};
    j["slope"] = r.slope ? nlohmann::json(*r.slope) : nlohmann::json(nullptr);
    j["r2"] = r.r2 ? nlohmann::json(*r.r2) : nlohmann::json(nullptr);
    os << j.dump() << '\n';
  }
  return os.str();
}

std::string audit_csv(const AuditReport& r, bool header) {
  std::ostringstream os;
  if (header) {
    os << "model,n,k,trials,mean_betti,std_betti,nonzero_freq,scale,vanish_bound,decay_bound,"
          "bound_violations,vanishing_violations,morse_violations,euler_violations\n";
  }
  os << r.model << ',' << r.n << ',' << r.k << ',' << r.trials << ',' << fmt(r.mean_betti) << ',' << fmt(r.std_betti)
     << ',' << fmt(r.nonzero_freq) << ',' << fmt(r.scale) << ',' << fmt(r.vanish_bound) << ',' << fmt(r.decay_bound)
     << ',' << r.bound_violations << ',' << r.vanishing_violations << ',' << r.morse_violations << ','
     << r.euler_violations << '\n';
  return os.str();
}

std::string audit_json(const AuditReport& r) {
  nlohmann::json j{{"model", r.model},
                   {"n", r.n},
                   {"k", r.k},
                   {"trials", r.trials},
                   {"mean_betti", r.mean_betti},
                   {"std_betti", r.std_betti},
                   {"nonzero_freq", r.nonzero_freq},
                   {"scale", r.scale},
                   {"vanish_bound", r.vanish_bound},
                   {"decay_bound", r.decay_bound},
                   {"bound_violations", r.bound_violations},
                   {"vanishing_violations", r.vanishing_violations},
                   {"morse_violations", r.morse_violations},
                   {"euler_violations", r.euler_violations}};
  return j.dump() + "\n";
}

}  // namespace randcx

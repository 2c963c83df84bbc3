#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randcx/complex.hpp"
#include "randcx/models.hpp"
#include "randcx/stats.hpp"

namespace randcx {

/// One line of the campaign CSV: model,n,k,alpha,trials,mean,std,reference,slope,r2
struct CampaignRow {
  std::string model;
  int n = 0;
  int k = 0;
  double alpha = 1.0;
  int trials = 0;
  double mean = 0.0;
  double std = 0.0;
  double reference = 0.0;
  std::optional<double> slope;
  std::optional<double> r2;
};

struct CampaignResult {
  std::string name;
  std::vector<CampaignRow> rows;
  double reference = 0.0;
  std::optional<LinearFit> fit;  // log mean against log n, when fitted
};

/// ER process; mean of L_0 per n against zeta(3).
CampaignResult run_frieze(const std::vector<int>& n_grid, int trials, std::uint64_t seed);

/// LM(d) process; mean of L_{d-1}^{(alpha)} / n^{d - alpha} against
/// I_{d-1}^{(alpha)} (series value for integer alpha).
CampaignResult run_lm_limit(int d, const std::vector<int>& n_grid, int trials, double alpha, std::uint64_t seed);

/// Growth exponent (k+2)d/(d+1) - 1/C(k+1, d) of E[L_k] for the d-flag
/// process.
double predicted_flag_exponent(int d, int k);

/// d-flag process (d = 1: clique); fits log mean L_k against log n.
CampaignResult run_clique_exponent(int k, const std::vector<int>& n_grid, int trials, std::uint64_t seed, int d = 1);

/// Morse sandwich f_k - f_{k+1} - f_{k-1} <= beta_k <= f_k for every k, and
/// the reduced Euler-Poincare identity, checked on one complex.
struct InstanceCheck {
  bool morse = true;
  bool euler = true;
};
InstanceCheck check_morse_euler(const SimplicialComplex& X, const std::vector<std::size_t>& betti);

struct AuditOptions {
  double rho = 1.0;  // exponent in the vanishing-probability bound
  int l = 1;         // decay exponent in the expectation bound
};

struct AuditReport {
  std::string model;
  int n = 0;
  int k = 0;
  int trials = 0;
  double mean_betti = 0.0;
  double std_betti = 0.0;
  double nonzero_freq = 0.0;
  double scale = 0.0;           // n^{k+1} q_k
  double vanish_bound = 0.0;    // n^{k+1} q_k (n r_{k-1})^{-rho}
  double decay_bound = 0.0;     // n^{k+1} q_k min(1, (n r_k)^{-l})
  std::size_t bound_violations = 0;      // beta_k > spectral bound with D = k + 1
  std::size_t vanishing_violations = 0;  // gap condition holds but beta_k > 0
  std::size_t morse_violations = 0;
  std::size_t euler_violations = 0;

  bool clean() const {
    return bound_violations == 0 && vanishing_violations == 0 && morse_violations == 0 && euler_violations == 0;
  }
};

/// Samples X(n, p) and reports beta_k against the bound expressions, plus the
/// per-instance spectral bound, vanishing, Morse and Euler audits.
AuditReport run_bound_audit(const std::string& model, const MultiParameter& p, int n, int k, int trials,
                            std::uint64_t seed, const AuditOptions& options = {});

std::string campaign_csv(const CampaignResult& result, bool header = true);
std::string campaign_json_lines(const CampaignResult& result);
std::string audit_csv(const AuditReport& report, bool header = true);
std::string audit_json(const AuditReport& report);

}  // namespace randcx

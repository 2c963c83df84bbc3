#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "randcx/complex.hpp"
#include "randcx/param_functions.hpp"

namespace randcx {

/// Static multi-parameter p = (p_0, p_1, ...). Entries past the end are 0.
struct MultiParameter {
  std::vector<double> p;

  double operator[](int i) const {
    return i >= 0 && static_cast<std::size_t>(i) < p.size() ? p[static_cast<std::size_t>(i)] : 0.0;
  }
  /// Throws DomainError unless every entry lies in [0, 1].
  void validate() const;

  /// (1, ..., 1, p, 0, ...) with p at index d.
  static MultiParameter lm(int d, double p);
  /// (1, p, 1, ..., 1) of length n.
  static MultiParameter clique(int n, double p);
};

/// q_k = prod_i p_i^C(k+1, i+1) and r_k = prod_i p_i^C(k+1, i), for
/// k = -1 .. k_max.
struct DerivedParams {
  std::vector<double> q_values;  // q_values[k + 1]
  std::vector<double> r_values;  // r_values[k + 1]

  double q(int k) const;
  double r(int k) const;
};

DerivedParams derive_params(const MultiParameter& p, int k_max);
double q_param(const MultiParameter& p, int k);
double r_param(const MultiParameter& p, int k);

/// X(n, p): vertex i enters with probability p_0, and a j-simplex whose
/// facets are all present enters with probability p_j. A simplex is kept iff
/// its own uniform draw U_sigma (keyed on seed and vertex set) is <= p_j.
/// `max_dim` caps the dimension (negative: no cap).
SimplicialComplex sample_static(int n, const MultiParameter& p, std::uint64_t seed, int max_dim = -1);

/// Multi-parameter complex process on n vertices, materialised up to
/// dimension k_max + 1. Simplices of dimension j are stored in colex order,
/// so a simplex's slot is its colex rank.
class WeightedComplexProcess {
 public:
  static constexpr double never = std::numeric_limits<double>::infinity();

  WeightedComplexProcess(int n, int top_dim, std::uint64_t seed);

  int n() const { return n_; }
  int top_dim() const { return top_dim_; }
  std::uint64_t seed() const { return seed_; }

  std::size_t count(int j) const { return weights_[static_cast<std::size_t>(j)].size(); }
  std::span<const std::int32_t> vertices(int j, std::size_t slot) const;
  std::span<const double> weights(int j) const { return weights_[static_cast<std::size_t>(j)]; }
  double weight(const Simplex& s) const;

  /// X_n(t) = {sigma : w_sigma <= t}, up to top_dim.
  SimplicialComplex snapshot(double t) const;

  /// Slot of the i-th facet (vertex i removed) of simplex `slot` in dim j.
  std::size_t facet_slot(int j, std::size_t slot, int i) const;

 private:
  friend WeightedComplexProcess sample_process(int, const ParamFunctions&, int, std::uint64_t);

  int n_;
  int top_dim_;
  std::uint64_t seed_;
  std::vector<std::vector<std::int32_t>> vertices_;
  std::vector<std::vector<double>> weights_;
};

/// u_sigma = inf{t : p_j(t) >= U_sigma}, w_sigma = max of u over the nonempty
/// faces of sigma. Requires 0 <= k_max and k_max + 1 <= n - 1.
WeightedComplexProcess sample_process(int n, const ParamFunctions& pf, int k_max, std::uint64_t seed);

/// r_k(t) and q_k(t) for time-dependent parameters.
double q_of_t(const ParamFunctions& pf, int k, double t);
double r_of_t(const ParamFunctions& pf, int k, double t);

/// Generalised inverse inf{t >= 0 : r_k(t) > u}; +inf if r_k never exceeds u.
double r_inverse(const ParamFunctions& pf, int k, double u);
/// Q_k(t) = integral_0^t q_k(s) ds; +inf for t = inf unless q_k vanishes
/// eventually.
double Q_integral(const ParamFunctions& pf, int k, double t);

struct PhiPsi {
  double phi;
  double psi;
};
/// (Q_k(r_inverse(k, u)), Q_k(r_inverse(k - 1, u))) for u in [0, 1).
PhiPsi phi_psi(const ParamFunctions& pf, int k, double u);

struct LinkProbeReport {
  int conditioned = 0;  // trials in which tau was present
  double chi_square = 0.0;
  int dof = 0;
  double p_value = 1.0;
  bool degenerate = false;    // Bin(n-k, r) is a point mass
  bool inconclusive = false;  // too few conditioned trials
  std::vector<int> histogram;  // counts of N = 0 .. n-k
};

/// Samples X(n, p), keeps trials containing tau = {0, ..., k-1}, and tests
/// the number of link vertices of tau against Bin(n - k, r_{k-1}).
LinkProbeReport link_distribution_probe(int n, const MultiParameter& p, int k, int trials, std::uint64_t seed);

}  // namespace randcx

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "randcx/complex.hpp"

namespace randcx {

inline constexpr double kEigenTolerance = 1e-9;

/// Averaging matrix A[G] of the 1-skeleton, rows and columns in the order of
/// G.simplices(0). Isolated vertices get a 1 on the diagonal.
Eigen::MatrixXd averaging_matrix(const SimplicialComplex& G);

struct SpectrumReport {
  /// Eigenvalues of I - A[G], ascending, one per vertex of G.
  std::vector<double> eigenvalues;
  /// Second smallest eigenvalue; 0 when G has fewer than two vertices.
  double lambda2 = 0.0;

  std::size_t zero_multiplicity(double tol = kEigenTolerance) const;
};

/// Spectrum of the normalised Laplacian of the 1-skeleton of G. Computed on
/// the symmetric matrix I - D^{-1/2} W D^{-1/2} over the non-isolated
/// vertices, plus one zero per isolated vertex.
SpectrumReport laplacian_spectrum(const SimplicialComplex& G);

/// gamma(G; alpha) = #{i : lambda_i <= alpha} - 1, and 0 for the empty graph.
std::size_t gamma_count(const SpectrumReport& spectrum, double alpha, double tol = kEigenTolerance);
std::size_t gamma_count(const SimplicialComplex& G, double alpha, double tol = kEigenTolerance);

struct BettiBound {
  std::size_t bound = 0;
  struct Term {
    Simplex tau;
    std::size_t gamma;
  };
  std::vector<Term> terms;
};

/// Sum over tau in X_{D-2} of gamma(lk_X(tau)^{(1)}; 1 - 1/D). For D = 1 the
/// only tau is the empty simplex, whose link is X.
BettiBound betti_upper_bound(const SimplicialComplex& X, int D);

/// True iff lambda_2[lk_X(tau)] > 1 - 1/D for every tau in X_{D-2}.
bool vanishing_check(const SimplicialComplex& X, int D);

/// w_{2l}^{v,e}: closed walks of length 2l on v unlabeled vertices that use
/// exactly e distinct edges. Enumerated exhaustively; l <= 4.
std::uint64_t closed_walk_count(int l, int v, int e);

/// Upper bound on E #{i : mu_i >= alpha} for the averaging-matrix eigenvalues
/// mu_i of G(n, p).
double er_eigencount_bound(int n, double p, double alpha, int l);

/// G(n, p) as a 1-dimensional complex on all n vertices.
SimplicialComplex sample_er_graph(int n, double p, std::uint64_t seed);

/// Fraction of G(n, p) samples with lambda_2 > 1 - eps.
double spectral_gap_probe(int n, double p, double eps, int trials, std::uint64_t seed);

}  // namespace randcx

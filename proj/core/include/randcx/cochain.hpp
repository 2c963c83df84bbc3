#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "randcx/complex.hpp"

namespace randcx {

/// A k-cochain, stored by its values on the ascending representatives of
/// X.simplices(k). For k = -1 there is a single value.
struct Cochain {
  int k = 0;
  Eigen::VectorXd values;
};

enum class Basis {
  natural,      // indicator functions of ascending simplices
  orthonormal,  // the same, rescaled by 1/sqrt(m(sigma))
};

/// Cochains on a pure D-dimensional complex with the m-weighted inner
/// product, where m(sigma) is the number of D-simplices containing sigma and
/// m(empty) = #X_D.
///
/// Summing over ordered simplices gives (k+1)! equal copies of each
/// ascending term, so (phi, psi) = sum_{ascending sigma} m(sigma) phi psi.
class WeightedCochainSpace {
 public:
  /// Throws DomainError unless X is pure of dimension D >= 1.
  WeightedCochainSpace(SimplicialComplex X, int D);

  const SimplicialComplex& complex() const { return X_; }
  int top_dim() const { return D_; }
  /// Number of k-simplices; 1 for k = -1.
  std::size_t dim(int k) const;
  double m(const Simplex& s) const;
  /// m over X.simplices(k), k >= -1.
  const Eigen::VectorXd& weights(int k) const;

  Cochain zero(int k) const;
  double inner_product(const Cochain& a, const Cochain& b) const;
  double norm_sq(const Cochain& a) const { return inner_product(a, a); }

  /// Value on an ordered simplex: the ascending value times the sign of the
  /// sorting permutation; 0 if the vertex set is not a simplex.
  double value(const Cochain& phi, std::span<const Vertex> ordered) const;

  /// d_k: k-cochains to (k+1)-cochains, -1 <= k < D.
  Cochain coboundary(const Cochain& phi) const;
  /// delta_{k+1}, the adjoint of d_k.
  Cochain adjoint(const Cochain& psi) const;

  /// Matrix of d_k in the natural bases: f_{k+1} x f_k (f_{-1} = 1).
  Eigen::MatrixXd coboundary_matrix(int k) const;

  /// L_k = d_{k-1} delta_k + delta_{k+1} d_k on C^k, 0 <= k <= D. In the
  /// orthonormal basis the matrix is symmetric.
  Eigen::MatrixXd laplacian_matrix(int k, Basis basis = Basis::orthonormal) const;
  Eigen::MatrixXd up_laplacian_matrix(int k, Basis basis = Basis::orthonormal) const;
  Eigen::MatrixXd down_laplacian_matrix(int k, Basis basis = Basis::orthonormal) const;
  Eigen::VectorXd laplacian_spectrum(int k) const;

  /// dim ker L_k: eigenvalues below tol.
  std::size_t harmonic_betti(int k, double tol = 1e-8) const;

  /// Largest |sum_{sigma > tau} m(sigma) - (D - k) m(tau)| over ascending
  /// tau in X_k, -1 <= k < D; the ordered form carries an extra (k+2)! on
  /// both sides.
  double weight_identity_residual() const;

 private:
  Eigen::MatrixXd orthonormal_coboundary(int k) const;

  SimplicialComplex X_;
  int D_;
  std::vector<Eigen::VectorXd> weights_;  // weights_[k + 1]
};

/// phi restricted to the link of an ordered (D-2)-simplex tau:
/// phi_tau(eta) = phi(tau eta), as a 0-cochain on the pure 1-dimensional
/// complex lk_X(tau).
struct LocalCochain {
  std::vector<Vertex> tau;
  WeightedCochainSpace space;
  Cochain phi;
};

/// Throws DomainError if phi is not a (D-1)-cochain or tau is not a
/// (D-2)-simplex of the complex.
LocalCochain localize(const WeightedCochainSpace& S, const Cochain& phi, std::span<const Vertex> tau);

/// Squared norm of the projection of phi_tau onto the constants.
double constant_projection_norm_sq(const LocalCochain& local);

}  // namespace randcx

#include "randcx/cochain.hpp"

#include <algorithm>
#include <cmath>

#include "randcx/error.hpp"

namespace randcx {

namespace {

// Sign of the permutation sorting `seq`; 0 if it has a repeated entry.
int sort_sign(std::vector<Vertex>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

WeightedCochainSpace::WeightedCochainSpace(SimplicialComplex X, int D) : X_(std::move(X)), D_(D) {
  if (D < 1) throw DomainError("cochain space needs D >= 1");
  if (!X_.is_pure(D)) throw DomainError("cochain space needs a pure " + std::to_string(D) + "-dimensional complex");
  weights_.resize(static_cast<std::size_t>(D) + 2);
  weights_[0] = Eigen::VectorXd::Constant(1, static_cast<double>(X_.count(D)));
  for (int k = 0; k <= D; ++k) weights_[static_cast<std::size_t>(k) + 1] = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(X_.count(k)));
  std::vector<Vertex> buf;
  for (const auto& top : X_.simplices(D)) {
    const std::uint32_t full = (1u << top.size()) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      buf.clear();
      for (std::size_t i = 0; i < top.size(); ++i) {
        if (mask & (1u << i)) buf.push_back(top[i]);
      }
      const auto face = Simplex::from_sorted(buf);
      weights_[buf.size()](static_cast<Eigen::Index>(X_.index_of(face))) += 1.0;
    }
  }
}

std::size_t WeightedCochainSpace::dim(int k) const { return k == -1 ? 1 : X_.count(k); }

double WeightedCochainSpace::m(const Simplex& s) const {
  if (s.empty()) return weights_[0](0);
  const auto i = X_.index_of(s);
  if (i == SimplicialComplex::npos) throw DomainError("m: " + s.to_string() + " is not in the complex");
  return weights_[s.size()](static_cast<Eigen::Index>(i));
}

const Eigen::VectorXd& WeightedCochainSpace::weights(int k) const {
  if (k < -1 || k > D_) throw DomainError("weights: k out of range");
  return weights_[static_cast<std::size_t>(k + 1)];
}

Cochain WeightedCochainSpace::zero(int k) const {
  return {k, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim(k)))};
}

double WeightedCochainSpace::inner_product(const Cochain& a, const Cochain& b) const {
  if (a.k != b.k) throw DomainError("inner_product: cochains of different degree");
  const auto& w = weights(a.k);
  if (a.values.size() != w.size() || b.values.size() != w.size()) throw DomainError("inner_product: wrong length");
  return (w.array() * a.values.array() * b.values.array()).sum();
}

double WeightedCochainSpace::value(const Cochain& phi, std::span<const Vertex> ordered) const {
  if (static_cast<int>(ordered.size()) != phi.k + 1) throw DomainError("value: wrong number of vertices");
  if (ordered.empty()) return phi.values(0);
  std::vector<Vertex> seq(ordered.begin(), ordered.end());
  const int sign = sort_sign(seq);
  if (sign == 0) return 0.0;
  const auto i = X_.index_of(Simplex::from_sorted(seq));
  if (i == SimplicialComplex::npos) return 0.0;
  return sign * phi.values(static_cast<Eigen::Index>(i));
}

Eigen::MatrixXd WeightedCochainSpace::coboundary_matrix(int k) const {
  if (k < -1 || k > D_) throw DomainError("coboundary_matrix: k out of range");
  const auto rows = static_cast<Eigen::Index>(dim(k + 1));
  const auto cols = static_cast<Eigen::Index>(dim(k));
  if (k == -1) return Eigen::MatrixXd::Ones(rows, 1);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, cols);
  const auto& upper = X_.simplices(k + 1);
  for (std::size_t r = 0; r < upper.size(); ++r) {
    for (std::size_t i = 0; i < upper[r].size(); ++i) {
      M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(X_.index_of(upper[r].facet(i)))) = (i % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return M;
}

Cochain WeightedCochainSpace::coboundary(const Cochain& phi) const {
  if (phi.k < -1 || phi.k >= D_) throw DomainError("coboundary: degree out of range");
  return {phi.k + 1, coboundary_matrix(phi.k) * phi.values};
}

Cochain WeightedCochainSpace::adjoint(const Cochain& psi) const {
  if (psi.k < 0 || psi.k > D_) throw DomainError("adjoint: degree out of range");
  const int k = psi.k - 1;
  Eigen::VectorXd out = coboundary_matrix(k).transpose() * (weights(psi.k).array() * psi.values.array()).matrix();
  return {k, (out.array() / weights(k).array()).matrix()};
}

Eigen::MatrixXd WeightedCochainSpace::orthonormal_coboundary(int k) const {
  return weights(k + 1).cwiseSqrt().asDiagonal() * coboundary_matrix(k) * weights(k).cwiseSqrt().cwiseInverse().asDiagonal();
}

Eigen::MatrixXd WeightedCochainSpace::up_laplacian_matrix(int k, Basis basis) const {
  if (k < 0 || k > D_) throw DomainError("laplacian: k out of range");
  if (k == D_) return Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim(k)), static_cast<Eigen::Index>(dim(k)));
  if (basis == Basis::orthonormal) {
    const auto B = orthonormal_coboundary(k);
    return B.transpose() * B;
  }
  const auto Dk = coboundary_matrix(k);
  return weights(k).cwiseInverse().asDiagonal() * Dk.transpose() * weights(k + 1).asDiagonal() * Dk;
}

Eigen::MatrixXd WeightedCochainSpace::down_laplacian_matrix(int k, Basis basis) const {
  if (k < 0 || k > D_) throw DomainError("laplacian: k out of range");
  if (basis == Basis::orthonormal) {
    const auto B = orthonormal_coboundary(k - 1);
    return B * B.transpose();
  }
  const auto Dk = coboundary_matrix(k - 1);
  return Dk * weights(k - 1).cwiseInverse().asDiagonal() * Dk.transpose() * weights(k).asDiagonal();
}

Eigen::MatrixXd WeightedCochainSpace::laplacian_matrix(int k, Basis basis) const {
  return down_laplacian_matrix(k, basis) + up_laplacian_matrix(k, basis);
}

Eigen::VectorXd WeightedCochainSpace::laplacian_spectrum(int k) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian_matrix(k), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::size_t WeightedCochainSpace::harmonic_betti(int k, double tol) const {
  const auto ev = laplacian_spectrum(k);
  return static_cast<std::size_t>((ev.array() < tol).count());
}

double WeightedCochainSpace::weight_identity_residual() const {
  double worst = 0.0;
  for (int k = -1; k < D_; ++k) {
    Eigen::VectorXd sums = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim(k)));
    const auto& upper = X_.simplices(k + 1);
    for (std::size_t r = 0; r < upper.size(); ++r) {
      const double mu = weights(k + 1)(static_cast<Eigen::Index>(r));
      if (k == -1) {
        sums(0) += mu;
        continue;
      }
      for (std::size_t i = 0; i < upper[r].size(); ++i) sums(static_cast<Eigen::Index>(X_.index_of(upper[r].facet(i)))) += mu;
    }
    worst = std::max(worst, (sums - (D_ - k) * weights(k)).cwiseAbs().maxCoeff());
  }
  return worst;
}

LocalCochain localize(const WeightedCochainSpace& S, const Cochain& phi, std::span<const Vertex> tau) {
  const int D = S.top_dim();
  if (phi.k != D - 1) throw DomainError("localize: expected a (D-1)-cochain");
  if (static_cast<int>(tau.size()) != D - 1) throw DomainError("localize: tau must be a (D-2)-simplex");
  const Simplex tau_set{std::vector<Vertex>(tau.begin(), tau.end())};
  if (!S.complex().contains(tau_set)) throw DomainError("localize: " + tau_set.to_string() + " is not in the complex");
  LocalCochain out{std::vector<Vertex>(tau.begin(), tau.end()), WeightedCochainSpace(link(S.complex(), tau_set), 1), {}};
  out.phi = out.space.zero(0);
  std::vector<Vertex> seq(tau.begin(), tau.end());
  seq.push_back(0);
  const auto& eta = out.space.complex().simplices(0);
  for (std::size_t i = 0; i < eta.size(); ++i) {
    seq.back() = eta[i][0];
    out.phi.values(static_cast<Eigen::Index>(i)) = S.value(phi, seq);
  }
  return out;
}

double constant_projection_norm_sq(const LocalCochain& local) {
  const auto& w = local.space.weights(0);
  const double along = (w.array() * local.phi.values.array()).sum();
  return along * along / w.sum();
}

}  // namespace randcx

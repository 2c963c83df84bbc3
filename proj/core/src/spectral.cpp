#include "randcx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "randcx/combinatorics.hpp"
#include "randcx/error.hpp"
#include "randcx/rng.hpp"

namespace randcx {

namespace {

struct Adjacency {
  std::vector<Vertex> ids;
  std::vector<std::vector<std::size_t>> nbrs;
};

Adjacency adjacency(const SimplicialComplex& G) {
  Adjacency a;
  std::unordered_map<Vertex, std::size_t> pos;
  for (const auto& v : G.simplices(0)) {
    pos.emplace(v[0], a.ids.size());
    a.ids.push_back(v[0]);
  }
  a.nbrs.resize(a.ids.size());
  for (const auto& e : G.simplices(1)) {
    const auto i = pos.at(e[0]);
    const auto j = pos.at(e[1]);
    a.nbrs[i].push_back(j);
    a.nbrs[j].push_back(i);
  }
  return a;
}

void enumerate_walks(std::vector<int>& walk, std::size_t len, int labels,
                     std::vector<std::vector<std::uint64_t>>& table) {
  if (walk.size() == len) {
    if (walk.back() == walk.front()) return;
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < len; ++i) {
      const int a = walk[i];
      const int b = walk[(i + 1) % len];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
    ++table[static_cast<std::size_t>(labels)][edges.size()];
    return;
  }
  for (int x = 0; x <= labels; ++x) {
    if (x == walk.back()) continue;
    walk.push_back(x);
    enumerate_walks(walk, len, std::max(labels, x + 1), table);
    walk.pop_back();
  }
}

}  // namespace

Eigen::MatrixXd averaging_matrix(const SimplicialComplex& G) {
  const auto a = adjacency(G);
  const auto N = static_cast<Eigen::Index>(a.ids.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    const auto& nb = a.nbrs[static_cast<std::size_t>(i)];
    if (nb.empty()) {
      A(i, i) = 1.0;
      continue;
    }
    for (auto j : nb) A(i, static_cast<Eigen::Index>(j)) = 1.0 / static_cast<double>(nb.size());
  }
  return A;
}

std::size_t SpectrumReport::zero_multiplicity(double tol) const {
  return static_cast<std::size_t>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [tol](double x) { return std::abs(x) <= tol; }));
}

SpectrumReport laplacian_spectrum(const SimplicialComplex& G) {
  const auto a = adjacency(G);
  SpectrumReport r;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < a.ids.size(); ++i) {
    if (a.nbrs[i].empty()) {
      r.eigenvalues.push_back(0.0);
    } else {
      active.push_back(i);
    }
  }
  if (!active.empty()) {
    std::vector<Eigen::Index> slot(a.ids.size(), -1);
    for (std::size_t s = 0; s < active.size(); ++s) slot[active[s]] = static_cast<Eigen::Index>(s);
    const auto M = static_cast<Eigen::Index>(active.size());
    Eigen::MatrixXd S = Eigen::MatrixXd::Identity(M, M);
    for (std::size_t s = 0; s < active.size(); ++s) {
      const auto i = active[s];
      for (auto j : a.nbrs[i]) {
        S(static_cast<Eigen::Index>(s), slot[j]) -=
            1.0 / std::sqrt(static_cast<double>(a.nbrs[i].size()) * static_cast<double>(a.nbrs[j].size()));
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < M; ++i) r.eigenvalues.push_back(solver.eigenvalues()(i));
  }
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  if (r.eigenvalues.size() >= 2) r.lambda2 = r.eigenvalues[1];
  return r;
}

std::size_t gamma_count(const SpectrumReport& spectrum, double alpha, double tol) {
  if (spectrum.eigenvalues.empty()) return 0;
  const auto below = std::count_if(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                                   [&](double x) { return x <= alpha + tol; });
  return below == 0 ? 0 : static_cast<std::size_t>(below) - 1;
}

std::size_t gamma_count(const SimplicialComplex& G, double alpha, double tol) {
  return gamma_count(laplacian_spectrum(G), alpha, tol);
}

BettiBound betti_upper_bound(const SimplicialComplex& X, int D) {
  if (D < 1) throw DomainError("betti_upper_bound needs D >= 1");
  const double alpha = 1.0 - 1.0 / D;
  BettiBound out;
  auto visit = [&](const Simplex& tau) {
    const auto g = gamma_count(link(X, tau), alpha);
    out.bound += g;
    out.terms.push_back({tau, g});
  };
  if (D == 1) {
    visit(Simplex{});
  } else {
    for (const auto& tau : X.simplices(D - 2)) visit(tau);
  }
  return out;
}

bool vanishing_check(const SimplicialComplex& X, int D) {
  if (D < 1) throw DomainError("vanishing_check needs D >= 1");
  const double alpha = 1.0 - 1.0 / D;
  auto gap_ok = [&](const Simplex& tau) {
    return laplacian_spectrum(link(X, tau)).lambda2 > alpha + kEigenTolerance;
  };
  if (D == 1) return gap_ok(Simplex{});
  const auto& taus = X.simplices(D - 2);
  return std::all_of(taus.begin(), taus.end(), gap_ok);
}

std::uint64_t closed_walk_count(int l, int v, int e) {
  if (l < 1) throw DomainError("closed_walk_count needs l >= 1");
  if (l > 4) throw ResourceError("closed_walk_count enumerates walks only up to l = 4");
  const auto len = static_cast<std::size_t>(2 * l);
  if (v < 1 || e < 1 || v > 2 * l || e > 2 * l) return 0;
  std::vector<std::vector<std::uint64_t>> table(len + 2, std::vector<std::uint64_t>(len + 1, 0));
  std::vector<int> walk{0};
  enumerate_walks(walk, len, 1, table);
  return table[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)];
}

double er_eigencount_bound(int n, double p, double alpha, int l) {
  if (l < 1 || n < 2 * l) throw DomainError("er_eigencount_bound needs n >= 2l >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("er_eigencount_bound needs p in (0, 1]");
  if (!(alpha > 0.0)) throw DomainError("er_eigencount_bound needs alpha > 0");
  const int h = 2 * l;
  double sum = 0.0;
  for (int v = 1; v <= h; ++v) {
    for (int e = std::max(1, v - 1); e <= h; ++e) {
      const auto w = closed_walk_count(l, v, e);
      if (w) sum += static_cast<double>(w) * std::pow(n, v) * std::pow(p, e);
    }
  }
  const double a2l = std::pow(alpha, h);
  const double head = factorial(h) / (a2l * std::pow(n - h + 1, h) * std::pow(p, h)) * sum;
  return head + n * std::pow(1.0 - p, n - 1) / a2l;
}

SimplicialComplex sample_er_graph(int n, double p, std::uint64_t seed) {
  std::vector<std::vector<Simplex>> levels(2);
  for (Vertex i = 0; i < n; ++i) levels[0].push_back(Simplex::from_sorted(std::vector<Vertex>{i}));
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      const Vertex e[2] = {i, j};
      if (unit_open_closed(simplex_key(seed, e)) <= p) levels[1].push_back(Simplex::from_sorted(e));
    }
  }
  return SimplicialComplex::from_levels(n, std::move(levels));
}

double spectral_gap_probe(int n, double p, double eps, int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("spectral_gap_probe needs trials >= 1");
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    const auto G = sample_er_graph(n, p, trial_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)));
    if (laplacian_spectrum(G).lambda2 > 1.0 - eps) ++hits;
  }
  return static_cast<double>(hits) / trials;
}

}  // namespace randcx

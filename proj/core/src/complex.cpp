#include "randcx/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "randcx/error.hpp"

namespace randcx {

namespace {

const std::vector<Simplex>& empty_level() {
  static const std::vector<Simplex> kEmpty;
  return kEmpty;
}

void check_ids(const Simplex& s, int n_vertices) {
  if (!s.empty() && (s.vertices().front() < 0 || s.vertices().back() >= n_vertices)) {
    throw MalformedInput("simplex " + s.to_string() + " uses a vertex id outside [0, " +
                         std::to_string(n_vertices) + ")");
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n_vertices) : n_vertices_(n_vertices) {
  if (n_vertices < 0) throw DomainError("negative vertex count");
}

SimplicialComplex SimplicialComplex::from_levels(int n_vertices, std::vector<std::vector<Simplex>> levels) {
  SimplicialComplex X(n_vertices);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    auto& level = levels[k];
    for (const auto& s : level) {
      if (s.dim() != static_cast<int>(k)) {
        throw MalformedInput("simplex " + s.to_string() + " filed under dimension " + std::to_string(k));
      }
      check_ids(s, n_vertices);
    }
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  while (!levels.empty() && levels.back().empty()) levels.pop_back();
  X.levels_ = std::move(levels);
  X.rebuild_index();
  if (!X.is_downward_closed()) throw MalformedInput("simplex lists are not downward closed");
  return X;
}

void SimplicialComplex::rebuild_index() {
  index_.assign(levels_.size(), {});
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    index_[k].reserve(levels_[k].size());
    for (std::size_t i = 0; i < levels_[k].size(); ++i) index_[k].emplace(levels_[k][i], i);
  }
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  if (k < 0 || k >= static_cast<int>(levels_.size())) return empty_level();
  return levels_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::total_count() const {
  std::size_t total = 0;
  for (const auto& l : levels_) total += l.size();
  return total;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  return index_of(s) != npos;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  const int k = s.dim();
  if (k < 0 || k >= static_cast<int>(index_.size())) return npos;
  auto it = index_[static_cast<std::size_t>(k)].find(s);
  return it == index_[static_cast<std::size_t>(k)].end() ? npos : it->second;
}

bool SimplicialComplex::is_downward_closed() const {
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    for (const auto& s : levels_[k]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (index_[k - 1].find(s.facet(i)) == index_[k - 1].end()) return false;
      }
    }
  }
  return true;
}

bool SimplicialComplex::is_pure(int top) const {
  if (dim() != top) return false;
  if (top < 0) return true;
  return make_complex(simplices(top), n_vertices_) == *this;
}

SimplicialComplex make_complex(const std::vector<Simplex>& maximal, int n_vertices) {
  std::vector<std::set<Simplex>> levels;
  std::vector<Vertex> buf;
  for (const auto& s : maximal) {
    check_ids(s, n_vertices);
    if (s.empty()) continue;
    if (s.size() > 24) throw ResourceError("closure of a simplex with more than 24 vertices");
    if (static_cast<int>(levels.size()) <= s.dim()) levels.resize(static_cast<std::size_t>(s.dim()) + 1);
    const std::uint32_t full = (1u << s.size()) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      buf.clear();
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) buf.push_back(s[i]);
      }
      levels[buf.size() - 1].insert(Simplex::from_sorted(buf));
    }
  }
  std::vector<std::vector<Simplex>> out;
  out.reserve(levels.size());
  for (auto& l : levels) out.emplace_back(l.begin(), l.end());
  return SimplicialComplex::from_levels(n_vertices, std::move(out));
}

SimplicialComplex link(const SimplicialComplex& X, const Simplex& tau) {
  if (tau.empty()) return X;
  if (!X.contains(tau)) throw DomainError("link: " + tau.to_string() + " is not a simplex of the complex");
  std::vector<std::vector<Simplex>> levels;
  for (int j = tau.dim() + 1; j <= X.dim(); ++j) {
    for (const auto& rho : X.simplices(j)) {
      if (!tau.is_face_of(rho)) continue;
      Simplex sigma = rho.minus(tau);
      const auto d = static_cast<std::size_t>(sigma.dim());
      if (levels.size() <= d) levels.resize(d + 1);
      levels[d].push_back(std::move(sigma));
    }
  }
  return SimplicialComplex::from_levels(X.n_vertices(), std::move(levels));
}

SimplicialComplex skeleton(const SimplicialComplex& X, int k) {
  if (k < 0) throw DomainError("skeleton dimension must be non-negative");
  std::vector<std::vector<Simplex>> levels;
  for (int j = 0; j <= std::min(k, X.dim()); ++j) levels.push_back(X.simplices(j));
  return SimplicialComplex::from_levels(X.n_vertices(), std::move(levels));
}

SimplicialComplex clique_complex(const SimplicialComplex& G, int max_dim) {
  const int n = G.n_vertices();
  std::vector<std::vector<char>> adjacent(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const auto& e : G.simplices(1)) {
    adjacent[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = 1;
    adjacent[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = 1;
  }
  std::vector<std::vector<Simplex>> levels;
  if (G.count(0) == 0) return SimplicialComplex(n);
  levels.push_back(G.simplices(0));
  std::vector<Vertex> vertex_ids;
  for (const auto& v : G.simplices(0)) vertex_ids.push_back(v[0]);
  while (max_dim < 0 || static_cast<int>(levels.size()) <= max_dim) {
    std::vector<Simplex> next;
    for (const auto& s : levels.back()) {
      for (auto it = std::upper_bound(vertex_ids.begin(), vertex_ids.end(), s.vertices().back());
           it != vertex_ids.end(); ++it) {
        const Vertex v = *it;
        bool ok = true;
        for (Vertex u : s) {
          if (!adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) { ok = false; break; }
        }
        if (ok) next.push_back(s.with_vertex(v));
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return SimplicialComplex::from_levels(n, std::move(levels));
}

PureDimensionalization pure_dimensionalize(const SimplicialComplex& X, int D) {
  if (D < 1) throw DomainError("pure_dimensionalize needs D >= 1");
  if (X.dim() < D - 1) {
    throw DomainError("pure_dimensionalize: dim X = " + std::to_string(X.dim()) + " < D - 1 = " + std::to_string(D - 1));
  }
  std::unordered_set<Simplex, SimplexHash> covered;
  for (const auto& s : X.simplices(D)) {
    for (std::size_t i = 0; i < s.size(); ++i) covered.insert(s.facet(i));
  }
  std::vector<Simplex> generators = X.simplices(D);
  PureDimensionalization out;
  Vertex next_id = X.n_vertices();
  for (const auto& sigma : X.simplices(D - 1)) {
    if (covered.count(sigma)) continue;
    out.cone_of.emplace(next_id, sigma);
    generators.push_back(sigma.with_vertex(next_id));
    ++next_id;
  }
  out.complex = make_complex(generators, next_id);
  return out;
}

FVector f_vector(const SimplicialComplex& X) {
  FVector f;
  for (int k = 0; k <= X.dim(); ++k) f.counts.push_back(X.count(k));
  return f;
}

}  // namespace randcx

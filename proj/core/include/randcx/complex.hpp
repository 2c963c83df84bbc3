#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <vector>

#include "randcx/simplex.hpp"

namespace randcx {

/// Face counts f_k. f(-1) is 1 by convention; f(k) is 0 above the top
/// dimension.
struct FVector {
  std::vector<std::size_t> counts;  // counts[k] = f_k for k = 0..dim

  std::size_t f(int k) const {
    if (k == -1) return 1;
    if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(k)];
  }
  int dim() const { return static_cast<int>(counts.size()) - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// A finite abstract simplicial complex on vertex ids 0..n_vertices-1.
///
/// Simplices are kept per dimension in ascending lexicographic order, with a
/// hash index for membership. Not every id below n_vertices has to be a
/// vertex of the complex. Instances are immutable once built.
class SimplicialComplex {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  SimplicialComplex() = default;
  explicit SimplicialComplex(int n_vertices);

  /// Builds from explicit per-dimension simplex lists. levels[k] holds the
  /// k-simplices; lists are sorted and deduplicated here. Throws
  /// MalformedInput if the result is not downward closed or uses an id
  /// outside [0, n_vertices).
  static SimplicialComplex from_levels(int n_vertices, std::vector<std::vector<Simplex>> levels);

  int n_vertices() const { return n_vertices_; }
  /// Top dimension; -1 for the empty complex.
  int dim() const { return static_cast<int>(levels_.size()) - 1; }
  bool empty() const { return levels_.empty(); }

  /// k-simplices in ascending order (empty span for k outside 0..dim).
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t total_count() const;

  /// True for the empty simplex and for every stored simplex.
  bool contains(const Simplex& s) const;
  /// Position of s inside simplices(s.dim()), or npos.
  std::size_t index_of(const Simplex& s) const;

  /// Enumerates every facet of every simplex; true iff all are present.
  bool is_downward_closed() const;
  /// Every simplex is a face of some `top`-simplex.
  bool is_pure(int top) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_vertices_ == b.n_vertices_ && a.levels_ == b.levels_;
  }

 private:
  void rebuild_index();

  int n_vertices_ = 0;
  std::vector<std::vector<Simplex>> levels_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
};

/// Downward closure of `maximal` on n_vertices ids. Idempotent. Throws
/// MalformedInput for ids out of range.
SimplicialComplex make_complex(const std::vector<Simplex>& maximal, int n_vertices);

/// lk_X(tau): simplices disjoint from tau whose union with tau lies in X.
/// lk_X(empty) = X. Returns an empty complex when nothing qualifies.
/// Throws DomainError if tau is not in X.
SimplicialComplex link(const SimplicialComplex& X, const Simplex& tau);

/// All simplices of dimension <= k.
SimplicialComplex skeleton(const SimplicialComplex& X, int k);

/// Clique (flag) complex of the 1-skeleton of G. `max_dim` caps the output
/// dimension (negative means uncapped).
SimplicialComplex clique_complex(const SimplicialComplex& G, int max_dim = -1);

/// Result of coning off the maximal (D-1)-simplices.
struct PureDimensionalization {
  SimplicialComplex complex;
  /// Cone vertex id -> the maximal (D-1)-simplex it cones.
  std::map<Vertex, Simplex> cone_of;
};

/// The pure D-dimensional complex generated by X_D together with
/// sigma + {v_sigma} for every maximal (D-1)-simplex sigma, where v_sigma is
/// a fresh vertex id >= X.n_vertices(). Throws DomainError when
/// dim X < D - 1 or D < 1.
PureDimensionalization pure_dimensionalize(const SimplicialComplex& X, int D);

FVector f_vector(const SimplicialComplex& X);

}  // namespace randcx

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "randcx/complex.hpp"

namespace randcx {

enum class Field { exact_rational, prime_field };

/// 2^31 - 1.
inline constexpr std::uint32_t kPrime = 2147483647u;

/// Signed boundary map d_k : C_k -> C_{k-1}, stored by columns.
///
/// Rows are the (k-1)-simplices in the order of X.simplices(k-1); for k = 0
/// there is a single augmentation row and every column is (1). Entries of a
/// column are sorted by row and carry the sign (-1)^i for the facet that
/// drops the i-th vertex.
struct BoundaryMatrix {
  struct Entry {
    std::uint32_t row;
    int sign;
  };
  int k = 0;
  std::size_t rows = 0;
  std::vector<std::vector<Entry>> columns;

  std::size_t cols() const { return columns.size(); }
  /// Dense copy, row-major, rows x cols.
  std::vector<int> dense() const;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& X, int k);

/// Rank over Q by fraction-free (Bareiss) elimination on arbitrary precision
/// integers.
std::size_t rank_exact(const BoundaryMatrix& B);

/// Rank over Z/p.
std::size_t rank_mod_p(const BoundaryMatrix& B);

std::size_t boundary_rank(const SimplicialComplex& X, int k, Field field);

/// Reduced Betti number. beta_k of the empty complex is 0 for k >= 0.
std::size_t betti(const SimplicialComplex& X, int k, Field field = Field::prime_field);

struct CheckedBetti {
  std::size_t value = 0;
  /// True when the prime-field and rational ranks disagreed; value is the
  /// rational one.
  bool field_mismatch = false;
};

/// beta_k over Z/p, cross-checked against the rational computation.
CheckedBetti betti_checked(const SimplicialComplex& X, int k);

/// beta_0..beta_{k_max}, each boundary rank computed once.
std::vector<std::size_t> betti_all(const SimplicialComplex& X, int k_max, Field field = Field::prime_field);

/// Rank of a growing set of sparse columns over Z/p.
///
/// Columns are reduced against stored pivots keyed on their largest row
/// index, the standard column reduction. A column that reduces to zero is
/// discarded, so rank() counts independent columns seen so far.
class IncrementalRank {
 public:
  using Column = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (row, value mod p), rows ascending

  explicit IncrementalRank(std::size_t n_rows);

  /// Returns true if the column is independent of those added before.
  bool add(Column column);
  /// Signed-coefficient convenience overload.
  bool add_signed(const std::vector<BoundaryMatrix::Entry>& column);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t n_rows() const { return pivot_of_row_.size(); }

 private:
  std::vector<std::int32_t> pivot_of_row_;
  std::vector<Column> pivots_;
  Column scratch_;
};

}  // namespace randcx

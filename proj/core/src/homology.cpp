#include "randcx/homology.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "randcx/error.hpp"

namespace randcx {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % kPrime);
}

std::uint32_t inv_mod(std::uint32_t a) {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  for (std::uint32_t e = kPrime - 2; e; e >>= 1) {
    if (e & 1u) result = mul_mod(result, base);
    base = mul_mod(base, base);
  }
  return result;
}

}  // namespace

std::vector<int> BoundaryMatrix::dense() const {
  std::vector<int> out(rows * cols(), 0);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : columns[c]) out[e.row * cols() + c] = e.sign;
  }
  return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& X, int k) {
  if (k < 0) throw DomainError("boundary_matrix: k must be >= 0");
  BoundaryMatrix B;
  B.k = k;
  if (k == 0) {
    B.rows = 1;
    B.columns.assign(X.count(0), {{0u, 1}});
    return B;
  }
  B.rows = X.count(k - 1);
  const auto& top = X.simplices(k);
  B.columns.reserve(top.size());
  for (const auto& s : top) {
    std::vector<BoundaryMatrix::Entry> col;
    col.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      col.push_back({static_cast<std::uint32_t>(X.index_of(s.facet(i))), (i % 2 == 0) ? 1 : -1});
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    B.columns.push_back(std::move(col));
  }
  return B;
}

std::size_t rank_exact(const BoundaryMatrix& B) {
  const std::size_t m = B.rows;
  const std::size_t n = B.cols();
  if (m == 0 || n == 0) return 0;
  std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& e : B.columns[c]) a[e.row][c] = e.sign;
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const BoundaryMatrix& B) {
  IncrementalRank inc(B.rows);
  for (const auto& col : B.columns) inc.add_signed(col);
  return inc.rank();
}

std::size_t boundary_rank(const SimplicialComplex& X, int k, Field field) {
  if (k == 0) return X.count(0) > 0 ? 1 : 0;
  if (X.count(k) == 0 || X.count(k - 1) == 0) return 0;
  const auto B = boundary_matrix(X, k);
  return field == Field::exact_rational ? rank_exact(B) : rank_mod_p(B);
}

std::size_t betti(const SimplicialComplex& X, int k, Field field) {
  if (k < 0) throw DomainError("betti: k must be >= 0");
  const std::size_t f = X.count(k);
  if (f == 0) return 0;
  return f - boundary_rank(X, k, field) - boundary_rank(X, k + 1, field);
}

CheckedBetti betti_checked(const SimplicialComplex& X, int k) {
  const auto fast = betti(X, k, Field::prime_field);
  const auto exact = betti(X, k, Field::exact_rational);
  return {exact, fast != exact};
}

std::vector<std::size_t> betti_all(const SimplicialComplex& X, int k_max, Field field) {
  if (k_max < 0) return {};
  std::vector<std::size_t> ranks(static_cast<std::size_t>(k_max) + 2);
  for (int k = 0; k <= k_max + 1; ++k) ranks[static_cast<std::size_t>(k)] = boundary_rank(X, k, field);
  std::vector<std::size_t> out(static_cast<std::size_t>(k_max) + 1, 0);
  for (int k = 0; k <= k_max; ++k) {
    const auto f = X.count(k);
    if (f > 0) out[static_cast<std::size_t>(k)] = f - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
  }
  return out;
}

IncrementalRank::IncrementalRank(std::size_t n_rows) : pivot_of_row_(n_rows, -1) {}

bool IncrementalRank::add(Column col) {
  while (!col.empty()) {
    const auto [low, coeff] = col.back();
    if (low >= pivot_of_row_.size()) throw DomainError("IncrementalRank: row index out of range");
    const std::int32_t p = pivot_of_row_[low];
    if (p < 0) {
      const std::uint32_t inv = inv_mod(coeff);
      for (auto& e : col) e.second = mul_mod(e.second, inv);
      pivot_of_row_[low] = static_cast<std::int32_t>(pivots_.size());
      pivots_.push_back(std::move(col));
      return true;
    }
    // col -= coeff * pivot; the pivot's low entry is 1, so the low row cancels.
    const Column& piv = pivots_[static_cast<std::size_t>(p)];
    const std::uint32_t neg = kPrime - coeff;
    scratch_.clear();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < col.size() || j < piv.size()) {
      if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
        scratch_.push_back(col[i++]);
      } else if (i == col.size() || piv[j].first < col[i].first) {
        scratch_.emplace_back(piv[j].first, mul_mod(piv[j].second, neg));
        ++j;
      } else {
        const std::uint32_t v = (col[i].second + mul_mod(piv[j].second, neg)) % kPrime;
        if (v) scratch_.emplace_back(col[i].first, v);
        ++i;
        ++j;
      }
    }
    std::swap(col, scratch_);
  }
  return false;
}

bool IncrementalRank::add_signed(const std::vector<BoundaryMatrix::Entry>& column) {
  Column col;
  col.reserve(column.size());
  for (const auto& e : column) col.emplace_back(e.row, e.sign > 0 ? 1u : kPrime - 1u);
  return add(std::move(col));
}

}  // namespace randcx

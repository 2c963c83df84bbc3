#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "randcx/combinatorics.hpp"
#include "randcx/homology.hpp"
#include "randcx/models.hpp"

using namespace randcx;

namespace {

SimplicialComplex solid_triangle() { return make_complex({Simplex{0, 1, 2}}, 3); }
SimplicialComplex hollow_triangle() { return make_complex({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}}, 3); }

// product of dense boundary matrices d_k d_{k+1}
bool composes_to_zero(const SimplicialComplex& X, int k) {
  const auto a = boundary_matrix(X, k);
  const auto b = boundary_matrix(X, k + 1);
  const auto A = a.dense();
  const auto B = b.dense();
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      long s = 0;
      for (std::size_t m = 0; m < a.cols(); ++m) s += A[i * a.cols() + m] * B[m * b.cols() + j];
      if (s != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("boundary matrix examples") {
  const auto B1 = boundary_matrix(hollow_triangle(), 1);
  CHECK(B1.rows == 3);
  CHECK(B1.cols() == 3);
  for (const auto& col : B1.columns) {
    REQUIRE(col.size() == 2);
    CHECK(col[0].sign * col[1].sign == -1);
  }

  // d{0,1,2} = {1,2} - {0,2} + {0,1}; rows ordered {0,1},{0,2},{1,2}
  const auto B2 = boundary_matrix(solid_triangle(), 2);
  CHECK(B2.dense() == std::vector<int>{1, -1, 1});

  const auto B0 = boundary_matrix(solid_triangle(), 0);
  CHECK(B0.rows == 1);
  CHECK(B0.dense() == std::vector<int>{1, 1, 1});

  CHECK(composes_to_zero(solid_triangle(), 1));
  CHECK(composes_to_zero(make_complex({Simplex{0, 1, 2, 3}}, 4), 2));
}

TEST_CASE("betti examples") {
  const auto two_edges = make_complex({Simplex{0, 1}, Simplex{2, 3}}, 4);
  CHECK(betti(two_edges, 0) == 1);
  CHECK(betti(hollow_triangle(), 1) == 1);
  const auto sphere = skeleton(make_complex({Simplex{0, 1, 2, 3}}, 4), 2);
  CHECK(betti(sphere, 2) == 1);
  CHECK(betti(sphere, 2, Field::exact_rational) == 1);
  const auto k4 = skeleton(make_complex({Simplex{0, 1, 2, 3}}, 4), 1);
  CHECK(betti(k4, 1) == 3);
  const auto k5 = skeleton(make_complex({Simplex{0, 1, 2, 3, 4}}, 5), 1);
  CHECK(betti(k5, 1) == binomial(4, 2));
  for (int n = 3; n <= 7; ++n) {
    for (int d = 1; d <= 3 && d < n; ++d) {
      std::vector<Vertex> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      const auto full = skeleton(make_complex({Simplex(all)}, n), d - 1);
      CHECK(betti(full, d - 1) == binomial(n - 1, d));
    }
  }
  CHECK(betti(SimplicialComplex(3), 0) == 0);
  CHECK(betti(SimplicialComplex(3), 2) == 0);
  CHECK(betti(make_complex({Simplex{0}}, 1), 0) == 0);
}

TEST_CASE("betti_all examples") {
  CHECK(betti_all(solid_triangle(), 2) == std::vector<std::size_t>{0, 0, 0});
  CHECK(betti_all(hollow_triangle(), 1) == std::vector<std::size_t>{0, 1});
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto X = oracle::random_complex(rng, 7, 4, 6);
    const auto all = betti_all(X, X.dim());
    for (int k = 0; k <= X.dim(); ++k) CHECK(all[static_cast<std::size_t>(k)] == betti(X, k));
  }
}

TEST_CASE("betti agrees with the rational oracle; Morse and Euler hold") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const auto X = oracle::random_complex(rng, n, 4, 1 + static_cast<int>(rng() % 7));
    const auto fv = f_vector(X);
    long chi_f = 0;
    long chi_b = 0;
    for (int k = 0; k <= X.dim(); ++k) {
      const auto b = betti(X, k);
      CHECK(b == oracle::betti(X, k));
      CHECK(static_cast<long>(b) <= static_cast<long>(fv.f(k)));
      CHECK(static_cast<long>(b) >= static_cast<long>(fv.f(k)) - static_cast<long>(fv.f(k + 1)) -
                                        static_cast<long>(fv.f(k - 1)));
      chi_f += (k % 2 ? -1 : 1) * static_cast<long>(fv.f(k));
      chi_b += (k % 2 ? -1 : 1) * static_cast<long>(b);
      if (k + 1 <= X.dim()) CHECK(composes_to_zero(X, k));
    }
    CHECK(chi_b == chi_f - 1);
  }
}

TEST_CASE("exact and prime-field ranks agree on a sampled corpus") {
  std::mt19937_64 rng(31337);
  int mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const auto X = sample_static(n, oracle::random_parameter(rng, t, n, 2), rng());
    for (int k = 0; k <= X.dim(); ++k) {
      const auto c = betti_checked(X, k);
      mismatches += c.field_mismatch;
      if (betti(X, k, Field::exact_rational) != betti(X, k, Field::prime_field)) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("rank_exact handles entries that grow under elimination") {
  // the boundary of a large cross-polytope stays unimodular but exercises
  // the Bareiss path on a sizeable matrix
  std::vector<Simplex> facets;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Vertex> v;
    for (int i = 0; i < 4; ++i) v.push_back(2 * i + ((mask >> i) & 1));
    facets.emplace_back(v);
  }
  const auto octa = make_complex(facets, 8);
  CHECK(betti(octa, 3, Field::exact_rational) == 1);
  CHECK(betti(skeleton(octa, 2), 2, Field::exact_rational) == 15);
  CHECK(betti(octa, 2) == 0);
}

TEST_CASE("IncrementalRank matches full rank") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto X = oracle::random_complex(rng, 8, 3, 8);
    for (int k = 1; k <= X.dim(); ++k) {
      const auto B = boundary_matrix(X, k);
      IncrementalRank inc(B.rows);
      for (const auto& col : B.columns) inc.add_signed(col);
      CHECK(inc.rank() == rank_exact(B));
      CHECK(inc.rank() == rank_mod_p(B));
    }
  }
  IncrementalRank r(3);
  CHECK(r.add({{0, 1}, {2, kPrime - 1}}));
  CHECK_FALSE(r.add({{0, 2}, {2, kPrime - 2}}));
  CHECK(r.rank() == 1);
}

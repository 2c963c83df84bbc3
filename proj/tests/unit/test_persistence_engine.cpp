#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "randcx/combinatorics.hpp"
#include "randcx/error.hpp"
#include "randcx/persistence.hpp"
#include "randcx/rng.hpp"
#include "randcx/stats.hpp"

using namespace randcx;
using Catch::Approx;

namespace {

double kruskal(const WeightedComplexProcess& proc) {
  std::vector<std::pair<double, std::pair<int, int>>> edges;
  for (std::size_t s = 0; s < proc.count(1); ++s) {
    const auto v = proc.vertices(1, s);
    edges.push_back({proc.weights(1)[s], {v[0], v[1]}});
  }
  return oracle::kruskal_l0(proc.n(), edges);
}

template <class F>
Moments sample(int trials, std::uint64_t seed, F stat) {
  std::vector<double> xs;
  for (int t = 0; t < trials; ++t) xs.push_back(stat(trial_seed(seed, 0, static_cast<std::uint64_t>(t))));
  return moments(xs);
}

}  // namespace

TEST_CASE("step function basics") {
  BettiStepFunction f;
  f.times = {0.0, 0.25, 0.5};
  f.values = {2, 1, 0};
  CHECK(f.at(0.1) == 2);
  CHECK(f.at(0.25) == 1);
  CHECK(f.at(7.0) == 0);
  CHECK(f.integral() == Approx(0.75));
  CHECK(f.integral(0.3) == Approx(0.55));
  CHECK(f.alpha_integral(1.0) == Approx(0.75));
  CHECK(f.alpha_integral(2.0) == Approx(2 * 0.0625 + (0.25 - 0.0625)));
  BettiStepFunction g;
  g.times = {0.0, 0.5};
  g.values = {0, 1};
  CHECK(g.integral() == INFINITY);
  CHECK(g.integral(2.0) == Approx(1.5));
  CHECK_THROWS_AS(g.alpha_integral(1.0), UnsupportedCase);
}

TEST_CASE("ER process with two vertices") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto proc = sample_process(2, ParamFunctions::lm(1), 0, seed);
    const double u = proc.weights(1)[0];
    const auto f = betti_steps(proc, 0);
    CHECK(f.at(0.0) == 1);
    CHECK(f.at(u) == 0);
    CHECK(lifetime_sum(proc, 0).L == u);
    CHECK(alpha_lifetime_sum(proc, 1, 2.0) == Approx(u * u));
  }
  const auto m = sample(4000, 1, [](std::uint64_t s) { return lifetime_sum(sample_process(2, ParamFunctions::lm(1), 0, s), 0).L; });
  CHECK(std::abs(m.mean - 0.5) < 4 * m.std / std::sqrt(4000.0));
  const auto m2 = sample(4000, 2, [](std::uint64_t s) { return alpha_lifetime_sum(sample_process(2, ParamFunctions::lm(1), 0, s), 1, 2.0); });
  CHECK(std::abs(m2.mean - 1.0 / 3) < 4 * m2.std / std::sqrt(4000.0));
}

TEST_CASE("ER process with three vertices") {
  const int trials = 100000;
  const auto m = sample(trials, 3, [](std::uint64_t s) { return lifetime_sum(sample_process(3, ParamFunctions::lm(1), 0, s), 0).L; });
  CHECK(std::abs(m.mean - 0.75) < 4 * m.std / std::sqrt(trials));
  const auto m2 = sample(20000, 4, [](std::uint64_t s) { return alpha_lifetime_sum(sample_process(3, ParamFunctions::lm(1), 0, s), 1, 2.0); });
  CHECK(std::abs(m2.mean - 0.4) < 4 * m2.std / std::sqrt(20000.0));
}

TEST_CASE("L_0 equals the Kruskal merge-time sum") {
  for (int n : {5, 17, 50}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto er = sample_process(n, ParamFunctions::lm(1), 0, seed);
      CHECK(lifetime_sum(er, 0).L == Approx(kruskal(er)).epsilon(1e-12));
      const auto fl = sample_process(std::min(n, 20), ParamFunctions::flag(1), 1, seed);
      CHECK(lifetime_sum(fl, 0).L == Approx(kruskal(fl)).epsilon(1e-12));
    }
  }
}

TEST_CASE("flag process beta_0 steps match union-find at every edge arrival") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto proc = sample_process(12, ParamFunctions::flag(1), 0, seed);
    const auto f = betti_steps(proc, 0);
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t s = 0; s < proc.count(1); ++s) order.push_back({proc.weights(1)[s], s});
    std::sort(order.begin(), order.end());
    oracle::UnionFind uf(12);
    std::size_t comps = 12;
    for (const auto& [w, s] : order) {
      const auto v = proc.vertices(1, s);
      comps -= uf.unite(v[0], v[1]);
      CHECK(f.at(w) == comps - 1);
    }
  }
}

TEST_CASE("step values equal from-scratch Betti numbers at probe times") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.2);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    for (const auto& [pf, k] : std::vector<std::pair<ParamFunctions, int>>{{ParamFunctions::lm(2), 1}, {ParamFunctions::flag(1), 1}, {ParamFunctions::flag(2), 2}, {ParamFunctions::lm(3), 2}}) {
      const auto proc = sample_process(8, pf, k, seed);
      const auto f = betti_steps(proc, k);
      const auto g = betti_steps_by_snapshots(proc, k);
      CHECK(f.times == g.times);
      CHECK(f.values == g.values);
      for (int probe = 0; probe < 10; ++probe) {
        const double t = u(rng);
        CHECK(f.at(t) == oracle::betti(proc.snapshot(t), k));
      }
    }
  }
}

TEST_CASE("LM process starts from the complete skeleton") {
  for (int n : {5, 8}) {
    const auto proc = sample_process(n, ParamFunctions::lm(2), 1, 1);
    CHECK(betti_steps(proc, 1).at(0.0) == binomial(n - 1, 2));
    CHECK(oracle::betti(proc.snapshot(0.0), 1) == binomial(n - 1, 2));
    CHECK(betti_steps(proc, 1).nonincreasing());
  }
}

TEST_CASE("degenerate LM lifetimes vanish") {
  for (int d = 2; d <= 4; ++d) {
    for (int k = 0; k <= d - 2; ++k) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(lifetime_sum(sample_process(d + 4, ParamFunctions::lm(d), k, seed), k).L == 0.0);
    }
  }
}

TEST_CASE("truncated lifetimes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto proc = sample_process(10, ParamFunctions::flag(1), 1, seed);
    const auto s = lifetime_sum(proc, 1, {0.1, 0.3, 0.5, 0.8, 1.0, 2.0});
    for (std::size_t i = 1; i < s.L_T.size(); ++i) CHECK(s.L_T[i - 1] <= s.L_T[i]);
    CHECK(s.L_T.back() == Approx(s.L));
    CHECK(s.events == proc.count(1) + proc.count(2));
    CHECK(alpha_lifetime_sum(proc, 1, 1.0) == Approx(lifetime_sum(proc, 0).L));
  }
  // births after time 0 are rejected by the alpha formula
  bool rejected = false;
  for (std::uint64_t seed = 0; seed < 20 && !rejected; ++seed) {
    try {
      (void)alpha_lifetime_sum(sample_process(10, ParamFunctions::flag(1), 1, seed), 2, 2.0);
    } catch (const UnsupportedCase&) {
      rejected = true;
    }
  }
  CHECK(rejected);
}

TEST_CASE("alpha = 1 reduces to the plain lifetime sum") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto proc = sample_process(9, ParamFunctions::lm(2), 1, seed);
    CHECK(alpha_lifetime_sum(proc, 2, 1.0) == Approx(lifetime_sum(proc, 1).L).epsilon(1e-12));
  }
}

TEST_CASE("lifetime sums with never-appearing simplices") {
  // p_1 = 1/2 forever: beta_0 may stay positive, giving an infinite sum
  const auto pf = ParamFunctions::from_json(R"({"p": [{"const": 1}, {"const": 0.5}], "rest": {"const": 1}})");
  bool saw_inf = false;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto proc = sample_process(4, pf, 0, seed);
    const auto s = lifetime_sum(proc, 0, {5.0});
    const bool connected = oracle::components(proc.snapshot(1.0)) == 1;
    CHECK(std::isinf(s.L) == !connected);
    CHECK(std::isfinite(s.L_T[0]));
    saw_inf = saw_inf || std::isinf(s.L);
  }
  CHECK(saw_inf);
}

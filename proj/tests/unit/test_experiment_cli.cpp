#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "randcx/combinatorics.hpp"
#include "randcx/error.hpp"
#include "randcx/experiments.hpp"
#include "randcx/persistence.hpp"
#include "randcx/rng.hpp"
#include "randcx/special_functions.hpp"

using namespace randcx;
using Catch::Approx;

TEST_CASE("frieze campaign small cases") {
  const auto r = run_frieze({2, 3}, 2000, 11);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.reference == Approx(1.2020569031595942));
  const auto& two = r.rows[0];
  CHECK(std::abs(two.mean - 0.5) < 4 * two.std / std::sqrt(2000.0));
  const auto& three = r.rows[1];
  CHECK(std::abs(three.mean - 0.75) < 3 * three.std / std::sqrt(2000.0));
  CHECK(two.std >= 0.0);
  CHECK_THROWS_AS(run_frieze({3, 2}, 10, 1), DomainError);
  CHECK_THROWS_AS(run_frieze({2}, 0, 1), DomainError);
}

TEST_CASE("campaigns are reproducible from the seed") {
  const auto a = run_frieze({5, 10}, 30, 99);
  const auto b = run_frieze({5, 10}, 30, 99);
  CHECK(campaign_csv(a) == campaign_csv(b));
  CHECK(campaign_csv(a) != campaign_csv(run_frieze({5, 10}, 30, 100)));
}

TEST_CASE("LM campaign with d = 1 reduces to the frieze campaign") {
  const auto f = run_frieze({4, 8}, 50, 5);
  const auto l = run_lm_limit(1, {4, 8}, 50, 1.0, 5);
  for (std::size_t i = 0; i < 2; ++i) CHECK(f.rows[i].mean == l.rows[i].mean);
  CHECK(l.reference == Approx(zeta(3)));
}

TEST_CASE("predicted exponents") {
  CHECK(predicted_flag_exponent(1, 0) == Approx(0.0));
  CHECK(predicted_flag_exponent(1, 1) == Approx(1.0));
  for (int k = 0; k <= 5; ++k) CHECK(predicted_flag_exponent(1, k) == Approx(k / 2.0 + 1 - 1.0 / (k + 1)));
  for (int d = 1; d <= 5; ++d) CHECK(predicted_flag_exponent(d, d - 1) == Approx(d - 1.0));
  CHECK_THROWS_AS(predicted_flag_exponent(2, 0), DomainError);
}

TEST_CASE("clique campaign for k = 0 has a flat slope") {
  const auto r = run_clique_exponent(0, {10, 20, 40, 80}, 200, 3);
  REQUIRE(r.fit);
  CHECK(r.reference == Approx(0.0));
  CHECK(std::abs(r.fit->slope - r.reference) < 0.3);
  for (const auto& row : r.rows) CHECK(row.slope == r.fit->slope);
}

TEST_CASE("top-dimensional LM lifetimes dominate the face-count bound") {
  // beta_2 >= f_2 - C(n-1, 2) while every tetrahedron waits until t = 1
  const auto pf = ParamFunctions::lm(2);
  for (int n : {6, 9, 12}) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      const auto proc = sample_process(n, pf, 2, trial_seed(4, static_cast<std::uint64_t>(n), t));
      auto w = std::vector<double>(proc.weights(2).begin(), proc.weights(2).end());
      std::sort(w.begin(), w.end());
      const auto cap = static_cast<std::size_t>(binomial(n - 1, 2));
      double lower = 0.0;
      for (std::size_t i = cap; i < w.size(); ++i) lower += 1.0 - w[i];
      const double L = lifetime_sum(proc, 2).L;
      CHECK(L >= lower - 1e-12);
      CHECK(std::isfinite(L));
    }
  }
}

TEST_CASE("Morse and Euler instance checks") {
  const auto hollow = make_complex({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}}, 3);
  const auto ok = check_morse_euler(hollow, {0, 1});
  CHECK(ok.morse);
  CHECK(ok.euler);
  const auto bad = check_morse_euler(hollow, {0, 0});
  CHECK_FALSE(bad.euler);
  const auto worse = check_morse_euler(hollow, {0, 4});
  CHECK_FALSE(worse.morse);
}

TEST_CASE("bound audit report") {
  const auto rep = run_bound_audit("clique", MultiParameter::clique(9, 0.3), 9, 1, 200, 8);
  CHECK(rep.clean());
  CHECK(rep.scale == Approx(81 * 0.3));
  CHECK(rep.vanish_bound == Approx(81 * 0.3 / (9 * 0.3)));
  CHECK(rep.decay_bound == Approx(81 * 0.3 * std::min(1.0, 1.0 / (9 * 0.09))));
  CHECK(rep.nonzero_freq >= 0.0);
  CHECK(rep.nonzero_freq <= 1.0);

  const auto csv = audit_csv(rep);
  CHECK(csv.rfind("model,n,k,trials,mean_betti", 0) == 0);
  const auto j = nlohmann::json::parse(audit_json(rep));
  CHECK(j["bound_violations"] == 0);
  CHECK(j["n"] == 9);
}

TEST_CASE("campaign CSV and JSON schemas") {
  const auto r = run_clique_exponent(1, {8, 10, 12}, 10, 1);
  const auto csv = campaign_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "model,n,k,alpha,trials,mean,std,reference,slope,r2");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 9);
  }
  CHECK(rows == 3);
  CHECK(campaign_csv(r, false).find("model,") == std::string::npos);

  std::istringstream jl(campaign_json_lines(r));
  while (std::getline(jl, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("slope"));
    CHECK(j["campaign"] == "clique");
  }
  const auto f = run_frieze({3}, 5, 1);
  CHECK(campaign_csv(f).find(",,\n") != std::string::npos);  // no slope or r2
}

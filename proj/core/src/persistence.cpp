#include "randcx/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "randcx/combinatorics.hpp"
#include "randcx/error.hpp"
#include "randcx/homology.hpp"

namespace randcx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Rank of the boundary map d_j restricted to the columns added so far.
class BoundaryRank {
 public:
  BoundaryRank(const WeightedComplexProcess& proc, int j) : proc_(proc), j_(j) {
    if (j == 1) uf_.emplace_back(static_cast<std::size_t>(proc.n()));
    if (j >= 2) inc_.emplace_back(binomial(proc.n(), j));
  }

  std::size_t rank() const { return rank_; }

  void add(std::size_t slot) {
    if (j_ == 0) {
      rank_ = 1;
      return;
    }
    if (j_ == 1) {
      const auto v = proc_.vertices(1, slot);
      if (uf_[0].unite(static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]))) ++rank_;
      return;
    }
    IncrementalRank::Column col;
    col.reserve(static_cast<std::size_t>(j_) + 1);
    for (int i = 0; i <= j_; ++i) {
      col.emplace_back(static_cast<std::uint32_t>(proc_.facet_slot(j_, slot, i)), i % 2 == 0 ? 1u : kPrime - 1u);
    }
    std::sort(col.begin(), col.end());
    if (inc_[0].add(std::move(col))) ++rank_;
  }

 private:
  const WeightedComplexProcess& proc_;
  int j_;
  std::size_t rank_ = 0;
  std::vector<UnionFind> uf_;
  std::vector<IncrementalRank> inc_;
};

struct Event {
  double w;
  int dim;
  std::size_t slot;
};

std::vector<Event> arrivals(const WeightedComplexProcess& proc, int k) {
  if (k < 0) throw DomainError("betti_steps needs k >= 0");
  if (k + 1 > proc.top_dim()) throw DomainError("betti_steps needs the process materialised to dimension k + 1");
  std::vector<Event> ev;
  for (int j = k; j <= k + 1; ++j) {
    const auto w = proc.weights(j);
    for (std::size_t s = 0; s < w.size(); ++s) {
      if (std::isfinite(w[s])) ev.push_back({w[s], j, s});
    }
  }
  std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.slot < b.slot;
  });
  return ev;
}

void push_step(BettiStepFunction& f, double t, std::size_t beta) {
  if (!f.values.empty() && f.values.back() == beta) return;
  if (!f.times.empty() && f.times.back() == t) {
    f.values.back() = beta;
    if (f.values.size() >= 2 && f.values[f.values.size() - 2] == beta) {
      f.values.pop_back();
      f.times.pop_back();
    }
    return;
  }
  f.times.push_back(t);
  f.values.push_back(beta);
}

}  // namespace

std::size_t BettiStepFunction::at(double t) const {
  if (times.empty() || t < times.front()) return 0;
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  return values[static_cast<std::size_t>(it - times.begin()) - 1];
}

double BettiStepFunction::integral(double T) const {
  double total = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double a = std::min(times[i], T);
    const double b = std::min(i + 1 < times.size() ? times[i + 1] : kInf, T);
    if (values[i] == 0 || b <= a) continue;
    if (std::isinf(b)) return kInf;
    total += static_cast<double>(values[i]) * (b - a);
  }
  return total;
}

bool BettiStepFunction::nonincreasing() const {
  return std::is_sorted(values.rbegin(), values.rend());
}

double BettiStepFunction::alpha_integral(double alpha) const {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (!nonincreasing()) throw UnsupportedCase("alpha-power lifetime sum needs every bar born at time 0");
  double total = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (values[i] == 0) continue;
    if (i + 1 == times.size()) return kInf;
    total += static_cast<double>(values[i]) * (std::pow(times[i + 1], alpha) - std::pow(times[i], alpha));
  }
  return total;
}

BettiStepFunction betti_steps(const WeightedComplexProcess& proc, int k) {
  const auto ev = arrivals(proc, k);
  BettiStepFunction f;
  f.k = k;
  f.events = ev.size();
  BoundaryRank down(proc, k);
  BoundaryRank up(proc, k + 1);
  std::size_t f_k = 0;
  auto beta = [&] { return f_k - down.rank() - up.rank(); };
  push_step(f, 0.0, 0);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const auto& e = ev[i];
    if (e.dim == k) {
      ++f_k;
      down.add(e.slot);
    } else if (beta() > 0) {
      // With beta_k = 0 every new boundary already lies in the image.
      up.add(e.slot);
    }
    if (i + 1 == ev.size() || ev[i + 1].w != e.w) push_step(f, e.w, beta());
  }
  return f;
}

BettiStepFunction betti_steps_by_snapshots(const WeightedComplexProcess& proc, int k) {
  const auto ev = arrivals(proc, k);
  std::set<double> ts{0.0};
  for (const auto& e : ev) ts.insert(e.w);
  BettiStepFunction f;
  f.k = k;
  f.events = ev.size();
  for (double t : ts) push_step(f, t, betti(proc.snapshot(t), k, Field::exact_rational));
  return f;
}

LifetimeSummary lifetime_sum(const WeightedComplexProcess& proc, int k, const std::vector<double>& T) {
  const auto f = betti_steps(proc, k);
  LifetimeSummary s;
  s.k = k;
  s.events = f.events;
  s.L = f.integral();
  s.T = T;
  for (double t : T) s.L_T.push_back(f.integral(t));
  return s;
}

double alpha_lifetime_sum(const WeightedComplexProcess& proc, int d, double alpha) {
  if (d < 1) throw DomainError("alpha_lifetime_sum needs d >= 1");
  return betti_steps(proc, d - 1).alpha_integral(alpha);
}

}  // namespace randcx

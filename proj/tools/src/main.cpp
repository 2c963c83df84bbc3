// randcx: command-line front end for sampling, homology, spectral bounds,
// lifetime sums, limit constants and Monte Carlo campaigns.

#include <cmath>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "randcx/complex_io.hpp"
#include "randcx/constants.hpp"
#include "randcx/error.hpp"
#include "randcx/experiments.hpp"
#include "randcx/homology.hpp"
#include "randcx/persistence.hpp"
#include "randcx/rng.hpp"
#include "randcx/spectral.hpp"

namespace {

using json = nlohmann::json;
using namespace randcx;

constexpr int kExitViolation = 2;
constexpr int kExitInconclusive = 3;

struct Options {
  std::string model = "lm";
  std::string params;
  std::string in = "-";
  std::string out = "-";
  std::string format;  // empty: the command's default
  std::string field = "prime";
  std::vector<int> n{20};
  int k = 1;
  int d = 1;
  double alpha = 1.0;
  double p = 0.5;
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<double> T;
  double rho = 1.0;
  int l = 1;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw MalformedInput("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

bool csv(const Options& o, bool by_default) { return o.format.empty() ? by_default : o.format == "csv"; }

SimplicialComplex read_input(const std::string& path) {
  if (path == "-") return read_complex(std::cin);
  return load_complex(path);
}

int single_n(const Options& o) {
  if (o.n.size() != 1) throw DomainError("this command takes a single --n");
  return o.n.front();
}

MultiParameter static_parameter(const Options& o, int n) {
  MultiParameter mp;
  if (o.model == "lm") {
    mp = MultiParameter::lm(o.d, o.p);
  } else if (o.model == "clique" || (o.model == "flag" && o.d == 1)) {
    mp = MultiParameter::clique(n, o.p);
  } else if (o.model == "flag") {
    mp.p.assign(static_cast<std::size_t>(n), 1.0);
    if (o.d < n) mp.p[static_cast<std::size_t>(o.d)] = o.p;
  } else if (o.model == "custom") {
    if (o.params.empty()) throw MalformedInput("custom model needs --params '[p0, p1, ...]'");
    try {
      mp.p = json::parse(o.params).get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw MalformedInput(std::string("--params: ") + e.what());
    }
  } else {
    throw MalformedInput("unknown model '" + o.model + "'");
  }
  mp.validate();
  return mp;
}

ParamFunctions process_parameter(const Options& o) {
  if (o.model == "custom") {
    if (o.params.empty()) throw MalformedInput("custom process needs --params '{\"p\": [...]}'");
    return ParamFunctions::from_json(o.params);
  }
  return ParamFunctions::preset(o.model, o.d);
}

json betti_json(const std::vector<std::size_t>& b) { return json(b); }

int cmd_generate(const Options& o) {
  const int n = single_n(o);
  const auto X = sample_static(n, static_parameter(o, n), o.seed);
  Output out(o.out);
  if (o.format == "json") {
    json j{{"n", n}, {"seed", o.seed}, {"f", f_vector(X).counts}, {"simplices", json::array()}};
    for (int k = 0; k <= X.dim(); ++k) {
      for (const auto& s : X.simplices(k)) j["simplices"].push_back(s.vertices());
    }
    out.stream() << j.dump() << '\n';
  } else {
    write_complex(out.stream(), X);
  }
  return 0;
}

int cmd_betti(const Options& o) {
  const auto X = read_input(o.in);
  const int k_max = std::max(X.dim(), 0);
  std::vector<std::size_t> b;
  bool mismatch = false;
  if (o.field == "checked") {
    for (int k = 0; k <= k_max; ++k) {
      const auto c = betti_checked(X, k);
      b.push_back(c.value);
      mismatch = mismatch || c.field_mismatch;
    }
  } else if (o.field == "exact") {
    b = betti_all(X, k_max, Field::exact_rational);
  } else {
    b = betti_all(X, k_max, Field::prime_field);
  }
  Output out(o.out);
  if (!csv(o, false)) {
    json j{{"f", f_vector(X).counts}, {"betti", betti_json(b)}, {"field", o.field}};
    if (o.field == "checked") j["field_mismatch"] = mismatch;
    out.stream() << j.dump() << '\n';
  } else {
    out.stream() << "k,f_k,betti_k\n";
    for (int k = 0; k <= k_max; ++k) out.stream() << k << ',' << X.count(k) << ',' << b[static_cast<std::size_t>(k)] << '\n';
  }
  return mismatch ? kExitViolation : 0;
}

int cmd_spectrum(const Options& o) {
  const auto X = read_input(o.in);
  const auto rep = laplacian_spectrum(X);
  Output out(o.out);
  if (!csv(o, false)) {
    json j{{"eigenvalues", rep.eigenvalues},
           {"lambda2", rep.lambda2},
           {"zero_multiplicity", rep.zero_multiplicity()},
           {"gamma", gamma_count(rep, o.alpha)},
           {"alpha", o.alpha}};
    out.stream() << j.dump() << '\n';
  } else {
    out.stream() << "i,eigenvalue\n";
    out.stream().precision(15);
    for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) out.stream() << i + 1 << ',' << rep.eigenvalues[i] << '\n';
  }
  return 0;
}

int cmd_bound(const Options& o) {
  const auto X = read_input(o.in);
  const auto b = betti_upper_bound(X, o.d);
  const auto actual = betti(X, o.d - 1);
  const bool vanishing = vanishing_check(X, o.d);
  const bool violation = actual > b.bound || (vanishing && actual > 0);
  Output out(o.out);
  if (!csv(o, false)) {
    json terms = json::array();
    for (const auto& t : b.terms) terms.push_back({{"tau", t.tau.vertices()}, {"gamma", t.gamma}});
    json j{{"D", o.d}, {"betti", actual}, {"bound", b.bound}, {"vanishing_check", vanishing}, {"terms", terms}};
    out.stream() << j.dump() << '\n';
  } else {
    out.stream() << "D,betti,bound,vanishing_check\n"
                 << o.d << ',' << actual << ',' << b.bound << ',' << (vanishing ? "true" : "false") << '\n';
  }
  return violation ? kExitViolation : 0;
}

int cmd_lifetime(const Options& o) {
  const auto pf = process_parameter(o);
  Output out(o.out);
  const bool as_csv = csv(o, false);
  if (as_csv) {
    out.stream() << "seed,model,n,k,L_k,event_count";
    for (double T : o.T) out.stream() << ",L_T" << T;
    out.stream() << '\n';
  }
  for (int n : o.n) {
    for (int t = 0; t < o.trials; ++t) {
      const auto s = trial_seed(o.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t));
      const auto proc = sample_process(n, pf, o.k, s);
      const auto sum = lifetime_sum(proc, o.k, o.T);
      if (!as_csv) {
        json j{{"seed", s},     {"model", pf.name}, {"n", n},           {"k", o.k},
               {"L_k", std::isinf(sum.L) ? json("inf") : json(sum.L)}, {"T", sum.T}, {"L_T", sum.L_T},
               {"event_count", sum.events}};
        if (pf.name.rfind("lm", 0) == 0 && o.k == o.d - 1 && o.alpha != 1.0) {
          j["alpha"] = o.alpha;
          j["L_alpha"] = alpha_lifetime_sum(proc, o.d, o.alpha);
        }
        out.stream() << j.dump() << '\n';
      } else {
        out.stream() << s << ',' << pf.name << ',' << n << ',' << o.k << ',' << sum.L << ',' << sum.events;
        for (double v : sum.L_T) out.stream() << ',' << v;
        out.stream() << '\n';
      }
    }
  }
  return 0;
}

int cmd_constants(const Options& o) {
  const auto r = constant_report(o.d, o.alpha);
  const auto cp = critical_point(o.d);
  Output out(o.out);
  json j{{"d", r.d},
         {"alpha", r.alpha},
         {"t_star", cp.t_star},
         {"c_star", cp.c_star},
         {"I_quadrature", r.I_quadrature},
         {"I_series", r.I_series ? json(*r.I_series) : json(nullptr)},
         {"discrepancy", r.discrepancy}};
  out.stream() << std::setprecision(17) << j.dump() << '\n';
  return 0;
}

int emit_campaign(const Options& o, const CampaignResult& res) {
  Output out(o.out);
  out.stream() << (csv(o, true) ? campaign_csv(res) : campaign_json_lines(res));
  if (o.trials < 2) return kExitInconclusive;
  if (res.name == "clique" && !res.fit) return kExitInconclusive;
  return 0;
}

int cmd_experiment(const std::string& which, const Options& o) {
  if (which == "frieze") return emit_campaign(o, run_frieze(o.n, o.trials, o.seed));
  if (which == "lm") return emit_campaign(o, run_lm_limit(o.d, o.n, o.trials, o.alpha, o.seed));
  if (which == "clique") return emit_campaign(o, run_clique_exponent(o.k, o.n, o.trials, o.seed, o.d));
  // audit
  Output out(o.out);
  bool header = true;
  bool dirty = false;
  for (int n : o.n) {
    const auto rep = run_bound_audit(o.model, static_parameter(o, n), n, o.k, o.trials, o.seed, {o.rho, o.l});
    out.stream() << (csv(o, true) ? audit_csv(rep, header) : audit_json(rep));
    header = false;
    dirty = dirty || !rep.clean();
  }
  return dirty ? kExitViolation : 0;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Output file ('-' for stdout)");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_model(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "lm, flag, clique or custom");
  sub->add_option("--params", o.params, "JSON parameters for --model custom");
  sub->add_option("--d", o.d, "Model dimension d")->check(CLI::PositiveNumber);
  sub->add_option("--p", o.p, "Static parameter p")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--seed", o.seed, "Seed");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Random simplicial complexes: homology, spectral bounds and lifetime sums"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto* gen = app.add_subcommand("generate", "Sample a static complex X(n, p)");
  add_model(gen, o);
  gen->add_option("--n", o.n, "Vertex count")->expected(1);
  add_common(gen, o);

  auto* bet = app.add_subcommand("betti", "Reduced Betti numbers of a complex file");
  bet->add_option("--in", o.in, "Complex file ('-' for stdin)");
  bet->add_option("--field", o.field, "prime, exact or checked")->check(CLI::IsMember({"prime", "exact", "checked"}));
  add_common(bet, o);

  auto* spec = app.add_subcommand("spectrum", "Laplacian spectrum of the 1-skeleton");
  spec->add_option("--in", o.in, "Complex file ('-' for stdin)");
  spec->add_option("--alpha", o.alpha, "Threshold for the gamma count");
  add_common(spec, o);

  auto* bnd = app.add_subcommand("bound", "Spectral upper bound on beta_{D-1}");
  bnd->add_option("--in", o.in, "Complex file ('-' for stdin)");
  bnd->add_option("--d", o.d, "D")->check(CLI::PositiveNumber);
  add_common(bnd, o);

  auto* life = app.add_subcommand("lifetime", "Per-trial lifetime sums of a complex process");
  add_model(life, o);
  life->add_option("--n", o.n, "Vertex counts");
  life->add_option("--k", o.k, "Homological degree")->check(CLI::NonNegativeNumber);
  life->add_option("--trials", o.trials, "Trials per n")->check(CLI::PositiveNumber);
  life->add_option("--T", o.T, "Truncation times");
  life->add_option("--alpha", o.alpha, "Power for L^(alpha) (LM, k = d - 1)");
  add_common(life, o);

  auto* cst = app.add_subcommand("constants", "Limit constant I_{d-1}^(alpha) two ways");
  cst->add_option("--d", o.d, "d")->check(CLI::PositiveNumber);
  cst->add_option("--alpha", o.alpha, "alpha")->check(CLI::PositiveNumber);
  cst->add_option("--out", o.out, "Output file ('-' for stdout)");

  auto* exp = app.add_subcommand("experiment", "Monte Carlo campaigns and audits");
  std::string which = "frieze";
  exp->add_option("campaign", which, "frieze, lm, clique or audit")
      ->required()
      ->check(CLI::IsMember({"frieze", "lm", "clique", "audit"}));
  add_model(exp, o);
  exp->add_option("--n", o.n, "Ascending n grid");
  exp->add_option("--k", o.k, "Homological degree")->check(CLI::NonNegativeNumber);
  exp->add_option("--alpha", o.alpha, "alpha (lm)")->check(CLI::PositiveNumber);
  exp->add_option("--trials", o.trials, "Trials per n")->check(CLI::PositiveNumber);
  exp->add_option("--rho", o.rho, "Exponent of the vanishing bound (audit)");
  exp->add_option("--l", o.l, "Decay exponent of the expectation bound (audit)");
  add_common(exp, o);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = randcx::cli::expand_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) return cmd_generate(o);
    if (bet->parsed()) return cmd_betti(o);
    if (spec->parsed()) return cmd_spectrum(o);
    if (bnd->parsed()) return cmd_bound(o);
    if (life->parsed()) return cmd_lifetime(o);
    if (cst->parsed()) return cmd_constants(o);
    return cmd_experiment(which, o);
  } catch (const randcx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

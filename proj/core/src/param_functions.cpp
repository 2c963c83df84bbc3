#include "randcx/param_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "randcx/error.hpp"

namespace randcx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ParamFunction parse_function(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1) throw MalformedInput("parameter function must be an object with one key");
  const auto it = j.begin();
  const std::string key = it.key();
  const auto& value = it.value();
  if (!value.is_number()) throw MalformedInput("parameter function '" + key + "' needs a number");
  const double x = value.get<double>();
  if (key == "const") return ParamFunction::constant(x);
  if (key == "power") return ParamFunction::power(x);
  if (key == "step") return ParamFunction::step(x);
  throw MalformedInput("unknown parameter function '" + key + "'");
}

nlohmann::json dump_function(const ParamFunction& f) {
  switch (f.kind()) {
    case ParamFunction::Kind::constant: return {{"const", f.parameter()}};
    case ParamFunction::Kind::power: return {{"power", f.parameter()}};
    case ParamFunction::Kind::step: return {{"step", f.parameter()}};
  }
  return {};
}

}  // namespace

ParamFunction ParamFunction::constant(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw DomainError("constant parameter must lie in [0, 1]");
  return {Kind::constant, c};
}

ParamFunction ParamFunction::power(double a) {
  if (!(a > 0.0 && std::isfinite(a))) throw DomainError("power exponent must be positive");
  return {Kind::power, a};
}

ParamFunction ParamFunction::step(double t0) {
  if (!(t0 >= 0.0 && std::isfinite(t0))) throw DomainError("step time must be finite and non-negative");
  return {Kind::step, t0};
}

double ParamFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::constant: return param_;
    case Kind::power: return t >= 1.0 ? 1.0 : (t <= 0.0 ? 0.0 : std::pow(t, param_));
    case Kind::step: return t >= param_ ? 1.0 : 0.0;
  }
  return 0.0;
}

double ParamFunction::inverse(double U) const {
  switch (kind_) {
    case Kind::constant: return U <= param_ ? 0.0 : kInf;
    case Kind::power: return std::pow(U, 1.0 / param_);
    case Kind::step: return param_;
  }
  return kInf;
}

double ParamFunction::supremum() const { return kind_ == Kind::constant ? param_ : 1.0; }

double ParamFunction::saturation_time() const {
  switch (kind_) {
    case Kind::constant: return 0.0;
    case Kind::power: return 1.0;
    case Kind::step: return param_;
  }
  return 0.0;
}

std::vector<double> ParamFunction::breakpoints() const {
  if (kind_ == Kind::constant) return {};
  return {saturation_time()};
}

std::string ParamFunction::to_string() const { return dump_function(*this).dump(); }

const ParamFunction& ParamFunctions::at(int i) const {
  if (i < 0) throw DomainError("parameter dimension must be non-negative");
  return static_cast<std::size_t>(i) < dims.size() ? dims[static_cast<std::size_t>(i)] : rest;
}

std::vector<double> ParamFunctions::evaluate(double t, int count) const {
  std::vector<double> p(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) p[static_cast<std::size_t>(i)] = at(i)(t);
  return p;
}

double ParamFunctions::saturation_time() const {
  double s = rest.saturation_time();
  for (const auto& f : dims) s = std::max(s, f.saturation_time());
  return s;
}

std::vector<double> ParamFunctions::breakpoints(int max_dim) const {
  std::vector<double> out;
  for (int i = 0; i <= max_dim; ++i) {
    for (double b : at(i).breakpoints()) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ParamFunctions ParamFunctions::lm(int d) {
  if (d < 1) throw DomainError("lm preset needs d >= 1");
  ParamFunctions pf;
  pf.name = "lm(" + std::to_string(d) + ")";
  pf.dims.assign(static_cast<std::size_t>(d), ParamFunction::constant(1.0));
  pf.dims.push_back(ParamFunction::power(1.0));
  pf.rest = ParamFunction::step(1.0);
  return pf;
}

ParamFunctions ParamFunctions::flag(int d) {
  if (d < 1) throw DomainError("flag preset needs d >= 1");
  ParamFunctions pf;
  pf.name = d == 1 ? "clique" : "flag(" + std::to_string(d) + ")";
  pf.dims.assign(static_cast<std::size_t>(d), ParamFunction::constant(1.0));
  pf.dims.push_back(ParamFunction::power(1.0));
  pf.rest = ParamFunction::constant(1.0);
  return pf;
}

ParamFunctions ParamFunctions::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("parameter JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j["p"].is_array()) {
    throw MalformedInput("parameter JSON needs an array field \"p\"");
  }
  ParamFunctions pf;
  for (const auto& f : j["p"]) pf.dims.push_back(parse_function(f));
  if (j.contains("rest")) pf.rest = parse_function(j["rest"]);
  if (j.contains("name")) pf.name = j["name"].get<std::string>();
  return pf;
}

ParamFunctions ParamFunctions::preset(const std::string& name, int d) {
  if (name == "lm") return lm(d);
  if (name == "flag") return flag(d);
  if (name == "clique") return clique();
  if (!name.empty() && name.front() == '{') return from_json(name);
  throw MalformedInput("unknown model preset '" + name + "'");
}

std::string ParamFunctions::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["p"] = nlohmann::json::array();
  for (const auto& f : dims) j["p"].push_back(dump_function(f));
  j["rest"] = dump_function(rest);
  return j.dump();
}

}  // namespace randcx

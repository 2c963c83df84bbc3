#pragma once

#include <string>
#include <vector>

namespace randcx {

/// A nondecreasing right-continuous distribution function on [0, inf) from a
/// closed family:
///   constant(c)   p(t) = c
///   power(a)      p(t) = min(t, 1)^a, a > 0
///   step(t0)      p(t) = 0 for t < t0, 1 for t >= t0
class ParamFunction {
 public:
  enum class Kind { constant, power, step };

  static ParamFunction constant(double c);
  static ParamFunction power(double a);
  static ParamFunction step(double t0);

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }

  double operator()(double t) const;
  /// inf{t >= 0 : p(t) >= U} for U in (0, 1]; +inf when U exceeds sup p.
  double inverse(double U) const;
  double supremum() const;
  /// Time after which p is constant.
  double saturation_time() const;
  /// Points where p may fail to be smooth (jumps or kinks).
  std::vector<double> breakpoints() const;

  std::string to_string() const;
  friend bool operator==(const ParamFunction&, const ParamFunction&) = default;

 private:
  ParamFunction(Kind kind, double param) : kind_(kind), param_(param) {}
  Kind kind_ = Kind::constant;
  double param_ = 0.0;
};

/// p_0(t), p_1(t), ...: `dims[i]` for i < dims.size(), `rest` above.
struct ParamFunctions {
  std::string name = "custom";
  std::vector<ParamFunction> dims;
  ParamFunction rest = ParamFunction::constant(0.0);

  const ParamFunction& at(int i) const;
  /// p_0(t), ..., p_{count-1}(t).
  std::vector<double> evaluate(double t, int count) const;
  /// Largest saturation time over the listed dimensions and `rest`.
  double saturation_time() const;
  /// All breakpoints of p_0 .. p_{max_dim}, sorted and deduplicated.
  std::vector<double> breakpoints(int max_dim) const;

  /// Linial-Meshulam process: p_i = 1 below d, t at d, and 0 above d until
  /// t = 1, where everything left appears.
  static ParamFunctions lm(int d);
  /// d-flag process: p_d(t) = t, every other p_i = 1.
  static ParamFunctions flag(int d);
  static ParamFunctions clique() { return flag(1); }

  /// Parses {"p": [<fn>, ...], "rest": <fn>} where <fn> is one of
  /// {"const": c}, {"power": a}, {"step": t0}. Throws MalformedInput.
  static ParamFunctions from_json(const std::string& text);
  /// Preset by name: "lm", "flag", "clique" (d is ignored for clique), or a
  /// JSON description.
  static ParamFunctions preset(const std::string& name, int d);
  std::string to_json() const;
};

}  // namespace randcx

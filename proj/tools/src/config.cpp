#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

namespace randcx::cli {

namespace {

std::string scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::vector<std::string> expand_config(CLI::App& app, std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end()) return args;
  if (std::next(it) == args.end()) throw CLI::ValidationError("--config", "needs a file name");
  const std::string path = *std::next(it);
  args.erase(it, it + 2);

  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CLI::ConversionError("--config", std::string("bad JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw CLI::ConversionError("--config", "expected a JSON object");

  // walk the subcommand chain named on the command line
  CLI::App* target = &app;
  for (const auto& a : args) {
    if (a.rfind("-", 0) == 0) continue;
    auto* sub = target->get_subcommand_no_throw(a);
    if (sub) target = sub;
  }
  std::set<std::string> given;
  for (const auto& a : args) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') - 2));
  }

  for (const auto& [key, value] : cfg.items()) {
    if (given.count(key)) continue;
    if (!target->get_option_no_throw("--" + key)) {
      throw CLI::ValidationError("--config", "unknown key '" + key + "' for this subcommand");
    }
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
      continue;
    }
    args.push_back("--" + key);
    if (value.is_array()) {
      for (const auto& v : value) args.push_back(scalar(v));
    } else {
      args.push_back(scalar(value));
    }
  }
  return args;
}

}  // namespace randcx::cli

#include "qorbit/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "qorbit/errors.hpp"

namespace qorbit {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("line " + std::to_string(line) + ": " + what);
}

std::vector<double> parse_reals(const std::string& text, std::size_t count,
                                const std::string& key, int line) {
  std::istringstream in(text);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    double v = 0.0;
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
      fail(line, "'" + key + "' has a malformed number '" + token + "'");
    }
    out.push_back(v);
  }
  if (out.size() != count) {
    fail(line, "'" + key + "' expects " + std::to_string(count) + " value(s)");
  }
  return out;
}

}  // namespace

Integrator parse_integrator(const std::string& name) {
  if (name == "rk4_projected") return Integrator::RK4Projected;
  if (name == "rk4_raw") return Integrator::RK4Raw;
  throw ConfigError("unknown integrator '" + name + "'");
}

Formulation parse_formulation(const std::string& name) {
  if (name == "canonical") return Formulation::Canonical;
  if (name == "lie_poisson") return Formulation::LiePoisson;
  if (name == "both") return Formulation::Both;
  throw ConfigError("unknown formulation '" + name + "'");
}

RunConfig parse_run_config(std::istream& in) {
  static const std::set<std::string> known{"inertia", "q0",         "mu0",
                                           "dt",      "t_end",      "integrator",
                                           "formulation", "cadence"};
  std::map<std::string, std::pair<std::string, int>> entries;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) {
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      fail(line, "expected 'key = value'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (!known.count(key)) {
      fail(line, "unknown key '" + key + "'");
    }
    if (!entries.emplace(key, std::make_pair(value, line)).second) {
      fail(line, "duplicate key '" + key + "'");
    }
  }
  for (const char* required : {"inertia", "q0", "mu0", "dt", "t_end"}) {
    if (!entries.count(required)) {
      throw ConfigError(std::string("missing required key '") + required + "'");
    }
  }
  auto reals = [&](const std::string& key, std::size_t n) {
    const auto& [value, at] = entries.at(key);
    return parse_reals(value, n, key, at);
  };

  const auto inertia = reals("inertia", 3);
  const auto q0 = reals("q0", 4);
  const auto mu0 = reals("mu0", 3);
  RunConfig cfg{InertiaSpec(inertia[0], inertia[1], inertia[2]),
                State{{q0[0], q0[1], q0[2], q0[3]}, {mu0[0], mu0[1], mu0[2]}},
                reals("dt", 1)[0],
                reals("t_end", 1)[0]};
  if (auto it = entries.find("integrator"); it != entries.end()) {
    cfg.integrator = parse_integrator(it->second.first);
  }
  if (auto it = entries.find("formulation"); it != entries.end()) {
    cfg.formulation = parse_formulation(it->second.first);
  }
  if (auto it = entries.find("cadence"); it != entries.end()) {
    const std::string& v = it->second.first;
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc() || ptr != v.data() + v.size() || n == 0) {
      fail(it->second.second, "'cadence' must be a positive integer");
    }
    cfg.cadence = n;
  }
  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path.string() + "'");
  }
  return parse_run_config(in);
}

}  // namespace qorbit

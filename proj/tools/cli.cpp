#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/run_config.hpp"
#include "qorbit/serialize.hpp"
#include "qorbit/verify.hpp"

namespace qorbit {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QORBIT_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("QORBIT_SEED must be an unsigned integer");
  }
  return 42;
}

DualElement point_from(const std::vector<double>& pi, const std::vector<double>& mu) {
  DualElement x{{pi[0], pi[1], pi[2], pi[3]}, {mu[0], mu[1], mu[2]}};
  if (!x.pi.is_finite() || !x.mu.is_finite()) {
    throw ConfigError("point components must be finite");
  }
  return x;
}

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("--tol expects name=value, got '" + item + "'");
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() - eq - 1) {
      throw ConfigError("bad tolerance value in '" + item + "'");
    }
    out[item.substr(0, eq)] = v;
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    throw ConfigError("cannot write " + path);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic coadjoint orbits, Lie-Poisson brackets and rigid-body flows"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the randomized property suite");
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string json_path;
  std::optional<double> tolerance_all;
  std::vector<std::string> tol_items;
  unsigned threads = 0;
  verify->add_option("--trials", trials, "Trials per random property");
  verify->add_option("--seed", seed, "Seed (default $QORBIT_SEED or 42)");
  verify->add_option("--json", json_path, "Also write the report to this file");
  verify->add_option("--tolerance", tolerance_all, "Replace every tolerance");
  verify->add_option("--tol", tol_items, "Per-property tolerance, name=value");
  verify->add_option("--threads", threads, "Worker threads (0 = auto)");

  // orbit and brackets
  std::vector<double> pi, mu;
  auto* orbit = app.add_subcommand("orbit", "Classify and reduce a point of g*");
  orbit->add_option("--pi", pi, "w x y z")->expected(4)->required();
  orbit->add_option("--mu", mu, "x y z")->expected(3)->required();
  auto* brackets = app.add_subcommand("brackets", "Coordinate bracket table as CSV");
  brackets->add_option("--pi", pi, "w x y z")->expected(4)->required();
  brackets->add_option("--mu", mu, "x y z")->expected(3)->required();

  // simulate and compare
  std::string config_path, out_path, formulation_name;
  double compare_tolerance = 1e-8;
  auto* simulate = app.add_subcommand("simulate", "Integrate a rigid-body run file");
  simulate->add_option("--config", config_path, "Run file")->required();
  simulate->add_option("--out", out_path, "Trajectory CSV path");
  simulate->add_option("--formulation", formulation_name,
                       "canonical | lie_poisson | both (overrides the file)");
  auto* compare = app.add_subcommand("compare", "Canonical vs Lie-Poisson divergence");
  compare->add_option("--config", config_path, "Run file")->required();
  compare->add_option("--tolerance", compare_tolerance, "Divergence bound");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*verify) {
      VerifyOptions opt;
      opt.seed = seed ? *seed : default_seed();
      opt.trials = trials;
      opt.tolerance_all = tolerance_all;
      opt.tolerance_overrides = parse_overrides(tol_items);
      opt.threads = threads;
      const VerifyReport report = run_verification(opt);
      const std::string text = verify_report_json(report).dump(2) + "\n";
      if (!json_path.empty()) write_file(json_path, text);
      out << text;
      for (const std::string& name : report.failures()) {
        err << "FAIL " << name << '\n';
      }
      return report.all_pass() ? kPass : kFail;
    }
    if (*orbit) {
      out << orbit_report(point_from(pi, mu)).dump(2) << '\n';
      return kPass;
    }
    if (*brackets) {
      const auto rows = base_bracket_table(point_from(pi, mu));
      write_bracket_csv(out, rows);
      for (const BracketReport& r : rows) {
        if (!(r.residual <= 1e-12)) return kFail;
      }
      return kPass;
    }
    if (*simulate) {
      RunConfig cfg = load_run_config(config_path);
      if (!formulation_name.empty()) cfg.formulation = parse_formulation(formulation_name);
      Json summary;
      if (cfg.formulation == Formulation::Both) {
        const DivergenceReport d = compare_formulations(cfg);
        if (!out_path.empty()) {
          std::ostringstream a, b;
          write_trajectory_csv(a, d.canonical);
          write_trajectory_csv(b, d.lie_poisson);
          write_file(out_path, a.str());
          write_file(out_path + ".lie_poisson.csv", b.str());
        }
        summary = simulation_summary(cfg, d.canonical, &d.lie_poisson, &d);
      } else {
        const Trajectory traj = integrate(cfg);
        if (!out_path.empty()) {
          std::ostringstream a;
          write_trajectory_csv(a, traj);
          write_file(out_path, a.str());
        }
        summary = simulation_summary(cfg, traj, nullptr, nullptr);
      }
      out << summary.dump(2) << '\n';
      return kPass;
    }
    if (*compare) {
      RunConfig cfg = load_run_config(config_path);
      cfg.formulation = Formulation::Both;
      const DivergenceReport d = compare_formulations(cfg);
      Json j;
      j["max_divergence"] = d.max_divergence;
      j["time_of_max"] = d.time_of_max;
      j["tolerance"] = compare_tolerance;
      j["pass"] = d.max_divergence <= compare_tolerance;
      out << j.dump(2) << '\n';
      return d.max_divergence <= compare_tolerance ? kPass : kFail;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const IntegrationError& e) {
    err << "integration aborted: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

}  // namespace qorbit

#include "qorbit/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace qorbit {

namespace {

// Adding +0.0 turns -0 into +0.
double clean(double v) { return v + 0.0; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", clean(v));
  return buf;
}

}  // namespace

Json to_json(const Quaternion& q) {
  return Json::array({clean(q.w), clean(q.x), clean(q.y), clean(q.z)});
}

Json to_json(const PureQuaternion& v) {
  return Json::array({clean(v.x), clean(v.y), clean(v.z)});
}

Json to_json(const DualElement& x) {
  Json j;
  j["pi"] = to_json(x.pi);
  j["mu"] = to_json(x.mu);
  return j;
}

Json orbit_report(const DualElement& x) {
  const OrbitDescriptor d = classify(x);
  Json j;
  j["pi"] = to_json(x.pi);
  j["mu"] = to_json(x.mu);
  j["kind"] = to_string(d.kind);
  j["radius"] = d.radius;
  j["casimir"] = casimir(x);
  j["pi_norm"] = norm(x.pi);
  if (d.kind == OrbitKind::Type2Bundle) {
    const NormalForm nf = normal_form(x);
    j["reducer"] = {{"q0", to_json(nf.reducer.q)}, {"s0", to_json(nf.reducer.s.value())}};
    j["reduced"] = to_json(nf.reduced);
  } else {
    j["reducer"] = nullptr;
    j["reduced"] = nullptr;
  }
  return j;
}

Json structure_constants_json() {
  Json out = Json::array();
  for (const auto& e : structure_constants().nonzero()) {
    out.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", e.c}});
  }
  return out;
}

Json verify_report_json(const VerifyReport& report) {
  Json j;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["liouville_sign"] = report.liouville_sign;
  j["liouville_convention"] =
      report.liouville_sign < 0 ? "Theta(phi_* v) = -theta(v)" : "Theta(phi_* v) = +theta(v)";
  Json props = Json::array();
  for (const PropertyResult& p : report.properties) {
    Json e;
    e["name"] = p.name;
    e["trials"] = p.trials;
    // JSON has no infinity or NaN; those become null.
    e["max_residual"] = std::isfinite(p.max_residual) ? Json(p.max_residual) : Json(nullptr);
    e["tolerance"] = p.tolerance;
    e["pass"] = p.pass;
    Json details = Json::object();
    for (const auto& [k, v] : p.details) {
      details[k] = std::isfinite(v) ? Json(v) : Json(nullptr);
    }
    e["details"] = details;
    props.push_back(std::move(e));
  }
  j["properties"] = std::move(props);
  j["failures"] = report.failures();
  j["all_pass"] = report.all_pass();
  return j;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,q0,q1,q2,q3,mu1,mu2,mu3,energy,qnorm,munorm,casimir\n";
  for (const Sample& s : traj.samples) {
    out << fmt(s.t) << ',' << fmt(s.q.w) << ',' << fmt(s.q.x) << ',' << fmt(s.q.y) << ','
        << fmt(s.q.z) << ',' << fmt(s.mu.x) << ',' << fmt(s.mu.y) << ',' << fmt(s.mu.z)
        << ',' << fmt(s.energy) << ',' << fmt(s.qnorm) << ',' << fmt(s.munorm) << ','
        << fmt(s.casimir) << '\n';
  }
}

void write_bracket_csv(std::ostream& out, const std::vector<BracketReport>& rows) {
  out << "lhs,rhs,value,expected,residual\n";
  for (const BracketReport& r : rows) {
    out << r.lhs << ',' << r.rhs << ',' << fmt(r.value) << ',' << fmt(r.expected) << ','
        << fmt(r.residual) << '\n';
  }
}

Json drift_json(const DriftSummary& d) {
  return {{"energy_relative", d.energy_relative},
          {"munorm", d.munorm},
          {"qnorm", d.qnorm},
          {"casimir", d.casimir}};
}

Json simulation_summary(const RunConfig& cfg, const Trajectory& primary,
                        const Trajectory* lie_poisson,
                        const DivergenceReport* divergence) {
  Json j;
  j["formulation"] = to_string(cfg.formulation);
  j["integrator"] = to_string(cfg.integrator);
  j["dt"] = cfg.dt;
  j["t_end"] = cfg.t_end;
  j["steps"] = primary.steps;
  j["samples"] = primary.samples.size();
  j["max_drift"] = drift_json(drifts(primary));
  if (lie_poisson != nullptr) {
    j["lie_poisson_max_drift"] = drift_json(drifts(*lie_poisson));
  }
  if (divergence != nullptr) {
    j["divergence"] = {{"max", divergence->max_divergence},
                       {"time_of_max", divergence->time_of_max}};
  }
  const Sample& last = primary.samples.back();
  j["final"] = {{"t", last.t}, {"q", to_json(last.q)}, {"mu", to_json(last.mu)},
                {"energy", last.energy}};
  return j;
}

}  // namespace qorbit

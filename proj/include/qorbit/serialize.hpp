#pragma once

// JSON and CSV output used by the command-line tool and the tests.
// Quaternions serialize as [w, x, y, z], pure quaternions as [x, y, z].

#include <ostream>
#include <vector>

#include "json.hpp"

#include "qorbit/coadjoint.hpp"
#include "qorbit/dynamics.hpp"
#include "qorbit/poisson.hpp"
#include "qorbit/verify.hpp"

namespace qorbit {

using Json = nlohmann::ordered_json;

Json to_json(const Quaternion& q);
Json to_json(const PureQuaternion& v);
Json to_json(const DualElement& x);

/// Classification, radius, Casimir and, for bundle orbits, the reducer and
/// reduced point (null for sphere orbits).
Json orbit_report(const DualElement& x);

Json structure_constants_json();

Json verify_report_json(const VerifyReport& report);

/// Columns t,q0,q1,q2,q3,mu1,mu2,mu3,energy,qnorm,munorm,casimir; %.17g.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Columns lhs,rhs,value,expected,residual.
void write_bracket_csv(std::ostream& out, const std::vector<BracketReport>& rows);

Json drift_json(const DriftSummary& d);

/// Summary of a simulate run; `divergence` is set for formulation = both.
Json simulation_summary(const RunConfig& cfg, const Trajectory& primary,
                        const Trajectory* lie_poisson,
                        const DivergenceReport* divergence);

}  // namespace qorbit

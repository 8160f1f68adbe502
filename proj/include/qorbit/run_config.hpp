#pragma once

// Run files for `qorbit simulate` and `qorbit compare`.
//
// One `key = value` pair per line; `#` starts a comment; blank lines are
// ignored. Vector values are whitespace separated.
//
//   inertia     = I1 I2 I3          (required, all > 0)
//   q0          = w x y z           (required, unit norm)
//   mu0         = x y z             (required)
//   dt          = step              (required, > 0)
//   t_end       = final time        (required, >= dt)
//   integrator  = rk4_projected | rk4_raw           (default rk4_projected)
//   formulation = canonical | lie_poisson | both    (default canonical)
//   cadence     = N                 (default 1, sample every N steps)
//
// Unknown or repeated keys are errors.

#include <filesystem>
#include <istream>
#include <string>

#include "qorbit/dynamics.hpp"

namespace qorbit {

/// Throws ConfigError with the offending line number.
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::filesystem::path& path);

Integrator parse_integrator(const std::string& name);
Formulation parse_formulation(const std::string& name);

}  // namespace qorbit

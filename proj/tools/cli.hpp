#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qorbit {

/// Exit codes: 0 pass, 1 verification or runtime failure, 2 usage or
/// configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qorbit

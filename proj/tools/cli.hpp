#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qmf::cli {

/// Runs the qmf command line with args[0] as the program name. Returns the
/// process exit code: 0 on success (for `verify`, iff every check passed),
/// 1 when a verify suite has failures, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qmf::cli

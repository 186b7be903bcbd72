#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hocolim/oracles.hpp"

namespace hocolim::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 ok, 2 parse error, 3 semantic or validation error, 4 oracle
/// disagreement, 5 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Exit status of an oracle batch: 4 if some report is inconsistent, in which
/// case its witness and replay text go to `err`; 0 otherwise.
int oracle_status(std::span<const OracleReport> reports, std::ostream& err);

}  // namespace hocolim::cli

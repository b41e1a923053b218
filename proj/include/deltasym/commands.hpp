#pragma once

#include <string>
#include <vector>

#include "deltasym/report.hpp"

namespace dsym {

/// Parses one command line (subcommand plus flags, program name excluded) and
/// executes it, returning the finished report. Bad usage and malformed
/// expressions throw Error with the parse kind; computation failures keep the
/// kind raised by the core (domain, dimension, inconsistent). A returned
/// report may still contain failing checks; callers decide the exit code from
/// Report::pass().
Report run_command(const std::vector<std::string>& args);

}  // namespace dsym

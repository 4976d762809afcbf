#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "levelcomplex/monomial_order.hpp"

namespace levelcomplex {

/// Exit codes of the command-line front end.
enum ExitCode : int { kSuccess = 0, kFinding = 1, kBadInput = 2, kInternalError = 3 };

/// Runs the command line given without the program name, e.g.
/// {"report", "--m", "3", "--n", "4"}. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Like MonomialOrder::from_selector, but "perm:<name>" also finds the
/// bundled order files when no such path exists.
MonomialOrder resolve_order(const MatrixShape& shape, const std::string& selector);

}  // namespace levelcomplex

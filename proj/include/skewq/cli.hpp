#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewq {

/// Command-line driver. Exit codes: 0 success, 1 input/validation error,
/// 2 theorem-hypothesis failure (e.g. unstable preprojective relation),
/// 3 internal guard tripped (a would-be counterexample; state dumped).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewq

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zetaseries {

/*!
  Entry point of the `zetaseries` command.

  `args` excludes the program name. Exit codes: 0 success, 1 verification
  failure (or a series that never reached its target), 2 usage or domain error.
*/
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetaseries

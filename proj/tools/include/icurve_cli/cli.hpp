#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icurve::cli {

enum ExitCode : int
{
  ok = 0,
  failure = 1,     // IO or numerical error
  usage_error = 2, // unknown command or flag
};

//! Runs one subcommand. `args` excludes the program name. Results go to the
//! `--out` path, or to `out` when none is given.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icurve::cli

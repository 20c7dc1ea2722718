#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wgmds::cli {

  enum ExitCode : int {
    Ok        = 0,
    Mismatch  = 1,
    Usage     = 2,
    Stability = 3,
    Internal  = 4,
  };

  // `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace wgmds::cli

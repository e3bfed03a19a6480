#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ildtt::cli {

struct Item {
  std::string name;
  bool pass = true;
  std::string details;
  std::optional<std::string> witness;
};

/// Run the command line `args` (without the program name). Reports go to
/// `out`, usage and IO errors to `err`. Returns 0 when every item passes,
/// 1 on a check or verification failure, 2 on a usage or IO error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ildtt::cli

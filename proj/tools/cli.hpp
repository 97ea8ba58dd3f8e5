#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropcon::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad flags, unreadable or unparsable input
  kVerification = 2,  // admissibility, commutation or concurrency failure
  kLiftDegenerate = 3,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropcon::cli

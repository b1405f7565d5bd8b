#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvcert::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalid = 1,   // parse or validation error
    kRejected = 2,  // verifier rejection or failed certification
    kResource = 3,  // a size cap or budget was exceeded
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvcert::cli

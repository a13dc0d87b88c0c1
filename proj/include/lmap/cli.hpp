#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmap::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailure = 1,
    kParseError = 2,
    kInputInvariant = 3,
    kInvalidPair = 4,
    kNotInCone = 5,
};

// Runs one `lmap` invocation. args excludes the program name. "-" as an input
// path reads `in`; as an output path (the default) writes `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace lmap::cli

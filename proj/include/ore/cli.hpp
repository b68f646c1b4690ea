#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ore::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    invalid_parameters = 2,
    mismatch = 3,
    capacity = 4,
};

/// Runs one command. args excludes the program name. `in` backs `check --input -`.
auto run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) -> int;

} // namespace ore::cli

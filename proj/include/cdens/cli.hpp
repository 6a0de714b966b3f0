#pragma once

#include <iosfwd>

namespace cdens {

// Command-line entry point. Exit codes: 0 = success / all checks pass,
// 1 = a verification found a violation (witness printed), 2 = input or
// usage error, 3 = resource limit exceeded.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace cdens

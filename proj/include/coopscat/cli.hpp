#pragma once

#include <iosfwd>

namespace coopscat::cli {

/// Entry point of the `coopscat` tool. Exit codes: 0 success, 1 computation
/// error, 2 usage error. Errors are reported on `err` as one JSON line
/// {"error": <kind>, "message": <text>}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coopscat::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bcast {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;        // "no" decision or invalid witness
inline constexpr int kExitInput = 2;     // bad input, flags or parameters
inline constexpr int kExitInternal = 3;  // failed internal assertion

/// Runs one command line (args excludes the program name). Failures print a
/// single "error <kind> <message>" line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcast

#pragma once

// Command-line surface. Kept as a library so the test suites can drive
// the exact code path behind the installed binary.
//
// Exit codes: 0 success, 1 runtime/I-O failure, 2 usage or precondition
// error.

#include <string>
#include <vector>

namespace primewalk::cli {

int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

} // namespace primewalk::cli

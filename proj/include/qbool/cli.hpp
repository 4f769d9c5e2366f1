#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbool::cli {

/// Exit status: 0 success (including verdicts), 1 domain error, 2 invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbool::cli

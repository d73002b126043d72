#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torsionlab::cli {

/// Exit codes: 0 success, 1 mathematical failure, 2 input error (usage printed to err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torsionlab::cli

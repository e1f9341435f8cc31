#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nullcs::cli {

/// Exit status contract.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailed = 1;
inline constexpr int kUsageError = 2;

/// args excludes the program name. Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nullcs::cli

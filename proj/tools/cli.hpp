#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgy::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kPhysicsError = 2;
inline constexpr int kNumericFailure = 3;

// args excludes the program name. Results go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgy::cli

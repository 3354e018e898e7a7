#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace rlematch::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kParseFailure = 2;
inline constexpr int kExpansionLimit = 3;

// Entry point of the rlematch tool; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rlematch::cli

#pragma once

#include <stdexcept>
#include <string>

namespace rlematch {

enum class ErrorCode {
    NonPositiveRunLength,
    NonCanonicalRun,
    ExpansionLimit,
    EmptyPattern,
    DuplicateKey,
    UnsortedInput,
    DepthOutOfRange,
    NotAncestor,
    WeightMissing,
    UnknownPatternId,
    ParseError,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures surface as this exception; the code identifies the
// contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rlematch

#pragma once

// Line-oriented text form of run-length strings: whitespace-separated
// tokens SYM:LEN, where SYM is one printable character or #<decimal code>
// and LEN is a positive decimal. "a:4 b:3" is aaaabbb.

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlematch/rle.hpp"

namespace rlematch {

// Throws ParseError / NonPositiveRunLength. Adjacent equal symbols merge.
Run parse_token(std::string_view token);
RleString parse_rle_line(std::string_view line);
std::string format_symbol(Symbol c);
std::string format_rle(const RleString& s);

// Pulls canonical runs from a stream of tokens spread over any number of
// lines, holding back one run so that equal neighbours merge.
class RunReader {
public:
    explicit RunReader(std::istream& in) : in_(in) {}
    std::optional<Run> next();
    std::size_t line() const noexcept { return line_; }

private:
    std::optional<Run> read_token();

    std::istream& in_;
    std::optional<Run> pending_;
    std::vector<std::string> tokens_;
    std::size_t token_pos_ = 0;
    std::size_t line_ = 0;
};

}  // namespace rlematch

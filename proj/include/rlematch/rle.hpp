#pragma once

// Run-length encoded strings and pattern dictionaries.
//
// A string is a sequence of runs alpha^x. RleString always holds the
// canonical form: adjacent runs carry distinct symbols and every length is
// at least one. Symbols are 32-bit code points and lengths are 64-bit, so a
// single run may be far longer than anything that fits in memory decoded.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlematch/error.hpp"

namespace rlematch {

using Symbol = std::uint32_t;
using Length = std::uint64_t;
using PatternId = std::uint32_t;

inline constexpr Length kDefaultExpansionLimit = 1'000'000;

struct Run {
    Symbol symbol = 0;
    Length length = 1;

    // Lexicographic on (symbol, length).
    friend constexpr auto operator<=>(const Run&, const Run&) = default;
};

class RleString {
public:
    RleString() = default;

    std::span<const Run> runs() const noexcept { return runs_; }
    std::size_t run_count() const noexcept { return runs_.size(); }
    Length length() const noexcept { return total_; }
    bool empty() const noexcept { return runs_.empty(); }

    const Run& operator[](std::size_t i) const { return runs_[i]; }
    const Run& front() const { return runs_.front(); }
    const Run& back() const { return runs_.back(); }

    // Appends a run, merging it into the last one when the symbols agree.
    void append(Run run);
    void append(const RleString& other);

    // Runs [first, last) as a new string.
    RleString sub_runs(std::size_t first, std::size_t last) const;
    RleString reversed() const;

    friend bool operator==(const RleString& a, const RleString& b) { return a.runs_ == b.runs_; }

private:
    std::vector<Run> runs_;
    Length total_ = 0;
};

RleString canonicalize(std::span<const Run> runs);

RleString encode(std::span<const Symbol> raw);
RleString encode(std::string_view raw);

std::vector<Symbol> decode(const RleString& s, Length limit = kDefaultExpansionLimit);
// Byte-string decode; every symbol must fit in an unsigned char.
std::string decode_bytes(const RleString& s, Length limit = kDefaultExpansionLimit);

// Symbol at character offset `pos` (pos < length()).
Symbol symbol_at(const RleString& s, Length pos);

struct PatternMeta {
    PatternId id = 0;          // 1-based
    Length full_len = 0;
    Symbol last_char = 0;
    Length last_len = 0;
    std::size_t run_count = 0;
    RleString truncated;       // pattern without its last run
    RleString pattern;

    bool single_run() const noexcept { return run_count == 1; }
};

class PatternSet {
public:
    PatternSet() = default;
    // Throws EmptyPattern when any input string is empty.
    explicit PatternSet(std::vector<RleString> patterns);

    std::span<const PatternMeta> patterns() const noexcept { return patterns_; }
    std::size_t size() const noexcept { return patterns_.size(); }
    bool empty() const noexcept { return patterns_.empty(); }
    // 1-based lookup.
    const PatternMeta& operator[](PatternId id) const { return patterns_.at(id - 1); }

    std::size_t total_runs() const noexcept { return total_runs_; }
    Length total_length() const noexcept { return total_length_; }
    // One past the largest symbol used.
    Symbol alphabet_bound() const noexcept { return alphabet_bound_; }

private:
    std::vector<PatternMeta> patterns_;
    std::size_t total_runs_ = 0;
    Length total_length_ = 0;
    Symbol alphabet_bound_ = 0;
};

// Reserved symbols of the rank reduction. Symbols shared by text and
// patterns map to kSharedBase + rank (rank counted from 1).
inline constexpr Symbol kTextOnlySymbol = 1;
inline constexpr Symbol kPatternOnlySymbol = 2;
inline constexpr Symbol kSharedBase = 2;

struct RankReduction {
    PatternSet patterns;
    RleString text;
    std::map<Symbol, Symbol> mapping;  // original -> reduced
    std::size_t alphabet_size = 0;     // distinct reduced symbols in use
};

// Shrinks the alphabet to at most min(text runs, pattern runs) + 2 symbols
// while keeping every text/pattern character equality intact.
RankReduction rank_reduce(const PatternSet& patterns, const RleString& text);

}  // namespace rlematch

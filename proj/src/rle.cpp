#include "rlematch/rle.hpp"

#include <algorithm>
#include <set>

namespace rlematch {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPositiveRunLength: return "NonPositiveRunLength";
        case ErrorCode::NonCanonicalRun: return "NonCanonicalRun";
        case ErrorCode::ExpansionLimit: return "ExpansionLimit";
        case ErrorCode::EmptyPattern: return "EmptyPattern";
        case ErrorCode::DuplicateKey: return "DuplicateKey";
        case ErrorCode::UnsortedInput: return "UnsortedInput";
        case ErrorCode::DepthOutOfRange: return "DepthOutOfRange";
        case ErrorCode::NotAncestor: return "NotAncestor";
        case ErrorCode::WeightMissing: return "WeightMissing";
        case ErrorCode::UnknownPatternId: return "UnknownPatternId";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

void RleString::append(Run run) {
    if (run.length == 0) {
        throw Error(ErrorCode::NonPositiveRunLength, "run of length 0");
    }
    total_ += run.length;
    if (!runs_.empty() && runs_.back().symbol == run.symbol) {
        runs_.back().length += run.length;
    } else {
        runs_.push_back(run);
    }
}

void RleString::append(const RleString& other) {
    for (const Run& r : other.runs_) append(r);
}

RleString RleString::sub_runs(std::size_t first, std::size_t last) const {
    RleString out;
    for (std::size_t i = first; i < last && i < runs_.size(); ++i) out.append(runs_[i]);
    return out;
}

RleString RleString::reversed() const {
    RleString out;
    out.runs_.assign(runs_.rbegin(), runs_.rend());
    out.total_ = total_;
    return out;
}

RleString canonicalize(std::span<const Run> runs) {
    RleString out;
    for (const Run& r : runs) out.append(r);
    return out;
}

RleString encode(std::span<const Symbol> raw) {
    RleString out;
    for (Symbol c : raw) out.append(Run{c, 1});
    return out;
}

RleString encode(std::string_view raw) {
    RleString out;
    for (char c : raw) out.append(Run{static_cast<unsigned char>(c), 1});
    return out;
}

namespace {

void check_limit(const RleString& s, Length limit) {
    if (s.length() > limit) {
        throw Error(ErrorCode::ExpansionLimit, "decoded length " + std::to_string(s.length()) +
                                                   " exceeds limit " + std::to_string(limit));
    }
}

}  // namespace

std::vector<Symbol> decode(const RleString& s, Length limit) {
    check_limit(s, limit);
    std::vector<Symbol> out;
    out.reserve(s.length());
    for (const Run& r : s.runs()) out.insert(out.end(), r.length, r.symbol);
    return out;
}

std::string decode_bytes(const RleString& s, Length limit) {
    check_limit(s, limit);
    std::string out;
    out.reserve(s.length());
    for (const Run& r : s.runs()) {
        if (r.symbol > 0xff) {
            throw Error(ErrorCode::ParseError, "symbol #" + std::to_string(r.symbol) + " is not a byte");
        }
        out.append(r.length, static_cast<char>(r.symbol));
    }
    return out;
}

Symbol symbol_at(const RleString& s, Length pos) {
    for (const Run& r : s.runs()) {
        if (pos < r.length) return r.symbol;
        pos -= r.length;
    }
    throw std::out_of_range("symbol_at: position past end");
}

PatternSet::PatternSet(std::vector<RleString> patterns) {
    patterns_.reserve(patterns.size());
    PatternId id = 1;
    for (RleString& p : patterns) {
        if (p.empty()) {
            throw Error(ErrorCode::EmptyPattern, "pattern " + std::to_string(id) + " is empty");
        }
        PatternMeta meta;
        meta.id = id++;
        meta.full_len = p.length();
        meta.last_char = p.back().symbol;
        meta.last_len = p.back().length;
        meta.run_count = p.run_count();
        meta.truncated = p.sub_runs(0, p.run_count() - 1);
        for (const Run& r : p.runs()) alphabet_bound_ = std::max(alphabet_bound_, r.symbol + 1);
        total_runs_ += p.run_count();
        total_length_ += p.length();
        meta.pattern = std::move(p);
        patterns_.push_back(std::move(meta));
    }
}

RankReduction rank_reduce(const PatternSet& patterns, const RleString& text) {
    std::set<Symbol> in_text;
    std::set<Symbol> in_patterns;
    for (const Run& r : text.runs()) in_text.insert(r.symbol);
    for (const PatternMeta& p : patterns.patterns()) {
        for (const Run& r : p.pattern.runs()) in_patterns.insert(r.symbol);
    }

    RankReduction out;
    Symbol rank = 0;
    for (Symbol c : in_patterns) {
        if (in_text.contains(c)) {
            out.mapping[c] = kSharedBase + ++rank;
        } else {
            out.mapping[c] = kPatternOnlySymbol;
        }
    }
    for (Symbol c : in_text) {
        if (!in_patterns.contains(c)) out.mapping[c] = kTextOnlySymbol;
    }

    auto remap = [&](const RleString& s) {
        RleString r;
        for (const Run& run : s.runs()) r.append(Run{out.mapping.at(run.symbol), run.length});
        return r;
    };

    std::vector<RleString> reduced;
    reduced.reserve(patterns.size());
    for (const PatternMeta& p : patterns.patterns()) reduced.push_back(remap(p.pattern));
    out.patterns = PatternSet(std::move(reduced));
    out.text = remap(text);

    std::set<Symbol> used;
    for (const auto& [from, to] : out.mapping) used.insert(to);
    out.alphabet_size = used.size();
    return out;
}

}  // namespace rlematch

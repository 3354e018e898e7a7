#include "rlematch/textual.hpp"

#include <charconv>
#include <sstream>

namespace rlematch {

namespace {

template <class T>
T parse_number(std::string_view digits, std::string_view token) {
    T value{};
    const auto* end = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (digits.empty() || ec != std::errc{} || ptr != end) {
        throw Error(ErrorCode::ParseError, "bad number in token '" + std::string(token) + "'");
    }
    return value;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Run parse_token(std::string_view token) {
    Symbol symbol = 0;
    std::string_view rest;
    if (token.size() > 2 && token[0] == '#' && is_digit(token[1])) {
        const auto colon = token.find(':');
        if (colon == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "missing ':' in token '" + std::string(token) + "'");
        }
        symbol = parse_number<Symbol>(token.substr(1, colon - 1), token);
        rest = token.substr(colon + 1);
    } else {
        if (token.size() < 3 || token[1] != ':') {
            throw Error(ErrorCode::ParseError, "expected SYM:LEN, got '" + std::string(token) + "'");
        }
        symbol = static_cast<unsigned char>(token[0]);
        rest = token.substr(2);
    }
    const auto length = parse_number<Length>(rest, token);
    if (length == 0) {
        throw Error(ErrorCode::NonPositiveRunLength, "token '" + std::string(token) + "'");
    }
    return Run{symbol, length};
}

RleString parse_rle_line(std::string_view line) {
    std::istringstream in{std::string(line)};
    RleString s;
    std::string token;
    while (in >> token) s.append(parse_token(token));
    return s;
}

std::string format_symbol(Symbol c) {
    if (c > 0x20 && c < 0x7f) return std::string(1, static_cast<char>(c));
    return "#" + std::to_string(c);
}

std::string format_rle(const RleString& s) {
    std::string out;
    for (const Run& r : s.runs()) {
        if (!out.empty()) out += ' ';
        out += format_symbol(r.symbol);
        out += ':';
        out += std::to_string(r.length);
    }
    return out;
}

std::optional<Run> RunReader::read_token() {
    while (token_pos_ == tokens_.size()) {
        std::string line;
        if (!std::getline(in_, line)) return std::nullopt;
        ++line_;
        tokens_.clear();
        token_pos_ = 0;
        std::istringstream words(line);
        std::string tok;
        while (words >> tok) tokens_.push_back(tok);
    }
    return parse_token(tokens_[token_pos_++]);
}

std::optional<Run> RunReader::next() {
    if (!pending_) pending_ = read_token();
    if (!pending_) return std::nullopt;
    while (true) {
        auto following = read_token();
        if (!following || following->symbol != pending_->symbol) {
            const Run out = *pending_;
            pending_ = following;
            return out;
        }
        pending_->length += following->length;
    }
}

}  // namespace rlematch

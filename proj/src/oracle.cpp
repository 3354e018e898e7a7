#include "rlematch/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rlematch::oracle {

std::vector<Occurrence> naive_search(const PatternSet& patterns, const RleString& text, Length limit) {
    const std::vector<Symbol> s = decode(text, limit);
    std::vector<Occurrence> out;
    for (const PatternMeta& p : patterns.patterns()) {
        const std::vector<Symbol> q = decode(p.pattern, limit);
        if (q.size() > s.size()) continue;
        for (std::size_t start = 0; start + q.size() <= s.size(); ++start) {
            if (std::equal(q.begin(), q.end(), s.begin() + static_cast<std::ptrdiff_t>(start))) {
                out.push_back({p.id, start});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PatternId> naive_truncate(const PatternSet& patterns, PatternId i, Symbol alpha, Length w) {
    const std::vector<Symbol> target = decode(patterns[i].truncated);
    std::vector<PatternId> out;
    for (const PatternMeta& p : patterns.patterns()) {
        if (p.single_run() || p.last_char != alpha || p.last_len > w) continue;
        const std::vector<Symbol> cand = decode(p.truncated);
        if (cand.size() <= target.size() &&
            std::equal(cand.rbegin(), cand.rend(), target.rbegin())) {
            out.push_back(p.id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeId> naive_catr(const std::vector<NodeId>& parents, const ColorAssignment& colors,
                               const std::vector<std::vector<Weight>>& weights, NodeId v, Color c,
                               Weight w) {
    std::vector<NodeId> out;
    for (NodeId u = v; u != kNoNode; u = parents[u]) {
        for (std::size_t k = 0; k < colors[u].size(); ++k) {
            if (colors[u][k] == c && weights[u][k] <= w) {
                out.push_back(u);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    // Uniform-ish in [lo, hi]; modulo keeps the sequence identical across
    // standard libraries.
    std::uint64_t operator()(std::uint64_t lo, std::uint64_t hi) { return lo + rng_() % (hi - lo + 1); }

private:
    std::mt19937_64 rng_;
};

Symbol next_symbol(Draw& draw, std::uint32_t alphabet, const RleString& s) {
    Symbol c = static_cast<Symbol>(draw(0, alphabet - 1));
    if (alphabet > 1 && !s.empty() && s.back().symbol == 'a' + c) {
        c = (c + 1 + static_cast<Symbol>(draw(0, alphabet - 2))) % alphabet;
    }
    return 'a' + c;
}

RleString random_string(Draw& draw, std::uint32_t alphabet, std::uint64_t runs, Length max_len) {
    RleString s;
    for (std::uint64_t r = 0; r < runs; ++r) {
        const Symbol c = next_symbol(draw, alphabet, s);
        s.append(Run{c, draw(1, max_len)});
    }
    return s;
}

// A substring of `text` spanning up to `max_runs` runs whose interior runs
// respect `max_len`; empty when none fits.
RleString cut_substring(Draw& draw, const RleString& text, std::uint32_t max_runs, Length max_len) {
    if (text.empty()) return {};
    const std::size_t first = draw(0, text.run_count() - 1);
    const std::size_t want = draw(1, std::min<std::uint64_t>(max_runs, text.run_count() - first));
    const std::size_t last = first + want - 1;
    RleString s;
    for (std::size_t r = first; r <= last; ++r) {
        Length len = text[r].length;
        if (r == first || r == last) {
            len = draw(1, std::min(len, max_len));
        } else if (len > max_len) {
            return {};
        }
        s.append(Run{text[r].symbol, len});
    }
    return s;
}

}  // namespace

Instance generate(const GenConfig& cfg) {
    if (cfg.alphabet == 0 || cfg.max_patterns == 0 || cfg.max_pattern_runs == 0 ||
        cfg.max_text_runs == 0 || cfg.max_run_length == 0) {
        throw std::invalid_argument("generate: every bound must be at least 1");
    }
    const Length pattern_len = cfg.max_pattern_run_length ? cfg.max_pattern_run_length : cfg.max_run_length;
    Draw draw(cfg.seed);
    Instance inst;
    inst.text = random_string(draw, cfg.alphabet, draw(0, cfg.max_text_runs), cfg.max_run_length);

    std::vector<RleString> patterns;
    const std::uint64_t k = draw(1, cfg.max_patterns);
    for (std::uint64_t i = 0; i < k; ++i) {
        RleString p;
        if (draw(0, 1) == 0) p = cut_substring(draw, inst.text, cfg.max_pattern_runs, pattern_len);
        if (p.empty()) p = random_string(draw, cfg.alphabet, draw(1, cfg.max_pattern_runs), pattern_len);
        patterns.push_back(std::move(p));
    }
    inst.patterns = PatternSet(std::move(patterns));
    return inst;
}

}  // namespace rlematch::oracle

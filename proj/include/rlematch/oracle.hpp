#pragma once

// Brute-force references and random instances for differential testing.
// Nothing here touches the index structures: every answer is computed from
// decompressed strings or literal tree walks.

#include <cstdint>
#include <vector>

#include "rlematch/matcher.hpp"
#include "rlematch/rle.hpp"
#include "rlematch/tree_kit.hpp"

namespace rlematch::oracle {

// All (j, s) with text[s, s + |P_j|) == P_j, sorted. Throws ExpansionLimit
// when the text or a pattern decodes past `limit` characters.
std::vector<Occurrence> naive_search(const PatternSet& patterns, const RleString& text,
                                     Length limit = kDefaultExpansionLimit);

// Multi-run patterns j with P_j' a suffix of P_i', alpha_j == alpha and
// w_j <= w, sorted.
std::vector<PatternId> naive_truncate(const PatternSet& patterns, PatternId i, Symbol alpha, Length w);

// Ancestors u of v (v included) with c in colors[u] and weight <= w, sorted.
std::vector<NodeId> naive_catr(const std::vector<NodeId>& parents, const ColorAssignment& colors,
                               const std::vector<std::vector<Weight>>& weights, NodeId v, Color c,
                               Weight w);

struct GenConfig {
    std::uint64_t seed = 1;
    std::uint32_t alphabet = 3;
    std::uint32_t max_patterns = 10;
    std::uint32_t max_pattern_runs = 4;
    std::uint32_t max_text_runs = 40;
    Length max_run_length = 8;
    // 0 = same as max_run_length.
    Length max_pattern_run_length = 0;
};

struct Instance {
    PatternSet patterns;
    RleString text;
};

// Deterministic per seed. Symbols are 'a', 'b', ... About half of the
// patterns are cut out of the text so that occurrences are common.
Instance generate(const GenConfig& cfg);

}  // namespace rlematch::oracle

#pragma once

// Truncate match reporting.
//
// Write P = P' alpha^w with alpha^w the last run. P_j truncate-matches
// P_i' alpha^w when P_j' is a suffix of P_i', alpha_j = alpha and
// w_j <= w. The index is the compact trie of the reversed truncated strings:
// "suffix of P_i'" becomes "ancestor of the locus of reverse(P_i')", and
// last-run characters and lengths become colors and weights of a colored
// ancestor threshold reporting instance.
//
// Only multi-run patterns are indexed; single-run patterns are handled by
// the matcher directly.

#include <unordered_map>
#include <vector>

#include "rlematch/catr.hpp"
#include "rlematch/rle.hpp"
#include "rlematch/trie_builder.hpp"

namespace rlematch {

struct TruncateQueryStats {
    std::size_t catr_nodes = 0;
    std::size_t list_steps = 0;
    std::size_t path_min_calls = 0;
};

class TruncateIndex {
public:
    struct WeightedId {
        Length weight;
        PatternId id;
        friend auto operator<=>(const WeightedId&, const WeightedId&) = default;
    };

    TruncateIndex() = default;
    explicit TruncateIndex(const PatternSet& patterns);

    // Ids j with P_j' a suffix of P_i', alpha_j = alpha and w_j <= w; grouped
    // by trie node, ascending weight within a node. Throws UnknownPatternId
    // when i is not an indexed (multi-run) pattern.
    std::vector<PatternId> query(PatternId i, Symbol alpha, Length w,
                                 TruncateQueryStats* stats = nullptr) const;

    bool indexed(PatternId i) const { return locus(i) != kNoNode; }
    // A[i]: trie node of reverse(P_i'), kNoNode if not indexed.
    NodeId locus(PatternId i) const;

    const CompactTrie& trie() const noexcept { return trie_; }
    std::span<const Color> colors(NodeId v) const { return colors_.at(v); }
    // pi_v(alpha), 0 when alpha is not in C_v.
    Length min_weight(NodeId v, Symbol alpha) const;
    // W_{v,alpha}; empty when alpha is not in C_v.
    std::span<const WeightedId> weight_list(NodeId v, Symbol alpha) const;
    const CatrIndex& catr() const noexcept { return catr_; }

private:
    CompactTrie trie_{TokenKind::Characters};
    std::vector<NodeId> locus_;                     // by pattern id - 1
    ColorAssignment colors_;                        // sorted per node
    std::vector<std::unordered_map<Symbol, std::vector<WeightedId>>> lists_;
    CatrIndex catr_;
};

inline TruncateIndex build_truncate_index(const PatternSet& patterns) { return TruncateIndex(patterns); }

}  // namespace rlematch

#include "rlematch/truncate_index.hpp"

#include <algorithm>
#include <string>

namespace rlematch {

TruncateIndex::TruncateIndex(const PatternSet& patterns) {
    std::vector<RleString> reversed;
    std::vector<PatternId> ids;
    for (const PatternMeta& p : patterns.patterns()) {
        if (p.single_run()) continue;
        reversed.push_back(p.truncated.reversed());
        ids.push_back(p.id);
    }
    // Locus ids of the trie are positions in `reversed`.
    trie_ = build_compact_trie(reversed);

    const std::size_t n = trie_.size();
    locus_.assign(patterns.size(), kNoNode);
    colors_.assign(n, {});
    lists_.assign(n, {});
    std::vector<NodeId> parents(n);
    for (NodeId v = 0; v < n; ++v) {
        const CompactTrieNode& node = trie_.node(v);
        parents[v] = node.parent;
        for (std::uint32_t pos : node.loci) {
            const PatternMeta& p = patterns[ids[pos]];
            locus_[p.id - 1] = v;
            lists_[v][p.last_char].push_back(WeightedId{p.last_len, p.id});
        }
    }

    ColorWeights weights(n);
    for (NodeId v = 0; v < n; ++v) {
        for (auto& [alpha, list] : lists_[v]) {
            std::sort(list.begin(), list.end());
            colors_[v].push_back(alpha);
        }
        std::sort(colors_[v].begin(), colors_[v].end());
        for (Color c : colors_[v]) weights[v].push_back(lists_[v].at(c).front().weight);
    }
    catr_ = build_catr(StaticTree(std::move(parents)), colors_, weights);
}

NodeId TruncateIndex::locus(PatternId i) const {
    if (i == 0 || i > locus_.size()) return kNoNode;
    return locus_[i - 1];
}

Length TruncateIndex::min_weight(NodeId v, Symbol alpha) const {
    const auto list = weight_list(v, alpha);
    return list.empty() ? 0 : list.front().weight;
}

std::span<const TruncateIndex::WeightedId> TruncateIndex::weight_list(NodeId v, Symbol alpha) const {
    const auto& lists = lists_.at(v);
    auto it = lists.find(alpha);
    if (it == lists.end()) return {};
    return it->second;
}

std::vector<PatternId> TruncateIndex::query(PatternId i, Symbol alpha, Length w,
                                            TruncateQueryStats* stats) const {
    const NodeId at = locus(i);
    if (at == kNoNode) {
        throw Error(ErrorCode::UnknownPatternId, "pattern " + std::to_string(i) + " is not indexed");
    }
    CatrQueryStats catr_stats;
    const auto nodes = catr_.query(at, alpha, w, &catr_stats);
    std::vector<PatternId> out;
    std::size_t steps = 0;
    for (NodeId u : nodes) {
        for (const WeightedId& e : weight_list(u, alpha)) {
            ++steps;
            if (e.weight > w) break;
            out.push_back(e.id);
        }
    }
    if (stats) {
        stats->catr_nodes += nodes.size();
        stats->list_steps += steps;
        stats->path_min_calls += catr_stats.path_min_calls;
    }
    return out;
}

}  // namespace rlematch

#include "rlematch/catr.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace rlematch {

CatrIndex CatrIndex::build(StaticTree tree, const ColorAssignment& colors, const ColorWeights& weights) {
    const std::size_t n = tree.size();
    if (colors.size() != n || weights.size() != n) {
        throw Error(ErrorCode::WeightMissing, "colors and weights must cover every node");
    }
    // pi_v(c) lookup with validation.
    std::vector<std::unordered_map<Color, Weight>> pi(n);
    for (NodeId v = 0; v < n; ++v) {
        if (colors[v].size() != weights[v].size()) {
            throw Error(ErrorCode::WeightMissing, "node " + std::to_string(v) + " lacks a weight per color");
        }
        for (std::size_t k = 0; k < colors[v].size(); ++k) {
            if (weights[v][k] == 0) {
                throw Error(ErrorCode::WeightMissing, "node " + std::to_string(v) + " has weight 0");
            }
            pi[v][colors[v][k]] = weights[v][k];
        }
    }

    CatrIndex ix;
    ix.tree_ = std::make_shared<const StaticTree>(std::move(tree));
    ix.first_colored_ = FirstColoredAncestor(ix.tree_, colors);
    ix.node_colors_.resize(n);
    for (const auto& [c, cls] : ix.first_colored_.classes()) {
        // Colored nodes are listed in preorder, so parents precede children.
        std::vector<NodeId> parents(cls.nodes.size());
        std::vector<Weight> w(cls.nodes.size());
        for (std::size_t i = 0; i < cls.nodes.size(); ++i) {
            parents[i] = cls.above[i] == FirstColoredAncestor::kNoIndex ? kNoNode : cls.above[i];
            w[i] = pi[cls.nodes[i]].at(c);
            ix.node_colors_[cls.nodes[i]].emplace_back(c, static_cast<NodeId>(i));
        }
        InducedTree it;
        it.base_node = cls.nodes;
        std::size_t roots = std::count(parents.begin(), parents.end(), kNoNode);
        if (roots > 1) {
            // T_c is a forest: join its tops under a virtual root that is
            // never reported.
            const auto virt = static_cast<NodeId>(parents.size());
            for (NodeId& p : parents) {
                if (p == kNoNode) p = virt;
            }
            parents.push_back(kNoNode);
            w.push_back(std::numeric_limits<Weight>::max());
            it.base_node.push_back(kNoNode);
        }
        it.tree = std::make_shared<const StaticTree>(std::move(parents));
        it.minima = PathMinIndex(it.tree, std::move(w));
        ix.induced_.emplace(c, std::move(it));
    }
    for (auto& list : ix.node_colors_) std::sort(list.begin(), list.end());
    return ix;
}

const CatrIndex::InducedTree* CatrIndex::induced(Color c) const {
    auto it = induced_.find(c);
    return it == induced_.end() ? nullptr : &it->second;
}

NodeId CatrIndex::induced_node(NodeId v, Color c) const {
    const auto& list = node_colors_.at(v);
    auto it = std::lower_bound(list.begin(), list.end(), std::pair<Color, NodeId>{c, 0});
    if (it == list.end() || it->first != c) return kNoNode;
    return it->second;
}

std::vector<NodeId> CatrIndex::query(NodeId v, Color c, Weight threshold, CatrQueryStats* stats) const {
    std::vector<NodeId> out;
    if (threshold == 0) return out;
    const auto first = first_colored_.query(v, c);
    if (!first) return out;
    const InducedTree& it = induced_.at(c);
    const NodeId bottom = induced_node(*first, c);
    // Top of the T_c path: the real (non-virtual) top-level ancestor.
    const NodeId top = it.tree->level_ancestor(bottom, it.base_node.back() == kNoNode ? 1 : 0);

    std::vector<std::pair<NodeId, NodeId>> segments{{top, bottom}};
    while (!segments.empty()) {
        const auto [hi, lo] = segments.back();
        segments.pop_back();
        const NodeId m = it.minima.path_min(hi, lo);
        if (stats) ++stats->path_min_calls;
        if (it.minima.weight(m) > threshold) continue;
        out.push_back(it.base_node[m]);
        if (m != hi) segments.emplace_back(hi, it.tree->parent(m));
        if (m != lo) segments.emplace_back(it.tree->level_ancestor(lo, it.tree->depth(m) + 1), lo);
    }
    return out;
}

}  // namespace rlematch

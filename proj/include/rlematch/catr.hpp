#pragma once

// Colored ancestor threshold reporting: for a node v, a color c and a
// threshold w, report every ancestor u of v (v included) with c in C_u and
// pi_u(c) <= w.
//
// Each color c gets the induced tree T_c over the nodes carrying c. A query
// jumps to the first c-colored ancestor, then splits the T_c root path at
// its minimum-weight node and recurses on both halves while the minimum is
// within the threshold, so the work is O(1 + answers) past the first jump.

#include <memory>
#include <unordered_map>
#include <vector>

#include "rlematch/tree_kit.hpp"

namespace rlematch {

// weights[v][k] is pi_v(colors[v][k]).
using ColorWeights = std::vector<std::vector<Weight>>;

struct CatrQueryStats {
    std::size_t path_min_calls = 0;
};

class CatrIndex {
public:
    struct InducedTree {
        std::shared_ptr<const StaticTree> tree;
        PathMinIndex minima;
        std::vector<NodeId> base_node;  // T_c node -> node of T
    };

    CatrIndex() = default;

    // Throws WeightMissing unless every (v, c in C_v) has a weight >= 1.
    static CatrIndex build(StaticTree tree, const ColorAssignment& colors, const ColorWeights& weights);

    // Nodes of T in discovery order, without duplicates.
    std::vector<NodeId> query(NodeId v, Color c, Weight threshold,
                              CatrQueryStats* stats = nullptr) const;

    const StaticTree& tree() const noexcept { return *tree_; }
    const InducedTree* induced(Color c) const;
    // T_c node standing for (v, c), or kNoNode.
    NodeId induced_node(NodeId v, Color c) const;

private:
    std::shared_ptr<const StaticTree> tree_;
    FirstColoredAncestor first_colored_;
    std::unordered_map<Color, InducedTree> induced_;
    // Per node of T: (color, T_c node), sorted by color.
    std::vector<std::vector<std::pair<Color, NodeId>>> node_colors_;
};

inline CatrIndex build_catr(StaticTree tree, const ColorAssignment& colors, const ColorWeights& weights) {
    return CatrIndex::build(std::move(tree), colors, weights);
}

}  // namespace rlematch

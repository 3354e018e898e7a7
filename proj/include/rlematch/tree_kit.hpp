#pragma once

// Static rooted-tree queries: level ancestor, ancestor-path minima and
// first colored ancestor.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rlematch/predecessor.hpp"
#include "rlematch/rle.hpp"
#include "rlematch/trie_builder.hpp"

namespace rlematch {

using Color = Symbol;
using Weight = std::uint64_t;

class StaticTree {
public:
    StaticTree() = default;
    // parents[v] == kNoNode marks the single root.
    explicit StaticTree(std::vector<NodeId> parents);

    std::size_t size() const noexcept { return parent_.size(); }
    NodeId root() const noexcept { return root_; }
    NodeId parent(NodeId v) const { return parent_.at(v); }
    std::span<const NodeId> children(NodeId v) const { return children_.at(v); }
    std::uint32_t depth(NodeId v) const { return depth_.at(v); }
    // Euler times; every in/out event gets a distinct timestamp.
    std::uint64_t in_time(NodeId v) const { return in_.at(v); }
    std::uint64_t out_time(NodeId v) const { return out_.at(v); }
    // Inclusive: a node is its own ancestor.
    bool is_ancestor(NodeId u, NodeId v) const {
        return in_.at(u) <= in_.at(v) && out_.at(v) <= out_.at(u);
    }
    // Nodes in depth-first preorder.
    std::span<const NodeId> preorder() const noexcept { return preorder_; }

    // Ancestor of v at depth d; throws DepthOutOfRange unless d <= depth(v).
    NodeId level_ancestor(NodeId v, std::uint32_t d) const;

    // 2^k-th ancestor table, shared with PathMinIndex.
    NodeId jump(std::size_t k, NodeId v) const { return up_[k][v]; }
    std::size_t levels() const noexcept { return up_.size(); }

private:
    std::vector<NodeId> parent_;
    std::vector<std::vector<NodeId>> children_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint64_t> in_, out_;
    std::vector<NodeId> preorder_;
    std::vector<std::vector<NodeId>> up_;
    NodeId root_ = kNoNode;
};

// Minimum-weight node on an ancestor-descendant path; ties go to the
// shallowest node.
class PathMinIndex {
public:
    PathMinIndex() = default;
    PathMinIndex(std::shared_ptr<const StaticTree> tree, std::vector<Weight> weights);

    // u must be an ancestor of v (inclusive), else NotAncestor.
    NodeId path_min(NodeId u, NodeId v) const;
    Weight weight(NodeId v) const { return weights_.at(v); }

private:
    bool better(NodeId a, NodeId b) const;

    std::shared_ptr<const StaticTree> tree_;
    std::vector<Weight> weights_;
    // best_[k][v]: best node among v and its next 2^k - 1 ancestors.
    std::vector<std::vector<NodeId>> best_;
};

// colors[v] is the color set C_v (duplicates are ignored).
using ColorAssignment = std::vector<std::vector<Color>>;

class FirstColoredAncestor {
public:
    // Per color: the colored nodes in preorder, each with the index of its
    // nearest strictly-above node of the same color.
    struct ColorClass {
        std::vector<NodeId> nodes;
        std::vector<std::uint32_t> above;  // kNoIndex at the top
        // key: Euler time; payload: 2 * index + (1 for an out event)
        PredecessorSet<std::uint32_t> events;
    };
    static constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

    FirstColoredAncestor() = default;
    FirstColoredAncestor(std::shared_ptr<const StaticTree> tree, const ColorAssignment& colors);

    // Nearest ancestor u of v (v included) with c in C_u.
    std::optional<NodeId> query(NodeId v, Color c) const;
    // Index of that node inside its color class.
    std::optional<std::uint32_t> query_index(NodeId v, Color c) const;

    const ColorClass* color_class(Color c) const;
    const std::unordered_map<Color, ColorClass>& classes() const noexcept { return classes_; }

private:
    std::shared_ptr<const StaticTree> tree_;
    std::unordered_map<Color, ColorClass> classes_;
};

}  // namespace rlematch

#include "rlematch/tree_kit.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace rlematch {

StaticTree::StaticTree(std::vector<NodeId> parents) : parent_(std::move(parents)) {
    const std::size_t n = parent_.size();
    children_.resize(n);
    depth_.assign(n, 0);
    in_.assign(n, 0);
    out_.assign(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        if (parent_[v] == kNoNode) {
            if (root_ != kNoNode) throw std::invalid_argument("StaticTree: more than one root");
            root_ = v;
        } else {
            if (parent_[v] >= n) throw std::invalid_argument("StaticTree: parent out of range");
            children_[parent_[v]].push_back(v);
        }
    }
    if (n == 0) return;
    if (root_ == kNoNode) throw std::invalid_argument("StaticTree: no root");

    preorder_.reserve(n);
    std::uint64_t clock = 0;
    // (node, next child index)
    std::vector<std::pair<NodeId, std::size_t>> stack{{root_, 0}};
    in_[root_] = clock++;
    preorder_.push_back(root_);
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < children_[v].size()) {
            const NodeId c = children_[v][next++];
            depth_[c] = depth_[v] + 1;
            in_[c] = clock++;
            preorder_.push_back(c);
            stack.emplace_back(c, 0);
        } else {
            out_[v] = clock++;
            stack.pop_back();
        }
    }
    if (preorder_.size() != n) throw std::invalid_argument("StaticTree: parent array has a cycle");

    const std::size_t levels = std::max<std::size_t>(1, std::bit_width(n));
    up_.assign(levels, std::vector<NodeId>(n));
    for (NodeId v = 0; v < n; ++v) up_[0][v] = v == root_ ? v : parent_[v];
    for (std::size_t k = 1; k < levels; ++k) {
        for (NodeId v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
    }
}

NodeId StaticTree::level_ancestor(NodeId v, std::uint32_t d) const {
    if (d > depth_.at(v)) {
        throw Error(ErrorCode::DepthOutOfRange,
                    "depth " + std::to_string(d) + " below node at depth " + std::to_string(depth_[v]));
    }
    std::uint32_t steps = depth_[v] - d;
    for (std::size_t k = 0; steps != 0; ++k, steps >>= 1) {
        if (steps & 1u) v = up_[k][v];
    }
    return v;
}

PathMinIndex::PathMinIndex(std::shared_ptr<const StaticTree> tree, std::vector<Weight> weights)
    : tree_(std::move(tree)), weights_(std::move(weights)) {
    const std::size_t n = tree_->size();
    if (weights_.size() != n) throw Error(ErrorCode::WeightMissing, "one weight per node required");
    best_.assign(tree_->levels(), std::vector<NodeId>(n));
    for (NodeId v = 0; v < n; ++v) best_[0][v] = v;
    for (std::size_t k = 1; k < best_.size(); ++k) {
        for (NodeId v = 0; v < n; ++v) {
            const NodeId a = best_[k - 1][v];
            const NodeId b = best_[k - 1][tree_->jump(k - 1, v)];
            best_[k][v] = better(b, a) ? b : a;
        }
    }
}

bool PathMinIndex::better(NodeId a, NodeId b) const {
    if (weights_[a] != weights_[b]) return weights_[a] < weights_[b];
    return tree_->depth(a) < tree_->depth(b);
}

NodeId PathMinIndex::path_min(NodeId u, NodeId v) const {
    if (!tree_->is_ancestor(u, v)) {
        throw Error(ErrorCode::NotAncestor,
                    std::to_string(u) + " is not an ancestor of " + std::to_string(v));
    }
    std::uint32_t count = tree_->depth(v) - tree_->depth(u) + 1;
    NodeId best = v;
    for (std::size_t k = 0; count != 0; ++k, count >>= 1) {
        if (count & 1u) {
            const NodeId cand = best_[k][v];
            if (better(cand, best)) best = cand;
            v = tree_->jump(k, v);
        }
    }
    return best;
}

FirstColoredAncestor::FirstColoredAncestor(std::shared_ptr<const StaticTree> tree,
                                           const ColorAssignment& colors)
    : tree_(std::move(tree)) {
    if (colors.size() != tree_->size()) {
        throw std::invalid_argument("FirstColoredAncestor: one color set per node required");
    }
    // Per color: chain of colored nodes on the current root path.
    std::unordered_map<Color, std::vector<std::uint32_t>> open;
    std::unordered_map<Color, std::vector<std::pair<std::uint64_t, std::uint32_t>>> events;
    for (NodeId v : tree_->preorder()) {
        std::vector<Color> cs = colors[v];
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        for (Color c : cs) {
            ColorClass& cls = classes_[c];
            auto& chain = open[c];
            while (!chain.empty() && tree_->out_time(cls.nodes[chain.back()]) < tree_->in_time(v)) {
                chain.pop_back();
            }
            const auto idx = static_cast<std::uint32_t>(cls.nodes.size());
            cls.nodes.push_back(v);
            cls.above.push_back(chain.empty() ? kNoIndex : chain.back());
            chain.push_back(idx);
            auto& ev = events[c];
            ev.emplace_back(tree_->in_time(v), 2 * idx);
            ev.emplace_back(tree_->out_time(v), 2 * idx + 1);
        }
    }
    for (auto& [c, ev] : events) classes_[c].events = PredecessorSet<std::uint32_t>::build(std::move(ev));
}

const FirstColoredAncestor::ColorClass* FirstColoredAncestor::color_class(Color c) const {
    auto it = classes_.find(c);
    return it == classes_.end() ? nullptr : &it->second;
}

std::optional<std::uint32_t> FirstColoredAncestor::query_index(NodeId v, Color c) const {
    const ColorClass* cls = color_class(c);
    if (cls == nullptr) return std::nullopt;
    const auto hit = cls->events.predecessor(tree_->in_time(v));
    if (!hit) return std::nullopt;
    const std::uint32_t idx = hit->payload >> 1;
    if ((hit->payload & 1u) == 0) return idx;
    // Closed before v: the answer is whatever encloses that node.
    const std::uint32_t above = cls->above[idx];
    if (above == kNoIndex) return std::nullopt;
    return above;
}

std::optional<NodeId> FirstColoredAncestor::query(NodeId v, Color c) const {
    const auto idx = query_index(v, c);
    if (!idx) return std::nullopt;
    return color_class(c)->nodes[*idx];
}

}  // namespace rlematch

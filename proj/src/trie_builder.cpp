#include "rlematch/trie_builder.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rlematch {

namespace {

Length char_count(std::span<const Run> runs) {
    Length n = 0;
    for (const Run& r : runs) n += r.length;
    return n;
}

Length token_count(TokenKind kind, std::span<const Run> runs) {
    return kind == TokenKind::Pairs ? runs.size() : char_count(runs);
}

// Characters [from, to) of a run fragment.
std::vector<Run> slice_chars(std::span<const Run> runs, Length from, Length to) {
    std::vector<Run> out;
    Length pos = 0;
    for (const Run& r : runs) {
        const Length begin = pos;
        const Length end = pos + r.length;
        pos = end;
        if (end <= from) continue;
        if (begin >= to) break;
        const Length lo = std::max(begin, from);
        const Length hi = std::min(end, to);
        out.push_back(Run{r.symbol, hi - lo});
    }
    return out;
}

std::vector<Run> slice_tokens(TokenKind kind, std::span<const Run> runs, Length from, Length to) {
    if (kind == TokenKind::Characters) return slice_chars(runs, from, to);
    return {runs.begin() + static_cast<std::ptrdiff_t>(from), runs.begin() + static_cast<std::ptrdiff_t>(to)};
}

// Appends with merging of equal neighbouring symbols.
void join_label(std::vector<Run>& dst, std::span<const Run> src) {
    for (const Run& r : src) {
        if (!dst.empty() && dst.back().symbol == r.symbol) {
            dst.back().length += r.length;
        } else {
            dst.push_back(r);
        }
    }
}

void check_order(TokenKind kind, const RleString& prev, const RleString& next, Length lcp,
                 std::size_t index) {
    const Length lp = token_count(kind, prev.runs());
    const Length ln = token_count(kind, next.runs());
    auto fail = [&](const char* why) {
        throw Error(ErrorCode::UnsortedInput,
                    std::string(why) + " between strings " + std::to_string(index) + " and " +
                        std::to_string(index + 1));
    };
    if (lcp > std::min(lp, ln)) fail("lcp longer than a string");
    if (lcp == lp) return;
    if (lcp == ln) fail("proper prefix sorted after its extension");
    if (kind == TokenKind::Pairs) {
        if (!(prev[lcp] < next[lcp])) fail("tokens out of order");
    } else if (!(symbol_at(prev, lcp) < symbol_at(next, lcp))) {
        fail("characters out of order");
    }
}

bool first_token_less(const CompactTrieNode& a, const CompactTrieNode& b) {
    return a.label.front() < b.label.front();
}

}  // namespace

CompactTrie::CompactTrie(TokenKind kind) : kind_(kind) { nodes_.emplace_back(); }

NodeId CompactTrie::add_child(NodeId parent, std::vector<Run> label, Length depth) {
    const auto id = static_cast<NodeId>(nodes_.size());
    CompactTrieNode n;
    n.parent = parent;
    n.label = std::move(label);
    n.depth = depth;
    nodes_.push_back(std::move(n));
    nodes_[parent].children.push_back(id);
    return id;
}

NodeId CompactTrie::split_edge(NodeId v, Length offset) {
    const NodeId p = nodes_.at(v).parent;
    const Length label_len = token_count(kind_, nodes_[v].label);
    if (offset == 0 || offset >= label_len) {
        throw std::invalid_argument("split_edge: offset must fall strictly inside the edge");
    }
    const auto m = static_cast<NodeId>(nodes_.size());
    CompactTrieNode mid;
    mid.parent = p;
    mid.label = slice_tokens(kind_, nodes_[v].label, 0, offset);
    mid.depth = nodes_[p].depth + offset;
    mid.children = {v};
    nodes_[v].label = slice_tokens(kind_, nodes_[v].label, offset, label_len);
    nodes_[v].parent = m;
    auto& siblings = nodes_[p].children;
    *std::find(siblings.begin(), siblings.end(), v) = m;
    nodes_.push_back(std::move(mid));
    return m;
}

std::vector<std::uint32_t> CompactTrie::locus_order() const {
    std::vector<std::uint32_t> out;
    std::vector<NodeId> stack{root()};
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        const auto& n = nodes_[v];
        out.insert(out.end(), n.loci.begin(), n.loci.end());
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

RleString CompactTrie::path_string(NodeId v) const {
    std::vector<NodeId> path;
    for (NodeId u = v; u != root(); u = nodes_.at(u).parent) path.push_back(u);
    RleString s;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        for (const Run& r : nodes_[*it].label) s.append(r);
    }
    return s;
}

Length lcp_rle(const RleString& a, const RleString& b) {
    Length lcp = 0;
    const std::size_t n = std::min(a.run_count(), b.run_count());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].symbol != b[i].symbol) break;
        lcp += std::min(a[i].length, b[i].length);
        if (a[i].length != b[i].length) break;
    }
    return lcp;
}

std::size_t lcp_pairs(const RleString& a, const RleString& b) {
    const std::size_t n = std::min(a.run_count(), b.run_count());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

CompactTrie build_compact_from_sorted(TokenKind kind, std::span<const RleString> strings,
                                      std::span<const Length> lcps,
                                      std::span<const std::uint32_t> ids, TrieBuildStats* stats) {
    if (!strings.empty() && lcps.size() + 1 != strings.size()) {
        throw std::invalid_argument("build_compact_from_sorted: need one lcp per adjacent pair");
    }
    if (!ids.empty() && ids.size() != strings.size()) {
        throw std::invalid_argument("build_compact_from_sorted: ids/strings size mismatch");
    }
    TrieBuildStats local;
    TrieBuildStats& st = stats ? *stats : local;

    CompactTrie trie(kind);
    // Root-to-locus path of the previously inserted string.
    std::vector<NodeId> path{trie.root()};
    for (std::size_t i = 0; i < strings.size(); ++i) {
        const RleString& s = strings[i];
        const Length len = token_count(kind, s.runs());
        Length lcp = 0;
        if (i > 0) {
            lcp = lcps[i - 1];
            check_order(kind, strings[i - 1], s, lcp, i - 1);
            while (path.size() > 1 && trie.node(path[path.size() - 2]).depth >= lcp) {
                path.pop_back();
                ++st.token_visits;
            }
            const NodeId top = path.back();
            if (trie.node(top).depth > lcp) {
                const Length offset = lcp - trie.node(trie.node(top).parent).depth;
                path.back() = trie.split_edge(top, offset);
                ++st.token_visits;
            }
        }
        const std::uint32_t id = ids.empty() ? static_cast<std::uint32_t>(i) : ids[i];
        if (lcp == len) {
            trie.mutable_node(path.back()).loci.push_back(id);
            ++st.token_visits;
            continue;
        }
        auto label = slice_tokens(kind, s.runs(), lcp, len);
        st.token_visits += label.size();
        const NodeId leaf = trie.add_child(path.back(), std::move(label), len);
        trie.mutable_node(leaf).loci.push_back(id);
        path.push_back(leaf);
    }
    return trie;
}

CompactTrie transform_pair_trie(const CompactTrie& pair_trie) {
    if (pair_trie.kind() != TokenKind::Pairs) {
        throw std::invalid_argument("transform_pair_trie: expects a pair-token trie");
    }
    std::vector<CompactTrieNode> nodes(pair_trie.nodes().begin(), pair_trie.nodes().end());

    auto insert_sorted = [&nodes](std::vector<NodeId>& children, NodeId c) {
        auto pos = std::upper_bound(children.begin(), children.end(), c, [&](NodeId x, NodeId y) {
            return first_token_less(nodes[x], nodes[y]);
        });
        children.insert(pos, c);
    };

    // Top-down: at each node merge neighbouring children whose first runs
    // share a character, right to left, then continue into the children.
    std::deque<NodeId> queue{pair_trie.root()};
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        for (std::size_t i = nodes[v].children.size(); i-- > 1;) {
            const NodeId a = nodes[v].children[i - 1];
            const NodeId b = nodes[v].children[i];
            const Run head_a = nodes[a].label.front();
            const Run head_b = nodes[b].label.front();
            if (head_a.symbol != head_b.symbol) continue;
            // Pair order guarantees head_a.length < head_b.length.
            nodes[b].label.front().length = head_b.length - head_a.length;
            if (nodes[a].label.size() > 1) {
                const auto w = static_cast<NodeId>(nodes.size());
                CompactTrieNode mid;
                mid.parent = v;
                mid.label = {head_a};
                nodes[a].label.erase(nodes[a].label.begin());
                nodes[a].parent = w;
                nodes[b].parent = w;
                if (first_token_less(nodes[a], nodes[b])) {
                    mid.children = {a, b};
                } else {
                    mid.children = {b, a};
                }
                nodes.push_back(std::move(mid));
                nodes[v].children[i - 1] = w;
            } else {
                nodes[b].parent = a;
                insert_sorted(nodes[a].children, b);
            }
            nodes[v].children.erase(nodes[v].children.begin() + static_cast<std::ptrdiff_t>(i));
        }
        for (NodeId c : nodes[v].children) queue.push_back(c);
    }

    // Rebuild in preorder, splicing out unary non-locus nodes.
    CompactTrie out(TokenKind::Characters);
    out.mutable_node(out.root()).loci = nodes[pair_trie.root()].loci;
    struct Item {
        NodeId old_id;
        NodeId new_parent;
        std::vector<Run> prefix;
    };
    std::vector<Item> stack;
    const auto& root_children = nodes[pair_trie.root()].children;
    for (auto it = root_children.rbegin(); it != root_children.rend(); ++it) {
        stack.push_back({*it, out.root(), {}});
    }
    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        const CompactTrieNode& old = nodes[item.old_id];
        join_label(item.prefix, old.label);
        if (old.loci.empty() && old.children.size() == 1) {
            stack.push_back({old.children.front(), item.new_parent, std::move(item.prefix)});
            continue;
        }
        const Length depth = out.node(item.new_parent).depth + char_count(item.prefix);
        const NodeId id = out.add_child(item.new_parent, std::move(item.prefix), depth);
        out.mutable_node(id).loci = old.loci;
        for (auto it = old.children.rbegin(); it != old.children.rend(); ++it) {
            stack.push_back({*it, id, {}});
        }
    }
    return out;
}

CompactTrie build_compact_trie(std::span<const RleString> strings) {
    std::vector<std::uint32_t> order(strings.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto ra = strings[a].runs();
        const auto rb = strings[b].runs();
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    });
    std::vector<RleString> sorted;
    sorted.reserve(strings.size());
    for (std::uint32_t i : order) sorted.push_back(strings[i]);
    std::vector<Length> lcps;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) lcps.push_back(lcp_pairs(sorted[i], sorted[i + 1]));
    return transform_pair_trie(build_compact_from_sorted(TokenKind::Pairs, sorted, lcps, order));
}

std::vector<std::uint32_t> sort_rle(std::span<const RleString> strings) {
    return build_compact_trie(strings).locus_order();
}

RleTrie::RleTrie() { nodes_.emplace_back(); }

NodeId RleTrie::child(NodeId v, Run token) const {
    const auto& ch = nodes_.at(v).children;
    auto it = ch.find(token);
    return it == ch.end() ? kNoNode : it->second;
}

NodeId RleTrie::pattern_node(PatternId id) const {
    if (id == 0 || id > pattern_nodes_.size()) return kNoNode;
    return pattern_nodes_[id - 1];
}

RleString RleTrie::string_of(NodeId v) const {
    std::vector<Run> tokens;
    for (NodeId u = v; u != root(); u = nodes_.at(u).parent) tokens.push_back(nodes_[u].token);
    RleString s;
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) s.append(*it);
    return s;
}

NodeId RleTrie::insert(const RleString& s, PatternId id) {
    NodeId v = root();
    for (const Run& r : s.runs()) {
        NodeId next = child(v, r);
        if (next == kNoNode) {
            next = static_cast<NodeId>(nodes_.size());
            RleTrieNode n;
            n.parent = v;
            n.token = r;
            n.depth_chars = nodes_[v].depth_chars + r.length;
            n.depth_runs = nodes_[v].depth_runs + 1;
            n.first_run = v == root() ? r.length : nodes_[v].first_run;
            nodes_.push_back(std::move(n));
            nodes_[v].children.emplace(r, next);
        }
        v = next;
    }
    nodes_[v].loci.push_back(id);
    if (pattern_nodes_.size() < id) pattern_nodes_.resize(id, kNoNode);
    pattern_nodes_[id - 1] = v;
    return v;
}

RleTrie build_rle_trie(const PatternSet& patterns, bool multi_run_only) {
    RleTrie trie;
    for (const PatternMeta& p : patterns.patterns()) {
        if (multi_run_only && p.single_run()) continue;
        trie.insert(p.pattern, p.id);
    }
    return trie;
}

}  // namespace rlematch

#pragma once

// Sorting of run-length encoded strings and the tries built from them.
//
// Two trie flavours live here:
//  * CompactTrie: a path-compressed trie whose edge labels are run
//    fragments. Over TokenKind::Pairs every run (alpha, x) is one token and
//    tokens compare by (alpha, x); over TokenKind::Characters a label spells
//    decompressed characters and siblings start with distinct characters.
//  * RleTrie: the uncompressed trie over run tokens, one edge per run.
//
// Sorting follows the pair-token route: sort the run sequences as pair
// strings, build the compact pair trie, then split nodes until the trie is
// the compact character trie. Its locus order is the character order.

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "rlematch/rle.hpp"

namespace rlematch {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

using PairToken = Run;

enum class TokenKind { Pairs, Characters };

struct CompactTrieNode {
    NodeId parent = kNoNode;
    std::vector<NodeId> children;      // ordered by first label token
    std::vector<Run> label;            // incoming edge
    Length depth = 0;                  // in tokens of the trie's kind
    std::vector<std::uint32_t> loci;   // ids of input strings ending here
};

class CompactTrie {
public:
    explicit CompactTrie(TokenKind kind);

    TokenKind kind() const noexcept { return kind_; }
    NodeId root() const noexcept { return 0; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const CompactTrieNode& node(NodeId v) const { return nodes_.at(v); }
    std::span<const CompactTrieNode> nodes() const noexcept { return nodes_; }

    // Ids in depth-first order: a node's own loci precede its subtrees.
    std::vector<std::uint32_t> locus_order() const;
    // Decompressed root-to-v string.
    RleString path_string(NodeId v) const;

    NodeId add_child(NodeId parent, std::vector<Run> label, Length depth);
    // Inserts a node `offset` tokens down the edge into v; returns it.
    NodeId split_edge(NodeId v, Length offset);
    CompactTrieNode& mutable_node(NodeId v) { return nodes_.at(v); }

private:
    TokenKind kind_;
    std::vector<CompactTrieNode> nodes_;
};

struct TrieBuildStats {
    std::size_t token_visits = 0;
};

// Length in characters of the longest common prefix of the decompressions.
Length lcp_rle(const RleString& a, const RleString& b);
// Number of leading runs the two strings share exactly.
std::size_t lcp_pairs(const RleString& a, const RleString& b);

// Strings must be sorted in the order of `kind` and lcps[i] must be the lcp
// of strings[i] and strings[i+1] in the same units. ids defaults to 0..n-1.
// Throws UnsortedInput when an lcp contradicts the order.
CompactTrie build_compact_from_sorted(TokenKind kind, std::span<const RleString> strings,
                                      std::span<const Length> lcps,
                                      std::span<const std::uint32_t> ids = {},
                                      TrieBuildStats* stats = nullptr);

// Turns the compact trie of pair-token strings into the compact trie of the
// decompressed strings. Loci stay explicit nodes.
CompactTrie transform_pair_trie(const CompactTrie& pair_trie);

// Compact character trie of arbitrary (unsorted) strings; locus ids are the
// input indices.
CompactTrie build_compact_trie(std::span<const RleString> strings);

// Permutation listing the inputs in lexicographic order of their
// decompressions; equal strings keep input order.
std::vector<std::uint32_t> sort_rle(std::span<const RleString> strings);

struct RleTrieNode {
    NodeId parent = kNoNode;
    Run token{};                        // incoming edge; unused at the root
    std::map<Run, NodeId> children;
    Length depth_chars = 0;
    std::size_t depth_runs = 0;
    Length first_run = 0;               // length of the first run of str(v)
    std::vector<PatternId> loci;        // patterns spelled exactly by str(v)
};

class RleTrie {
public:
    RleTrie();

    NodeId root() const noexcept { return 0; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const RleTrieNode& node(NodeId v) const { return nodes_.at(v); }
    std::span<const RleTrieNode> nodes() const noexcept { return nodes_; }

    NodeId child(NodeId v, Run token) const;
    // kNoNode for patterns that were not inserted.
    NodeId pattern_node(PatternId id) const;
    RleString string_of(NodeId v) const;

    NodeId insert(const RleString& s, PatternId id);

private:
    std::vector<RleTrieNode> nodes_;
    std::vector<NodeId> pattern_nodes_;
};

RleTrie build_rle_trie(const PatternSet& patterns, bool multi_run_only);

}  // namespace rlematch

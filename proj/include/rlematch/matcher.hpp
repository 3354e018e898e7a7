#pragma once

// Dictionary matching directly on run-length encoded text.
//
// The dictionary is the trie of the multi-run patterns with one edge per
// run. Nodes whose strings differ only in the length of the first run form
// a group; a group shares one failure link, to the longest trie string that
// is a suffix of the group's common tail. Transitions out of a group go
// through per-token predecessor tables keyed by first-run length, so the
// text is consumed one run at a time and every failure link drops at least
// one run.
//
// Occurrences that end inside the run being read are reported through the
// truncate index, anchored at the longest truncated pattern that is a
// suffix of the current node string. Single-run patterns use a per-symbol
// table sorted by length.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rlematch/predecessor.hpp"
#include "rlematch/rle.hpp"
#include "rlematch/trie_builder.hpp"
#include "rlematch/truncate_index.hpp"

namespace rlematch {

struct Occurrence {
    PatternId id = 0;
    Length start = 0;  // 0-indexed offset in the decompressed text

    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// Occurrences of one pattern at start, start + 1, ..., start + count - 1.
struct OccurrenceRange {
    PatternId id = 0;
    Length start = 0;
    Length count = 0;
};

class OccurrenceSink {
public:
    virtual ~OccurrenceSink() = default;
    virtual void on_occurrence(const Occurrence& occ) = 0;
    // Expands into points unless overridden.
    virtual void on_range(const OccurrenceRange& range) {
        for (Length i = 0; i < range.count; ++i) on_occurrence({range.id, range.start + i});
    }
};

class CollectingSink final : public OccurrenceSink {
public:
    void on_occurrence(const Occurrence& occ) override { occurrences.push_back(occ); }
    std::vector<Occurrence> occurrences;
};

struct SearchCounters {
    std::size_t runs_processed = 0;
    std::size_t edge_descents = 0;
    std::size_t failure_follows = 0;
    std::size_t predecessor_probes = 0;
    std::size_t report_queries = 0;
};

struct DictionaryOptions {
    // Test hook: drop every report anchor so multi-run occurrences go
    // missing. Used to check that the cross-check harness notices.
    bool drop_report_anchors = false;
};

class RleDictionary {
public:
    struct Group {
        std::vector<NodeId> members;  // ascending first-run length
        NodeId failure = 0;
        // Token -> predecessor set over Z of the members owning that edge;
        // payloads are the children reached.
        std::map<Run, PredecessorSet<NodeId>> table;
    };

    RleDictionary() = default;
    // Throws EmptyPattern via PatternSet for empty patterns.
    static RleDictionary build(PatternSet patterns, DictionaryOptions options = {});

    const PatternSet& patterns() const noexcept { return patterns_; }
    const RleTrie& trie() const noexcept { return trie_; }
    const TruncateIndex& truncate_index() const noexcept { return truncate_; }
    std::span<const Group> groups() const noexcept { return groups_; }

    std::uint32_t group_of(NodeId v) const { return group_of_.at(v); }
    NodeId failure(NodeId v) const { return groups_[group_of(v)].failure; }
    Length first_run(NodeId v) const { return trie_.node(v).first_run; }
    // i_v: a longest truncated pattern that is a suffix of str(v).
    std::optional<PatternId> report_anchor(NodeId v) const;
    std::span<const std::pair<Length, PatternId>> single_run_patterns(Symbol alpha) const;

    // Longest trie string that is a suffix of str(v) followed by `run`,
    // given that str(v) is the longest trie suffix of what precedes.
    NodeId transition(NodeId v, Run run, SearchCounters* counters = nullptr) const;

private:
    PatternSet patterns_;
    RleTrie trie_;
    TruncateIndex truncate_;
    std::vector<Group> groups_;
    std::vector<std::uint32_t> group_of_;
    std::vector<PatternId> anchor_;  // 0 = none
    std::map<Symbol, PredecessorSet<NodeId>> root_table_;
    std::map<Symbol, std::vector<std::pair<Length, PatternId>>> single_run_;
};

inline RleDictionary build_dictionary(PatternSet patterns, DictionaryOptions options = {}) {
    return RleDictionary::build(std::move(patterns), options);
}

struct SearchCursor {
    NodeId node = 0;
    Length processed = 0;  // |S'|, decompressed
    std::optional<Symbol> last_symbol;
    SearchCounters counters;
};

// Processes one text run. Throws NonCanonicalRun when the run repeats the
// previous run's symbol or has length 0.
void search_run(const RleDictionary& dict, SearchCursor& cursor, Run run, OccurrenceSink& sink);

SearchCounters search(const RleDictionary& dict, const RleString& text, OccurrenceSink& sink);
std::vector<Occurrence> search(const RleDictionary& dict, const RleString& text);

}  // namespace rlematch

#include "rlematch/matcher.hpp"

#include <algorithm>
#include <string>

namespace rlematch {

RleDictionary RleDictionary::build(PatternSet patterns, DictionaryOptions options) {
    RleDictionary d;
    d.patterns_ = std::move(patterns);
    d.trie_ = build_rle_trie(d.patterns_, true);
    d.truncate_ = TruncateIndex(d.patterns_);

    const RleTrie& trie = d.trie_;
    const NodeId root = trie.root();

    for (const PatternMeta& p : d.patterns_.patterns()) {
        if (p.single_run()) d.single_run_[p.last_char].emplace_back(p.last_len, p.id);
    }
    for (auto& [alpha, list] : d.single_run_) std::sort(list.begin(), list.end());

    std::map<Symbol, std::vector<std::pair<PredecessorSet<NodeId>::Key, NodeId>>> root_edges;
    for (const auto& [token, child] : trie.node(root).children) {
        root_edges[token.symbol].emplace_back(token.length, child);
    }
    for (auto& [alpha, edges] : root_edges) {
        d.root_table_.emplace(alpha, PredecessorSet<NodeId>::build(std::move(edges)));
    }

    // Groups in breadth-first order. origin[g] = (parent group, token) that
    // created g; the root's children are grouped by symbol instead.
    d.group_of_.assign(trie.size(), 0);
    d.groups_.push_back(Group{{root}, root, {}});
    struct Origin {
        std::uint32_t parent;
        Run token;
    };
    std::vector<Origin> origin{{0, {}}};
    {
        std::map<Symbol, std::vector<NodeId>> by_symbol;
        for (const auto& [token, child] : trie.node(root).children) by_symbol[token.symbol].push_back(child);
        for (auto& [alpha, members] : by_symbol) {
            const auto g = static_cast<std::uint32_t>(d.groups_.size());
            for (NodeId v : members) d.group_of_[v] = g;
            d.groups_.push_back(Group{std::move(members), root, {}});
            origin.push_back({0, {}});
        }
    }
    for (std::uint32_t g = 1; g < d.groups_.size(); ++g) {
        std::map<Run, std::vector<std::pair<PredecessorSet<NodeId>::Key, NodeId>>> by_token;
        for (NodeId v : d.groups_[g].members) {
            for (const auto& [token, child] : trie.node(v).children) {
                by_token[token].emplace_back(trie.node(v).first_run, child);
            }
        }
        for (auto& [token, entries] : by_token) {
            const auto child_group = static_cast<std::uint32_t>(d.groups_.size());
            Group next;
            for (const auto& [z, child] : entries) {
                next.members.push_back(child);
                d.group_of_[child] = child_group;
            }
            d.groups_[g].table.emplace(token, PredecessorSet<NodeId>::build(std::move(entries)));
            d.groups_.push_back(std::move(next));
            origin.push_back({g, token});
        }
    }
    for (Group& g : d.groups_) {
        std::sort(g.members.begin(), g.members.end(),
                  [&](NodeId a, NodeId b) { return trie.node(a).first_run < trie.node(b).first_run; });
    }

    // Failure links. A group created from G by token t has tail X_G t, so its
    // link is the transition from F_G on t. Chains only visit strictly
    // shorter (in runs) groups, which come earlier in this order.
    for (std::uint32_t g = 1; g < d.groups_.size(); ++g) {
        if (origin[g].parent == 0) {
            d.groups_[g].failure = root;
        } else {
            d.groups_[g].failure = d.transition(d.groups_[origin[g].parent].failure, origin[g].token);
        }
    }

    // Report anchors. A node spelling some P_j' anchors itself; otherwise it
    // inherits from its next shorter group member, and the shortest member
    // from the group's failure target.
    std::vector<PatternId> seed(trie.size(), 0);
    for (const PatternMeta& p : d.patterns_.patterns()) {
        if (p.single_run()) continue;
        const NodeId prefix = trie.node(trie.pattern_node(p.id)).parent;
        if (seed[prefix] == 0 || p.id < seed[prefix]) seed[prefix] = p.id;
    }
    d.anchor_.assign(trie.size(), 0);
    if (!options.drop_report_anchors) {
        for (std::uint32_t g = 1; g < d.groups_.size(); ++g) {
            PatternId inherited = d.anchor_[d.groups_[g].failure];
            for (NodeId v : d.groups_[g].members) {
                d.anchor_[v] = seed[v] != 0 ? seed[v] : inherited;
                inherited = d.anchor_[v];
            }
        }
    }
    return d;
}

std::optional<PatternId> RleDictionary::report_anchor(NodeId v) const {
    const PatternId a = anchor_.at(v);
    if (a == 0) return std::nullopt;
    return a;
}

std::span<const std::pair<Length, PatternId>> RleDictionary::single_run_patterns(Symbol alpha) const {
    auto it = single_run_.find(alpha);
    if (it == single_run_.end()) return {};
    return it->second;
}

NodeId RleDictionary::transition(NodeId v, Run run, SearchCounters* counters) const {
    SearchCounters scratch;
    SearchCounters& c = counters ? *counters : scratch;
    const NodeId root = trie_.root();
    while (v != root) {
        const Group& g = groups_[group_of_[v]];
        ++c.predecessor_probes;
        if (auto it = g.table.find(run); it != g.table.end()) {
            if (auto hit = it->second.predecessor(first_run(v))) {
                ++c.edge_descents;
                return hit->payload;
            }
        }
        v = g.failure;
        ++c.failure_follows;
    }
    // At the root a match may start inside the run: take the longest root
    // edge alpha^y' with y' <= y.
    ++c.predecessor_probes;
    if (auto it = root_table_.find(run.symbol); it != root_table_.end()) {
        if (auto hit = it->second.predecessor(run.length)) {
            ++c.edge_descents;
            return hit->payload;
        }
    }
    return root;
}

void search_run(const RleDictionary& dict, SearchCursor& cursor, Run run, OccurrenceSink& sink) {
    if (run.length == 0) throw Error(ErrorCode::NonPositiveRunLength, "text run of length 0");
    if (cursor.last_symbol == run.symbol) {
        throw Error(ErrorCode::NonCanonicalRun, "consecutive text runs share a symbol");
    }
    const PatternSet& patterns = dict.patterns();

    // Step 1: occurrences ending inside this run.
    if (const auto anchor = dict.report_anchor(cursor.node)) {
        ++cursor.counters.report_queries;
        for (PatternId j : dict.truncate_index().query(*anchor, run.symbol, run.length)) {
            const PatternMeta& p = patterns[j];
            sink.on_occurrence({j, cursor.processed - p.full_len + p.last_len});
        }
    }
    for (const auto& [len, id] : dict.single_run_patterns(run.symbol)) {
        if (len > run.length) break;
        sink.on_range({id, cursor.processed, run.length - len + 1});
    }

    // Step 2: move to the longest trie suffix of S' alpha^y.
    cursor.node = dict.transition(cursor.node, run, &cursor.counters);
    cursor.processed += run.length;
    cursor.last_symbol = run.symbol;
    ++cursor.counters.runs_processed;
}

SearchCounters search(const RleDictionary& dict, const RleString& text, OccurrenceSink& sink) {
    SearchCursor cursor;
    for (const Run& r : text.runs()) search_run(dict, cursor, r, sink);
    return cursor.counters;
}

std::vector<Occurrence> search(const RleDictionary& dict, const RleString& text) {
    CollectingSink sink;
    search(dict, text, sink);
    return std::move(sink.occurrences);
}

}  // namespace rlematch

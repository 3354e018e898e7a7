// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "rlematch/catr.hpp"
#include "rlematch/matcher.hpp"
#include "rlematch/oracle.hpp"
#include "rlematch/textual.hpp"
#include "rlematch/trie_builder.hpp"
#include "rlematch/truncate_index.hpp"

using namespace rlematch;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void report(int number, const char* name, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s (%s)\n", o.ok ? "PASS" : "FAIL", number, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
}

std::vector<Occurrence> sorted(std::vector<Occurrence> v) {
    std::sort(v.begin(), v.end());
    return v;
}

oracle::GenConfig fuzz_config(std::uint64_t seed) {
    oracle::GenConfig cfg;
    cfg.seed = seed;
    cfg.alphabet = 1 + static_cast<std::uint32_t>(seed % 3);
    cfg.max_patterns = 10;
    cfg.max_pattern_runs = 4;
    cfg.max_pattern_run_length = 6;
    cfg.max_text_runs = 40;
    cfg.max_run_length = 8;
    return cfg;
}

Outcome golden_case() {
    const auto t0 = Clock::now();
    std::vector<RleString> ps;
    for (const char* p : {"a:5 b:1", "a:5 b:3 a:2", "a:5 b:3 a:1", "a:3 b:3 a:1", "b:2 a:1", "b:2"}) {
        ps.push_back(parse_rle_line(p));
    }
    const RleDictionary dict = build_dictionary(PatternSet(std::move(ps)));
    const auto got = sorted(search(dict, parse_rle_line("a:3 b:3 a:2")));
    const std::vector<Occurrence> expected{{4, 0}, {5, 4}, {6, 3}, {6, 4}};
    const double secs = seconds_since(t0);
    return {got == expected && secs < 1.0,
            std::to_string(got.size()) + " occurrences, " + std::to_string(secs) + " s"};
}

Outcome oracle_equivalence_and_counters(bool& counters_ok, std::string& counter_detail) {
    const auto t0 = Clock::now();
    std::size_t mismatches = 0;
    std::size_t total = 0;
    std::size_t counter_violations = 0;
    std::size_t max_failures = 0;
    for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
        const auto inst = oracle::generate(fuzz_config(seed));
        const RleDictionary dict = build_dictionary(inst.patterns);
        CollectingSink sink;
        const SearchCounters c = search(dict, inst.text, sink);
        const auto got = sorted(sink.occurrences);
        const auto expected = oracle::naive_search(inst.patterns, inst.text);
        total += expected.size();
        if (got != expected) ++mismatches;
        const std::size_t runs = inst.text.run_count();
        if (c.failure_follows > runs || c.edge_descents > runs) ++counter_violations;
        max_failures = std::max(max_failures, c.failure_follows);
    }
    const double secs = seconds_since(t0);
    counters_ok = counter_violations == 0;
    counter_detail = std::to_string(counter_violations) + " search violations over 10000 instances";
    return {mismatches == 0 && secs < 120.0,
            std::to_string(mismatches) + " mismatching instances of 10000, " + std::to_string(total) +
                " occurrences, " + std::to_string(secs) + " s"};
}

Outcome truncate_and_catr(bool& catr_counters_ok, std::string& catr_detail) {
    std::mt19937_64 rng(4242);

    const auto t0 = Clock::now();
    std::size_t truncate_queries = 0;
    std::size_t truncate_bad = 0;
    for (std::uint64_t seed = 1; truncate_queries < 10000; ++seed) {
        const auto inst = oracle::generate(fuzz_config(seed));
        const TruncateIndex idx(inst.patterns);
        for (const PatternMeta& p : inst.patterns.patterns()) {
            if (p.single_run() || truncate_queries == 10000) continue;
            const Symbol a = static_cast<Symbol>('a' + rng() % 3);
            const Length w = rng() % 8;
            auto got = idx.query(p.id, a, w);
            std::sort(got.begin(), got.end());
            if (got != oracle::naive_truncate(inst.patterns, p.id, a, w)) ++truncate_bad;
            ++truncate_queries;
        }
    }
    const double truncate_secs = seconds_since(t0);

    const auto t1 = Clock::now();
    std::size_t catr_bad = 0;
    std::size_t path_min_violations = 0;
    for (int q = 0; q < 10000; ++q) {
        const std::size_t n = 1 + rng() % 50;
        std::vector<NodeId> parents(n, kNoNode);
        for (std::size_t v = 1; v < n; ++v) parents[v] = static_cast<NodeId>(rng() % v);
        ColorAssignment colors(n);
        ColorWeights weights(n);
        for (std::size_t v = 0; v < n; ++v) {
            for (Color c = 0; c < 3; ++c) {
                if (rng() % 2) {
                    colors[v].push_back(c);
                    weights[v].push_back(1 + rng() % 8);
                }
            }
        }
        const CatrIndex idx = build_catr(StaticTree(parents), colors, weights);
        const NodeId v = static_cast<NodeId>(rng() % n);
        const Color c = static_cast<Color>(rng() % 4);
        const Weight w = rng() % 10;
        CatrQueryStats stats;
        auto got = idx.query(v, c, w, &stats);
        if (stats.path_min_calls > 2 * got.size() + 1) ++path_min_violations;
        std::sort(got.begin(), got.end());
        if (got != oracle::naive_catr(parents, colors, weights, v, c, w)) ++catr_bad;
    }
    const double catr_secs = seconds_since(t1);
    catr_counters_ok = path_min_violations == 0;
    catr_detail = std::to_string(path_min_violations) + " path-minimum violations over 10000 queries";
    return {truncate_bad == 0 && catr_bad == 0 && truncate_secs < 60.0 && catr_secs < 60.0,
            "truncate " + std::to_string(truncate_bad) + "/10000 wrong in " + std::to_string(truncate_secs) +
                " s, threshold " + std::to_string(catr_bad) + "/10000 wrong in " + std::to_string(catr_secs) + " s"};
}

Outcome sorting_and_transform() {
    std::mt19937_64 rng(777);
    std::size_t sort_bad = 0;
    std::size_t transform_bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<RleString> strings;
        const int n = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < n; ++i) {
            RleString s;
            const int runs = 1 + static_cast<int>(rng() % 4);
            for (int r = 0; r < runs; ++r) s.append(Run{static_cast<Symbol>('a' + rng() % 3), 1 + rng() % 8});
            strings.push_back(s);
        }
        std::vector<std::vector<Symbol>> plain;
        for (const auto& s : strings) plain.push_back(decode(s));
        std::vector<std::uint32_t> expected(strings.size());
        std::iota(expected.begin(), expected.end(), 0u);
        std::stable_sort(expected.begin(), expected.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return plain[a] < plain[b]; });
        if (sort_rle(strings) != expected) ++sort_bad;
        if (build_compact_trie(strings).locus_order() != expected) ++transform_bad;
    }
    return {sort_bad == 0 && transform_bad == 0,
            "sort " + std::to_string(sort_bad) + "/10000 wrong, transform order " + std::to_string(transform_bad) +
                "/10000 wrong"};
}

Outcome compression_insensitivity() {
    const auto t0 = Clock::now();
    std::vector<RleString> ps;
    for (const char* p : {"a:3 b:2", "b:1 a:2 c:1", "c:2 a:1", "a:1 b:1 c:1"}) ps.push_back(parse_rle_line(p));
    const RleDictionary dict = build_dictionary(PatternSet(std::move(ps)));
    std::vector<std::size_t> sums;
    std::size_t occurrences = 0;
    for (Length L : {Length{100}, Length{10000}, Length{1000000}}) {
        RleString text;
        for (int k = 0; k < 64; ++k) {
            text.append(Run{'a', L});
            text.append(Run{'b', 1});
        }
        CollectingSink sink;
        const SearchCounters c = search(dict, text, sink);
        occurrences += sink.occurrences.size();
        sums.push_back(c.edge_descents + c.failure_follows + c.predecessor_probes);
    }
    const double secs = seconds_since(t0);
    const bool equal = std::adjacent_find(sums.begin(), sums.end(), std::not_equal_to<>()) == sums.end();
    return {equal && occurrences == 0 && secs < 1.0,
            "counter sums " + std::to_string(sums[0]) + "/" + std::to_string(sums[1]) + "/" +
                std::to_string(sums[2]) + ", " + std::to_string(occurrences) + " occurrences, " +
                std::to_string(secs) + " s"};
}

Outcome rank_reduction() {
    std::size_t bad = 0;
    std::size_t bound_bad = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        auto cfg = fuzz_config(seed);
        cfg.alphabet = 1 + static_cast<std::uint32_t>(seed % 6);
        const auto inst = oracle::generate(cfg);
        const RankReduction r = rank_reduce(inst.patterns, inst.text);
        const auto before = sorted(search(build_dictionary(inst.patterns), inst.text));
        const auto after = sorted(search(build_dictionary(r.patterns), r.text));
        if (before != after || after != oracle::naive_search(inst.patterns, inst.text)) ++bad;
        const std::size_t bound = std::min(inst.text.run_count(), inst.patterns.total_runs()) + 2;
        Symbol largest = 0;
        for (const Run& x : r.text.runs()) largest = std::max(largest, x.symbol);
        for (const PatternMeta& p : r.patterns.patterns()) {
            for (const Run& x : p.pattern.runs()) largest = std::max(largest, x.symbol);
        }
        if (r.alphabet_size > bound || largest > bound) ++bound_bad;
    }
    return {bad == 0 && bound_bad == 0, std::to_string(bad) + "/1000 occurrence mismatches, " +
                                            std::to_string(bound_bad) + "/1000 alphabet bound violations"};
}

Outcome longest_suffix_invariant() {
    std::size_t violations = 0;
    std::size_t checks = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        auto cfg = fuzz_config(seed);
        cfg.max_text_runs = 20;
        const auto inst = oracle::generate(cfg);
        const RleDictionary dict = build_dictionary(inst.patterns);
        std::vector<std::vector<Symbol>> node_strings;
        for (NodeId v = 0; v < dict.trie().size(); ++v) node_strings.push_back(decode(dict.trie().string_of(v)));
        SearchCursor cursor;
        CollectingSink sink;
        std::vector<Symbol> prefix;
        for (const Run& run : inst.text.runs()) {
            search_run(dict, cursor, run, sink);
            prefix.insert(prefix.end(), run.length, run.symbol);
            std::size_t best_len = 0;
            NodeId best = dict.trie().root();
            for (NodeId v = 0; v < node_strings.size(); ++v) {
                const auto& s = node_strings[v];
                if (s.size() > best_len && s.size() <= prefix.size() &&
                    std::equal(s.begin(), s.end(), prefix.end() - static_cast<std::ptrdiff_t>(s.size()))) {
                    best_len = s.size();
                    best = v;
                }
            }
            ++checks;
            if (cursor.node != best) ++violations;
        }
    }
    return {violations == 0, std::to_string(violations) + " violations over " + std::to_string(checks) +
                                 " runs in 1000 instances"};
}

}  // namespace

int main() {
    bool search_counters_ok = false;
    bool catr_counters_ok = false;
    std::string search_counter_detail;
    std::string catr_counter_detail;

    report(1, "golden sample instance", golden_case);
    report(2, "matcher agrees with brute force on 10000 instances",
           [&] { return oracle_equivalence_and_counters(search_counters_ok, search_counter_detail); });
    report(3, "truncate and threshold queries agree with brute force",
           [&] { return truncate_and_catr(catr_counters_ok, catr_counter_detail); });
    report(4, "run-length sort and trie transform order", sorting_and_transform);
    report(5, "amortization counters", [&] {
        return Outcome{search_counters_ok && catr_counters_ok, search_counter_detail + ", " + catr_counter_detail};
    });
    report(6, "work independent of run lengths", compression_insensitivity);
    report(7, "rank reduction preserves occurrences", rank_reduction);
    report(8, "cursor is the longest trie suffix after every run", longest_suffix_invariant);
    return failures == 0 ? 0 : 1;
}

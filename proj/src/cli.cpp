#include "rlematch/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "rlematch/matcher.hpp"
#include "rlematch/oracle.hpp"
#include "rlematch/textual.hpp"

namespace rlematch::cli {

namespace {

// Error tagged with the file/line it came from.
struct InputError {
    std::string where;
    Error error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError{path, Error(ErrorCode::ParseError, "cannot open file")};
    return in;
}

PatternSet read_patterns(const std::string& path, bool raw) {
    std::ifstream in = open_input(path);
    std::vector<RleString> patterns;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        try {
            RleString p = raw ? encode(line) : parse_rle_line(line);
            if (p.empty()) throw Error(ErrorCode::EmptyPattern, "empty pattern line");
            patterns.push_back(std::move(p));
        } catch (const Error& e) {
            throw InputError{path + ":" + std::to_string(line_no), e};
        }
    }
    return PatternSet(std::move(patterns));
}

// Streams the text file as canonical runs; lines are concatenated.
class TextSource {
public:
    TextSource(const std::string& path, bool raw) : path_(path), in_(open_input(path)), raw_(raw), tokens_(in_) {}

    std::optional<Run> next() {
        try {
            return raw_ ? next_raw() : tokens_.next();
        } catch (const Error& e) {
            throw InputError{path_ + ":" + std::to_string(raw_ ? line_ : tokens_.line()), e};
        }
    }

private:
    std::optional<Run> next_raw() {
        char c;
        while (in_.get(c)) {
            if (c == '\n') {
                ++line_;
                continue;
            }
            const Symbol s = static_cast<unsigned char>(c);
            if (pending_ && pending_->symbol == s) {
                ++pending_->length;
                continue;
            }
            auto out = pending_;
            pending_ = Run{s, 1};
            if (out) return out;
        }
        auto out = pending_;
        pending_.reset();
        return out;
    }

    std::string path_;
    std::ifstream in_;
    bool raw_;
    RunReader tokens_;
    std::optional<Run> pending_;
    std::size_t line_ = 1;
};

RleString read_text(const std::string& path, bool raw) {
    TextSource src(path, raw);
    RleString s;
    while (auto r = src.next()) s.append(*r);
    return s;
}

struct Record {
    PatternId id;
    Length start;
    std::optional<Length> count;
};

void print_record(std::ostream& out, const Record& r) {
    out << r.id << '\t' << r.start;
    if (r.count) out << '\t' << *r.count;
    out << '\n';
}

class PrintingSink final : public OccurrenceSink {
public:
    PrintingSink(std::ostream& out, bool ranges, bool buffer) : out_(out), ranges_(ranges), buffer_(buffer) {}

    void on_occurrence(const Occurrence& occ) override { emit({occ.id, occ.start, std::nullopt}); }
    void on_range(const OccurrenceRange& range) override {
        if (!ranges_) {
            OccurrenceSink::on_range(range);
            return;
        }
        emit({range.id, range.start, range.count});
    }

    void flush_sorted() {
        std::sort(records_.begin(), records_.end(), [](const Record& a, const Record& b) {
            return std::tie(a.start, a.id) < std::tie(b.start, b.id);
        });
        for (const Record& r : records_) print_record(out_, r);
        records_.clear();
    }

private:
    void emit(const Record& r) {
        if (buffer_) {
            records_.push_back(r);
        } else {
            print_record(out_, r);
        }
    }

    std::ostream& out_;
    bool ranges_;
    bool buffer_;
    std::vector<Record> records_;
};

void print_counters(std::ostream& err, const SearchCounters& c) {
    err << "runs_processed\t" << c.runs_processed << '\n'
        << "edge_descents\t" << c.edge_descents << '\n'
        << "failure_follows\t" << c.failure_follows << '\n'
        << "predecessor_probes\t" << c.predecessor_probes << '\n'
        << "report_queries\t" << c.report_queries << '\n';
}

std::vector<Occurrence> index_occurrences(const PatternSet& patterns, const RleString& text,
                                          DictionaryOptions options) {
    const RleDictionary dict = build_dictionary(patterns, options);
    auto occ = search(dict, text);
    std::sort(occ.begin(), occ.end());
    return occ;
}

struct MatchOptions {
    std::string patterns;
    std::string text;
    bool raw = false;
    bool sort = false;
    bool ranges = false;
    bool stats = false;
    std::string mode = "index";
    Length limit = kDefaultExpansionLimit;
};

int cmd_match(const MatchOptions& o, std::ostream& out, std::ostream& err) {
    PatternSet patterns = read_patterns(o.patterns, o.raw);
    PrintingSink sink(out, o.ranges, o.sort);
    if (o.mode == "oracle") {
        const RleString text = read_text(o.text, o.raw);
        for (const Occurrence& occ : oracle::naive_search(patterns, text, o.limit)) sink.on_occurrence(occ);
    } else {
        const RleDictionary dict = build_dictionary(std::move(patterns));
        TextSource src(o.text, o.raw);
        SearchCursor cursor;
        while (auto run = src.next()) search_run(dict, cursor, *run, sink);
        if (o.stats) print_counters(err, cursor.counters);
    }
    if (o.sort) sink.flush_sorted();
    return kOk;
}

int cmd_encode(const std::string& path, std::ostream& out) {
    std::ifstream in = open_input(path);
    std::string line;
    while (std::getline(in, line)) out << format_rle(encode(line)) << '\n';
    return kOk;
}

int cmd_decode(const std::string& path, Length limit, std::ostream& out) {
    std::ifstream in = open_input(path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        try {
            out << decode_bytes(parse_rle_line(line), limit) << '\n';
        } catch (const Error& e) {
            throw InputError{path + ":" + std::to_string(line_no), e};
        }
    }
    return kOk;
}

int cmd_gen(const oracle::GenConfig& cfg, const std::string& patterns_out, const std::string& text_out,
            std::ostream& err) {
    const oracle::Instance inst = oracle::generate(cfg);
    std::ofstream p(patterns_out);
    std::ofstream t(text_out);
    if (!p || !t) {
        err << "cannot write output files\n";
        return kParseFailure;
    }
    for (const PatternMeta& m : inst.patterns.patterns()) p << format_rle(m.pattern) << '\n';
    t << format_rle(inst.text) << '\n';
    return kOk;
}

int cmd_check(const std::string& patterns_path, const std::string& text_path, bool raw, Length limit,
              bool inject_fault, std::ostream& out) {
    const PatternSet patterns = read_patterns(patterns_path, raw);
    const RleString text = read_text(text_path, raw);
    const auto expected = oracle::naive_search(patterns, text, limit);
    const auto got = index_occurrences(patterns, text, DictionaryOptions{.drop_report_anchors = inject_fault});

    std::vector<Occurrence> missing;
    std::vector<Occurrence> extra;
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    for (const Occurrence& o : missing) out << "-\t" << o.id << '\t' << o.start << '\n';
    for (const Occurrence& o : extra) out << "+\t" << o.id << '\t' << o.start << '\n';
    if (missing.empty() && extra.empty()) {
        out << "ok\t" << expected.size() << " occurrences\n";
        return kOk;
    }
    return kMismatch;
}

int cmd_stats(const std::string& patterns_path, bool raw, std::ostream& out) {
    const PatternSet patterns = read_patterns(patterns_path, raw);
    std::size_t single = 0;
    for (const PatternMeta& p : patterns.patterns()) single += p.single_run() ? 1 : 0;
    const RleDictionary dict = build_dictionary(patterns);
    out << "patterns\t" << patterns.size() << '\n'
        << "pattern_runs\t" << patterns.total_runs() << '\n'
        << "pattern_length\t" << patterns.total_length() << '\n'
        << "single_run_patterns\t" << single << '\n'
        << "trie_nodes\t" << dict.trie().size() << '\n'
        << "groups\t" << dict.groups().size() << '\n'
        << "truncate_trie_nodes\t" << dict.truncate_index().trie().size() << '\n';
    return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dictionary matching on run-length encoded strings", "rlematch"};
    app.require_subcommand(1);

    std::string file;
    Length limit = kDefaultExpansionLimit;

    auto* encode_cmd = app.add_subcommand("encode", "Raw lines to SYM:LEN lines");
    encode_cmd->add_option("file", file, "Input file")->required();

    auto* decode_cmd = app.add_subcommand("decode", "SYM:LEN lines to raw lines");
    decode_cmd->add_option("file", file, "Input file")->required();
    decode_cmd->add_option("--limit", limit, "Maximum decoded characters per line");

    MatchOptions mo;
    auto* match_cmd = app.add_subcommand("match", "Report pattern occurrences in a text");
    match_cmd->add_option("patterns", mo.patterns, "Pattern file, one pattern per line")->required();
    match_cmd->add_option("text", mo.text, "Text file")->required();
    match_cmd->add_flag("--raw", mo.raw, "Treat lines as literal strings");
    match_cmd->add_flag("--sort", mo.sort, "Sort output by (start, id)");
    match_cmd->add_flag("--ranges", mo.ranges, "Emit single-run progressions as ID START COUNT");
    match_cmd->add_flag("--stats", mo.stats, "Print traversal counters to stderr");
    match_cmd->add_option("--mode", mo.mode, "index or oracle")->check(CLI::IsMember({"index", "oracle"}));
    match_cmd->add_option("--limit", mo.limit, "Expansion limit for the oracle");

    oracle::GenConfig cfg;
    std::string patterns_out = "patterns.txt";
    std::string text_out = "text.txt";
    auto* gen_cmd = app.add_subcommand("gen", "Write a random instance");
    gen_cmd->add_option("--seed", cfg.seed);
    gen_cmd->add_option("--alphabet", cfg.alphabet)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-patterns", cfg.max_patterns)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-pattern-runs", cfg.max_pattern_runs)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-text-runs", cfg.max_text_runs)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-run-length", cfg.max_run_length)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--patterns-out", patterns_out)->required();
    gen_cmd->add_option("--text-out", text_out)->required();

    std::string check_patterns;
    std::string check_text;
    bool check_raw = false;
    bool inject_fault = false;
    auto* check_cmd = app.add_subcommand("check", "Compare the index against the brute-force oracle");
    check_cmd->add_option("patterns", check_patterns)->required();
    check_cmd->add_option("text", check_text)->required();
    check_cmd->add_flag("--raw", check_raw);
    check_cmd->add_option("--limit", limit);
    check_cmd->add_flag("--inject-fault", inject_fault)->group("");

    bool stats_raw = false;
    auto* stats_cmd = app.add_subcommand("stats", "Print dictionary statistics");
    stats_cmd->add_option("patterns", file)->required();
    stats_cmd->add_flag("--raw", stats_raw);

    std::vector<std::string> argv_storage{"rlematch"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kParseFailure;
    }

    try {
        if (*encode_cmd) return cmd_encode(file, out);
        if (*decode_cmd) return cmd_decode(file, limit, out);
        if (*match_cmd) return cmd_match(mo, out, err);
        if (*gen_cmd) return cmd_gen(cfg, patterns_out, text_out, err);
        if (*check_cmd) return cmd_check(check_patterns, check_text, check_raw, limit, inject_fault, out);
        if (*stats_cmd) return cmd_stats(file, stats_raw, out);
    } catch (const InputError& e) {
        err << e.where << ": " << e.error.what() << '\n';
        return e.error.code() == ErrorCode::ExpansionLimit ? kExpansionLimit : kParseFailure;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.code() == ErrorCode::ExpansionLimit ? kExpansionLimit : kParseFailure;
    }
    return kParseFailure;
}

}  // namespace rlematch::cli

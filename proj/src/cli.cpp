/*
   Copyright 2026 The shardbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "shardbench/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "shardbench/corpus.hpp"
#include "shardbench/error.hpp"
#include "shardbench/histogram.hpp"
#include "shardbench/layout.hpp"

namespace shardbench::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kChunkSize = std::size_t{1} << 16;

std::string fmt_double(double v, int precision = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
        throw Error(ErrorCode::InvalidConfig, "invalid " + what + ": '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view text, const std::string& what) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_u64(text.substr(start, comma - start), what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::uint32_t> narrow_moduli(const std::vector<std::uint64_t>& moduli) {
    std::vector<std::uint32_t> out;
    out.reserve(moduli.size());
    for (auto m : moduli) {
        if (m > std::numeric_limits<std::uint32_t>::max()) {
            throw Error(ErrorCode::InvalidConfig, "modulus " + std::to_string(m) + " is too large");
        }
        out.push_back(static_cast<std::uint32_t>(m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Strategy flags shared by analyze, locate, check-fanout and mkdirs.

struct StrategyFlags {
    std::string name = "md5";
    std::vector<std::uint64_t> moduli;
    int levels = LetterConfig::kMaxLevels;
    std::uint64_t bucket_size = 0;
    std::uint64_t servers = 0;
    std::string md5_input = "newline";
    CLI::Option* moduli_opt = nullptr;
    CLI::Option* md5_input_opt = nullptr;
    CLI::Option* levels_opt = nullptr;
    CLI::Option* bucket_opt = nullptr;
    CLI::Option* servers_opt = nullptr;
};

void add_strategy_flags(CLI::App* cmd, StrategyFlags& f) {
    cmd->add_option("--strategy", f.name, "Placement strategy")
        ->check(CLI::IsMember({"letter", "ascii-sum", "mapping", "md5"}))
        ->capture_default_str();
    f.moduli_opt = cmd->add_option("--moduli", f.moduli,
                                   "Per-level moduli for ascii-sum and md5, e.g. 64,64,128")
                       ->delimiter(',');
    f.levels_opt = cmd->add_option("--levels", f.levels, "Letter expansion depth (1..6)");
    f.bucket_opt = cmd->add_option("--bucket-size", f.bucket_size, "Mapping bucket size");
    f.servers_opt = cmd->add_option("--servers", f.servers, "Mapping server count");
    f.md5_input_opt = cmd->add_option("--md5-input", f.md5_input,
                                      "Bytes hashed for md5: newline (name + LF) | raw")
                          ->check(CLI::IsMember({"newline", "raw"}));
}

void reject_flag(const StrategyFlags& f, const CLI::Option* opt) {
    if (opt->count() > 0) {
        throw UsageError(opt->get_name() + " does not apply to --strategy " + f.name);
    }
}

Strategy build_strategy(const StrategyFlags& f) {
    if (f.name != "md5") reject_flag(f, f.md5_input_opt);
    if (f.name == "letter") {
        reject_flag(f, f.moduli_opt);
        reject_flag(f, f.bucket_opt);
        reject_flag(f, f.servers_opt);
        return LetterConfig(f.levels);
    }
    if (f.name == "mapping") {
        reject_flag(f, f.moduli_opt);
        reject_flag(f, f.levels_opt);
        if (f.bucket_opt->count() == 0 || f.servers_opt->count() == 0) {
            throw UsageError("--strategy mapping needs --bucket-size and --servers");
        }
        return MappingConfig(f.bucket_size, f.servers);
    }
    reject_flag(f, f.levels_opt);
    reject_flag(f, f.bucket_opt);
    reject_flag(f, f.servers_opt);
    if (f.name == "ascii-sum") {
        return f.moduli_opt->count() ? AsciiSumConfig(narrow_moduli(f.moduli)) : AsciiSumConfig();
    }
    Md5Input input = f.md5_input == "raw" ? Md5Input::Raw : Md5Input::NewlineTerminated;
    return f.moduli_opt->count() ? Md5Config(narrow_moduli(f.moduli), input)
                                 : Md5Config({64, 64, 128}, input);
}

nlohmann::json config_json(const Strategy& s) {
    nlohmann::json j = nlohmann::json::object();
    if (const auto* letter = std::get_if<LetterConfig>(&s)) {
        j["levels"] = letter->levels();
    } else if (const auto* mapping = std::get_if<MappingConfig>(&s)) {
        j["bucket_size"] = mapping->bucket_size();
        j["servers"] = mapping->num_servers();
    } else {
        j["moduli"] = level_moduli(s);
        if (const auto* md5 = std::get_if<Md5Config>(&s)) {
            j["input"] = md5->input() == Md5Input::Raw ? "raw" : "newline";
        }
    }
    return j;
}

// Write to `path`, or to `out` when path is empty or "-".
class Sink {
public:
    Sink(const std::string& path, std::ostream& out) : path_(path) {
        if (path.empty() || path == "-") {
            stream_ = &out;
        } else {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
            stream_ = &file_;
        }
    }

    std::ostream& stream() { return *stream_; }

    void finish() {
        if (file_.is_open()) {
            file_.close();
            if (file_.fail()) throw Error(ErrorCode::Io, "write failed for " + path_);
            return;
        }
        stream_->flush();
        if (!*stream_) throw Error(ErrorCode::Io, "write failed for output");
    }

private:
    std::string path_;
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

void report_rejections(const std::vector<Rejection>& rejections, std::ostream& err) {
    for (const auto& r : rejections) err << format_rejection(r) << '\n';
    if (!rejections.empty()) err << rejections.size() << " line(s) rejected\n";
}

// ---------------------------------------------------------------------------
// gen-corpus

struct GenCorpusArgs {
    std::string model = "name-like";
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    std::size_t min_len = 3;
    std::size_t max_len = 12;
    std::string output;
};

int cmd_gen_corpus(const GenCorpusArgs& a, std::ostream& out, std::ostream& err) {
    CorpusSpec spec;
    spec.model = a.model == "uniform" ? CorpusModel::Uniform : CorpusModel::NameLike;
    spec.count = a.count;
    spec.seed = a.seed;
    spec.min_len = a.min_len;
    spec.max_len = a.max_len;
    spec.validate();

    CorpusGenerator gen(spec);
    Sink sink(a.output, out);
    std::ostream& os = sink.stream();
    while (auto u = gen.next()) os << u->str() << '\n';
    sink.finish();

    err << "wrote " << spec.count << " names (model=" << a.model << ", seed=" << spec.seed
        << ") to " << (a.output.empty() || a.output == "-" ? "stdout" : a.output) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
    std::string corpus;
    StrategyFlags strategy;
    std::size_t level = 0;
    std::string format = "json";
    std::string output;
    std::string ids;
    bool no_counts = false;
};

std::pair<std::uint64_t, std::uint64_t> parse_id_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) return {1, parse_u64(text, "id range")};
    std::uint64_t first = parse_u64(std::string_view(text).substr(0, dots), "id range");
    std::uint64_t last = parse_u64(std::string_view(text).substr(dots + 2), "id range");
    if (first == 0) throw UsageError("member IDs start at 1");
    if (last < first) throw UsageError("empty id range " + text);
    return {first, last};
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
    Strategy strategy = build_strategy(a.strategy);
    std::optional<Histogram> histogram;
    std::string source;

    if (!a.ids.empty()) {
        const auto* mapping = std::get_if<MappingConfig>(&strategy);
        if (mapping == nullptr) throw UsageError("--ids applies only to --strategy mapping");
        if (!a.corpus.empty()) throw UsageError("give either a corpus file or --ids, not both");
        joint_bucket_count(strategy, a.level);
        auto [first, last] = parse_id_range(a.ids);
        histogram = build_id_histogram_parallel(first, last, *mapping);
        source = "ids:" + std::to_string(first) + ".." + std::to_string(last);
    } else {
        if (a.corpus.empty()) throw UsageError("analyze needs a corpus file (or --ids for mapping)");
        HistogramBuilder builder(strategy, a.level);
        CorpusReader reader{std::filesystem::path(a.corpus)};
        std::vector<Username> chunk;
        while (reader.next_chunk(chunk, kChunkSize)) builder.add_chunk(chunk);
        report_rejections(reader.rejections(), err);
        histogram = builder.histogram();
        source = a.corpus;
    }

    const Histogram& h = *histogram;
    if (h.total() == 0) {
        err << "no names to analyze (skipped=" << h.skipped() << ")\n";
        return kEmptyInput;
    }
    DistributionStats stats = compute_stats(h);

    Sink sink(a.output, out);
    std::ostream& os = sink.stream();
    auto counts = h.counts();
    if (a.format == "csv") {
        os << "bucket,count\n";
        for (std::size_t b = 0; b < counts.size(); ++b) os << b << ',' << counts[b] << '\n';
    } else if (a.format == "plot-data") {
        for (std::size_t b = 0; b < counts.size(); ++b) os << b << ' ' << counts[b] << '\n';
    } else {
        nlohmann::ordered_json j;
        j["strategy"] = strategy_name(strategy);
        j["config"] = config_json(strategy);
        j["level"] = a.level;
        j["bucket_count"] = h.bucket_count();
        j["total"] = h.total();
        j["skipped"] = h.skipped();
        j["ideal_mean"] = stats.ideal_mean;
        j["std_dev"] = stats.std_dev;
        j["deviation_ratio"] = stats.deviation_ratio;
        j["source"] = source;
        if (!a.no_counts) j["counts"] = std::vector<std::uint64_t>(counts.begin(), counts.end());
        os << j.dump(2) << '\n';
    }
    sink.finish();

    err << "ideal_mean=" << fmt_double(stats.ideal_mean) << " std_dev=" << fmt_double(stats.std_dev)
        << " ratio=" << fmt_double(stats.deviation_ratio) << " skipped=" << h.skipped() << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// compare

struct CompareArgs {
    std::string corpus;
    std::vector<std::string> strategies;
    std::string levels = "0";
    std::string format = "text";
    std::string output;
};

struct CompareRow {
    std::size_t level = 0;
    std::string strategy;
    std::string config;
    std::uint64_t bucket_count = 0;
    std::uint64_t skipped = 0;
    std::optional<DistributionStats> stats;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
    if (a.strategies.size() < 2) throw UsageError("compare needs at least two --strategy specs");
    std::vector<Strategy> strategies;
    for (const auto& spec : a.strategies) strategies.push_back(parse_strategy_spec(spec));
    std::vector<std::uint64_t> levels = parse_u64_list(a.levels, "level list");

    std::vector<HistogramBuilder> builders;
    for (std::uint64_t level : levels) {
        for (const auto& s : strategies) {
            if (level >= max_depth(s)) {
                err << "note: " << strategy_name(s) << " (" << describe_config(s)
                    << ") has no level " << level << "; row omitted\n";
                continue;
            }
            builders.emplace_back(s, static_cast<std::size_t>(level));
        }
    }

    CorpusReader reader{std::filesystem::path(a.corpus)};
    std::vector<Username> chunk;
    std::uint64_t names = 0;
    while (reader.next_chunk(chunk, kChunkSize)) {
        names += chunk.size();
        for (auto& b : builders) b.add_chunk(chunk);
    }
    report_rejections(reader.rejections(), err);
    if (names == 0) {
        err << "no names to compare\n";
        return kEmptyInput;
    }

    std::vector<CompareRow> rows;
    for (const auto& b : builders) {
        CompareRow row{b.level(), strategy_name(b.strategy()), describe_config(b.strategy()),
                       b.histogram().bucket_count(), b.histogram().skipped(), std::nullopt};
        if (b.histogram().total() > 0) row.stats = compute_stats(b.histogram());
        rows.push_back(std::move(row));
    }
    // Levels in the order given; within a level, most even first.
    std::stable_sort(rows.begin(), rows.end(), [&](const CompareRow& x, const CompareRow& y) {
        auto lx = std::find(levels.begin(), levels.end(), x.level);
        auto ly = std::find(levels.begin(), levels.end(), y.level);
        if (lx != ly) return lx < ly;
        if (!x.stats || !y.stats) return x.stats.has_value() && !y.stats.has_value();
        return x.stats->deviation_ratio < y.stats->deviation_ratio;
    });

    Sink sink(a.output, out);
    std::ostream& os = sink.stream();
    auto stat = [](const CompareRow& r, double DistributionStats::*field) {
        return r.stats ? fmt_double((*r.stats).*field) : std::string("-");
    };
    if (a.format == "csv") {
        os << "level,strategy,config,bucket_count,ideal_mean,std_dev,deviation_ratio,skipped\n";
        for (const auto& r : rows) {
            os << r.level << ',' << r.strategy << ',' << csv_field(r.config) << ','
               << r.bucket_count << ',' << stat(r, &DistributionStats::ideal_mean) << ','
               << stat(r, &DistributionStats::std_dev) << ','
               << stat(r, &DistributionStats::deviation_ratio) << ',' << r.skipped << '\n';
        }
    } else {
        char line[256];
        std::snprintf(line, sizeof line, "%-5s %-10s %-28s %12s %14s %14s %15s %10s\n", "level",
                      "strategy", "config", "bucket_count", "ideal_mean", "std_dev",
                      "deviation_ratio", "skipped");
        os << line;
        for (const auto& r : rows) {
            std::snprintf(line, sizeof line, "%-5zu %-10s %-28s %12llu %14s %14s %15s %10llu\n",
                          r.level, r.strategy.c_str(), r.config.c_str(),
                          static_cast<unsigned long long>(r.bucket_count),
                          stat(r, &DistributionStats::ideal_mean).c_str(),
                          stat(r, &DistributionStats::std_dev).c_str(),
                          stat(r, &DistributionStats::deviation_ratio).c_str(),
                          static_cast<unsigned long long>(r.skipped));
            os << line;
        }
    }
    sink.finish();
    return kOk;
}

// ---------------------------------------------------------------------------
// locate

struct LocateArgs {
    std::string name;
    StrategyFlags strategy;
    std::string root;
};

std::string join_buckets(const Placement& p) {
    std::string s;
    for (std::size_t i = 0; i < p.levels.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p.levels[i].bucket);
    }
    return s;
}

int cmd_locate(const LocateArgs& a, std::ostream& out, std::ostream& err) {
    Strategy strategy = build_strategy(a.strategy);

    if (const auto* mapping = std::get_if<MappingConfig>(&strategy)) {
        std::uint64_t id = parse_u64(a.name, "member id");
        if (id == 0) throw UsageError("member IDs start at 1");
        CounterSlot slot = counter_placement(id, *mapping);
        Placement p{{{slot.server, mapping->num_servers()}}};
        err << "bucket=" << slot.bucket << " server=" << slot.server << '\n';
        out << join_buckets(p) << '\n' << placement_path(p, a.name, a.root).render() << '\n';
        return kOk;
    }

    Username u = Username::normalize(a.name);
    Placement p = place(u, 1, strategy);
    StoragePath path;
    if (const auto* letter = std::get_if<LetterConfig>(&strategy)) {
        path = letter_path(u, a.root, letter->levels());
    } else {
        path = placement_path(p, u.str(), a.root);
    }
    out << join_buckets(p) << '\n' << path.render() << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// check-fanout and mkdirs

struct FanoutArgs {
    StrategyFlags strategy;
    std::uint64_t limit = kDefaultFanoutLimit;
};

// The layout check accepts any positive moduli, including md5 shapes that an
// Md5Config would refuse, so oversized layouts can be diagnosed.
std::vector<std::uint64_t> layout_moduli(const StrategyFlags& f) {
    if (f.name == "mapping") throw UsageError("mapping has no directory layout");
    if (f.name == "letter") return level_moduli(build_strategy(f));
    reject_flag(f, f.levels_opt);
    reject_flag(f, f.bucket_opt);
    reject_flag(f, f.servers_opt);
    if (f.moduli_opt->count() == 0) {
        return f.name == "md5" ? level_moduli(Md5Config()) : level_moduli(AsciiSumConfig());
    }
    for (auto m : f.moduli) {
        if (m == 0) throw UsageError("moduli must be positive");
    }
    return f.moduli;
}

void print_fanout(const FanoutReport& r, std::ostream& out) {
    out << "per_level_dirs:";
    for (auto d : r.per_level_dirs) out << ' ' << d;
    out << "\ndirs_under_one_top: " << r.dirs_under_one_top
        << "\ntotal_leaf_buckets: " << r.total_leaf_buckets << "\nlimit: " << r.limit
        << "\nstatus: " << (r.ok ? "ok" : "exceeds limit") << '\n';
}

int cmd_check_fanout(const FanoutArgs& a, std::ostream& out, std::ostream&) {
    if (a.limit == 0) throw UsageError("--limit must be positive");
    FanoutReport r = fanout_report(layout_moduli(a.strategy), a.limit);
    print_fanout(r, out);
    return r.ok ? kOk : kLimitViolation;
}

struct MkdirsArgs {
    std::string root;
    std::vector<std::uint64_t> moduli;
    CLI::Option* moduli_opt = nullptr;
    std::uint64_t limit = kDefaultFanoutLimit;
};

int cmd_mkdirs(const MkdirsArgs& a, std::ostream& out, std::ostream& err) {
    Md5Config cfg = a.moduli_opt->count() ? Md5Config(narrow_moduli(a.moduli)) : Md5Config();
    auto moduli = level_moduli(cfg);
    FanoutReport r = fanout_report(moduli, a.limit);
    if (!r.ok) {
        print_fanout(r, err);
        err << "refusing to create a layout that exceeds the fan-out limit\n";
        return kLimitViolation;
    }
    std::uint64_t created = materialize_skeleton(a.root, moduli, a.limit);
    out << "created " << created << " directories under " << a.root << '\n';
    return kOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::FileNotFound:
        case ErrorCode::Io:
            return kIo;
        case ErrorCode::EmptyHistogram:
            return kEmptyInput;
        default:
            return kUsage;
    }
}

}  // namespace

Strategy parse_strategy_spec(std::string_view spec) {
    bool raw_input = spec.ends_with("@raw");
    if (raw_input) spec.remove_suffix(4);
    auto colon = spec.find(':');
    std::string name(spec.substr(0, colon));
    std::optional<std::string_view> params;
    if (colon != std::string_view::npos) params = spec.substr(colon + 1);
    if (raw_input && name != "md5") {
        throw Error(ErrorCode::InvalidConfig, "@raw applies only to md5");
    }

    if (name == "letter") {
        if (!params) return LetterConfig();
        std::uint64_t levels = parse_u64(*params, "letter levels");
        if (levels > static_cast<std::uint64_t>(LetterConfig::kMaxLevels)) {
            throw Error(ErrorCode::InvalidConfig, "letter levels must be in 1..6");
        }
        return LetterConfig(static_cast<int>(levels));
    }
    if (name == "ascii-sum") {
        if (!params) return AsciiSumConfig();
        return AsciiSumConfig(narrow_moduli(parse_u64_list(*params, "ascii-sum moduli")));
    }
    if (name == "md5") {
        Md5Input input = raw_input ? Md5Input::Raw : Md5Input::NewlineTerminated;
        if (!params) return Md5Config({64, 64, 128}, input);
        return Md5Config(narrow_moduli(parse_u64_list(*params, "md5 moduli")), input);
    }
    if (name == "mapping") {
        if (!params) {
            throw Error(ErrorCode::InvalidConfig, "mapping spec needs BUCKET_SIZE,SERVERS");
        }
        auto values = parse_u64_list(*params, "mapping parameters");
        if (values.size() != 2) {
            throw Error(ErrorCode::InvalidConfig, "mapping spec needs BUCKET_SIZE,SERVERS");
        }
        return MappingConfig(values[0], values[1]);
    }
    throw Error(ErrorCode::InvalidConfig, "unknown strategy '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shard placement strategies and distribution analysis", "shardbench"};
    app.require_subcommand(1);

    GenCorpusArgs gen;
    auto* gen_cmd = app.add_subcommand("gen-corpus", "Generate a synthetic username corpus");
    gen_cmd->add_option("--model", gen.model, "uniform | name-like")
        ->check(CLI::IsMember({"uniform", "name-like"}))
        ->capture_default_str();
    gen_cmd->add_option("--count", gen.count, "Number of distinct names")->required();
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
    gen_cmd->add_option("--min-len", gen.min_len, "Minimum name length")->capture_default_str();
    gen_cmd->add_option("--max-len", gen.max_len, "Maximum name length")->capture_default_str();
    gen_cmd->add_option("-o,--output", gen.output, "Output file ('-' for stdout)")->required();

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Bucket histogram and statistics for one strategy level");
    analyze_cmd->add_option("corpus", analyze.corpus, "Corpus file, one name per line");
    add_strategy_flags(analyze_cmd, analyze.strategy);
    analyze_cmd->add_option("--level", analyze.level, "Level (0-based) of the joint bucket space")
        ->capture_default_str();
    analyze_cmd->add_option("--format", analyze.format, "json | csv | plot-data")
        ->check(CLI::IsMember({"json", "csv", "plot-data"}))
        ->capture_default_str();
    analyze_cmd->add_option("-o,--output", analyze.output, "Output file (default stdout)");
    analyze_cmd->add_option("--ids", analyze.ids, "Member ID range A..B (or N for 1..N), mapping only");
    analyze_cmd->add_flag("--no-counts", analyze.no_counts, "Omit per-bucket counts from json");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "Rank strategies by deviation ratio");
    compare_cmd->add_option("corpus", compare.corpus, "Corpus file, one name per line")->required();
    compare_cmd
        ->add_option("-s,--strategy", compare.strategies,
                     "Strategy spec, repeatable: letter[:L], ascii-sum[:M,..], md5[:M,..], "
                     "mapping:SIZE,SERVERS")
        ->required();
    compare_cmd->add_option("--levels", compare.levels, "Comma-separated levels")->capture_default_str();
    compare_cmd->add_option("--format", compare.format, "text | csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    compare_cmd->add_option("-o,--output", compare.output, "Output file (default stdout)");

    LocateArgs locate;
    auto* locate_cmd = app.add_subcommand("locate", "Placement and storage path of one member");
    locate_cmd->add_option("name", locate.name, "User name (member ID for mapping)")->required();
    add_strategy_flags(locate_cmd, locate.strategy);
    locate_cmd->add_option("--root", locate.root, "Mount prefix of rendered paths");

    FanoutArgs fanout;
    auto* fanout_cmd = app.add_subcommand("check-fanout", "Check per-directory fan-out of a layout");
    add_strategy_flags(fanout_cmd, fanout.strategy);
    fanout_cmd->add_option("--limit", fanout.limit, "Per-directory entry limit")->capture_default_str();

    MkdirsArgs mkdirs;
    auto* mkdirs_cmd = app.add_subcommand("mkdirs", "Create the empty md5 bucket directory tree");
    mkdirs_cmd->add_option("--root", mkdirs.root, "Directory to populate")->required();
    mkdirs.moduli_opt =
        mkdirs_cmd->add_option("--moduli", mkdirs.moduli, "md5 per-level moduli")->delimiter(',');
    mkdirs_cmd->add_option("--limit", mkdirs.limit, "Per-directory entry limit")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen_corpus(gen, out, err);
        if (*analyze_cmd) return cmd_analyze(analyze, out, err);
        if (*compare_cmd) return cmd_compare(compare, out, err);
        if (*locate_cmd) return cmd_locate(locate, out, err);
        if (*fanout_cmd) return cmd_check_fanout(fanout, out, err);
        if (*mkdirs_cmd) return cmd_mkdirs(mkdirs, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kUsage;
}

}  // namespace shardbench::cli

// tempowalk: single-source optimal temporal walks under waiting-time
// constraints, for any nonnegative linear combination of seven criteria.
//
// Usage:
//   tempowalk run <input> [--format tgf|konect] [--undirected]
//                 [--source ID | --sample K --seed S]
//                 [--criteria NAME | d1,d2,d3,d4,d5,d6,d7]
//                 [--alpha SPEC] [--beta SPEC]
//                 [--track-walks] [--oracle-check] [--bench] [--force-transform]
//                 [--jobs N] [--out PATH]
//
// Exit codes: 0 success, 1 parse/config error, 2 oracle mismatch.
// TEMPOWALK_LOG=debug|info|warn|error controls stderr logging.

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tempowalk/tempowalk.hpp"

namespace {

using namespace tempowalk;

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3 };

LogLevel log_threshold() {
    static LogLevel level = [] {
        const char* env = std::getenv("TEMPOWALK_LOG");
        if (!env) return LogLevel::warn;
        const std::string v(env);
        if (v == "debug") return LogLevel::debug;
        if (v == "info") return LogLevel::info;
        if (v == "error") return LogLevel::error;
        return LogLevel::warn;
    }();
    return level;
}

void log(LogLevel level, const std::string& message) {
    static const char* names[] = {"debug", "info", "warn", "error"};
    if (level >= log_threshold())
        std::cerr << "[tempowalk] " << names[static_cast<int>(level)] << ": " << message << '\n';
}

struct RunConfig {
    std::string input;
    io::EdgeListFormat format;
    std::optional<std::string> source;
    std::optional<std::size_t> sample;
    std::uint64_t seed = 0;
    std::string criteria = "foremost";
    std::optional<std::string> alpha_spec;
    std::optional<std::string> beta_spec;
    bool track_walks = false;
    bool oracle_check = false;
    bool bench = false;
    bool force_transform = false;
    std::size_t jobs = 1;
    std::optional<std::string> out;
};

void print_usage() {
    std::cerr
        << "usage: tempowalk run <input> [--format tgf|konect] [--undirected]\n"
           "                    [--source ID | --sample K --seed S]\n"
           "                    [--criteria NAME | d1,...,d7] [--alpha SPEC] [--beta SPEC]\n"
           "                    [--track-walks] [--oracle-check] [--bench] [--force-transform]\n"
           "                    [--jobs N] [--out PATH]\n"
           "criteria presets: foremost reverse-foremost fastest shortest cheapest min-hops "
           "min-wait\n";
}

RunConfig parse_args(int argc, char** argv) {
    RunConfig cfg;
    if (argc < 3 || std::strcmp(argv[1], "run") != 0)
        throw std::invalid_argument("expected subcommand: run <input>");
    cfg.input = argv[2];
    auto need_value = [&](int& i) -> std::string {
        if (i + 1 >= argc) throw std::invalid_argument(std::string(argv[i]) + " needs a value");
        return argv[++i];
    };
    for (int i = 3; i < argc; ++i) {
        const std::string flag = argv[i];
        if (flag == "--format") {
            const std::string v = need_value(i);
            if (v == "tgf")
                cfg.format.layout = io::EdgeListFormat::Layout::tgf;
            else if (v == "konect")
                cfg.format.layout = io::EdgeListFormat::Layout::konect;
            else
                throw std::invalid_argument("unknown format: " + v);
        } else if (flag == "--undirected") {
            cfg.format.undirected = true;
        } else if (flag == "--konect-weight-as-cost") {
            cfg.format.konect_weight_as_cost = true;
        } else if (flag == "--source") {
            cfg.source = need_value(i);
        } else if (flag == "--sample") {
            cfg.sample = std::stoull(need_value(i));
        } else if (flag == "--seed") {
            cfg.seed = std::stoull(need_value(i));
        } else if (flag == "--criteria") {
            cfg.criteria = need_value(i);
        } else if (flag == "--alpha") {
            cfg.alpha_spec = need_value(i);
        } else if (flag == "--beta") {
            cfg.beta_spec = need_value(i);
        } else if (flag == "--track-walks") {
            cfg.track_walks = true;
        } else if (flag == "--oracle-check") {
            cfg.oracle_check = true;
        } else if (flag == "--bench") {
            cfg.bench = true;
        } else if (flag == "--force-transform") {
            cfg.force_transform = true;
        } else if (flag == "--jobs") {
            cfg.jobs = std::stoull(need_value(i));
            if (cfg.jobs == 0) cfg.jobs = 1;
        } else if (flag == "--out") {
            cfg.out = need_value(i);
        } else {
            throw std::invalid_argument("unknown flag: " + flag);
        }
    }
    if (cfg.source && cfg.sample)
        throw std::invalid_argument("--source and --sample are mutually exclusive");
    return cfg;
}

CriteriaWeights parse_criteria(const std::string& spec) {
    if (spec.find(',') != std::string::npos) return CriteriaWeights::parse(spec);
    return CriteriaWeights::preset(spec);
}

VertexId resolve_vertex(const TemporalGraph& g, const std::string& name) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.label(v) == name) return v;
    char* end = nullptr;
    const unsigned long long id = std::strtoull(name.c_str(), &end, 10);
    if (end != name.c_str() && *end == '\0' && id < g.vertex_count())
        return static_cast<VertexId>(id);
    throw std::invalid_argument("unknown vertex: " + name);
}

// r.csv -> r.src<ID>.csv for multi-source runs.
std::string per_source_path(const std::string& out, VertexId source) {
    const std::string tag = ".src" + std::to_string(source);
    const std::size_t dot = out.find_last_of('.');
    if (dot == std::string::npos || out.find('/', dot) != std::string::npos) return out + tag;
    return out.substr(0, dot) + tag + out.substr(dot);
}

void write_csv(const TemporalGraph& g, const EngineResult& result,
               const std::optional<std::string>& path) {
    if (path) {
        std::ofstream out(*path);
        if (!out) throw std::runtime_error("cannot write " + *path);
        io::write_results_csv(g, result, out);
    } else {
        io::write_results_csv(g, result, std::cout);
    }
}

int run_command(const RunConfig& cfg) {
    std::ifstream file(cfg.input);
    if (!file) {
        log(LogLevel::error, "cannot open input: " + cfg.input);
        return 1;
    }
    const TemporalGraph parsed = io::parse_edge_list(file, cfg.format);
    log(LogLevel::info, "parsed " + std::to_string(parsed.vertex_count()) + " vertices, " +
                            std::to_string(parsed.arc_count()) + " arcs, lifetime " +
                            std::to_string(parsed.lifetime()));

    io::WaitingConfig waits = io::default_waits(parsed);
    if (cfg.beta_spec) waits = io::parse_waiting_config(*cfg.beta_spec, parsed);
    if (cfg.alpha_spec) {
        char* end = nullptr;
        const long long c = std::strtoll(cfg.alpha_spec->c_str(), &end, 10);
        if (end != cfg.alpha_spec->c_str() && *end == '\0') {
            if (c < 0 || static_cast<TimeStamp>(c) > parsed.lifetime())
                throw std::invalid_argument("uniform alpha outside [0, T]");
            waits.alpha.assign(parsed.vertex_count(), static_cast<TimeStamp>(c));
        } else {
            std::ifstream wf(*cfg.alpha_spec);
            if (!wf) throw std::invalid_argument("cannot open waiting file: " + *cfg.alpha_spec);
            const io::WaitingConfig from_file = io::parse_waiting_file(wf, parsed);
            waits.alpha = from_file.alpha;
            waits.beta = from_file.beta;
        }
    }
    io::validate_waits(waits, parsed.lifetime());
    const TemporalGraph g = parsed.with_waits(waits.alpha, waits.beta);

    const CriteriaWeights weights = parse_criteria(cfg.criteria);

    std::vector<VertexId> sources;
    if (cfg.sample) {
        sources = bench::sample_sources(g, *cfg.sample, cfg.seed);
    } else {
        sources.push_back(cfg.source ? resolve_vertex(g, *cfg.source) : 0);
    }
    if (sources.empty()) {
        log(LogLevel::warn, "no sources selected; nothing to do");
        return 0;
    }

    if (cfg.bench) {
        bool is_preset = false;
        for (std::string_view name : CriteriaWeights::preset_names())
            is_preset = is_preset || name == cfg.criteria;
        if (!is_preset)
            throw std::invalid_argument("--bench sweeps named presets only");
        const auto betas = bench::sweep_beta_values(g.lifetime());
        log(LogLevel::info, "sweeping " + std::to_string(betas.size()) + " beta values over " +
                                std::to_string(sources.size()) + " sources");
        const bench::SweepReport report = bench::beta_sweep(g, sources, {cfg.criteria}, betas);
        if (cfg.out) {
            std::ofstream out(*cfg.out);
            if (!out) throw std::runtime_error("cannot write " + *cfg.out);
            bench::write_sweep_csv(report, out);
        } else {
            bench::write_sweep_csv(report, std::cout);
        }
        return 0;
    }

    if (cfg.oracle_check) {
        const oracle::InstanceParams bounds;
        if (g.arc_count() > bounds.max_arcs) {
            log(LogLevel::error, "instance exceeds oracle bounds");
            return 1;
        }
    }

    const InstantBundle bundle = cfg.force_transform ? remove_alpha_lambda(g) : make_bundle(g);
    log(LogLevel::info, std::string("bundle: ") +
                            (bundle.origin() == BundleOrigin::identity ? "identity wrap"
                                                                       : "arc-split transform"));

    EngineOptions opts;
    opts.track_walks = cfg.track_walks;
    std::vector<EngineResult> results(sources.size());
    const std::size_t jobs = std::min(cfg.jobs, sources.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < sources.size(); ++i)
            results[i] = single_source_optimal_walks(bundle, sources[i], weights, opts);
    } else {
        std::vector<std::thread> workers;
        std::size_t next = 0;
        std::mutex mutex;
        for (std::size_t j = 0; j < jobs; ++j) {
            workers.emplace_back([&] {
                while (true) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> lock(mutex);
                        if (next >= sources.size()) return;
                        i = next++;
                    }
                    results[i] = single_source_optimal_walks(bundle, sources[i], weights, opts);
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    if (cfg.oracle_check) {
        for (std::size_t i = 0; i < sources.size(); ++i) {
            oracle::BruteForceResult expected;
            try {
                expected = oracle::brute_force_optimum(g, sources[i], weights);
            } catch (const oracle::BoundExceeded&) {
                log(LogLevel::error, "instance exceeds oracle bounds");
                return 1;
            }
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                const double want = expected.opt[v];
                const double got = results[i].opt[v];
                const bool match =
                    (want == got) ||
                    (want != kUnreachable && got != kUnreachable &&
                     std::abs(want - got) <= 1e-6 * std::max({1.0, std::abs(want), std::abs(got)}));
                if (!match) {
                    log(LogLevel::error,
                        "oracle mismatch at vertex " + g.label(v) + ": engine " +
                            io::format_double(got) + " vs oracle " + io::format_double(want));
                    return 2;
                }
            }
        }
        log(LogLevel::info, "oracle check passed for " + std::to_string(sources.size()) +
                                " source(s)");
    }

    if (sources.size() == 1) {
        write_csv(g, results[0], cfg.out);
    } else {
        for (std::size_t i = 0; i < sources.size(); ++i) {
            if (cfg.out) {
                write_csv(g, results[i], per_source_path(*cfg.out, sources[i]));
            } else {
                std::cout << "# source " << g.label(sources[i]) << '\n';
                write_csv(g, results[i], std::nullopt);
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const RunConfig cfg = parse_args(argc, argv);
        return run_command(cfg);
    } catch (const std::exception& e) {
        log(LogLevel::error, e.what());
        print_usage();
        return 1;
    }
}

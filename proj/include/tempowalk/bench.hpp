#pragma once

#include <algorithm>
#include <chrono>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tempowalk/core.hpp"
#include "tempowalk/engine.hpp"
#include "tempowalk/io.hpp"
#include "tempowalk/transform.hpp"

namespace tempowalk::bench {

/// k distinct vertices drawn uniformly without replacement; deterministic
/// under the seed.
inline std::vector<VertexId> sample_sources(const TemporalGraph& g, std::size_t k,
                                            std::uint64_t seed) {
    if (k > g.vertex_count()) throw std::invalid_argument("more sources than vertices");
    std::vector<VertexId> pool(g.vertex_count());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<VertexId>(i);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng() % (pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

/// Wall-clock seconds of one invocation, on a monotonic clock (nanosecond
/// resolution on this tier, well under the 1 ms the reports assume).
template <typename F>
double time_run(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

/// The uniform maximum-waiting-time sweep values 1, 2, 4, ..., 2^ceil(log2 T).
/// Values at or above T behave like beta == T.
inline std::vector<TimeStamp> sweep_beta_values(TimeStamp lifetime) {
    std::vector<TimeStamp> values;
    if (lifetime == 0) return values;
    TimeStamp c = 1;
    while (true) {
        values.push_back(c);
        if (c >= lifetime) break;
        c *= 2;
    }
    return values;
}

struct SweepRow {
    TimeStamp beta = 0;
    std::string preset;
    double runtime_avg_s = 0;
    double runtime_median_s = 0;
    double visited_avg = 0;
    double cycles_avg = 0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
};

struct SweepOptions {
    bool collect_cycles = true;  // reconstruct witness walks in a second, untimed run
};

namespace detail {

inline double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

inline double mean(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace detail

/// Runs the engine for every (beta value, preset, source) combination and
/// aggregates runtime, reached-vertex counts, and witness-walk cycle counts
/// over the sources. Timed runs exclude parsing and transformation and do not
/// track walks; cycle statistics come from a second, untimed run. Rows are
/// ordered beta ascending, preset name ascending.
inline SweepReport beta_sweep(const TemporalGraph& g, std::span<const VertexId> sources,
                              std::vector<std::string> presets,
                              std::vector<TimeStamp> beta_values, SweepOptions options = {}) {
    std::sort(beta_values.begin(), beta_values.end());
    beta_values.erase(std::unique(beta_values.begin(), beta_values.end()), beta_values.end());
    std::sort(presets.begin(), presets.end());

    SweepReport report;
    for (TimeStamp beta : beta_values) {
        const TimeStamp effective = std::min(beta, g.lifetime());
        std::vector<TimeStamp> beta_map(g.vertex_count(), effective);
        std::vector<TimeStamp> alpha_map(g.alpha().begin(), g.alpha().end());
        for (std::size_t v = 0; v < alpha_map.size(); ++v)
            alpha_map[v] = std::min(alpha_map[v], effective);
        const TemporalGraph swept = g.with_waits(std::move(alpha_map), std::move(beta_map));
        const InstantBundle bundle = make_bundle(swept);
        for (const std::string& preset : presets) {
            const CriteriaWeights weights = CriteriaWeights::preset(preset);
            std::vector<double> runtimes, visited, cycles;
            for (VertexId s : sources) {
                EngineResult result;
                runtimes.push_back(
                    time_run([&] { result = single_source_optimal_walks(bundle, s, weights); }));
                visited.push_back(static_cast<double>(result.stats.visited_vertices));
                if (options.collect_cycles) {
                    const EngineResult tracked =
                        single_source_optimal_walks(bundle, s, weights, {.track_walks = true});
                    double total = 0.0;
                    std::size_t reachable = 0;
                    for (VertexId v = 0; v < g.vertex_count(); ++v) {
                        if (v == s || tracked.opt[v] == kUnreachable) continue;
                        total += static_cast<double>(count_cycles(g, tracked.walks[v]));
                        ++reachable;
                    }
                    cycles.push_back(reachable ? total / static_cast<double>(reachable) : 0.0);
                }
            }
            report.rows.push_back({beta, preset, detail::mean(runtimes),
                                   detail::median(runtimes), detail::mean(visited),
                                   detail::mean(cycles)});
        }
    }
    return report;
}

inline void write_sweep_csv(const SweepReport& report, std::ostream& out) {
    out << "beta,preset,runtime_avg_s,runtime_median_s,visited_avg,cycles_avg\n";
    for (const SweepRow& row : report.rows) {
        out << row.beta << ',' << row.preset << ',' << io::format_double(row.runtime_avg_s) << ','
            << io::format_double(row.runtime_median_s) << ',' << io::format_double(row.visited_avg)
            << ',' << io::format_double(row.cycles_avg) << '\n';
    }
}

}  // namespace tempowalk::bench

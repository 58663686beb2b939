#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "tempowalk/core.hpp"
#include "tempowalk/criteria.hpp"

namespace tempowalk::oracle {

/// Thrown when an exhaustive enumeration exceeds its step budget.
struct BoundExceeded : std::runtime_error {
    BoundExceeded() : std::runtime_error("instance exceeds oracle enumeration bounds") {}
};

struct EnumLimits {
    std::uint64_t max_steps = 20'000'000;
    bool paths_only = false;  // restrict to walks with pairwise distinct vertices
};

/// Bounds for enumerable random instances. Arc counts beyond ~25 make
/// exhaustive walk enumeration intractable.
struct InstanceParams {
    std::uint32_t max_vertices = 8;
    std::uint32_t max_arcs = 25;
    TimeStamp max_lifetime = 12;
    TimeStamp max_lambda = 3;
    std::uint32_t max_cost = 10;                 // integer-valued costs in [0, max_cost]
    std::optional<TimeStamp> uniform_beta;       // unset: per-vertex uniform in [1, T]
    TimeStamp max_alpha = 0;                     // per-vertex uniform in [0, max_alpha]
    std::uint64_t seed = 0;
};

namespace detail {

// Bounded sampling on raw mt19937_64 output; modulo bias is irrelevant for
// test instances and keeps the draw sequence independent of the stdlib.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

template <typename Visitor>
struct WalkEnumerator {
    const TemporalGraph& g;
    Visitor& visit;
    EnumLimits limits;
    std::vector<std::vector<ArcIndex>> out_arcs;
    std::vector<char> used_arc;
    std::vector<char> on_path;
    std::vector<ArcIndex> path;
    std::uint64_t steps = 0;

    WalkEnumerator(const TemporalGraph& graph, Visitor& v, EnumLimits lim)
        : g(graph), visit(v), limits(lim) {
        out_arcs.resize(g.vertex_count());
        for (ArcIndex i = 0; i < g.arc_count(); ++i) out_arcs[g.arc(i).tail].push_back(i);
        used_arc.assign(g.arc_count(), 0);
        on_path.assign(g.vertex_count(), 0);
    }

    void extend(VertexId at, TimeStamp arrival, bool first) {
        for (ArcIndex i : out_arcs[at]) {
            if (used_arc[i]) continue;
            const TimeArc& a = g.arc(i);
            if (!first) {
                if (a.t < arrival + g.alpha(at) || a.t > arrival + g.beta(at)) continue;
            }
            if (limits.paths_only && on_path[a.head]) continue;
            if (++steps > limits.max_steps) throw BoundExceeded();
            used_arc[i] = 1;
            if (limits.paths_only) on_path[a.head] = 1;
            path.push_back(i);
            visit(std::span<const ArcIndex>(path), a.head, a.t + a.lambda);
            extend(a.head, a.t + a.lambda, false);
            path.pop_back();
            if (limits.paths_only) on_path[a.head] = 0;
            used_arc[i] = 0;
        }
    }
};

}  // namespace detail

/// Depth-first enumeration of every nonempty temporal walk from s that never
/// repeats a time-arc, in deterministic arc-index order. The visitor is called
/// once per walk as visit(arc_indices, final_vertex, arrival); the span is only
/// valid during the call. Arc-simplicity keeps the enumeration finite; with
/// nonnegative weights it never loses an optimal value, because a repeated
/// time-arc implies a zero-progress cycle whose removal cannot increase any
/// criterion.
template <typename Visitor>
void enumerate_walks(const TemporalGraph& g, VertexId s, Visitor&& visit, EnumLimits limits = {}) {
    if (s >= g.vertex_count()) throw std::out_of_range("source vertex out of range");
    detail::WalkEnumerator<Visitor> enumerator(g, visit, limits);
    if (limits.paths_only) enumerator.on_path[s] = 1;
    enumerator.extend(s, 0, true);
}

struct BruteForceResult {
    std::vector<double> opt;    // per vertex; opt[s] == 0 by the empty-walk convention
    std::vector<Walk> witness;  // first walk attaining opt[v]; empty elsewhere
};

/// Exhaustive minimisation of the linear combination over all enumerable
/// walks. Strict improvements win, so the witness is the first optimal walk in
/// enumeration order. opt[s] is 0 by the same convention the engine reports.
inline BruteForceResult brute_force_optimum(const TemporalGraph& g, VertexId s,
                                            const CriteriaWeights& weights,
                                            EnumLimits limits = {}) {
    BruteForceResult result;
    result.opt.assign(g.vertex_count(), kUnreachable);
    result.witness.resize(g.vertex_count());
    enumerate_walks(
        g, s,
        [&](std::span<const ArcIndex> arcs, VertexId target, TimeStamp) {
            if (target == s) return;
            const double value = tempowalk::detail::walk_value_unchecked(g, arcs, weights);
            if (value < result.opt[target]) {
                result.opt[target] = value;
                result.witness[target].arc_indices.assign(arcs.begin(), arcs.end());
            }
        },
        limits);
    result.opt[s] = 0.0;
    return result;
}

/// Deterministic random instance within the given bounds; always passes
/// validate_graph. alpha is clamped to beta per vertex so every departure
/// window is nonempty.
inline TemporalGraph random_instance(const InstanceParams& params) {
    std::mt19937_64 rng(params.seed);
    const std::uint32_t n =
        static_cast<std::uint32_t>(detail::draw(rng, 1, std::max(1u, params.max_vertices)));
    const TimeStamp lifetime = detail::draw(rng, 1, std::max<TimeStamp>(1, params.max_lifetime));
    const std::uint32_t m = static_cast<std::uint32_t>(detail::draw(rng, 0, params.max_arcs));
    std::vector<TimeArc> arcs;
    arcs.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        TimeArc a;
        a.tail = static_cast<VertexId>(detail::draw(rng, 0, n - 1));
        a.head = static_cast<VertexId>(detail::draw(rng, 0, n - 1));
        a.t = detail::draw(rng, 1, lifetime);
        a.lambda = detail::draw(rng, 0, params.max_lambda);
        a.cost = static_cast<double>(detail::draw(rng, 0, params.max_cost));
        arcs.push_back(a);
    }
    std::vector<TimeStamp> beta(n);
    for (auto& b : beta)
        b = params.uniform_beta ? std::min(*params.uniform_beta, lifetime)
                                : detail::draw(rng, 1, lifetime);
    std::vector<TimeStamp> alpha(n, 0);
    if (params.max_alpha > 0)
        for (std::uint32_t v = 0; v < n; ++v)
            alpha[v] = std::min<TimeStamp>(detail::draw(rng, 0, params.max_alpha), beta[v]);
    return TemporalGraph(n, std::move(arcs), lifetime, std::move(alpha), std::move(beta));
}

}  // namespace tempowalk::oracle

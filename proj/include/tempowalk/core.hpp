#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tempowalk {

using VertexId = std::uint32_t;
using ArcIndex = std::uint32_t;
using TimeStamp = std::uint64_t;

/// Sentinel value meaning "no walk exists".
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Directed time-arc: usable at departure stamp t, arriving at head at t + lambda.
struct TimeArc {
    VertexId tail = 0;
    VertexId head = 0;
    TimeStamp t = 1;
    TimeStamp lambda = 0;
    double cost = 1.0;
};

/// A temporal graph over dense vertex ids 0..n-1 with a discrete lifetime [1, T]
/// and per-vertex minimum/maximum waiting times.
///
/// Arcs are sorted by (t, tail, head) once at construction; walk arc indices and
/// every per-arc table in this library refer to that canonical order. The graph
/// is immutable after construction and safe to share across threads.
class TemporalGraph {
  public:
    TemporalGraph() = default;

    TemporalGraph(std::size_t vertex_count, std::vector<TimeArc> arcs, TimeStamp lifetime,
                  std::vector<TimeStamp> alpha = {}, std::vector<TimeStamp> beta = {},
                  std::vector<std::string> labels = {})
        : vertex_count_(vertex_count),
          lifetime_(lifetime),
          arcs_(std::move(arcs)),
          alpha_(std::move(alpha)),
          beta_(std::move(beta)),
          labels_(std::move(labels)) {
        if (alpha_.empty()) alpha_.assign(vertex_count_, 0);
        if (beta_.empty()) beta_.assign(vertex_count_, lifetime_);
        if (alpha_.size() != vertex_count_ || beta_.size() != vertex_count_)
            throw std::invalid_argument("waiting-time vectors do not match vertex count");
        if (!labels_.empty() && labels_.size() != vertex_count_)
            throw std::invalid_argument("label vector does not match vertex count");
        std::stable_sort(arcs_.begin(), arcs_.end(), [](const TimeArc& a, const TimeArc& b) {
            if (a.t != b.t) return a.t < b.t;
            if (a.tail != b.tail) return a.tail < b.tail;
            return a.head < b.head;
        });
    }

    std::size_t vertex_count() const { return vertex_count_; }
    TimeStamp lifetime() const { return lifetime_; }
    std::span<const TimeArc> arcs() const { return arcs_; }
    const TimeArc& arc(ArcIndex i) const { return arcs_.at(i); }
    std::size_t arc_count() const { return arcs_.size(); }

    TimeStamp alpha(VertexId v) const { return alpha_.at(v); }
    TimeStamp beta(VertexId v) const { return beta_.at(v); }
    std::span<const TimeStamp> alpha() const { return alpha_; }
    std::span<const TimeStamp> beta() const { return beta_; }

    /// External label of a vertex; defaults to the decimal id.
    std::string label(VertexId v) const {
        if (v >= vertex_count_) throw std::out_of_range("vertex out of range");
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }
    bool has_labels() const { return !labels_.empty(); }

    /// True when lambda == 0 on every arc and alpha == 0 on every vertex.
    bool instantaneous() const {
        for (const TimeArc& a : arcs_)
            if (a.lambda != 0) return false;
        for (TimeStamp a : alpha_)
            if (a != 0) return false;
        return true;
    }

    /// Copy of this graph with replaced waiting-time functions.
    TemporalGraph with_waits(std::vector<TimeStamp> alpha, std::vector<TimeStamp> beta) const {
        return TemporalGraph(vertex_count_, arcs_, lifetime_, std::move(alpha), std::move(beta),
                             labels_);
    }

    /// Index range [first, last) of arcs with stamp exactly t.
    std::pair<std::size_t, std::size_t> stamp_range(TimeStamp t) const {
        auto lo = std::lower_bound(arcs_.begin(), arcs_.end(), t,
                                   [](const TimeArc& a, TimeStamp s) { return a.t < s; });
        auto hi = std::upper_bound(arcs_.begin(), arcs_.end(), t,
                                   [](TimeStamp s, const TimeArc& a) { return s < a.t; });
        return {static_cast<std::size_t>(lo - arcs_.begin()),
                static_cast<std::size_t>(hi - arcs_.begin())};
    }

  private:
    std::size_t vertex_count_ = 0;
    TimeStamp lifetime_ = 0;
    std::vector<TimeArc> arcs_;
    std::vector<TimeStamp> alpha_;
    std::vector<TimeStamp> beta_;
    std::vector<std::string> labels_;
};

/// A walk as an ordered sequence of indices into the graph's canonical arc list.
/// The empty sequence is the empty walk.
struct Walk {
    std::vector<ArcIndex> arc_indices;

    bool empty() const { return arc_indices.empty(); }
    std::size_t size() const { return arc_indices.size(); }
    bool operator==(const Walk&) const = default;
};

/// Checks every structural invariant and returns one message per violation.
/// An empty result means the graph is valid.
inline std::vector<std::string> validate_graph(const TemporalGraph& g) {
    std::vector<std::string> violations;
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < g.arc_count(); ++i) {
        const TimeArc& a = g.arcs()[i];
        const std::string where = "arc " + std::to_string(i) + ": ";
        if (a.tail >= n || a.head >= n) violations.push_back(where + "vertex out of range");
        if (a.t < 1) violations.push_back(where + "time stamp below 1");
        if (a.t > g.lifetime()) violations.push_back(where + "t exceeds lifetime");
        if (std::isnan(a.cost) || a.cost < 0.0) violations.push_back(where + "negative cost");
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (g.alpha(v) > g.lifetime())
            violations.push_back("vertex " + std::to_string(v) + ": alpha exceeds lifetime");
        if (g.beta(v) > g.lifetime())
            violations.push_back("vertex " + std::to_string(v) + ": beta exceeds lifetime");
    }
    return violations;
}

/// Vertex sequence v_0, ..., v_k visited by a walk (empty for the empty walk).
/// Throws std::out_of_range on bad arc indices; std::invalid_argument when
/// consecutive arcs do not chain on a common vertex.
inline std::vector<VertexId> walk_vertices(const TemporalGraph& g, const Walk& w) {
    std::vector<VertexId> seq;
    if (w.empty()) return seq;
    seq.reserve(w.size() + 1);
    seq.push_back(g.arc(w.arc_indices.front()).tail);
    for (ArcIndex i : w.arc_indices) {
        const TimeArc& a = g.arc(i);
        if (a.tail != seq.back()) throw std::invalid_argument("walk arcs do not chain");
        seq.push_back(a.head);
    }
    return seq;
}

/// True iff consecutive arcs chain on vertices and every intermediate vertex v
/// satisfies the waiting window: arrival + alpha(v) <= next departure <= arrival + beta(v).
/// The empty walk and any single arc are valid.
inline bool is_valid_walk(const TemporalGraph& g, const Walk& w) {
    if (w.empty()) return true;
    const TimeArc* prev = &g.arc(w.arc_indices.front());
    for (std::size_t i = 1; i < w.size(); ++i) {
        const TimeArc& cur = g.arc(w.arc_indices[i]);
        if (cur.tail != prev->head) return false;
        const VertexId mid = cur.tail;
        const TimeStamp arrival = prev->t + prev->lambda;
        if (cur.t < arrival + g.alpha(mid)) return false;
        if (cur.t > arrival + g.beta(mid)) return false;
        prev = &cur;
    }
    return true;
}

/// Number of vertex revisits along a walk: occurrences minus distinct vertices.
/// A path reports 0; the Figure-style forced detour through one vertex reports 1.
inline std::size_t count_cycles(const TemporalGraph& g, const Walk& w) {
    if (w.empty()) return 0;
    std::vector<VertexId> seq = walk_vertices(g, w);
    std::vector<VertexId> distinct(seq);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return seq.size() - distinct.size();
}

struct SliceArc {
    VertexId tail = 0;
    VertexId head = 0;
    ArcIndex arc = 0;
};

/// The static graph induced by all arcs with one fixed time stamp.
struct TimestepSlice {
    TimeStamp t = 0;
    std::vector<VertexId> vertices;  // endpoint set, sorted ascending
    std::vector<SliceArc> arcs;
};

inline TimestepSlice timestep_slice(const TemporalGraph& g, TimeStamp t) {
    if (t < 1 || t > g.lifetime()) throw std::out_of_range("time stamp outside lifetime");
    TimestepSlice slice;
    slice.t = t;
    auto [lo, hi] = g.stamp_range(t);
    for (std::size_t i = lo; i < hi; ++i) {
        const TimeArc& a = g.arcs()[i];
        slice.arcs.push_back({a.tail, a.head, static_cast<ArcIndex>(i)});
        slice.vertices.push_back(a.tail);
        slice.vertices.push_back(a.head);
    }
    std::sort(slice.vertices.begin(), slice.vertices.end());
    slice.vertices.erase(std::unique(slice.vertices.begin(), slice.vertices.end()),
                         slice.vertices.end());
    return slice;
}

/// Strictly increasing list of the stamps actually occurring in the arc list.
inline std::vector<TimeStamp> distinct_timesteps(const TemporalGraph& g) {
    std::vector<TimeStamp> stamps;
    for (const TimeArc& a : g.arcs())
        if (stamps.empty() || stamps.back() != a.t) stamps.push_back(a.t);
    return stamps;
}

}  // namespace tempowalk

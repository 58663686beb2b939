#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tempowalk/core.hpp"
#include "tempowalk/criteria.hpp"

namespace tempowalk {

enum class BundleOrigin { identity, transformed };

/// For one original arc e: the out-arc (v, v_e, t), the in-arc
/// (v_e, u, t + lambda + alpha(u)), and the split vertex v_e between them.
struct ArcPair {
    ArcIndex out_arc = 0;
    ArcIndex in_arc = 0;
    VertexId split_vertex = 0;
};

/// An instantaneous temporal graph (lambda == 0, alpha == 0) together with the
/// companion tables the walk engine consumes: per-arc base costs c' (stored as
/// the bundle arcs' cost field), per-arc transmission costs c_lambda, the
/// original-vertex flag ind, and the per-vertex minimum-wait value A.
///
/// A transformed bundle has |V| + |E| vertices and 2|E| arcs; split vertices
/// get ids n + original arc index. An identity bundle wraps an already
/// instantaneous graph untouched.
class InstantBundle {
  public:
    const TemporalGraph& graph() const { return graph_; }
    BundleOrigin origin() const { return origin_; }
    std::size_t original_vertex_count() const { return original_vertices_; }

    double arc_cost(ArcIndex bundle_arc) const { return graph_.arc(bundle_arc).cost; }
    double transit_cost(ArcIndex bundle_arc) const { return c_lambda_.at(bundle_arc); }
    std::span<const double> transit_costs() const { return c_lambda_; }

    bool is_original(VertexId v) const { return v < original_vertices_; }
    /// A(v): alpha of v on original vertices, 0 on split vertices.
    TimeStamp min_wait_offset(VertexId v) const {
        return v < min_wait_.size() ? min_wait_[v] : 0;
    }

    /// Per original arc: its out/in pair (transformed bundles only).
    const std::vector<ArcPair>& arc_map() const { return arc_map_; }

    /// The original arc a bundle arc stems from (the arc itself for identity bundles).
    ArcIndex source_arc(ArcIndex bundle_arc) const { return source_arc_.at(bundle_arc); }
    bool is_in_arc(ArcIndex bundle_arc) const {
        return origin_ == BundleOrigin::transformed && in_flag_.at(bundle_arc) != 0;
    }

  private:
    friend InstantBundle remove_alpha_lambda(const TemporalGraph&);
    friend InstantBundle identity_wrap(const TemporalGraph&);

    TemporalGraph graph_;
    std::vector<double> c_lambda_;
    std::vector<TimeStamp> min_wait_;
    std::vector<ArcPair> arc_map_;
    std::vector<ArcIndex> source_arc_;
    std::vector<std::uint8_t> in_flag_;
    std::size_t original_vertices_ = 0;
    BundleOrigin origin_ = BundleOrigin::identity;
};

/// Eliminates transmission times and minimum waiting times by splitting every
/// arc e = (v, u, t, lambda) into (v, v_e, t) and (v_e, u, t + lambda + alpha(u)).
///
/// The out-arc carries c' = c(e), the in-arc carries c_lambda = lambda. The
/// bundle lifetime is extended to the largest shifted stamp so that arcs
/// arriving past the original lifetime stay usable. Split vertices never expire
/// (their waiting bound is the whole bundle lifetime). On original vertices the
/// bundle waiting bound is beta(v) - alpha(v): a bundle arrival is delayed by
/// alpha(v), so this keeps the departure window exactly [arrival + alpha(v),
/// arrival + beta(v)] of the source graph.
///
/// Runs in time linear in |V| + |E|. Throws std::invalid_argument when some
/// vertex has alpha(v) > beta(v) (an empty departure window cannot be encoded
/// in an instantaneous graph).
inline InstantBundle remove_alpha_lambda(const TemporalGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.arc_count();
    for (std::size_t v = 0; v < n; ++v)
        if (g.alpha(v) > g.beta(v))
            throw std::invalid_argument("alpha exceeds beta at vertex " + std::to_string(v));

    struct RawArc {
        TimeArc arc;
        double transit = 0.0;
        ArcIndex origin = 0;
        bool in_arc = false;
    };
    std::vector<RawArc> raw;
    raw.reserve(2 * m);
    TimeStamp bundle_lifetime = g.lifetime();
    for (std::size_t i = 0; i < m; ++i) {
        const TimeArc& e = g.arcs()[i];
        const VertexId split = static_cast<VertexId>(n + i);
        const TimeStamp in_stamp = e.t + e.lambda + g.alpha(e.head);
        bundle_lifetime = std::max(bundle_lifetime, in_stamp);
        raw.push_back({{e.tail, split, e.t, 0, e.cost}, 0.0, static_cast<ArcIndex>(i), false});
        raw.push_back({{split, e.head, in_stamp, 0, 0.0},
                       static_cast<double>(e.lambda),
                       static_cast<ArcIndex>(i),
                       true});
    }

    // Sort here with the graph's canonical key so per-arc tables line up with
    // the, otherwise re-sorted, bundle arc order.
    std::vector<std::uint32_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&raw](std::uint32_t a, std::uint32_t b) {
        const TimeArc& x = raw[a].arc;
        const TimeArc& y = raw[b].arc;
        if (x.t != y.t) return x.t < y.t;
        if (x.tail != y.tail) return x.tail < y.tail;
        return x.head < y.head;
    });

    InstantBundle bundle;
    bundle.origin_ = BundleOrigin::transformed;
    bundle.original_vertices_ = n;
    std::vector<TimeArc> arcs(raw.size());
    bundle.c_lambda_.resize(raw.size());
    bundle.source_arc_.resize(raw.size());
    bundle.in_flag_.resize(raw.size());
    bundle.arc_map_.resize(m);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const RawArc& r = raw[order[pos]];
        arcs[pos] = r.arc;
        bundle.c_lambda_[pos] = r.transit;
        bundle.source_arc_[pos] = r.origin;
        bundle.in_flag_[pos] = r.in_arc ? 1 : 0;
        ArcPair& pair = bundle.arc_map_[r.origin];
        pair.split_vertex = static_cast<VertexId>(n + r.origin);
        (r.in_arc ? pair.in_arc : pair.out_arc) = static_cast<ArcIndex>(pos);
    }

    std::vector<TimeStamp> beta(n + m, bundle_lifetime);
    for (std::size_t v = 0; v < n; ++v) beta[v] = g.beta(v) - g.alpha(v);
    bundle.min_wait_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) bundle.min_wait_[v] = g.alpha(v);
    bundle.graph_ = TemporalGraph(n + m, std::move(arcs), bundle_lifetime,
                                  std::vector<TimeStamp>(n + m, 0), std::move(beta));
    return bundle;
}

/// Wraps an already instantaneous graph without touching it: c' = c,
/// c_lambda == 0, ind == 1, A == 0. Throws std::invalid_argument when the graph
/// has a positive transmission time or minimum waiting time.
inline InstantBundle identity_wrap(const TemporalGraph& g) {
    if (!g.instantaneous())
        throw std::invalid_argument("graph is not instantaneous (lambda or alpha positive)");
    InstantBundle bundle;
    bundle.origin_ = BundleOrigin::identity;
    bundle.original_vertices_ = g.vertex_count();
    bundle.graph_ = g;
    bundle.c_lambda_.assign(g.arc_count(), 0.0);
    bundle.min_wait_.assign(g.vertex_count(), 0);
    bundle.source_arc_.resize(g.arc_count());
    std::iota(bundle.source_arc_.begin(), bundle.source_arc_.end(), 0);
    bundle.in_flag_.assign(g.arc_count(), 0);
    return bundle;
}

/// Identity wrap for instantaneous graphs, arc splitting otherwise.
inline InstantBundle make_bundle(const TemporalGraph& g) {
    return g.instantaneous() ? identity_wrap(g) : remove_alpha_lambda(g);
}

/// Lifts a valid walk of the original graph into the bundle graph: every arc
/// becomes its out/in pair, so a k-arc walk maps to a 2k-arc walk with the same
/// endpoints.
inline Walk lift_walk(const InstantBundle& bundle, const TemporalGraph& original, const Walk& w) {
    if (bundle.origin() != BundleOrigin::transformed)
        throw std::invalid_argument("lift_walk needs a transformed bundle");
    if (!is_valid_walk(original, w)) throw std::invalid_argument("walk invalid in original graph");
    Walk lifted;
    lifted.arc_indices.reserve(2 * w.size());
    for (ArcIndex i : w.arc_indices) {
        const ArcPair& pair = bundle.arc_map().at(i);
        lifted.arc_indices.push_back(pair.out_arc);
        lifted.arc_indices.push_back(pair.in_arc);
    }
    return lifted;
}

/// Inverse of lift_walk: collapses out/in pairs back to original arcs. Throws
/// std::invalid_argument when the walk does not alternate out- and in-arcs of
/// the same original arc (for instance when it ends at a split vertex).
inline Walk project_walk(const InstantBundle& bundle, const Walk& w) {
    if (bundle.origin() != BundleOrigin::transformed)
        throw std::invalid_argument("project_walk needs a transformed bundle");
    if (w.size() % 2 != 0)
        throw std::invalid_argument("walk ends at a split vertex");
    Walk projected;
    projected.arc_indices.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2) {
        const ArcIndex out = w.arc_indices[i];
        const ArcIndex in = w.arc_indices[i + 1];
        if (bundle.is_in_arc(out) || !bundle.is_in_arc(in) ||
            bundle.source_arc(out) != bundle.source_arc(in))
            throw std::invalid_argument("walk does not alternate split-arc pairs");
        projected.arc_indices.push_back(bundle.source_arc(in));
    }
    return projected;
}

/// Evaluates the transformed linear combination over a walk in the bundle
/// graph: arrival/departure from the bundle stamps, delta4 over c_lambda,
/// delta5 over c', half the hop weight per bundle arc, and waiting only at
/// original vertices, shifted back by A(v). For an identity bundle this equals
/// walk_value minus (hop weight / 2) * k; for a lifted walk it equals
/// walk_value plus (delta1 + delta3) * A(final vertex).
inline double walk_value_transformed(const InstantBundle& bundle, const Walk& walk,
                                     const CriteriaWeights& w) {
    const TemporalGraph& g = bundle.graph();
    if (!is_valid_walk(g, walk))
        throw std::invalid_argument("walk invalid in bundle graph");
    if (walk.empty()) return 0.0;
    const auto& arcs = walk.arc_indices;
    const double departure = static_cast<double>(g.arc(arcs.front()).t);
    const double arrival = static_cast<double>(g.arc(arcs.back()).t);
    double sum_transit = 0.0, sum_cost = 0.0, sum_wait = 0.0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        sum_transit += bundle.transit_cost(arcs[i]);
        sum_cost += bundle.arc_cost(arcs[i]);
        if (i + 1 < arcs.size()) {
            const VertexId mid = g.arc(arcs[i]).head;
            if (bundle.is_original(mid)) {
                const double gap = static_cast<double>(g.arc(arcs[i + 1]).t) -
                                   (static_cast<double>(g.arc(arcs[i]).t) -
                                    static_cast<double>(bundle.min_wait_offset(mid)));
                sum_wait += gap;
            }
        }
    }
    return w.foremost * arrival + w.reverse_foremost * (-departure) +
           w.fastest * (arrival - departure) + w.shortest * sum_transit +
           w.cheapest * sum_cost + (w.hop_count / 2.0) * static_cast<double>(arcs.size()) +
           w.waiting * sum_wait;
}

}  // namespace tempowalk

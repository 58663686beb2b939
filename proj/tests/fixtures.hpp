#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tempowalk/core.hpp"

namespace fixtures {

using namespace tempowalk;

// The 5-vertex forced-detour instance: with maximum waiting time 4 the only
// walk from A to C revisits B; with unbounded waiting a 2-arc walk exists.
// Arcs: A->B@4, B->D@8, D->E@10, E->B@14, B->C@16, all instantaneous, cost 1.
inline TemporalGraph detour_graph(TimeStamp beta) {
    std::vector<TimeArc> arcs = {
        {0, 1, 4, 0, 1.0},   // A->B
        {1, 3, 8, 0, 1.0},   // B->D
        {3, 4, 10, 0, 1.0},  // D->E
        {4, 1, 14, 0, 1.0},  // E->B
        {1, 2, 16, 0, 1.0},  // B->C
    };
    return TemporalGraph(5, std::move(arcs), 16, std::vector<TimeStamp>(5, 0),
                         std::vector<TimeStamp>(5, beta), {"A", "B", "C", "D", "E"});
}

inline constexpr VertexId A = 0, B = 1, C = 2, D = 3, E = 4;

inline std::optional<ArcIndex> find_arc(const TemporalGraph& g, VertexId tail, VertexId head,
                                        TimeStamp t) {
    for (ArcIndex i = 0; i < g.arc_count(); ++i) {
        const TimeArc& a = g.arcs()[i];
        if (a.tail == tail && a.head == head && a.t == t) return i;
    }
    return std::nullopt;
}

inline Walk make_walk(std::vector<ArcIndex> arcs) { return Walk{std::move(arcs)}; }

// Walk through arc endpoints; throws when a described arc does not exist.
inline Walk walk_by_arcs(const TemporalGraph& g,
                         const std::vector<std::tuple<VertexId, VertexId, TimeStamp>>& arcs) {
    Walk w;
    for (const auto& [tail, head, t] : arcs) {
        auto idx = find_arc(g, tail, head, t);
        if (!idx) throw std::logic_error("fixture arc not found");
        w.arc_indices.push_back(*idx);
    }
    return w;
}

}  // namespace fixtures

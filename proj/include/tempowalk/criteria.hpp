#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tempowalk/core.hpp"

namespace tempowalk {

/// Nonnegative coefficients of the linear combination over the seven walk
/// criteria. At least one coefficient must be positive; negative values are
/// rejected at construction (the per-timestep Dijkstra step needs nonnegative
/// arc weights).
class CriteriaWeights {
  public:
    double foremost = 0;          // arrival time
    double reverse_foremost = 0;  // negated departure time
    double fastest = 0;           // duration
    double shortest = 0;          // summed transmission times
    double cheapest = 0;          // summed arc costs
    double hop_count = 0;         // number of arcs
    double waiting = 0;           // summed waiting times at intermediate vertices

    CriteriaWeights(double foremost_w, double reverse_foremost_w, double fastest_w,
                    double shortest_w, double cheapest_w, double hop_count_w, double waiting_w)
        : foremost(foremost_w),
          reverse_foremost(reverse_foremost_w),
          fastest(fastest_w),
          shortest(shortest_w),
          cheapest(cheapest_w),
          hop_count(hop_count_w),
          waiting(waiting_w) {
        bool any_positive = false;
        for (double d : {foremost, reverse_foremost, fastest, shortest, cheapest, hop_count,
                         waiting}) {
            if (std::isnan(d) || d < 0.0) throw std::invalid_argument("criteria weight < 0");
            if (d > 0.0) any_positive = true;
        }
        if (!any_positive) throw std::invalid_argument("all criteria weights are zero");
    }

    static const std::array<std::string_view, 7>& preset_names() {
        static const std::array<std::string_view, 7> names = {
            "foremost", "reverse-foremost", "fastest", "shortest",
            "cheapest", "min-hops",         "min-wait"};
        return names;
    }

    /// Unit vector on the named criterion.
    static CriteriaWeights preset(std::string_view name) {
        const auto& names = preset_names();
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (name == names[i]) {
                std::array<double, 7> d{};
                d[i] = 1.0;
                return CriteriaWeights(d[0], d[1], d[2], d[3], d[4], d[5], d[6]);
            }
        }
        throw std::invalid_argument("unknown criterion preset: " + std::string(name));
    }

    /// Parses "d1,d2,d3,d4,d5,d6,d7" with decimal entries.
    static CriteriaWeights parse(std::string_view csv) {
        std::array<double, 7> d{};
        std::string text(csv);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < 7; ++i) {
            std::size_t comma = text.find(',', pos);
            std::string field = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
            char* end = nullptr;
            d[i] = std::strtod(field.c_str(), &end);
            if (end == field.c_str() || *end != '\0')
                throw std::invalid_argument("bad weight entry: '" + field + "'");
            if (comma == std::string::npos) {
                if (i != 6) throw std::invalid_argument("expected 7 comma-separated weights");
                pos = text.size();
            } else {
                pos = comma + 1;
            }
        }
        if (pos < text.size()) throw std::invalid_argument("expected 7 comma-separated weights");
        return CriteriaWeights(d[0], d[1], d[2], d[3], d[4], d[5], d[6]);
    }
};

namespace detail {

/// Evaluates the linear combination over a chained arc-index sequence.
/// The walk must already be known valid.
inline double walk_value_unchecked(const TemporalGraph& g, std::span<const ArcIndex> arcs,
                                   const CriteriaWeights& w) {
    if (arcs.empty()) return 0.0;
    const TimeArc& first = g.arc(arcs.front());
    const TimeArc& last = g.arc(arcs.back());
    const double departure = static_cast<double>(first.t);
    const double arrival = static_cast<double>(last.t + last.lambda);
    double sum_lambda = 0.0, sum_cost = 0.0, sum_wait = 0.0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const TimeArc& a = g.arc(arcs[i]);
        sum_lambda += static_cast<double>(a.lambda);
        sum_cost += a.cost;
        if (i + 1 < arcs.size()) {
            const TimeArc& next = g.arc(arcs[i + 1]);
            sum_wait += static_cast<double>(next.t - (a.t + a.lambda));
        }
    }
    return w.foremost * arrival + w.reverse_foremost * (-departure) +
           w.fastest * (arrival - departure) + w.shortest * sum_lambda + w.cheapest * sum_cost +
           w.hop_count * static_cast<double>(arcs.size()) + w.waiting * sum_wait;
}

}  // namespace detail

/// Reference evaluation of a walk under a linear combination of the seven
/// criteria. The empty walk evaluates to 0. Throws std::invalid_argument on an
/// invalid walk.
inline double walk_value(const TemporalGraph& g, const Walk& walk, const CriteriaWeights& w) {
    if (!is_valid_walk(g, walk)) throw std::invalid_argument("walk is not a valid temporal walk");
    return detail::walk_value_unchecked(g, walk.arc_indices, w);
}

/// Maps per-arc probabilities in (0, 1] to nonnegative costs -log(p), so that a
/// probability-product-maximal walk is exactly a cost-sum-minimal one.
inline std::vector<double> most_likely_costs(std::span<const double> probabilities) {
    std::vector<double> costs;
    costs.reserve(probabilities.size());
    for (double p : probabilities) {
        if (!(p > 0.0) || p > 1.0)
            throw std::invalid_argument("probability outside (0, 1]");
        costs.push_back(p == 1.0 ? 0.0 : -std::log(p));
    }
    return costs;
}

}  // namespace tempowalk

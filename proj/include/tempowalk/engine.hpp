#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tempowalk/core.hpp"
#include "tempowalk/criteria.hpp"
#include "tempowalk/transform.hpp"

namespace tempowalk {

struct EngineOptions {
    bool track_walks = false;
    bool disable_pruning = false;
};

struct EngineStats {
    std::uint64_t timesteps_processed = 0;
    std::uint64_t dijkstra_vertices = 0;  // summed per-timestep vertex counts
    std::uint64_t dijkstra_arcs = 0;      // summed per-timestep arc counts (incl. resume arcs)
    std::uint64_t heap_pops = 0;
    std::uint64_t tuples_inserted = 0;
    std::uint64_t tuples_pruned = 0;
    std::uint64_t tuples_expired = 0;
    std::uint64_t tuples_retained = 0;  // live arrival tuples when the run finished
    std::uint32_t visited_vertices = 0; // original vertices (excluding the source) reached
};

/// Result of one single-source run, reported over the original graph's
/// vertices. opt(v) is the best linear-combination value over all temporal
/// walks from the source to v, +infinity when unreachable. opt(source) is 0 by
/// convention (the empty walk); walks arriving back at the source are not
/// reported. With track_walks, walks[v] holds a witness walk in original arc
/// indices for every reachable v.
struct EngineResult {
    VertexId source = 0;
    std::vector<double> opt;
    std::vector<Walk> walks;
    bool walks_tracked = false;
    EngineStats stats;
};

inline Walk reconstruct_walk(const EngineResult& result, VertexId v) {
    if (!result.walks_tracked) throw std::logic_error("walk tracking was not enabled");
    if (v >= result.opt.size()) throw std::out_of_range("vertex out of range");
    if (result.opt[v] == kUnreachable) throw std::invalid_argument("vertex unreachable");
    return result.walks[v];
}

namespace detail {

struct ArrivalTuple {
    double value = 0.0;
    TimeStamp arrival = 0;
    std::uint32_t prov = 0;
};

/// Per-vertex sorted list of (optimal value, arrival stamp) tuples. Expiry pops
/// from the front, redundancy pruning pops from the back on append, so the
/// adjusted values value - wait_weight * arrival stay nondecreasing and the
/// head tuple is always an earliest minimiser of the resume weight.
///
/// A back tuple is removed only when the new tuple is strictly better after
/// charging the waiting gap; on exact ties the earlier arrival survives, which
/// keeps earliest-arrival witness walks reconstructible.
class ArrivalList {
  public:
    bool empty() const { return head_ == buf_.size(); }
    std::size_t size() const { return buf_.size() - head_; }
    const ArrivalTuple& front() const { return buf_[head_]; }

    std::size_t expire(TimeStamp t, TimeStamp beta) {
        std::size_t removed = 0;
        while (head_ < buf_.size() && buf_[head_].arrival + beta < t) {
            ++head_;
            ++removed;
        }
        if (head_ == buf_.size() && head_ > 0) {
            buf_.clear();
            head_ = 0;
        }
        return removed;
    }

    std::size_t push(double value, TimeStamp arrival, std::uint32_t prov, double wait_weight,
                     bool prune) {
        std::size_t removed = 0;
        if (prune) {
            while (head_ < buf_.size()) {
                const ArrivalTuple& back = buf_.back();
                const double gap = static_cast<double>(arrival - back.arrival);
                if (value < back.value + wait_weight * gap) {
                    buf_.pop_back();
                    ++removed;
                } else {
                    break;
                }
            }
        }
        buf_.push_back({value, arrival, prov});
        return removed;
    }

    /// Minimiser of value + wait_weight * (t - arrival) among live tuples; the
    /// head when pruning is on, a scan otherwise. Ties go to the earliest
    /// arrival in both modes.
    const ArrivalTuple& best_resume(TimeStamp t, double wait_weight, bool pruned) const {
        if (pruned) return buf_[head_];
        std::size_t best = head_;
        double best_adj =
            buf_[head_].value + wait_weight * static_cast<double>(t - buf_[head_].arrival);
        for (std::size_t i = head_ + 1; i < buf_.size(); ++i) {
            const double adj =
                buf_[i].value + wait_weight * static_cast<double>(t - buf_[i].arrival);
            if (adj < best_adj) {
                best = i;
                best_adj = adj;
            }
        }
        return buf_[best];
    }

  private:
    std::vector<ArrivalTuple> buf_;
    std::size_t head_ = 0;
};

/// Binary min-heap over (distance, vertex) with deterministic (value, id)
/// ordering; stale entries are skipped on pop.
class DistanceHeap {
  public:
    void clear() { data_.clear(); }
    bool empty() const { return data_.empty(); }

    void push(double d, VertexId v) {
        data_.emplace_back(d, v);
        std::size_t i = data_.size() - 1;
        while (i > 0) {
            std::size_t parent = (i - 1) / 2;
            if (data_[parent] <= data_[i]) break;
            std::swap(data_[parent], data_[i]);
            i = parent;
        }
    }

    std::pair<double, VertexId> pop() {
        auto top = data_.front();
        data_.front() = data_.back();
        data_.pop_back();
        std::size_t i = 0;
        while (true) {
            std::size_t left = 2 * i + 1, right = 2 * i + 2, smallest = i;
            if (left < data_.size() && data_[left] < data_[smallest]) smallest = left;
            if (right < data_.size() && data_[right] < data_[smallest]) smallest = right;
            if (smallest == i) break;
            std::swap(data_[i], data_[smallest]);
            i = smallest;
        }
        return top;
    }

  private:
    std::vector<std::pair<double, VertexId>> data_;
};

inline constexpr std::uint32_t kNoProv = std::numeric_limits<std::uint32_t>::max();

struct ProvRecord {
    enum class Kind : std::uint8_t { fresh, resume, step };
    Kind kind = Kind::fresh;
    ArcIndex arc = 0;
    std::uint32_t parent = kNoProv;
};

}  // namespace detail

/// One single-source optimal-walk computation over an InstantBundle.
///
/// The run sweeps the bundle arcs grouped by time stamp. For each stamp t it
/// builds the static graph of that stamp plus resume arcs from the source to
/// every vertex reached within its waiting window, runs a Dijkstra restricted
/// to values of walks whose final arc lies in the stamp, and folds the results
/// into the global optimum and the per-vertex arrival lists.
///
/// Per-stamp state lives in epoch-stamped arrays so a stamp touches only its
/// own vertices; with the arrival lists' amortised maintenance the whole run
/// costs O(|V| + |E| log |E|).
class SingleSourceRun {
  public:
    struct GenerationResult {
        struct StampArc {
            VertexId tail = 0;
            VertexId head = 0;
            ArcIndex arc = 0;
            double weight = 0.0;  // d_t
        };
        struct ResumeArc {
            VertexId head = 0;  // tail is always the source
            double weight = 0.0;  // d_r
            std::uint32_t prov = detail::kNoProv;
        };
        TimeStamp t = 0;
        std::vector<VertexId> vertices;  // V_t plus the source, discovery order
        std::vector<StampArc> stamp_arcs;
        std::vector<ResumeArc> resume_arcs;
        bool skipped = false;  // nothing can be reached at this stamp
    };

    struct StampOutcome {
        std::vector<VertexId> reached;  // V': heads of stamp arcs with finite value
        std::vector<double> values;     // opt_t, parallel to reached
    };

    SingleSourceRun(InstantBundle&&, VertexId, const CriteriaWeights&,
                    EngineOptions = {}) = delete;  // the run borrows the bundle

    SingleSourceRun(const InstantBundle& bundle, VertexId source, const CriteriaWeights& weights,
                    EngineOptions options = {})
        : bundle_(&bundle), weights_(weights), options_(options), source_(source) {
        if (source >= bundle.original_vertex_count())
            throw std::out_of_range("source vertex out of range");
        const std::size_t n = bundle.graph().vertex_count();
        hop_weight_ = bundle.origin() == BundleOrigin::transformed ? weights.hop_count / 2.0
                                                                   : weights.hop_count;
        lifetime_d_ = static_cast<double>(bundle.graph().lifetime());
        opt_raw_.assign(n, kUnreachable);
        opt_prov_.assign(n, detail::kNoProv);
        lists_.resize(n);
        mark_of_.assign(n, 0);
        r_.resize(n);
        opt_t_.resize(n);
        settled_.resize(n);
        pred_kind_.resize(n);
        pred_arc_.resize(n);
        pred_tail_.resize(n);
        pred_prov_.resize(n);
        opt_pred_arc_.resize(n);
        opt_pred_tail_.resize(n);
        mat_id_.resize(n);
        local_id_.resize(n);
        const auto arcs = bundle.graph().arcs();
        for (std::size_t i = 0; i < arcs.size();) {
            std::size_t j = i;
            while (j < arcs.size() && arcs[j].t == arcs[i].t) ++j;
            groups_.push_back({arcs[i].t, i, j});
            i = j;
        }
    }

    EngineResult run() {
        for (const Group& group : groups_) {
            generate_group(group);
            if (gen_.skipped) continue;
            relax();
            update();
        }
        return finish();
    }

    struct StepTrace {
        GenerationResult generation;
        StampOutcome outcome;
    };

    /// Runs the full sweep keeping a per-stamp trace; meant for tests and
    /// debugging on small instances.
    std::pair<EngineResult, std::vector<StepTrace>> run_traced() {
        std::vector<StepTrace> traces;
        for (const Group& group : groups_) {
            generate_group(group);
            StepTrace trace;
            trace.generation = gen_;
            if (!gen_.skipped) {
                relax();
                trace.outcome = outcome_;
                update();
            }
            traces.push_back(std::move(trace));
        }
        return {finish(), std::move(traces)};
    }

    /// Step API mirroring the sweep phases; stamps must be visited in
    /// ascending order and each generate/relax/update triple in sequence.
    const GenerationResult& generate(TimeStamp t) {
        auto [lo, hi] = bundle_->graph().stamp_range(t);
        if (lo == hi) throw std::invalid_argument("no arcs at this time stamp");
        generate_group({t, lo, hi});
        return gen_;
    }
    const StampOutcome& relax_generated() {
        relax();
        return outcome_;
    }
    void update_lists() { update(); }
    EngineResult finish_run() { return finish(); }

  private:
    struct Group {
        TimeStamp t;
        std::size_t lo, hi;
    };

    double wait_weight(VertexId v) const {
        return bundle_->is_original(v) ? weights_.waiting : 0.0;
    }

    void touch(VertexId v) {
        if (mark_of_[v] == mark_) return;
        mark_of_[v] = mark_;
        local_id_[v] = static_cast<std::uint32_t>(gen_.vertices.size());
        gen_.vertices.push_back(v);
        r_[v] = kUnreachable;
        opt_t_[v] = kUnreachable;
        settled_[v] = 0;
        pred_kind_[v] = 0;
        mat_id_[v] = detail::kNoProv;
    }

    void generate_group(const Group& group) {
        ++mark_;
        gen_.t = group.t;
        gen_.vertices.clear();
        gen_.stamp_arcs.clear();
        gen_.resume_arcs.clear();
        gen_.skipped = false;

        const auto arcs = bundle_->graph().arcs();
        bool source_departs = false;
        for (std::size_t i = group.lo; i < group.hi; ++i) {
            touch(arcs[i].tail);
            touch(arcs[i].head);
            if (arcs[i].tail == source_) source_departs = true;
        }
        const std::size_t stamp_vertices = gen_.vertices.size();
        touch(source_);

        for (std::size_t k = 0; k < stamp_vertices; ++k) {
            const VertexId v = gen_.vertices[k];
            if (v == source_) continue;
            detail::ArrivalList& list = lists_[v];
            stats_.tuples_expired += list.expire(group.t, bundle_->graph().beta(v));
            if (list.empty()) continue;
            const double ww = wait_weight(v);
            const detail::ArrivalTuple& tuple =
                list.best_resume(group.t, ww, !options_.disable_pruning);
            const double weight = tuple.value + ww * static_cast<double>(group.t - tuple.arrival);
            gen_.resume_arcs.push_back({v, weight, tuple.prov});
        }

        if (!source_departs && gen_.resume_arcs.empty()) {
            gen_.skipped = true;
            return;
        }

        // Any departure from an original vertex other than the source pays the
        // vertex's mandatory waiting A(v), whether the walk paused across
        // stamps or continues within this one; resume arcs charge only the
        // additional waiting beyond the arrival tuple.
        const double t_d = static_cast<double>(group.t);
        const double source_bonus =
            (weights_.reverse_foremost + weights_.fastest) * (lifetime_d_ - t_d);
        for (std::size_t i = group.lo; i < group.hi; ++i) {
            const TimeArc& a = arcs[i];
            double w = weights_.shortest * bundle_->transit_cost(static_cast<ArcIndex>(i)) +
                       weights_.cheapest * a.cost + hop_weight_;
            if (a.tail == source_)
                w += source_bonus;
            else
                w += weights_.waiting * static_cast<double>(bundle_->min_wait_offset(a.tail));
            gen_.stamp_arcs.push_back({a.tail, a.head, static_cast<ArcIndex>(i), w});
        }
        stats_.dijkstra_vertices += gen_.vertices.size();
        stats_.dijkstra_arcs += gen_.stamp_arcs.size() + gen_.resume_arcs.size();
        ++stats_.timesteps_processed;
    }

    void relax() {
        outcome_.reached.clear();
        outcome_.values.clear();

        // Stamp arcs grouped by tail, stable in arc order.
        const std::size_t nt = gen_.vertices.size();
        offsets_.assign(nt + 1, 0);
        for (const auto& sa : gen_.stamp_arcs) ++offsets_[local_id_[sa.tail] + 1];
        for (std::size_t i = 1; i <= nt; ++i) offsets_[i] += offsets_[i - 1];
        adj_.resize(gen_.stamp_arcs.size());
        fill_.assign(offsets_.begin(), offsets_.end() - 1);
        for (std::uint32_t i = 0; i < gen_.stamp_arcs.size(); ++i)
            adj_[fill_[local_id_[gen_.stamp_arcs[i].tail]]++] = i;

        heap_.clear();
        r_[source_] = 0.0;
        pred_kind_[source_] = 1;  // fresh departure
        heap_.push(0.0, source_);
        while (!heap_.empty()) {
            auto [dist, v] = heap_.pop();
            if (settled_[v] || dist != r_[v]) continue;
            settled_[v] = 1;
            ++stats_.heap_pops;
            if (v == source_) {
                for (const auto& ra : gen_.resume_arcs) {
                    if (ra.weight < r_[ra.head]) {
                        r_[ra.head] = ra.weight;
                        pred_kind_[ra.head] = 2;
                        pred_prov_[ra.head] = ra.prov;
                        heap_.push(ra.weight, ra.head);
                    }
                }
            }
            const std::uint32_t lid = local_id_[v];
            for (std::uint32_t k = offsets_[lid]; k < offsets_[lid + 1]; ++k) {
                const auto& sa = gen_.stamp_arcs[adj_[k]];
                const double nd = dist + sa.weight;
                if (nd < opt_t_[sa.head]) {
                    if (opt_t_[sa.head] == kUnreachable) outcome_.reached.push_back(sa.head);
                    opt_t_[sa.head] = nd;
                    opt_pred_arc_[sa.head] = sa.arc;
                    opt_pred_tail_[sa.head] = v;
                }
                if (nd < r_[sa.head]) {
                    r_[sa.head] = nd;
                    pred_kind_[sa.head] = 3;
                    pred_arc_[sa.head] = sa.arc;
                    pred_tail_[sa.head] = v;
                    heap_.push(nd, sa.head);
                }
            }
        }
        outcome_.values.reserve(outcome_.reached.size());
        for (VertexId v : outcome_.reached) outcome_.values.push_back(opt_t_[v]);
    }

    void update() {
        const double t_d = static_cast<double>(gen_.t);
        const double base = weights_.foremost * t_d - weights_.reverse_foremost * lifetime_d_ +
                            weights_.fastest * (t_d - lifetime_d_);
        for (std::size_t i = 0; i < outcome_.reached.size(); ++i) {
            const VertexId v = outcome_.reached[i];
            if (v == source_) continue;  // opt(source) is the empty walk by convention
            const double value = outcome_.values[i];
            std::uint32_t prov = detail::kNoProv;
            if (options_.track_walks) prov = materialize_tuple(v);
            const double candidate = base + value;
            if (candidate < opt_raw_[v]) {
                opt_raw_[v] = candidate;
                opt_prov_[v] = prov;
            }
            ++stats_.tuples_inserted;
            stats_.tuples_pruned +=
                lists_[v].push(value, gen_.t, prov, wait_weight(v), !options_.disable_pruning);
        }
    }

    // Turns the per-stamp predecessor chains into persistent records before the
    // next stamp overwrites them.
    std::uint32_t materialize_r(VertexId v) {
        chain_.clear();
        VertexId cur = v;
        while (mat_id_[cur] == detail::kNoProv && pred_kind_[cur] == 3) {
            chain_.push_back(cur);
            cur = pred_tail_[cur];
        }
        std::uint32_t parent = mat_id_[cur];
        if (parent == detail::kNoProv) {
            using Kind = detail::ProvRecord::Kind;
            if (pred_kind_[cur] == 2)
                arena_.push_back({Kind::resume, 0, pred_prov_[cur]});
            else
                arena_.push_back({Kind::fresh, 0, detail::kNoProv});
            parent = static_cast<std::uint32_t>(arena_.size() - 1);
            mat_id_[cur] = parent;
        }
        for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
            arena_.push_back({detail::ProvRecord::Kind::step, pred_arc_[*it], parent});
            parent = static_cast<std::uint32_t>(arena_.size() - 1);
            mat_id_[*it] = parent;
        }
        return parent;
    }

    std::uint32_t materialize_tuple(VertexId v) {
        const std::uint32_t parent = materialize_r(opt_pred_tail_[v]);
        arena_.push_back({detail::ProvRecord::Kind::step, opt_pred_arc_[v], parent});
        return static_cast<std::uint32_t>(arena_.size() - 1);
    }

    Walk backtrack(std::uint32_t prov) const {
        std::vector<ArcIndex> bundle_arcs;
        std::uint32_t cur = prov;
        while (cur != detail::kNoProv) {
            const detail::ProvRecord& rec = arena_[cur];
            if (rec.kind == detail::ProvRecord::Kind::step) bundle_arcs.push_back(rec.arc);
            if (rec.kind == detail::ProvRecord::Kind::fresh) break;
            cur = rec.parent;
        }
        std::reverse(bundle_arcs.begin(), bundle_arcs.end());
        Walk walk;
        if (bundle_->origin() == BundleOrigin::identity) {
            walk.arc_indices = std::move(bundle_arcs);
        } else {
            walk.arc_indices.reserve(bundle_arcs.size() / 2);
            for (ArcIndex a : bundle_arcs)
                if (bundle_->is_in_arc(a)) walk.arc_indices.push_back(bundle_->source_arc(a));
        }
        return walk;
    }

    EngineResult finish() {
        EngineResult result;
        result.source = source_;
        result.walks_tracked = options_.track_walks;
        const std::size_t n0 = bundle_->original_vertex_count();
        result.opt.assign(n0, kUnreachable);
        const double end_adjust = weights_.foremost + weights_.fastest;
        for (std::size_t v = 0; v < n0; ++v) {
            if (opt_raw_[v] == kUnreachable) continue;
            result.opt[v] = opt_raw_[v] - end_adjust * static_cast<double>(
                                              bundle_->min_wait_offset(static_cast<VertexId>(v)));
            ++stats_.visited_vertices;
        }
        result.opt[source_] = 0.0;
        for (const detail::ArrivalList& list : lists_) stats_.tuples_retained += list.size();
        if (options_.track_walks) {
            result.walks.resize(n0);
            for (std::size_t v = 0; v < n0; ++v) {
                if (v == source_ || result.opt[v] == kUnreachable) continue;
                result.walks[v] = backtrack(opt_prov_[v]);
            }
        }
        result.stats = stats_;
        return result;
    }

    const InstantBundle* bundle_;
    CriteriaWeights weights_;
    EngineOptions options_;
    VertexId source_;
    double hop_weight_ = 0.0;
    double lifetime_d_ = 0.0;

    std::vector<Group> groups_;
    GenerationResult gen_;
    StampOutcome outcome_;
    EngineStats stats_;

    std::vector<double> opt_raw_;
    std::vector<std::uint32_t> opt_prov_;
    std::vector<detail::ArrivalList> lists_;
    std::vector<detail::ProvRecord> arena_;

    // Epoch-stamped per-stamp scratch; a slot is live iff mark_of_[v] == mark_.
    std::uint32_t mark_ = 0;
    std::vector<std::uint32_t> mark_of_;
    std::vector<double> r_;
    std::vector<double> opt_t_;
    std::vector<std::uint8_t> settled_;
    std::vector<std::uint8_t> pred_kind_;  // 0 none, 1 fresh, 2 resume, 3 step
    std::vector<ArcIndex> pred_arc_;
    std::vector<VertexId> pred_tail_;
    std::vector<std::uint32_t> pred_prov_;
    std::vector<ArcIndex> opt_pred_arc_;
    std::vector<VertexId> opt_pred_tail_;
    std::vector<std::uint32_t> mat_id_;
    std::vector<std::uint32_t> local_id_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> fill_;
    std::vector<std::uint32_t> adj_;
    std::vector<VertexId> chain_;
    detail::DistanceHeap heap_;
};

/// Computes, for every vertex of the original graph, the optimal temporal walk
/// value from the source under the given linear combination; see EngineResult.
inline EngineResult single_source_optimal_walks(const InstantBundle& bundle, VertexId source,
                                                const CriteriaWeights& weights,
                                                EngineOptions options = {}) {
    return SingleSourceRun(bundle, source, weights, options).run();
}

}  // namespace tempowalk

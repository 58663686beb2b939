#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tempowalk/core.hpp"
#include "tempowalk/engine.hpp"

namespace tempowalk::io {

struct ParseError : std::runtime_error {
    std::size_t line = 0;
    ParseError(std::size_t line_no, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
};

/// Shortest decimal rendering that parses back to the same double; infinities
/// serialize as "inf".
inline std::string format_double(double v) {
    if (v == kUnreachable) return "inf";
    if (v == -kUnreachable) return "-inf";
    if (v == std::floor(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    char buf[40];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

struct EdgeListFormat {
    enum class Layout { tgf, konect };
    Layout layout = Layout::tgf;
    bool undirected = false;           // emit both arc directions
    bool konect_weight_as_cost = false;  // otherwise the KONECT weight column is ignored
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

inline long long parse_int(const std::string& tok, std::size_t line_no, const char* what) {
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0')
        throw ParseError(line_no, std::string("non-numeric ") + what + ": '" + tok + "'");
    return v;
}

inline double parse_real(const std::string& tok, std::size_t line_no, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw ParseError(line_no, std::string("non-numeric ") + what + ": '" + tok + "'");
    return v;
}

}  // namespace detail

/// Parses a whitespace-separated edge list into a temporal graph.
///
/// tgf layout: `tail head t [lambda [cost]]`, '#' comment lines. Stamps are
/// model stamps and kept verbatim; t < 1 is an error.
/// konect layout: `tail head weight timestamp`, '%' comment lines. Stamps are
/// epoch seconds and get shifted so the minimum is 1; only differences matter
/// for all criteria except foremost/reverse-foremost, whose values shift
/// uniformly.
///
/// External vertex ids are relabeled densely in first-seen order and kept as
/// labels. T is the largest (shifted) stamp. Missing lambda/cost default to 0
/// and 1. Empty input yields the empty graph.
inline TemporalGraph parse_edge_list(std::istream& in, const EdgeListFormat& fmt) {
    const char comment = fmt.layout == EdgeListFormat::Layout::tgf ? '#' : '%';
    struct RawArc {
        VertexId tail, head;
        long long t;
        TimeStamp lambda;
        double cost;
    };
    std::vector<RawArc> raw;
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<VertexId>(labels.size()));
        if (inserted) labels.push_back(name);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    long long min_stamp = 0;
    bool any = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == comment) continue;
        const auto tokens = detail::tokenize(line);
        RawArc arc{};
        if (fmt.layout == EdgeListFormat::Layout::tgf) {
            if (tokens.size() < 3) throw ParseError(line_no, "missing time stamp column");
            if (tokens.size() > 5) throw ParseError(line_no, "too many columns");
            arc.tail = intern(tokens[0]);
            arc.head = intern(tokens[1]);
            arc.t = detail::parse_int(tokens[2], line_no, "time stamp");
            if (arc.t < 1) throw ParseError(line_no, "time stamp below 1");
            arc.lambda = 0;
            arc.cost = 1.0;
            if (tokens.size() >= 4) {
                const long long l = detail::parse_int(tokens[3], line_no, "transmission time");
                if (l < 0) throw ParseError(line_no, "negative transmission time");
                arc.lambda = static_cast<TimeStamp>(l);
            }
            if (tokens.size() == 5) arc.cost = detail::parse_real(tokens[4], line_no, "cost");
        } else {
            if (tokens.size() != 4) throw ParseError(line_no, "expected 4 columns");
            arc.tail = intern(tokens[0]);
            arc.head = intern(tokens[1]);
            const double weight = detail::parse_real(tokens[2], line_no, "weight");
            arc.t = detail::parse_int(tokens[3], line_no, "time stamp");
            arc.lambda = 0;
            arc.cost = fmt.konect_weight_as_cost ? weight : 1.0;
        }
        if (arc.cost < 0.0 || std::isnan(arc.cost)) throw ParseError(line_no, "negative cost");
        min_stamp = any ? std::min(min_stamp, arc.t) : arc.t;
        any = true;
        raw.push_back(arc);
        if (fmt.undirected && arc.tail != arc.head) {
            std::swap(arc.tail, arc.head);
            raw.push_back(arc);
        }
    }

    const long long shift = fmt.layout == EdgeListFormat::Layout::konect ? min_stamp - 1 : 0;
    std::vector<TimeArc> arcs;
    arcs.reserve(raw.size());
    TimeStamp lifetime = 0;
    for (const RawArc& r : raw) {
        const TimeStamp t = static_cast<TimeStamp>(r.t - shift);
        lifetime = std::max(lifetime, t);
        arcs.push_back({r.tail, r.head, t, r.lambda, r.cost});
    }
    const std::size_t vertex_count = labels.size();
    return TemporalGraph(vertex_count, std::move(arcs), lifetime, {}, {}, std::move(labels));
}

/// Writes the graph in tgf layout (full five columns), one arc per line in
/// canonical order, using vertex labels.
inline void write_edge_list_tgf(const TemporalGraph& g, std::ostream& out) {
    for (const TimeArc& a : g.arcs()) {
        out << g.label(a.tail) << ' ' << g.label(a.head) << ' ' << a.t << ' ' << a.lambda << ' '
            << format_double(a.cost) << '\n';
    }
}

struct WaitingConfig {
    std::vector<TimeStamp> alpha;
    std::vector<TimeStamp> beta;
};

inline WaitingConfig default_waits(const TemporalGraph& g) {
    return {std::vector<TimeStamp>(g.vertex_count(), 0),
            std::vector<TimeStamp>(g.vertex_count(), g.lifetime())};
}

inline void validate_waits(const WaitingConfig& cfg, TimeStamp lifetime) {
    for (std::size_t v = 0; v < cfg.alpha.size(); ++v) {
        if (cfg.alpha[v] > lifetime || cfg.beta[v] > lifetime)
            throw std::invalid_argument("waiting time outside [0, T] at vertex " +
                                        std::to_string(v));
        if (cfg.alpha[v] > cfg.beta[v])
            throw std::invalid_argument("alpha exceeds beta at vertex " + std::to_string(v));
    }
}

/// Per-vertex waiting file: rows `vertex alpha beta`, '#' comments, vertices
/// named by their external labels. Unlisted vertices keep alpha 0, beta T.
inline WaitingConfig parse_waiting_file(std::istream& in, const TemporalGraph& g) {
    WaitingConfig cfg = default_waits(g);
    std::unordered_map<std::string, VertexId> ids;
    for (VertexId v = 0; v < g.vertex_count(); ++v) ids.emplace(g.label(v), v);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto tokens = detail::tokenize(line);
        if (tokens.size() != 3) throw ParseError(line_no, "expected 'vertex alpha beta'");
        auto it = ids.find(tokens[0]);
        if (it == ids.end()) throw ParseError(line_no, "unknown vertex '" + tokens[0] + "'");
        const long long a = detail::parse_int(tokens[1], line_no, "alpha");
        const long long b = detail::parse_int(tokens[2], line_no, "beta");
        if (a < 0 || b < 0) throw ParseError(line_no, "negative waiting time");
        cfg.alpha[it->second] = static_cast<TimeStamp>(a);
        cfg.beta[it->second] = static_cast<TimeStamp>(b);
    }
    validate_waits(cfg, g.lifetime());
    return cfg;
}

/// A waiting spec is either a single constant c (meaning beta == c everywhere
/// and alpha == 0, the uniform-sweep convention) or the path of a per-vertex
/// waiting file.
inline WaitingConfig parse_waiting_config(const std::string& spec, const TemporalGraph& g) {
    char* end = nullptr;
    const long long c = std::strtoll(spec.c_str(), &end, 10);
    if (end != spec.c_str() && *end == '\0') {
        if (c < 0 || static_cast<TimeStamp>(c) > g.lifetime())
            throw std::invalid_argument("uniform beta outside [0, T]: " + spec);
        WaitingConfig cfg = default_waits(g);
        cfg.beta.assign(g.vertex_count(), static_cast<TimeStamp>(c));
        validate_waits(cfg, g.lifetime());
        return cfg;
    }
    std::ifstream file(spec);
    if (!file) throw std::invalid_argument("cannot open waiting file: " + spec);
    return parse_waiting_file(file, g);
}

/// One row per vertex in id order: label, optimal value ("inf" when
/// unreachable), witness walk length and cycle count (blank without a witness).
inline void write_results_csv(const TemporalGraph& g, const EngineResult& result,
                              std::ostream& out) {
    out << "vertex,opt,arrival_relevant_hops,cycles\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << g.label(v) << ',' << format_double(result.opt[v]) << ',';
        if (result.walks_tracked && result.opt[v] != kUnreachable) {
            const Walk& walk = result.walks[v];
            out << walk.size() << ',' << count_cycles(g, walk);
        } else {
            out << ',';
        }
        out << '\n';
    }
}

}  // namespace tempowalk::io

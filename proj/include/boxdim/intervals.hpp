#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxdim/errors.hpp"
#include "boxdim/graph.hpp"

namespace boxdim {

/// Closed interval [left, right].
struct Interval {
    std::int64_t left = 0;
    std::int64_t right = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed intervals touch-intersect: l1 <= r2 and l2 <= r1.
constexpr bool intervals_intersect(const Interval& x, const Interval& y) {
    return x.left <= y.right && y.left <= x.right;
}

/// One interval per vertex; intervals[v-1] belongs to vertex v.
struct IntervalRepresentation {
    std::vector<Interval> intervals;

    IntervalRepresentation() = default;
    explicit IntervalRepresentation(std::vector<Interval> iv);

    int order() const { return static_cast<int>(intervals.size()); }
    const Interval& of(int v) const { return intervals.at(static_cast<std::size_t>(v - 1)); }
    Interval& of(int v) { return intervals.at(static_cast<std::size_t>(v - 1)); }
    std::int64_t leftmost() const;
    std::int64_t rightmost() const;

    friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;
};

Graph induced_graph(const IntervalRepresentation& rep);

/// Relabels endpoint coordinates by rank (0, 1, 2, ...) keeping all equalities and
/// strict inequalities between endpoints.
IntervalRepresentation normalized(const IntervalRepresentation& rep);

/// Reflects through the origin: [l, r] -> [-r, -l].
IntervalRepresentation mirrored(const IntervalRepresentation& rep);

/// Maximal cliques of g, each sorted, list sorted lexicographically.
/// Throws OracleLimit when more than `max_cliques` exist.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, int max_cliques);

/// Interval model of g built from a consecutive-ones ordering of its maximal cliques,
/// or nullopt when g is not an interval graph. Vertex u gets [first, last] clique index.
std::optional<IntervalRepresentation> recognize_interval_graph(const Graph& g, const OracleLimits& limits = {});

/// Equivalent representation whose 2n endpoints are the distinct integers 1..2n.
IntervalRepresentation make_distinguishing(const IntervalRepresentation& rep);

/// True when every a_side interval starts at the global leftmost point and every
/// b_side interval ends at the global rightmost point.
bool is_canonical_for(const IntervalRepresentation& rep, const Bipartition& parts);

/// Canonical co-bipartite representation of the same graph (both sides must be cliques).
IntervalRepresentation canonical_cobipartite_rep(const IntervalRepresentation& rep, const Bipartition& parts);

/// Keeps the canonical anchors and makes a_side right endpoints and b_side left
/// endpoints pairwise distinct without changing the induced graph.
IntervalRepresentation distinguish_inner_endpoints(const IntervalRepresentation& rep, const Bipartition& parts);

}  // namespace boxdim

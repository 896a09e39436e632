#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boxdim/errors.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/intervals.hpp"
#include "boxdim/kernels.hpp"

namespace boxdim {

/// A graph written as the edge-intersection of interval graphs, each given by an
/// explicit interval representation.
struct BoxRepresentation {
    std::vector<IntervalRepresentation> reps;
    Graph target;

    std::size_t size() const { return reps.size(); }
};

/// Why a box representation fails, with the first offending pair when there is one.
struct BoxDefect {
    std::string reason;
    std::optional<Edge> pair;
    std::optional<std::size_t> member;
};

/// nullopt when b is valid. Throws InvalidInput on vertex-count mismatch.
std::optional<BoxDefect> box_representation_defect(const BoxRepresentation& b);
bool verify_box_representation(const BoxRepresentation& b);

struct IntervalSupergraph {
    Graph graph;
    IntervalRepresentation witness;
};

/// Every interval graph on V(g) containing E(g), ordered by the bitmask of added
/// non-edges (bit i = i-th non-edge in lexicographic order).
std::vector<IntervalSupergraph> enumerate_interval_supergraphs(const Graph& g, const OracleLimits& limits = {},
                                                               Exec exec = Exec::parallel);

/// Index of the pair {u, v} (0-based, u < v) in the row-major upper triangle.
constexpr int pair_slot(int u, int v, int n) { return u * n - u * (u + 1) / 2 + (v - u - 1); }

/// The inclusion-maximal sets of non-edges of g that one interval supergraph can
/// avoid simultaneously, each with a representation of that supergraph. Built from
/// vertex orderings: the ordering sigma yields intervals [pos(u), max pos over N[u]].
std::vector<IntervalSupergraph> maximal_interval_supergraphs(const Graph& g);

struct BoxicityResult {
    int boxicity = 0;
    BoxRepresentation witness;
};

/// Exact boxicity: 0 for complete graphs, otherwise a minimum cover of the non-edges
/// by the non-edge sets of interval supergraphs.
BoxicityResult brute_boxicity(const Graph& g, const OracleLimits& limits = {}, Exec exec = Exec::parallel);

}  // namespace boxdim

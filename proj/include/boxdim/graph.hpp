#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "boxdim/errors.hpp"

namespace boxdim {

class Poset;

/// Unordered pair {u, v}, stored with u < v.
using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n, backed by a dense adjacency matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws InvalidInput on loops, duplicates or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);

    static Graph complete(int n);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Edges sorted lexicographically, each with first < second.
    std::vector<Edge> edges() const;
    /// Non-adjacent distinct pairs, sorted like edges().
    std::vector<Edge> non_edges() const;
    int edge_count() const { return edge_count_; }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    bool is_complete() const { return 2 * static_cast<long>(edge_count_) == static_cast<long>(n_) * (n_ - 1); }

    /// True when every edge of *this is an edge of `other` (same vertex count).
    bool is_subgraph_of(const Graph& other) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
    }
    void check_vertex(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

struct Bipartition {
    std::vector<int> a_side;  // sorted
    std::vector<int> b_side;  // sorted

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// `color[v-1]` is the color of vertex v; colors are 1..max.
struct Coloring {
    std::vector<int> color;

    int of(int v) const { return color.at(static_cast<std::size_t>(v - 1)); }
    int max_color() const;
};

Graph complement(const Graph& g);

/// BFS 2-coloring from the lowest-index vertex of each component; that vertex goes to a_side.
std::optional<Bipartition> bipartition_of(const Graph& g);

/// Sides disjoint, covering 1..n, both non-empty.
bool is_partition_of(const Bipartition& parts, int n);
/// Partition valid and no edge inside either side.
bool is_bipartition_for(const Graph& g, const Bipartition& parts);
/// Partition valid and both sides induce cliques.
bool is_cobipartition_for(const Graph& g, const Bipartition& parts);
/// side[v-1] is true for a_side vertices.
std::vector<bool> side_mask(const Bipartition& parts, int n);

Graph underlying_comparability_graph(const Poset& p);

/// A transitive orientation of g, or nullopt if g is not a comparability graph.
/// Edges are decided in lexicographic order, trying low->high first.
std::optional<Poset> transitive_orientation(const Graph& g);

/// color(v) = number of elements on a longest chain with maximum v.
Coloring chain_length_coloring(const Poset& p);

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Exact chromatic number by backtracking over 1..n colors, vertices tried in
/// decreasing-degree order. n == 0 gives 0.
int brute_chromatic(const Graph& g, const OracleLimits& limits = {});

/// A proper coloring with brute_chromatic(g) colors.
Coloring brute_coloring(const Graph& g, const OracleLimits& limits = {});

}  // namespace boxdim

#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "boxdim/graph.hpp"
#include "boxdim/poset.hpp"

namespace boxdim {

/// Seed of the instance generators. All randomness comes from std::mt19937_64
/// seeded with this value; its output sequence is fixed by the C++ standard.
struct Seed {
    std::uint64_t value = 0;
};

/// Minimals a_i = i, maximals b_j = n + j, with a_i < b_j iff i != j. Needs n >= 3.
Poset crown(int n);

/// Complete k-partite graph with parts {(i-1)q+1, ..., iq} and the layered
/// orientation u < v iff part(u) < part(v).
std::pair<Graph, Poset> complete_multipartite(int k, int q);

/// K_n minus the matching {1,2}, {3,4}, ...; equal to complete_multipartite(n/2, 2).
std::pair<Graph, Poset> kn_minus_matching(int n);

/// Vertex v encodes the bit string v-1; edges join strings at Hamming distance 1. d <= 10.
Graph hypercube(int d);

/// n minimals 1..n and n maximals n+1..2n; each a < b independently with probability p.
Poset random_height2(int n, double p, Seed s);

/// G(n, p); pairs drawn in lexicographic order.
Graph random_graph(int n, double p, Seed s);

/// Transitive closure of a random DAG (arc i -> j for i < j with probability p) with
/// labels shuffled.
Poset random_order(int n, double p, Seed s);

}  // namespace boxdim

#pragma once

#include <utility>

#include "boxdim/box.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/order.hpp"
#include "boxdim/poset.hpp"

namespace boxdim {

/// Realizer of p with two linear extensions per box member: topological sorts of
/// P ∪ P_I and P ∪ P̄_I. A chain gives the singleton realizer.
/// Throws InvalidInput when b does not represent the comparability graph of p, and
/// InvariantViolation (naming the cycle) if either digraph is cyclic.
Realizer realizer_from_box(const Poset& p, const BoxRepresentation& b);

/// (χ-1)·|r| interval representations whose intersection is the comparability graph
/// of p, built from the positions of each vertex in the members of r and the chain
/// length coloring c. A chain gives the empty representation; χ = 1 is rejected.
BoxRepresentation box_from_realizer(const Poset& p, const Realizer& r, const Coloring& c);

/// Vertex u of the base graph becomes u_A = u and u_B = u + base_n in the cover.
struct CoverVertexMap {
    int base_n = 0;

    int a(int u) const { return u; }
    int b(int u) const { return u + base_n; }
    Bipartition parts() const;
};

/// Bipartite graph on 2n vertices with u_A ~ v_B iff u == v or uv is an edge of g.
std::pair<Graph, CoverVertexMap> extended_double_cover(const Graph& g);

/// a_side minimal, b_side maximal, a < b exactly for the edges of g.
Poset natural_height2_poset(const Graph& g, const Bipartition& parts);

/// Both sides completed to cliques, cross edges unchanged.
Graph associated_cobipartite(const Graph& g, const Bipartition& parts);

/// From a box representation of H* to one of H with max(2, |b|) members.
BoxRepresentation bip_box_from_cobip(const Graph& h, const Bipartition& parts, const BoxRepresentation& b);

/// From a box representation of H to one of H* with 2·|b| members.
BoxRepresentation cobip_box_from_bip(const Graph& h, const Bipartition& parts, const BoxRepresentation& b);

/// From a box representation of g to one of its extended double cover with |b| + 2 members.
BoxRepresentation cover_box_from_base(const Graph& g, const BoxRepresentation& b);

/// From a box representation of the extended double cover of g (m members) to one of
/// g with at most 2m members.
BoxRepresentation base_box_from_cover(const Graph& g, const BoxRepresentation& cover_b);

}  // namespace boxdim

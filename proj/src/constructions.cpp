#include "boxdim/constructions.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace boxdim {

namespace {

void require_box_of(const BoxRepresentation& b, const Graph& target, const char* what) {
    if (b.target != target) throw InvalidInput(fmt::format("{}: box representation has the wrong target graph", what));
    if (auto defect = box_representation_defect(b)) {
        throw InvalidInput(fmt::format("{}: invalid box representation ({})", what, defect->reason));
    }
}

void require_bipartition(const Graph& h, const Bipartition& parts) {
    if (!is_bipartition_for(h, parts)) throw InvalidInput("partition is not a bipartition of the graph");
}

void ensure_valid(const BoxRepresentation& out, const char* what) {
    if (auto defect = box_representation_defect(out)) {
        throw InvariantViolation(fmt::format("{} produced an invalid box representation: {}", what, defect->reason));
    }
}

// Directed cycle as "a -> b -> ... -> a", or empty if none.
std::string find_cycle(const Digraph& d) {
    const int n = d.order();
    std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack;
    std::string found;
    auto dfs = [&](auto&& self, int u) -> bool {
        state[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
        for (int v : d.successors(u)) {
            if (state[static_cast<std::size_t>(v)] == 1) {
                auto it = std::find(stack.begin(), stack.end(), v);
                for (; it != stack.end(); ++it) found += fmt::format("{} -> ", *it);
                found += std::to_string(v);
                return true;
            }
            if (state[static_cast<std::size_t>(v)] == 0 && self(self, v)) return true;
        }
        stack.pop_back();
        state[static_cast<std::size_t>(u)] = 2;
        return false;
    };
    for (int u = 1; u <= n; ++u)
        if (state[static_cast<std::size_t>(u)] == 0 && dfs(dfs, u)) break;
    return found;
}

LinearExtension sorted_union(const Poset& p, const Poset& q) {
    Digraph d(p.size());
    for (auto [u, v] : p.relations()) d.add_arc(u, v);
    for (auto [u, v] : q.relations()) d.add_arc(u, v);
    auto l = topological_sort(d);
    if (!l) throw InvariantViolation("P ∪ P_I is cyclic: " + find_cycle(d));
    return *l;
}

}  // namespace

Realizer realizer_from_box(const Poset& p, const BoxRepresentation& b) {
    const Graph gp = underlying_comparability_graph(p);
    require_box_of(b, gp, "realizer_from_box");
    if (p.is_chain()) {
        Digraph d(p.size());
        for (auto [u, v] : p.relations()) d.add_arc(u, v);
        return {*topological_sort(d)};
    }
    Realizer out;
    for (const auto& rep : b.reps) {
        auto [forward, backward] = interval_orders_from_rep(rep, gp);
        out.push_back(sorted_union(p, forward));
        out.push_back(sorted_union(p, backward));
    }
    if (!verify_realizer(p, out)) throw InvariantViolation("realizer_from_box output is not a realizer");
    return out;
}

BoxRepresentation box_from_realizer(const Poset& p, const Realizer& r, const Coloring& c) {
    const int n = p.size();
    const Graph gp = underlying_comparability_graph(p);
    if (c.color != chain_length_coloring(p).color) {
        throw InvalidInput("box_from_realizer expects the chain length coloring of the poset");
    }
    BoxRepresentation out{{}, gp};
    if (p.is_chain()) return out;
    const int chi = c.max_color();
    if (chi == 1) throw InvalidInput("box_from_realizer needs chromatic number at least 2 (poset is an antichain)");
    if (!verify_realizer(p, r)) throw InvalidInput("box_from_realizer: not a realizer of the poset");

    const int top = chi - 1;
    const int k = static_cast<int>(r.size());
    const std::int64_t hi = n + 1;
    for (int i = 1; i <= top; ++i) {
        for (int j = 1; j <= k; ++j) {
            const auto& ext = r[static_cast<std::size_t>(j - 1)];
            const bool last = (i == top && j == k);
            std::vector<Interval> iv(static_cast<std::size_t>(n));
            for (int v = 1; v <= n; ++v) {
                const std::int64_t pos = ext.position(v);
                const int col = c.of(v);
                Interval& slot = iv[static_cast<std::size_t>(v - 1)];
                if (last)
                    slot = (col == top + 1) ? Interval{pos, pos} : Interval{pos, hi};
                else if (col == i)
                    slot = {pos, pos};
                else if (col < i)
                    slot = {pos, hi};
                else
                    slot = {0, pos};
            }
            out.reps.emplace_back(std::move(iv));
        }
    }
    ensure_valid(out, "box_from_realizer");
    return out;
}

Bipartition CoverVertexMap::parts() const {
    Bipartition p;
    for (int u = 1; u <= base_n; ++u) {
        p.a_side.push_back(a(u));
        p.b_side.push_back(b(u));
    }
    return p;
}

std::pair<Graph, CoverVertexMap> extended_double_cover(const Graph& g) {
    const int n = g.order();
    CoverVertexMap map{n};
    Graph gc(2 * n);
    for (int u = 1; u <= n; ++u) gc.add_edge(map.a(u), map.b(u));
    for (auto [u, v] : g.edges()) {
        gc.add_edge(map.a(u), map.b(v));
        gc.add_edge(map.a(v), map.b(u));
    }
    return {std::move(gc), map};
}

Poset natural_height2_poset(const Graph& g, const Bipartition& parts) {
    require_bipartition(g, parts);
    const auto in_a = side_mask(parts, g.order());
    std::vector<std::pair<int, int>> rel;
    for (auto [u, v] : g.edges()) {
        if (in_a[static_cast<std::size_t>(u - 1)])
            rel.emplace_back(u, v);
        else
            rel.emplace_back(v, u);
    }
    std::sort(rel.begin(), rel.end());
    return Poset::from_relations(g.order(), rel);
}

Graph associated_cobipartite(const Graph& g, const Bipartition& parts) {
    require_bipartition(g, parts);
    Graph out = g;
    for (const auto* side : {&parts.a_side, &parts.b_side})
        for (std::size_t i = 0; i < side->size(); ++i)
            for (std::size_t j = i + 1; j < side->size(); ++j) out.add_edge((*side)[i], (*side)[j]);
    return out;
}

BoxRepresentation bip_box_from_cobip(const Graph& h, const Bipartition& parts, const BoxRepresentation& b) {
    require_bipartition(h, parts);
    const Graph hstar = associated_cobipartite(h, parts);
    require_box_of(b, hstar, "bip_box_from_cobip");
    const int n = h.order();

    std::vector<IntervalRepresentation> sources;
    if (b.reps.empty()) {
        sources.emplace_back(std::vector<Interval>(static_cast<std::size_t>(n), Interval{0, 1}));
    }
    for (const auto& rep : b.reps) sources.push_back(rep);
    for (auto& rep : sources) rep = distinguish_inner_endpoints(canonical_cobipartite_rep(rep, parts), parts);

    // Member 1: b_side shrunk to left endpoints. Member 2: a_side shrunk to right endpoints.
    IntervalRepresentation first = sources[0];
    for (int v : parts.b_side) first.of(v).right = first.of(v).left;
    IntervalRepresentation second = sources.size() > 1 ? sources[1] : sources[0];
    for (int u : parts.a_side) second.of(u).left = second.of(u).right;

    BoxRepresentation out{{normalized(first), normalized(second)}, h};
    for (std::size_t i = 2; i < sources.size(); ++i) out.reps.push_back(normalized(sources[i]));
    ensure_valid(out, "bip_box_from_cobip");
    return out;
}

BoxRepresentation cobip_box_from_bip(const Graph& h, const Bipartition& parts, const BoxRepresentation& b) {
    require_bipartition(h, parts);
    require_box_of(b, h, "cobip_box_from_bip");
    const auto in_a = side_mask(parts, h.order());
    BoxRepresentation out{{}, associated_cobipartite(h, parts)};
    for (const auto& rep : b.reps) {
        const auto lo = rep.leftmost();
        const auto hi = rep.rightmost();
        IntervalRepresentation odd = rep;
        IntervalRepresentation even = rep;
        for (int u = 1; u <= h.order(); ++u) {
            if (in_a[static_cast<std::size_t>(u - 1)]) {
                odd.of(u).left = lo;
                even.of(u).right = hi;
            } else {
                odd.of(u).right = hi;
                even.of(u).left = lo;
            }
        }
        out.reps.push_back(normalized(odd));
        out.reps.push_back(normalized(even));
    }
    ensure_valid(out, "cobip_box_from_bip");
    return out;
}

BoxRepresentation cover_box_from_base(const Graph& g, const BoxRepresentation& b) {
    require_box_of(b, g, "cover_box_from_base");
    const int n = g.order();
    auto [gc, map] = extended_double_cover(g);
    BoxRepresentation out{{}, gc};
    for (const auto& rep : b.reps) {
        std::vector<Interval> iv(static_cast<std::size_t>(2 * n));
        for (int u = 1; u <= n; ++u) {
            iv[static_cast<std::size_t>(map.a(u) - 1)] = rep.of(u);
            iv[static_cast<std::size_t>(map.b(u) - 1)] = rep.of(u);
        }
        out.reps.emplace_back(std::move(iv));
    }
    // A a clique spanning everything, B distinct points inside it; then the reverse.
    for (bool a_spans : {true, false}) {
        std::vector<Interval> iv(static_cast<std::size_t>(2 * n));
        for (int u = 1; u <= n; ++u) {
            const Interval span{0, n + 1};
            const Interval point{u, u};
            iv[static_cast<std::size_t>(map.a(u) - 1)] = a_spans ? span : point;
            iv[static_cast<std::size_t>(map.b(u) - 1)] = a_spans ? point : span;
        }
        out.reps.emplace_back(std::move(iv));
    }
    ensure_valid(out, "cover_box_from_base");
    return out;
}

BoxRepresentation base_box_from_cover(const Graph& g, const BoxRepresentation& cover_b) {
    const int n = g.order();
    auto [gc, map] = extended_double_cover(g);
    require_box_of(cover_b, gc, "base_box_from_cover");
    const auto parts = map.parts();
    const auto star = cobip_box_from_bip(gc, parts, cover_b);
    BoxRepresentation out{{}, g};
    for (const auto& member : star.reps) {
        const auto j = canonical_cobipartite_rep(member, parts);
        std::vector<Interval> iv(static_cast<std::size_t>(n));
        for (int u = 1; u <= n; ++u) {
            Interval x{j.of(map.b(u)).left, j.of(map.a(u)).right};
            if (x.left > x.right) {
                throw InvariantViolation(fmt::format("intervals of {}_A and {}_B do not meet", u, u));
            }
            iv[static_cast<std::size_t>(u - 1)] = x;
        }
        out.reps.push_back(normalized(IntervalRepresentation(std::move(iv))));
    }
    ensure_valid(out, "base_box_from_cover");
    return out;
}

}  // namespace boxdim

#include "boxdim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <fmt/format.h>

#include "boxdim/poset.hpp"

namespace boxdim {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InvalidInput("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidInput(fmt::format("self-loop at vertex {}", u));
        if (adjacent(u, v)) throw InvalidInput(fmt::format("duplicate edge {{{},{}}}", u, v));
        add_edge(u, v);
    }
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw InvalidInput(fmt::format("vertex {} out of range 1..{}", v, n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput(fmt::format("self-loop at vertex {}", u));
    if (adjacent(u, v)) return;
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adjacent(u, v)) return;
    adj_[index(u, v)] = adj_[index(v, u)] = 0;
    --edge_count_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (!adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 1; w <= n_; ++w) d += adjacent(v, w) ? 1 : 0;
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int w = 1; w <= n_; ++w)
        if (adjacent(v, w)) out.push_back(w);
    return out;
}

bool Graph::is_subgraph_of(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < adj_.size(); ++i)
        if (adj_[i] && !other.adj_[i]) return false;
    return true;
}

int Coloring::max_color() const {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end());
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (auto [u, v] : g.non_edges()) out.add_edge(u, v);
    return out;
}

std::optional<Bipartition> bipartition_of(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
    for (int s = 1; s <= n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    q.push(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (int v = 1; v <= n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? parts.a_side : parts.b_side).push_back(v);
    return parts;
}

bool is_partition_of(const Bipartition& parts, int n) {
    if (parts.a_side.empty() || parts.b_side.empty()) return false;
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto* side : {&parts.a_side, &parts.b_side}) {
        for (int v : *side) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]++) return false;
        }
    }
    return parts.a_side.size() + parts.b_side.size() == static_cast<std::size_t>(n);
}

std::vector<bool> side_mask(const Bipartition& parts, int n) {
    std::vector<bool> in_a(static_cast<std::size_t>(n), false);
    for (int v : parts.a_side) in_a.at(static_cast<std::size_t>(v - 1)) = true;
    return in_a;
}

namespace {

bool sides_all(const Graph& g, const Bipartition& parts, bool want_adjacent) {
    for (const auto* side : {&parts.a_side, &parts.b_side}) {
        for (std::size_t i = 0; i < side->size(); ++i)
            for (std::size_t j = i + 1; j < side->size(); ++j)
                if (g.adjacent((*side)[i], (*side)[j]) != want_adjacent) return false;
    }
    return true;
}

}  // namespace

bool is_bipartition_for(const Graph& g, const Bipartition& parts) {
    return is_partition_of(parts, g.order()) && sides_all(g, parts, false);
}

bool is_cobipartition_for(const Graph& g, const Bipartition& parts) {
    return is_partition_of(parts, g.order()) && sides_all(g, parts, true);
}

Graph underlying_comparability_graph(const Poset& p) {
    Graph g(p.size());
    for (auto [u, v] : p.relations()) g.add_edge(u, v);
    return g;
}

namespace {

// Backtracking orientation search. dir(u,v) == 1 means the arc u->v has been chosen.
class OrientationSearch {
public:
    explicit OrientationSearch(const Graph& g)
        : g_(g), n_(g.order()), dir_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {}

    std::optional<Poset> run() {
        if (!solve()) return std::nullopt;
        std::vector<std::pair<int, int>> arcs;
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v)
                if (at(u, v)) arcs.emplace_back(u, v);
        if (Poset::check_relations(n_, arcs)) {
            throw InvariantViolation("orientation search produced a non-transitive relation");
        }
        return Poset::from_relations(n_, arcs);
    }

private:
    std::uint8_t& at(int u, int v) {
        return dir_[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1)];
    }

    bool solve() {
        Edge next{0, 0};
        for (int u = 1; u <= n_ && next.first == 0; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (g_.adjacent(u, v) && !at(u, v) && !at(v, u)) {
                    next = {u, v};
                    break;
                }
        if (next.first == 0) return true;
        for (auto [a, b] : {next, Edge{next.second, next.first}}) {
            std::size_t mark = trail_.size();
            if (orient(a, b) && solve()) return true;
            undo(mark);
        }
        return false;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [u, v] = trail_.back();
            trail_.pop_back();
            at(u, v) = 0;
        }
    }

    // Sets u->v and propagates transitivity; false on conflict.
    bool orient(int u0, int v0) {
        std::vector<Edge> queue{{u0, v0}};
        while (!queue.empty()) {
            auto [u, v] = queue.back();
            queue.pop_back();
            if (at(v, u)) return false;
            if (at(u, v)) continue;
            at(u, v) = 1;
            trail_.emplace_back(u, v);
            for (int w = 1; w <= n_; ++w) {
                if (w == u || w == v) continue;
                if (at(v, w)) {
                    if (!g_.adjacent(u, w)) return false;
                    queue.emplace_back(u, w);
                }
                if (at(w, u)) {
                    if (!g_.adjacent(w, v)) return false;
                    queue.emplace_back(w, v);
                }
                if (g_.adjacent(u, w) && !g_.adjacent(v, w)) queue.emplace_back(u, w);
                if (g_.adjacent(v, w) && !g_.adjacent(u, w)) queue.emplace_back(w, v);
            }
        }
        return true;
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint8_t> dir_;
    std::vector<Edge> trail_;
};

}  // namespace

std::optional<Poset> transitive_orientation(const Graph& g) {
    return OrientationSearch(g).run();
}

Coloring chain_length_coloring(const Poset& p) {
    const int n = p.size();
    std::vector<int> below(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : p.relations()) ++below[static_cast<std::size_t>(v - 1)];
    // Strictly fewer elements below u than below v whenever u < v.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return below[static_cast<std::size_t>(a - 1)] < below[static_cast<std::size_t>(b - 1)];
    });
    Coloring c;
    c.color.assign(static_cast<std::size_t>(n), 1);
    for (int v : order)
        for (int u = 1; u <= n; ++u)
            if (p.less(u, v))
                c.color[static_cast<std::size_t>(v - 1)] =
                    std::max(c.color[static_cast<std::size_t>(v - 1)], c.color[static_cast<std::size_t>(u - 1)] + 1);
    return c;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (c.color.size() != static_cast<std::size_t>(g.order())) return false;
    for (int col : c.color)
        if (col < 1) return false;
    for (auto [u, v] : g.edges())
        if (c.of(u) == c.of(v)) return false;
    return true;
}

namespace {

bool color_with(const Graph& g, const std::vector<int>& order, std::vector<int>& color, std::size_t i, int k,
                int used) {
    if (i == order.size()) return true;
    const int v = order[i];
    for (int c = 1; c <= std::min(k, used + 1); ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
            if (color[static_cast<std::size_t>(order[j])] == c && g.adjacent(v, order[j])) ok = false;
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (color_with(g, order, color, i + 1, k, std::max(used, c))) return true;
    }
    color[static_cast<std::size_t>(v)] = 0;
    return false;
}

}  // namespace

Coloring brute_coloring(const Graph& g, const OracleLimits& limits) {
    const int n = g.order();
    if (n > limits.chromatic) {
        throw OracleLimit(fmt::format("chromatic oracle limited to n <= {} (got {})", limits.chromatic, n));
    }
    if (n == 0) return {};
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::vector<int> deg(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
    std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
        if (color_with(g, order, color, 0, k, 0)) break;
    }
    return Coloring{std::vector<int>(color.begin() + 1, color.end())};
}

int brute_chromatic(const Graph& g, const OracleLimits& limits) {
    return brute_coloring(g, limits).max_color();
}

}  // namespace boxdim

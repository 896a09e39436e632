#include "boxdim/order.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include <fmt/format.h>

namespace boxdim {

bool is_linear_extension(const Poset& p, const LinearExtension& l) {
    if (p.size() != l.size()) throw InvalidInput("linear extension and poset have different ground sets");
    for (auto [u, v] : p.relations())
        if (!l.precedes(u, v)) return false;
    return true;
}

Poset intersection_of_extensions(std::span<const LinearExtension> ls) {
    if (ls.empty()) throw InvalidInput("intersection of an empty family of linear extensions");
    const int n = ls.front().size();
    for (const auto& l : ls)
        if (l.size() != n) throw InvalidInput("linear extensions over different ground sets");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v && std::all_of(ls.begin(), ls.end(), [&](const auto& l) { return l.precedes(u, v); }))
                pairs.emplace_back(u, v);
    return Poset::from_relations(n, pairs);
}

std::optional<std::pair<int, int>> realizer_counterexample(const Poset& p, std::span<const LinearExtension> r) {
    for (const auto& l : r)
        if (l.size() != p.size()) throw InvalidInput("realizer and poset have different ground sets");
    for (const auto& l : r)
        for (auto [u, v] : p.relations())
            if (!l.precedes(u, v)) return std::pair{u, v};
    const int n = p.size();
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (p.comparable(u, v)) continue;
            // (u, v) needs some member with v before u.
            if (std::none_of(r.begin(), r.end(), [&](const auto& l) { return l.precedes(v, u); }))
                return std::pair{u, v};
        }
    if (r.empty() && n > 0) return std::pair{1, 1};
    return std::nullopt;
}

bool verify_realizer(const Poset& p, std::span<const LinearExtension> r) {
    if (r.empty()) return false;
    return !realizer_counterexample(p, r).has_value();
}

std::pair<Poset, Poset> interval_orders_from_rep(const IntervalRepresentation& rep, const Graph& base) {
    if (rep.order() != base.order()) throw InvalidInput("representation and graph have different vertex counts");
    const Graph induced = induced_graph(rep);
    if (!base.is_subgraph_of(induced)) {
        throw InvalidInput("interval representation is not a supergraph of the base graph");
    }
    std::vector<std::pair<int, int>> forward;
    std::vector<std::pair<int, int>> backward;
    const int n = rep.order();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b && !induced.adjacent(a, b) && rep.of(a).right < rep.of(b).left) {
                forward.emplace_back(a, b);
                backward.emplace_back(b, a);
            }
    std::sort(backward.begin(), backward.end());
    return {Poset::from_relations(n, forward), Poset::from_relations(n, backward)};
}

bool has_two_plus_two(const Poset& p) {
    const auto rel = p.relations();
    for (auto [a, b] : rel)
        for (auto [c, d] : rel) {
            if (c == a || c == b || d == a || d == b) continue;
            if (!p.comparable(a, c) && !p.comparable(a, d) && !p.comparable(b, c) && !p.comparable(b, d)) return true;
        }
    return false;
}

std::optional<LinearExtension> topological_sort(const Digraph& d) {
    const int n = d.order();
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (int u = 1; u <= n; ++u)
        for (int v : d.successors(u)) ++indeg[static_cast<std::size_t>(v)];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (int v : d.successors(u))
            if (--indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return LinearExtension(std::move(order));
}

namespace {

void extensions_from(const Poset& p, std::vector<int>& prefix, std::vector<int>& missing_below,
                     std::vector<char>& used, std::vector<LinearExtension>& out) {
    const int n = p.size();
    if (static_cast<int>(prefix.size()) == n) {
        out.emplace_back(prefix);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<std::size_t>(v)] || missing_below[static_cast<std::size_t>(v)] != 0) continue;
        used[static_cast<std::size_t>(v)] = 1;
        prefix.push_back(v);
        for (int w = 1; w <= n; ++w)
            if (p.less(v, w)) --missing_below[static_cast<std::size_t>(w)];
        extensions_from(p, prefix, missing_below, used, out);
        for (int w = 1; w <= n; ++w)
            if (p.less(v, w)) ++missing_below[static_cast<std::size_t>(w)];
        prefix.pop_back();
        used[static_cast<std::size_t>(v)] = 0;
    }
}

}  // namespace

std::vector<LinearExtension> enumerate_linear_extensions(const Poset& p, const OracleLimits& limits) {
    const int n = p.size();
    if (n > limits.linear_extensions) {
        throw OracleLimit(fmt::format("linear-extension enumeration limited to n <= {} (got {})",
                                      limits.linear_extensions, n));
    }
    std::vector<int> missing(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : p.relations()) ++missing[static_cast<std::size_t>(v)];
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> prefix;
    std::vector<LinearExtension> out;
    extensions_from(p, prefix, missing, used, out);
    return out;
}

std::vector<std::pair<int, int>> critical_pairs(const Poset& p) {
    const int n = p.size();
    std::vector<std::pair<int, int>> out;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (p.comparable(x, y)) continue;
            bool critical = true;
            for (int z = 1; z <= n && critical; ++z) {
                if (p.less(z, x) && !p.less(z, y)) critical = false;
                if (p.less(y, z) && !p.less(x, z)) critical = false;
            }
            if (critical) out.emplace_back(x, y);
        }
    return out;
}

DimensionResult brute_dimension(const Poset& p, const OracleLimits& limits, Exec exec) {
    const int n = p.size();
    if (n < 1) throw InvalidInput("dimension needs a non-empty ground set");
    if (n > limits.dimension) {
        throw OracleLimit(fmt::format("dimension oracle limited to n <= {} (got {})", limits.dimension, n));
    }
    if (n > 20) throw OracleLimit("dimension oracle cannot exceed 20 elements");

    if (p.is_chain()) {
        Digraph d(n);
        for (auto [u, v] : p.relations()) d.add_arc(u, v);
        return {1, {*topological_sort(d)}};
    }

    const auto pairs = critical_pairs(p);
    if (static_cast<int>(pairs.size()) > PairMask::capacity) {
        throw OracleLimit("too many critical pairs for the dimension oracle");
    }
    // pair_index[x][y] for critical (x, y), 0-based elements.
    std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    PairMask universe;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        pair_index[static_cast<std::size_t>(pairs[i].first - 1)][static_cast<std::size_t>(pairs[i].second - 1)] =
            static_cast<int>(i);
        universe.set(static_cast<int>(i));
    }
    std::vector<std::uint32_t> below(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : p.relations()) below[static_cast<std::size_t>(v - 1)] |= 1U << (u - 1);
    const std::uint32_t full = (1U << n) - 1U;

    // Appending y after the prefix S reverses every critical (x, y) with x still unplaced.
    auto allowed = [&](std::uint32_t s, int v) { return (below[static_cast<std::size_t>(v)] & ~s) == 0; };
    auto gain = [&](std::uint32_t s, int y) {
        PairMask m;
        const std::uint32_t rest = full & ~s & ~(1U << y);
        for (int x = 0; x < n; ++x) {
            if (!((rest >> x) & 1U)) continue;
            int idx = pair_index[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (idx >= 0) m.set(idx);
        }
        return m;
    };
    const auto candidates = maximal_prefix_covers(n, allowed, gain);
    std::vector<PairMask> sets;
    sets.reserve(candidates.size());
    for (const auto& c : candidates) sets.push_back(c.covered);
    auto cover = exact_set_cover(universe, sets, exec);
    if (!cover) throw InvariantViolation("critical pairs could not be covered by linear extensions");

    DimensionResult out;
    out.dimension = static_cast<int>(cover->size());
    for (std::size_t i : *cover) {
        std::vector<int> order;
        for (int v : candidates[i].order) order.push_back(v + 1);
        out.witness.emplace_back(std::move(order));
    }
    if (!verify_realizer(p, out.witness)) throw InvariantViolation("dimension witness is not a realizer");
    return out;
}

}  // namespace boxdim

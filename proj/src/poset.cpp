#include "boxdim/poset.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace boxdim {

Poset::Poset(int n) : n_(n), rel_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0) throw InvalidInput("poset size must be non-negative");
}

std::optional<Poset::Violation> Poset::check_relations(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 0) return Violation{0, "negative size"};
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto at = [&](int u, int v) -> std::uint8_t& {
        return rel[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v - 1)];
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u < 1 || u > n || v < 1 || v > n) return Violation{i, fmt::format("element out of range 1..{}", n)};
        if (u == v) return Violation{i, fmt::format("reflexive pair ({},{}) must be omitted", u, v)};
        if (at(v, u)) return Violation{i, fmt::format("antisymmetry violated by ({},{}) and ({},{})", u, v, v, u)};
        at(u, v) = 1;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        for (int w = 1; w <= n; ++w) {
            if (at(v, w) && !at(u, w)) {
                return Violation{i, fmt::format("not transitive: ({},{}) and ({},{}) but not ({},{})", u, v, v, w, u, w)};
            }
        }
    }
    return std::nullopt;
}

Poset Poset::from_relations(int n, std::span<const std::pair<int, int>> pairs) {
    if (auto bad = check_relations(n, pairs)) {
        throw InvalidInput(fmt::format("relation {}: {}", bad->index, bad->message));
    }
    Poset p(n);
    for (auto [u, v] : pairs) {
        auto& cell = p.rel_[p.idx(u, v)];
        if (!cell) {
            cell = 1;
            ++p.count_;
        }
    }
    return p;
}

Poset Poset::closure_of(int n, std::span<const std::pair<int, int>> arcs) {
    Poset p(n);
    for (auto [u, v] : arcs) {
        if (u < 1 || u > n || v < 1 || v > n) throw InvalidInput("arc endpoint out of range");
        if (u == v) throw InvalidInput("arc is a loop");
        p.rel_[p.idx(u, v)] = 1;
    }
    // Warshall
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            if (p.rel_[p.idx(i, k)])
                for (int j = 1; j <= n; ++j)
                    if (p.rel_[p.idx(k, j)]) p.rel_[p.idx(i, j)] = 1;
    for (int i = 1; i <= n; ++i) {
        if (p.rel_[p.idx(i, i)]) throw InvalidInput(fmt::format("arcs contain a cycle through {}", i));
    }
    p.count_ = static_cast<int>(std::count(p.rel_.begin(), p.rel_.end(), std::uint8_t{1}));
    return p;
}

Poset Poset::chain(std::span<const int> order) {
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t i = 1; i < order.size(); ++i) arcs.emplace_back(order[i - 1], order[i]);
    return closure_of(static_cast<int>(order.size()), arcs);
}

bool Poset::is_chain() const {
    return 2 * static_cast<long>(count_) == static_cast<long>(n_) * (n_ - 1);
}

std::vector<std::pair<int, int>> Poset::relations() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int u = 1; u <= n_; ++u)
        for (int v = 1; v <= n_; ++v)
            if (less(u, v)) out.emplace_back(u, v);
    return out;
}

LinearExtension::LinearExtension(std::vector<int> order) : order_(std::move(order)), pos_(order_.size(), 0) {
    const int n = static_cast<int>(order_.size());
    for (int i = 0; i < n; ++i) {
        int v = order_[static_cast<std::size_t>(i)];
        if (v < 1 || v > n) throw InvalidInput(fmt::format("linear extension entry {} out of range 1..{}", v, n));
        auto& slot = pos_[static_cast<std::size_t>(v - 1)];
        if (slot != 0) throw InvalidInput(fmt::format("linear extension repeats element {}", v));
        slot = i + 1;
    }
}

void Digraph::add_arc(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_) throw InvalidInput("arc endpoint out of range");
    if (u == v) throw InvalidInput("digraph arcs may not be loops");
    auto& out = out_[static_cast<std::size_t>(u - 1)];
    auto it = std::lower_bound(out.begin(), out.end(), v);
    if (it == out.end() || *it != v) out.insert(it, v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v : successors(u)) out.emplace_back(u, v);
    return out;
}

}  // namespace boxdim

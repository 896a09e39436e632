#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxdim/errors.hpp"

namespace boxdim {

/// Partial order on 1..n stored as its strict part: less(u, v) means u < v.
/// Always transitively closed and antisymmetric.
class Poset {
public:
    Poset() = default;
    /// Antichain on n elements.
    explicit Poset(int n);

    /// Pairs must already form a transitively closed, antisymmetric, irreflexive relation.
    static Poset from_relations(int n, std::span<const std::pair<int, int>> pairs);
    /// Transitive closure of the given arcs; throws InvalidInput if they contain a cycle.
    static Poset closure_of(int n, std::span<const std::pair<int, int>> arcs);
    static Poset chain(std::span<const int> order);

    /// Explains the first violation of the poset axioms, or nullopt when valid.
    /// `index` refers to the position in `pairs` of the offending pair when applicable.
    struct Violation {
        std::size_t index;
        std::string message;
    };
    static std::optional<Violation> check_relations(int n, std::span<const std::pair<int, int>> pairs);

    int size() const { return n_; }
    bool less(int u, int v) const { return rel_[idx(u, v)] != 0; }
    bool comparable(int u, int v) const { return u == v || less(u, v) || less(v, u); }
    bool is_chain() const;
    bool is_antichain() const { return count_ == 0; }

    /// Strict relations (u, v) in lexicographic order.
    std::vector<std::pair<int, int>> relations() const;
    int relation_count() const { return count_; }

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
    }

    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint8_t> rel_;
};

/// A total order given as the sequence of elements from bottom to top.
/// order[i] is Pi(i+1); position(v) is Pi^{-1}(v), 1-based.
class LinearExtension {
public:
    LinearExtension() = default;
    /// Throws InvalidInput unless `order` is a permutation of 1..n.
    explicit LinearExtension(std::vector<int> order);

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    int position(int v) const { return pos_.at(static_cast<std::size_t>(v - 1)); }
    bool precedes(int u, int v) const { return position(u) < position(v); }

    friend bool operator==(const LinearExtension& a, const LinearExtension& b) { return a.order_ == b.order_; }
    friend auto operator<=>(const LinearExtension& a, const LinearExtension& b) { return a.order_ <=> b.order_; }

private:
    std::vector<int> order_;
    std::vector<int> pos_;
};

using Realizer = std::vector<LinearExtension>;

/// Directed graph on 1..n without loops.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n)) {}

    int order() const { return n_; }
    void add_arc(int u, int v);
    const std::vector<int>& successors(int u) const { return out_.at(static_cast<std::size_t>(u - 1)); }
    std::vector<std::pair<int, int>> arcs() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> out_;  // sorted, no duplicates
};

}  // namespace boxdim

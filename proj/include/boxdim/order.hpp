#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "boxdim/errors.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/intervals.hpp"
#include "boxdim/kernels.hpp"
#include "boxdim/poset.hpp"

namespace boxdim {

/// Throws InvalidInput when the ground sets differ.
bool is_linear_extension(const Poset& p, const LinearExtension& l);

/// Pairs (u, v) with u before v in every member. Throws InvalidInput on an empty list
/// or mismatched sizes.
Poset intersection_of_extensions(std::span<const LinearExtension> ls);

bool verify_realizer(const Poset& p, std::span<const LinearExtension> r);

/// First pair (a, b) that breaks the realizer: either a relation a < b some member
/// violates, or an incomparable pair never reversed. nullopt when r is a realizer.
std::optional<std::pair<int, int>> realizer_counterexample(const Poset& p, std::span<const LinearExtension> r);

/// The two interval orders of a representation: for a, b non-adjacent in the induced
/// graph with r(a) < l(b), (a, b) is in the first and (b, a) in the second.
/// Throws InvalidInput unless the induced graph contains `base`.
std::pair<Poset, Poset> interval_orders_from_rep(const IntervalRepresentation& rep, const Graph& base);

/// Four distinct elements a < b, c < d with a, b each incomparable to c, d.
bool has_two_plus_two(const Poset& p);

/// Kahn's algorithm, smallest available vertex first; nullopt when d has a cycle.
std::optional<LinearExtension> topological_sort(const Digraph& d);

/// All linear extensions in lexicographic order.
std::vector<LinearExtension> enumerate_linear_extensions(const Poset& p, const OracleLimits& limits = {});

/// Incomparable pairs (x, y) with everything below x below y and everything above y
/// above x. A family of linear extensions realizes p iff each such pair has y before x
/// in some member.
std::vector<std::pair<int, int>> critical_pairs(const Poset& p);

struct DimensionResult {
    int dimension = 0;
    Realizer witness;
};

/// Exact dimension by a minimum cover of the critical pairs with linear extensions.
/// A chain (including n = 1) has dimension 1.
DimensionResult brute_dimension(const Poset& p, const OracleLimits& limits = {}, Exec exec = Exec::parallel);

}  // namespace boxdim

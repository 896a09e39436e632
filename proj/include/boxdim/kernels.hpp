#pragma once

// Search kernels shared by the exact oracles. Each data-parallel kernel has a
// serial reference (Exec::serial) that the tests compare against; both return
// identical results for identical inputs.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace boxdim {

enum class Exec { serial, parallel };

/// Fixed-width set of up to 128 pair indices.
struct PairMask {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr int capacity = 128;

    void set(int i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (((i < 64 ? lo : hi) >> (i & 63)) & 1U) != 0; }
    bool empty() const { return (lo | hi) == 0; }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool subset_of(const PairMask& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
    bool intersects(const PairMask& o) const { return ((lo & o.lo) | (hi & o.hi)) != 0; }
    /// Lowest set index, or -1.
    int lowest() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }

    PairMask& operator|=(const PairMask& o) {
        lo |= o.lo;
        hi |= o.hi;
        return *this;
    }
    friend PairMask operator|(PairMask a, const PairMask& b) { return a |= b; }
    friend PairMask operator&(PairMask a, const PairMask& b) {
        a.lo &= b.lo;
        a.hi &= b.hi;
        return a;
    }
    /// Elements of a not in b.
    friend PairMask minus(PairMask a, const PairMask& b) {
        a.lo &= ~b.lo;
        a.hi &= ~b.hi;
        return a;
    }
    friend bool operator==(const PairMask&, const PairMask&) = default;
    friend auto operator<=>(const PairMask& a, const PairMask& b) {
        if (auto c = a.hi <=> b.hi; c != 0) return c;
        return a.lo <=> b.lo;
    }
};

/// A coverable set together with the vertex/element sequence that produced it (0-based).
struct CoverCandidate {
    PairMask covered;
    std::vector<int> order;
};

/// Adds `c` to an inclusion antichain: dropped if dominated, evicts what it dominates.
/// Among equal masks the earlier entry is kept.
void insert_maximal(std::vector<CoverCandidate>& antichain, CoverCandidate c);

/// Subset DP over prefixes of vertex/element sequences of length n (n <= 20).
/// `allowed(prefix, v)` says whether v may follow the prefix set; `gain(prefix, v)`
/// is the set of pairs covered when v is appended after exactly the prefix set.
/// Because the gain depends only on the prefix set, keeping an inclusion antichain per
/// state is exact: the result is every inclusion-maximal union reachable by a full
/// sequence, sorted by mask, each with a witnessing sequence.
template <class Allowed, class Gain>
std::vector<CoverCandidate> maximal_prefix_covers(int n, Allowed allowed, Gain gain) {
    const std::uint32_t full = (n >= 32) ? ~0U : ((1U << n) - 1U);
    std::vector<std::vector<CoverCandidate>> states(static_cast<std::size_t>(full) + 1);
    states[0].push_back({});
    for (std::uint32_t s = 0; s < full; ++s) {
        auto& cur = states[s];
        if (cur.empty()) continue;
        for (int v = 0; v < n; ++v) {
            if ((s >> v) & 1U) continue;
            if (!allowed(s, v)) continue;
            const PairMask add = gain(s, v);
            auto& next = states[s | (1U << v)];
            for (const auto& e : cur) {
                CoverCandidate c{e.covered | add, e.order};
                c.order.push_back(v);
                insert_maximal(next, std::move(c));
            }
        }
        std::vector<CoverCandidate>().swap(cur);
    }
    auto out = std::move(states[full]);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.covered < b.covered; });
    return out;
}

/// Keeps only inclusion-maximal masks (first occurrence among duplicates), preserving order.
std::vector<std::size_t> maximal_indices(std::span<const PairMask> sets);

/// Minimum-cardinality cover of `universe` by `sets`, as indices into `sets`.
/// Iterative deepening; at each node branches on the uncovered element with the fewest
/// candidate sets (lowest index on ties) and tries its sets in index order. The returned
/// cover is the first one this serial order finds; Exec::parallel explores the top-level
/// branches concurrently and returns that same cover. nullopt when no cover exists.
std::optional<std::vector<std::size_t>> exact_set_cover(const PairMask& universe, std::span<const PairMask> sets,
                                                        Exec exec = Exec::parallel);

/// Number of worker threads the parallel kernels will use.
int kernel_threads();

}  // namespace boxdim

#include "boxdim/intervals.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>
#include <unordered_set>

#include <fmt/format.h>

namespace boxdim {

IntervalRepresentation::IntervalRepresentation(std::vector<Interval> iv) : intervals(std::move(iv)) {
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (intervals[i].left > intervals[i].right) {
            throw InvalidInput(fmt::format("interval of vertex {} has left > right", i + 1));
        }
    }
}

std::int64_t IntervalRepresentation::leftmost() const {
    std::int64_t m = intervals.empty() ? 0 : intervals.front().left;
    for (const auto& iv : intervals) m = std::min(m, iv.left);
    return m;
}

std::int64_t IntervalRepresentation::rightmost() const {
    std::int64_t m = intervals.empty() ? 0 : intervals.front().right;
    for (const auto& iv : intervals) m = std::max(m, iv.right);
    return m;
}

Graph induced_graph(const IntervalRepresentation& rep) {
    const int n = rep.order();
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (intervals_intersect(rep.of(u), rep.of(v))) g.add_edge(u, v);
    return g;
}

IntervalRepresentation normalized(const IntervalRepresentation& rep) {
    std::vector<std::int64_t> coords;
    coords.reserve(rep.intervals.size() * 2);
    for (const auto& iv : rep.intervals) {
        coords.push_back(iv.left);
        coords.push_back(iv.right);
    }
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    auto rank = [&](std::int64_t x) {
        return static_cast<std::int64_t>(std::lower_bound(coords.begin(), coords.end(), x) - coords.begin());
    };
    IntervalRepresentation out = rep;
    for (auto& iv : out.intervals) iv = {rank(iv.left), rank(iv.right)};
    return out;
}

IntervalRepresentation mirrored(const IntervalRepresentation& rep) {
    IntervalRepresentation out = rep;
    for (auto& iv : out.intervals) iv = {-iv.right, -iv.left};
    return out;
}

namespace {

using VMask = std::uint64_t;

void bron_kerbosch(const std::vector<VMask>& nbr, VMask r, VMask p, VMask x, std::vector<VMask>& out, int cap) {
    if (p == 0 && x == 0) {
        if (static_cast<int>(out.size()) >= cap) throw OracleLimit(fmt::format("more than {} maximal cliques", cap));
        out.push_back(r);
        return;
    }
    const VMask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (VMask m = px; m; m &= m - 1) {
        int u = std::countr_zero(m);
        int c = std::popcount(p & nbr[static_cast<std::size_t>(u)]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (VMask m = p & ~nbr[static_cast<std::size_t>(pivot)]; m; m &= m - 1) {
        int v = std::countr_zero(m);
        VMask bit = VMask{1} << v;
        bron_kerbosch(nbr, r | bit, p & nbr[static_cast<std::size_t>(v)], x & nbr[static_cast<std::size_t>(v)], out,
                      cap);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<VMask> clique_masks(const Graph& g, int cap) {
    const int n = g.order();
    if (n > 64) throw OracleLimit("clique enumeration supports at most 64 vertices");
    std::vector<VMask> nbr(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        nbr[static_cast<std::size_t>(u - 1)] |= VMask{1} << (v - 1);
        nbr[static_cast<std::size_t>(v - 1)] |= VMask{1} << (u - 1);
    }
    std::vector<VMask> out;
    if (n == 0) return out;
    const VMask all = (n == 64) ? ~VMask{0} : ((VMask{1} << n) - 1);
    bron_kerbosch(nbr, 0, all, 0, out, cap);
    return out;
}

std::vector<int> members(VMask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

// Backtracking search for an ordering of cliques in which every vertex occupies a
// contiguous block. Failed (placed-set, last) states are memoised.
class ConsecutiveOnes {
public:
    explicit ConsecutiveOnes(std::vector<VMask> cliques) : cliques_(std::move(cliques)) {
        const int m = static_cast<int>(cliques_.size());
        for (int c = 0; c < m; ++c)
            for (VMask v = cliques_[static_cast<std::size_t>(c)]; v; v &= v - 1)
                cliques_of_[std::countr_zero(v)] |= std::uint32_t{1} << c;
    }

    std::optional<std::vector<int>> run() {
        const int m = static_cast<int>(cliques_.size());
        for (int c = 0; c < m; ++c) {
            order_ = {c};
            if (extend(std::uint32_t{1} << c, c, cliques_[static_cast<std::size_t>(c)])) return order_;
        }
        return std::nullopt;
    }

private:
    bool extend(std::uint32_t placed, int last, VMask seen) {
        const int m = static_cast<int>(cliques_.size());
        if (std::popcount(placed) == m) return true;
        const std::uint64_t key = placed | (static_cast<std::uint64_t>(last) << 32);
        if (failed_.contains(key)) return false;
        const VMask cur = cliques_[static_cast<std::size_t>(last)];
        const VMask closed = seen & ~cur;
        for (int c = 0; c < m; ++c) {
            if ((placed >> c) & 1U) continue;
            const VMask next = cliques_[static_cast<std::size_t>(c)];
            if (next & closed) continue;
            bool ok = true;
            for (VMask leaving = cur & ~next; leaving && ok; leaving &= leaving - 1) {
                int v = std::countr_zero(leaving);
                if (cliques_of_[v] & ~placed) ok = false;
            }
            if (!ok) continue;
            order_.push_back(c);
            if (extend(placed | (std::uint32_t{1} << c), c, seen | next)) return true;
            order_.pop_back();
        }
        failed_.insert(key);
        return false;
    }

    std::vector<VMask> cliques_;
    std::uint32_t cliques_of_[64] = {};
    std::vector<int> order_;
    std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int max_cliques) {
    std::vector<std::vector<int>> out;
    for (VMask m : clique_masks(g, max_cliques)) out.push_back(members(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<IntervalRepresentation> recognize_interval_graph(const Graph& g, const OracleLimits& limits) {
    const int n = g.order();
    if (n > limits.recognition) {
        throw OracleLimit(fmt::format("interval recognition limited to n <= {} (got {})", limits.recognition, n));
    }
    if (n == 0) return IntervalRepresentation{};
    const int cap = std::min(limits.max_cliques, 32);
    auto cliques = clique_masks(g, cap);
    std::sort(cliques.begin(), cliques.end());
    auto order = ConsecutiveOnes(cliques).run();
    if (!order) return std::nullopt;
    std::vector<Interval> iv(static_cast<std::size_t>(n), Interval{-1, -1});
    for (std::size_t pos = 0; pos < order->size(); ++pos) {
        const auto at = static_cast<std::int64_t>(pos + 1);
        for (int v : members(cliques[static_cast<std::size_t>((*order)[pos])])) {
            auto& slot = iv[static_cast<std::size_t>(v - 1)];
            if (slot.left < 0) slot.left = at;
            slot.right = at;
        }
    }
    IntervalRepresentation rep(std::move(iv));
    if (induced_graph(rep) != g) throw InvariantViolation("clique ordering does not reproduce the graph");
    return rep;
}

IntervalRepresentation make_distinguishing(const IntervalRepresentation& rep) {
    // (coordinate, kind, vertex); kind 0 = left so touching intervals still meet.
    std::vector<std::tuple<std::int64_t, int, int>> events;
    for (int v = 1; v <= rep.order(); ++v) {
        events.emplace_back(rep.of(v).left, 0, v);
        events.emplace_back(rep.of(v).right, 1, v);
    }
    std::sort(events.begin(), events.end());
    IntervalRepresentation out = rep;
    std::int64_t rank = 1;
    for (auto [x, kind, v] : events) {
        (kind == 0 ? out.of(v).left : out.of(v).right) = rank++;
    }
    return out;
}

bool is_canonical_for(const IntervalRepresentation& rep, const Bipartition& parts) {
    if (!is_partition_of(parts, rep.order())) return false;
    const auto l = rep.leftmost();
    const auto r = rep.rightmost();
    for (int u : parts.a_side)
        if (rep.of(u).left != l) return false;
    for (int u : parts.b_side)
        if (rep.of(u).right != r) return false;
    return true;
}

IntervalRepresentation canonical_cobipartite_rep(const IntervalRepresentation& rep, const Bipartition& parts) {
    const Graph g = induced_graph(rep);
    if (!is_cobipartition_for(g, parts)) {
        throw InvalidInput("canonical representation needs both sides of the partition to be cliques");
    }
    if (g.is_complete()) {
        return IntervalRepresentation(std::vector<Interval>(static_cast<std::size_t>(rep.order()), Interval{0, 1}));
    }
    auto anchors = [&](const IntervalRepresentation& r) {
        std::int64_t l = r.of(parts.a_side.front()).left;
        for (int u : parts.a_side) l = std::max(l, r.of(u).left);
        std::int64_t rr = r.of(parts.b_side.front()).right;
        for (int u : parts.b_side) rr = std::min(rr, r.of(u).right);
        return std::pair{l, rr};
    };
    IntervalRepresentation work = rep;
    auto [l, r] = anchors(work);
    if (l > r) {
        work = mirrored(work);
        std::tie(l, r) = anchors(work);
    }
    if (l >= r) throw InvariantViolation("co-bipartite anchors coincide for a non-complete graph");
    // Every interval meets [l, r], so clipping to it keeps all intersections.
    for (auto& iv : work.intervals) iv = {std::max(iv.left, l), std::min(iv.right, r)};
    auto out = normalized(work);
    if (induced_graph(out) != g || !is_canonical_for(out, parts)) {
        throw InvariantViolation("canonicalisation changed the represented graph");
    }
    return out;
}

IntervalRepresentation distinguish_inner_endpoints(const IntervalRepresentation& rep, const Bipartition& parts) {
    if (!is_canonical_for(rep, parts)) throw InvalidInput("representation is not canonical for the partition");
    const int n = rep.order();
    const auto in_a = side_mask(parts, n);
    // b_side left endpoints sort before a_side right endpoints at equal coordinates.
    std::vector<std::tuple<std::int64_t, int, int>> inner;
    for (int v = 1; v <= n; ++v) {
        if (in_a[static_cast<std::size_t>(v - 1)])
            inner.emplace_back(rep.of(v).right, 1, v);
        else
            inner.emplace_back(rep.of(v).left, 0, v);
    }
    std::sort(inner.begin(), inner.end());
    IntervalRepresentation out = rep;
    const std::int64_t lo = 0;
    const std::int64_t hi = n + 1;
    std::int64_t rank = 1;
    for (auto [x, kind, v] : inner) {
        if (kind == 1)
            out.of(v) = {lo, rank++};
        else
            out.of(v) = {rank++, hi};
    }
    if (induced_graph(out) != induced_graph(rep)) {
        throw InvariantViolation("separating inner endpoints changed the represented graph");
    }
    return out;
}

}  // namespace boxdim

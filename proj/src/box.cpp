#include "boxdim/box.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace boxdim {

std::optional<BoxDefect> box_representation_defect(const BoxRepresentation& b) {
    const int n = b.target.order();
    for (const auto& r : b.reps)
        if (r.order() != n) throw InvalidInput("box representation member has the wrong vertex count");
    if (b.reps.empty()) {
        if (b.target.is_complete()) return std::nullopt;
        auto ne = b.target.non_edges();
        return BoxDefect{"empty representation of a non-complete graph", ne.front(), std::nullopt};
    }
    std::vector<Graph> induced;
    induced.reserve(b.reps.size());
    for (const auto& r : b.reps) induced.push_back(induced_graph(r));
    for (std::size_t i = 0; i < induced.size(); ++i)
        for (auto e : b.target.edges())
            if (!induced[i].adjacent(e.first, e.second))
                return BoxDefect{"member misses an edge of the target", e, i};
    for (auto e : b.target.non_edges()) {
        if (std::all_of(induced.begin(), induced.end(), [&](const Graph& h) { return h.adjacent(e.first, e.second); }))
            return BoxDefect{"non-edge of the target present in every member", e, std::nullopt};
    }
    return std::nullopt;
}

bool verify_box_representation(const BoxRepresentation& b) {
    return !box_representation_defect(b).has_value();
}

std::vector<IntervalSupergraph> enumerate_interval_supergraphs(const Graph& g, const OracleLimits& limits,
                                                               Exec exec) {
    const int n = g.order();
    if (n > limits.supergraphs) {
        throw OracleLimit(fmt::format("supergraph enumeration limited to n <= {} (got {})", limits.supergraphs, n));
    }
    const auto missing = g.non_edges();
    if (missing.size() > 40) throw OracleLimit("too many non-edges to enumerate supergraphs");
    const std::uint64_t total = std::uint64_t{1} << missing.size();

    auto build = [&](std::uint64_t subset) {
        Graph h = g;
        for (std::size_t i = 0; i < missing.size(); ++i)
            if ((subset >> i) & 1U) h.add_edge(missing[i].first, missing[i].second);
        return h;
    };

    std::vector<std::pair<std::uint64_t, IntervalSupergraph>> found;
    if (exec == Exec::serial) {
        for (std::uint64_t s = 0; s < total; ++s) {
            Graph h = build(s);
            if (auto rep = recognize_interval_graph(h, limits)) found.push_back({s, {std::move(h), std::move(*rep)}});
        }
    } else {
#pragma omp parallel
        {
            std::vector<std::pair<std::uint64_t, IntervalSupergraph>> local;
#pragma omp for schedule(dynamic, 256) nowait
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(total); ++s) {
                Graph h = build(static_cast<std::uint64_t>(s));
                if (auto rep = recognize_interval_graph(h, limits))
                    local.push_back({static_cast<std::uint64_t>(s), {std::move(h), std::move(*rep)}});
            }
#pragma omp critical
            for (auto& item : local) found.push_back(std::move(item));
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    std::vector<IntervalSupergraph> out;
    out.reserve(found.size());
    for (auto& [s, item] : found) out.push_back(std::move(item));
    return out;
}

std::vector<IntervalSupergraph> maximal_interval_supergraphs(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw OracleLimit("interval supergraph search supports at most 16 vertices");
    std::vector<std::uint32_t> closed_nbr(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        closed_nbr[static_cast<std::size_t>(u)] |= 1U << u;
        for (int v : g.neighbors(u + 1)) closed_nbr[static_cast<std::size_t>(u)] |= 1U << (v - 1);
    }
    // Appending v after prefix S puts v entirely right of every u in S whose closed
    // neighbourhood already lies in S.
    auto allowed = [](std::uint32_t, int) { return true; };
    auto gain = [&](std::uint32_t s, int v) {
        PairMask m;
        for (int u = 0; u < n; ++u) {
            if (((s >> u) & 1U) && (closed_nbr[static_cast<std::size_t>(u)] & ~s) == 0)
                m.set(u < v ? pair_slot(u, v, n) : pair_slot(v, u, n));
        }
        return m;
    };
    const auto candidates = maximal_prefix_covers(n, allowed, gain);

    std::vector<IntervalSupergraph> out;
    out.reserve(candidates.size());
    for (const auto& c : candidates) {
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(c.order[static_cast<std::size_t>(i)])] = i + 1;
        std::vector<Interval> iv(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            std::int64_t right = pos[static_cast<std::size_t>(u)];
            for (int w = 0; w < n; ++w)
                if ((closed_nbr[static_cast<std::size_t>(u)] >> w) & 1U)
                    right = std::max<std::int64_t>(right, pos[static_cast<std::size_t>(w)]);
            iv[static_cast<std::size_t>(u)] = {pos[static_cast<std::size_t>(u)], right};
        }
        IntervalRepresentation rep(std::move(iv));
        Graph h = induced_graph(rep);
        out.push_back({std::move(h), std::move(rep)});
    }
    return out;
}

BoxicityResult brute_boxicity(const Graph& g, const OracleLimits& limits, Exec exec) {
    const int n = g.order();
    if (n > limits.boxicity) {
        throw OracleLimit(fmt::format("boxicity oracle limited to n <= {} (got {})", limits.boxicity, n));
    }
    BoxicityResult out;
    out.witness.target = g;
    if (g.is_complete()) return out;

    PairMask universe;
    for (auto [u, v] : g.non_edges()) universe.set(pair_slot(u - 1, v - 1, n));
    const auto supers = maximal_interval_supergraphs(g);
    std::vector<PairMask> sets;
    sets.reserve(supers.size());
    for (const auto& s : supers) {
        PairMask m;
        for (auto [u, v] : s.graph.non_edges()) m.set(pair_slot(u - 1, v - 1, n));
        sets.push_back(m);
    }
    auto cover = exact_set_cover(universe, sets, exec);
    if (!cover) throw InvariantViolation("non-edges could not be covered by interval supergraphs");
    out.boxicity = static_cast<int>(cover->size());
    for (std::size_t i : *cover) out.witness.reps.push_back(normalized(supers[i].witness));
    if (!verify_box_representation(out.witness)) throw InvariantViolation("boxicity witness does not verify");
    return out;
}

}  // namespace boxdim

// Acceptance suite: one line per criterion, exact tolerances throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <fmt/format.h>

#include "boxdim/box.hpp"
#include "boxdim/constructions.hpp"
#include "boxdim/errors.hpp"
#include "boxdim/generators.hpp"
#include "boxdim/order.hpp"

using namespace boxdim;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;
int acyclicity_aborts = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("[%s] AC%-2d %s: %s (%lld ms)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
                static_cast<long long>(ms));
    std::fflush(stdout);
}

// Runs realizer_from_box and counts acyclicity failures instead of aborting the suite.
std::optional<Realizer> guarded_realizer(const Poset& p, const BoxRepresentation& b) {
    try {
        return realizer_from_box(p, b);
    } catch (const InvariantViolation&) {
        ++acyclicity_aborts;
        return std::nullopt;
    }
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
    return g;
}

// 200 posets on at most 7 elements: random height-2 orders and closures of random DAGs.
std::vector<Poset> mixed_corpus() {
    std::vector<Poset> out;
    for (std::uint64_t s = 1; s <= 200; ++s) {
        const double p = 0.2 + 0.6 * static_cast<double>((s * 37) % 100) / 100.0;
        if (s % 2) out.push_back(random_height2(2 + static_cast<int>(s % 2), p, Seed{s}));
        else out.push_back(random_order(3 + static_cast<int>(s % 5), p, Seed{s}));
    }
    return out;
}

struct Oracles {
    int dim;
    BoxicityResult box;
    DimensionResult dimension;
};

}  // namespace

int main() {
    const auto corpus = mixed_corpus();
    std::vector<Oracles> answers;
    for (const auto& p : corpus) {
        auto d = brute_dimension(p);
        answers.push_back({d.dimension, brute_boxicity(underlying_comparability_graph(p)), d});
    }

    criterion(1, "crown fixtures", [] {
        OracleLimits lim;
        lim.dimension = lim.linear_extensions = 10;
        std::string got;
        bool ok = true;
        for (int n = 3; n <= 5; ++n) {
            int d = brute_dimension(crown(n), lim).dimension;
            got += fmt::format("{}{}", n == 3 ? "" : ",", d);
            ok = ok && d == n;
        }
        int box = brute_boxicity(underlying_comparability_graph(crown(3))).boxicity;
        ok = ok && box == 2 && underlying_comparability_graph(crown(3)).edge_count() == 6;
        return Outcome{ok, fmt::format("dim(crown 3,4,5) = {} (want 3,4,5); box(C6) = {} (want 2)", got, box)};
    });

    criterion(2, "crown(4) realizer from an optimal box witness", [] {
        const auto lim = OracleLimits::uniform(8);
        Poset p = crown(4);
        auto box = brute_boxicity(underlying_comparability_graph(p), lim);
        int dim = brute_dimension(p, lim).dimension;
        auto r = guarded_realizer(p, box.witness);
        bool ok = r && verify_realizer(p, *r) && static_cast<int>(r->size()) == 2 * box.boxicity &&
                  2 * box.boxicity == 4 && dim == 4;
        return Outcome{ok, fmt::format("|realizer| = {}, 2*box = {}, dim = {} (want 4 = 4 = 4, verified)",
                                       r ? r->size() : 0, 2 * box.boxicity, dim)};
    });

    criterion(3, "K6 minus a perfect matching", [] {
        auto [g, p] = kn_minus_matching(6);
        int dim = brute_dimension(p).dimension;
        int box = brute_boxicity(g).boxicity;
        return Outcome{dim == 2 && box == 3, fmt::format("dim = {} (want 2), box = {} (want 3)", dim, box)};
    });

    criterion(4, "complete 3-partite, parts of size 2", [] {
        auto [g, p] = complete_multipartite(3, 2);
        int box = brute_boxicity(g).boxicity;
        auto d = brute_dimension(p);
        auto b = box_from_realizer(p, d.witness, chain_length_coloring(p));
        const int chi = chain_length_coloring(p).max_color();
        bool ok = box == 3 && d.dimension == 2 && b.size() == 4 && verify_box_representation(b) &&
                  box <= (chi - 1) * d.dimension;
        return Outcome{ok, fmt::format("box = {} (want 3), dim = {} (want 2), box_from_realizer members = {} "
                                       "(want 4, verified), (chi-1)*dim = {} >= box",
                                       box, d.dimension, b.size(), (chi - 1) * d.dimension)};
    });

    criterion(5, "C4 and its co-bipartite completion", [] {
        Graph c4 = cycle(4);
        auto parts = bipartition_of(c4).value();
        Graph hstar = associated_cobipartite(c4, parts);
        auto star_box = brute_boxicity(hstar);
        bool interval_star = recognize_interval_graph(hstar).has_value();
        auto b = bip_box_from_cobip(c4, parts, star_box.witness);
        int box = brute_boxicity(c4).boxicity;
        bool ok = !recognize_interval_graph(c4) && hstar == Graph::complete(4) && interval_star &&
                  star_box.boxicity == 0 && b.size() == 2 && b.target == c4 && verify_box_representation(b) &&
                  box == 2;
        return Outcome{ok, fmt::format("C4 interval: {} (want no); H* == K4: {}; H* interval: {}, box(H*) = {} "
                                       "(complete graph); bip members = {} (want 2, verified); box(C4) = {} (want 2)",
                                       recognize_interval_graph(c4).has_value() ? "yes" : "no",
                                       hstar == Graph::complete(4) ? "yes" : "no", interval_star ? "yes" : "no",
                                       star_box.boxicity, b.size(), box)};
    });

    criterion(6, "dim <= 2*box on 200 random posets", [&] {
        int bad = 0, chains = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& p = corpus[i];
            const auto& a = answers[i];
            auto r = guarded_realizer(p, a.box.witness);
            if (!r || !verify_realizer(p, *r)) {
                ++bad;
                continue;
            }
            if (p.is_chain()) {
                ++chains;
                bad += r->size() != 1 || a.dim != 1;
                continue;
            }
            bad += a.dim > 2 * a.box.boxicity;
            bad += r->size() != 2 * a.box.witness.size();
        }
        return Outcome{bad == 0, fmt::format("{} posets ({} chains, realized by themselves), {} violations",
                                             corpus.size(), chains, bad)};
    });

    criterion(7, "box <= (chi-1)*dim on the same corpus", [&] {
        int bad = 0, used = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& p = corpus[i];
            const auto& a = answers[i];
            auto c = chain_length_coloring(p);
            const int chi = c.max_color();
            if (chi < 2 || p.is_chain()) continue;
            ++used;
            auto b = box_from_realizer(p, a.dimension.witness, c);
            bad += a.box.boxicity > (chi - 1) * a.dim;
            bad += !verify_box_representation(b);
            bad += b.size() != static_cast<std::size_t>((chi - 1)) * a.dimension.witness.size();
            auto r = guarded_realizer(p, a.box.witness);
            bad += !r;
        }
        return Outcome{bad == 0 && used > 0,
                       fmt::format("{} posets with chi >= 2 and dim >= 2, {} violations", used, bad)};
    });

    criterion(8, "box <= dim <= 2*box for 100 height-2 posets", [] {
        int bad = 0;
        for (std::uint64_t s = 1; s <= 100; ++s) {
            Poset p = random_height2(2 + static_cast<int>(s % 2), 0.15 + 0.7 * static_cast<double>(s % 10) / 9.0,
                                     Seed{s + 5000});
            auto box = brute_boxicity(underlying_comparability_graph(p));
            int dim = brute_dimension(p).dimension;
            bad += !(box.boxicity <= dim && dim <= 2 * box.boxicity);
            bad += !guarded_realizer(p, box.witness);
        }
        return Outcome{bad == 0, fmt::format("100 posets, {} violations", bad)};
    });

    criterion(9, "extended double cover bounds on 100 random graphs", [] {
        OracleLimits lim;
        lim.boxicity = 10;
        int bad = 0;
        for (std::uint64_t s = 1; s <= 100; ++s) {
            Graph g = random_graph(1 + static_cast<int>(s % 5), 0.2 + 0.6 * static_cast<double>(s % 7) / 6.0,
                                   Seed{s + 9000});
            auto base = brute_boxicity(g, lim);
            auto [gc, map] = extended_double_cover(g);
            auto cover = brute_boxicity(gc, lim);
            bad += !(base.boxicity <= 2 * cover.boxicity && cover.boxicity <= base.boxicity + 2);
            auto up = cover_box_from_base(g, base.witness);
            bad += !verify_box_representation(up) || up.size() > static_cast<std::size_t>(base.boxicity + 2);
            auto down = base_box_from_cover(g, cover.witness);
            bad += !verify_box_representation(down) || down.size() > 2 * static_cast<std::size_t>(cover.boxicity);
            if (auto p = transitive_orientation(g)) bad += !guarded_realizer(*p, base.witness);
            Poset pc = natural_height2_poset(gc, map.parts());
            bad += !guarded_realizer(pc, cover.witness);
        }
        return Outcome{bad == 0, fmt::format("100 graphs, {} violations", bad)};
    });

    criterion(10, "interval orders have no 2+2; realizer construction never hits a cycle", [] {
        std::mt19937_64 rng(10);
        int bad = 0;
        for (int t = 0; t < 500; ++t) {
            const int n = 2 + t % 9;
            std::vector<Interval> iv;
            for (int i = 0; i < n; ++i) {
                auto a = static_cast<std::int64_t>(rng() % 20), b = static_cast<std::int64_t>(rng() % 20);
                iv.push_back({std::min(a, b), std::max(a, b)});
            }
            IntervalRepresentation rep(std::move(iv));
            auto [p, q] = interval_orders_from_rep(rep, Graph(n));
            bad += has_two_plus_two(p) + has_two_plus_two(q);
        }
        return Outcome{bad == 0 && acyclicity_aborts == 0,
                       fmt::format("500 representations, {} contain a 2+2; {} acyclicity aborts in AC6-AC9", bad,
                                   acyclicity_aborts)};
    });

    std::printf("[INFO] AC11 asymptotic bounds and hardness results: declared out of reach, nothing to run\n");
    std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASS", failures);
    return failures ? 1 : 0;
}

#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "boxdim/box.hpp"
#include "boxdim/constructions.hpp"
#include "boxdim/errors.hpp"
#include "boxdim/generators.hpp"
#include "boxdim/order.hpp"

using namespace boxdim;
using namespace boxdim::testing;

namespace {

Poset random_poset(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    if (rng() % 2) return random_height2(std::max(1, n / 2), 0.2 + 0.6 * (rng() % 100) / 100.0, Seed{seed});
    return random_order(n, 0.15 + 0.7 * (rng() % 100) / 100.0, Seed{seed});
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
    return g;
}

Graph k22() {
    Graph g(4);
    for (int a : {1, 2})
        for (int b : {3, 4}) g.add_edge(a, b);
    return g;
}

int height(const Poset& p) { return chain_length_coloring(p).max_color(); }

}  // namespace

TEST_CASE("realizer_from_box examples") {
    BoxRepresentation anti{{IntervalRepresentation({{0, 1}, {2, 3}})}, Graph(2)};
    auto r = realizer_from_box(Poset(2), anti);
    REQUIRE(r.size() == 2);
    CHECK(r[0].order() == std::vector<int>{1, 2});
    CHECK(r[1].order() == std::vector<int>{2, 1});

    Poset c3 = crown(3);
    auto box = brute_boxicity(underlying_comparability_graph(c3));
    REQUIRE(box.boxicity == 2);
    auto r3 = realizer_from_box(c3, box.witness);
    CHECK(r3.size() == 4);
    CHECK(verify_realizer(c3, r3));

    std::vector<int> order{2, 4, 1, 3};
    Poset chain = Poset::chain(order);
    auto rc = realizer_from_box(chain, {{}, Graph::complete(4)});
    REQUIRE(rc.size() == 1);
    CHECK(rc[0].order() == order);

    CHECK_THROWS_AS(realizer_from_box(Poset(2), {{}, Graph(2)}), InvalidInput);
    CHECK_THROWS_AS(realizer_from_box(Poset(3), anti), InvalidInput);
}

TEST_CASE("box_from_realizer examples") {
    Poset c3 = crown(3);
    auto dim = brute_dimension(c3);
    auto b = box_from_realizer(c3, dim.witness, chain_length_coloring(c3));
    CHECK(b.size() == 3);
    CHECK(b.target == underlying_comparability_graph(c3));
    CHECK(verify_box_representation(b));

    auto [g, p] = complete_multipartite(3, 2);
    auto d = brute_dimension(p);
    REQUIRE(d.dimension == 2);
    auto b2 = box_from_realizer(p, d.witness, chain_length_coloring(p));
    CHECK(b2.size() == 4);
    CHECK(b2.target == g);
    CHECK(verify_box_representation(b2));

    Poset anti(3);
    std::vector<LinearExtension> r{LinearExtension({1, 2, 3}), LinearExtension({3, 2, 1})};
    CHECK_THROWS_AS(box_from_realizer(anti, r, chain_length_coloring(anti)), InvalidInput);
    CHECK_THROWS_AS(box_from_realizer(c3, dim.witness, Coloring{{1, 1, 1, 1, 1, 1}}), InvalidInput);
    std::vector<LinearExtension> bad{dim.witness[0]};
    CHECK_THROWS_AS(box_from_realizer(c3, bad, chain_length_coloring(c3)), InvalidInput);

    std::vector<int> order{1, 2, 3};
    std::vector<LinearExtension> single{LinearExtension(order)};
    CHECK(box_from_realizer(Poset::chain(order), single, chain_length_coloring(Poset::chain(order))).size() == 0);
}

TEST_CASE("extended_double_cover") {
    auto [k1, m1] = extended_double_cover(Graph::complete(1));
    CHECK(k1 == Graph::complete(2));
    CHECK(m1.b(1) == 2);
    auto [c4, m2] = extended_double_cover(Graph::complete(2));
    CHECK(c4 == k22());
    CHECK(m2.parts() == Bipartition{{1, 2}, {3, 4}});
    auto [p3, m3] = extended_double_cover(path_graph(3));
    CHECK(p3.order() == 6);
    CHECK(p3.edge_count() == 7);
    CHECK(is_bipartition_for(p3, m3.parts()));
}

TEST_CASE("natural_height2_poset") {
    Bipartition parts{{1, 3}, {2, 4}};
    Poset p = natural_height2_poset(cycle_graph(4), parts);
    CHECK(p.relation_count() == 4);
    CHECK(p.less(1, 2));
    CHECK(p.less(3, 4));
    CHECK(natural_height2_poset(Graph(4), parts).is_antichain());
    auto [c, m] = extended_double_cover(Graph::complete(2));
    Poset pc = natural_height2_poset(c, m.parts());
    CHECK(pc.relation_count() == 4);
    for (int a : {1, 2})
        for (int b : {3, 4}) CHECK(pc.less(a, b));
    CHECK_THROWS_AS(natural_height2_poset(Graph::complete(3), Bipartition{{1}, {2, 3}}), InvalidInput);
}

TEST_CASE("associated_cobipartite") {
    CHECK(associated_cobipartite(cycle_graph(4), Bipartition{{1, 3}, {2, 4}}) == Graph::complete(4));
    Graph two_k2(4);
    two_k2.add_edge(1, 2);
    two_k2.add_edge(3, 4);
    CHECK(associated_cobipartite(Graph(4), Bipartition{{1, 2}, {3, 4}}) == two_k2);
    CHECK(associated_cobipartite(k22(), Bipartition{{1, 2}, {3, 4}}) == Graph::complete(4));
}

TEST_CASE("bip_box_from_cobip") {
    Bipartition parts{{1, 3}, {2, 4}};
    auto hstar = brute_boxicity(associated_cobipartite(cycle_graph(4), parts));
    CHECK(hstar.boxicity == 0);
    auto b = bip_box_from_cobip(cycle_graph(4), parts, hstar.witness);
    CHECK(b.size() == 2);
    CHECK(b.target == cycle_graph(4));
    CHECK(verify_box_representation(b));

    Bipartition kp{{1, 2}, {3, 4}};
    BoxRepresentation one{{IntervalRepresentation({{0, 1}, {0, 1}, {0, 1}, {0, 1}})}, Graph::complete(4)};
    auto b2 = bip_box_from_cobip(k22(), kp, one);
    CHECK(b2.size() == 2);
    CHECK(verify_box_representation(b2));

    Bipartition single{{1}, {2}};
    BoxRepresentation apart{{IntervalRepresentation({{0, 1}, {2, 3}})}, Graph(2)};
    auto b3 = bip_box_from_cobip(Graph(2), single, apart);
    CHECK(b3.size() == 2);
    CHECK(b3.target == Graph(2));
    CHECK(verify_box_representation(b3));

    CHECK_THROWS_AS(bip_box_from_cobip(cycle_graph(4), parts, apart), InvalidInput);
}

TEST_CASE("cobip_box_from_bip") {
    Bipartition parts{{1, 3}, {2, 4}};
    auto c4 = brute_boxicity(cycle_graph(4));
    auto b = cobip_box_from_bip(cycle_graph(4), parts, c4.witness);
    CHECK(b.size() == 4);
    CHECK(b.target == Graph::complete(4));
    CHECK(verify_box_representation(b));

    Bipartition sp{{1}, {2, 3, 4}};
    auto s = cobip_box_from_bip(star(3), sp, brute_boxicity(star(3)).witness);
    CHECK(s.size() == 2);
    CHECK(verify_box_representation(s));

    Graph edge(2);
    edge.add_edge(1, 2);
    BoxRepresentation one{{IntervalRepresentation({{0, 1}, {1, 2}})}, edge};
    auto e = cobip_box_from_bip(edge, Bipartition{{1}, {2}}, one);
    CHECK(e.size() == 2);
    CHECK(verify_box_representation(e));
}

TEST_CASE("cover_box_from_base") {
    auto k2 = cover_box_from_base(Graph::complete(2), {{}, Graph::complete(2)});
    CHECK(k2.size() == 2);
    CHECK(k2.target == k22());
    CHECK(verify_box_representation(k2));

    auto p3 = cover_box_from_base(path_graph(3), brute_boxicity(path_graph(3)).witness);
    CHECK(p3.size() == 3);
    CHECK(verify_box_representation(p3));

    auto c6 = cover_box_from_base(cycle_graph(6), brute_boxicity(cycle_graph(6)).witness);
    CHECK(c6.size() == 4);
    CHECK(c6.target == extended_double_cover(cycle_graph(6)).first);
    CHECK(verify_box_representation(c6));
}

TEST_CASE("base_box_from_cover") {
    auto cover = cover_box_from_base(Graph::complete(2), {{}, Graph::complete(2)});
    auto k2 = base_box_from_cover(Graph::complete(2), cover);
    CHECK(k2.size() <= 4);
    CHECK(k2.target == Graph::complete(2));
    CHECK(verify_box_representation(k2));

    Graph g = path_graph(3);
    auto round = base_box_from_cover(g, cover_box_from_base(g, brute_boxicity(g).witness));
    CHECK(round.target == g);
    CHECK(verify_box_representation(round));

    auto k1 = base_box_from_cover(Graph(1), cover_box_from_base(Graph(1), {{}, Graph(1)}));
    CHECK(k1.target == Graph(1));
    CHECK(verify_box_representation(k1));
}

TEST_CASE("realizers from box representations") {
    for (std::uint64_t s = 0; s < 80; ++s) {
        Poset p = random_poset(s, 1 + static_cast<int>(s % 7));
        Graph g = underlying_comparability_graph(p);
        auto box = brute_boxicity(g);
        auto r = realizer_from_box(p, box.witness);
        CAPTURE(s);
        CHECK(verify_realizer(p, r));
        CHECK(r.size() == (p.is_chain() ? 1U : 2U * static_cast<std::size_t>(box.boxicity)));
        CHECK(brute_dimension(p).dimension <= std::max(1, 2 * box.boxicity));
    }
}

TEST_CASE("box representations from realizers") {
    for (std::uint64_t s = 0; s < 80; ++s) {
        Poset p = random_poset(s + 300, 2 + static_cast<int>(s % 6));
        if (p.is_chain()) continue;
        Coloring c = chain_length_coloring(p);
        const int chi = c.max_color();
        if (chi < 2) continue;
        auto d = brute_dimension(p);
        auto b = box_from_realizer(p, d.witness, c);
        CAPTURE(s);
        CHECK(verify_box_representation(b));
        CHECK(b.size() == static_cast<std::size_t>((chi - 1) * d.dimension));
        CHECK(brute_boxicity(underlying_comparability_graph(p)).boxicity <= (chi - 1) * d.dimension);

        // Repeating a member gives a valid but non-optimal realizer.
        auto extra = d.witness;
        extra.push_back(d.witness.back());
        auto b2 = box_from_realizer(p, extra, c);
        CHECK(b2.size() == static_cast<std::size_t>((chi - 1) * (d.dimension + 1)));
        CHECK(verify_box_representation(b2));
    }
}

TEST_CASE("height-two sandwich") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        Poset p = random_height2(1 + static_cast<int>(s % 3), 0.5, Seed{s});
        if (height(p) > 2) continue;
        int box = brute_boxicity(underlying_comparability_graph(p)).boxicity;
        int dim = brute_dimension(p).dimension;
        if (p.is_chain()) continue;
        CHECK(box <= dim);
        CHECK(dim <= 2 * box);
    }
}

TEST_CASE("double cover bounds and constructions") {
    const auto lim = OracleLimits::uniform(12);
    for (std::uint64_t s = 0; s < 40; ++s) {
        const int n = 1 + static_cast<int>(s % 6);
        Graph g = random_graph(n, 0.3 + 0.1 * static_cast<double>(s % 4), Seed{s});
        auto base = brute_boxicity(g);
        auto [gc, map] = extended_double_cover(g);
        auto cover = brute_boxicity(gc, lim);
        CAPTURE(s);
        CHECK(base.boxicity <= 2 * cover.boxicity);
        CHECK(cover.boxicity <= base.boxicity + 2);
        auto up = cover_box_from_base(g, base.witness);
        CHECK(verify_box_representation(up));
        CHECK(up.size() == base.witness.size() + 2);
        auto down = base_box_from_cover(g, cover.witness);
        CHECK(verify_box_representation(down));
        CHECK(down.size() <= 2 * cover.witness.size());
    }
}

TEST_CASE("bipartite versus co-bipartite boxicity") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Poset p = random_height2(1 + static_cast<int>(s % 3), 0.5, Seed{s + 50});
        Graph h = underlying_comparability_graph(p);
        const int half = p.size() / 2;
        Bipartition parts;
        for (int v = 1; v <= p.size(); ++v) (v <= half ? parts.a_side : parts.b_side).push_back(v);
        Graph hs = associated_cobipartite(h, parts);
        auto bh = brute_boxicity(h);
        auto bs = brute_boxicity(hs);
        CAPTURE(s);
        if (bs.boxicity <= 1) {
            CHECK(bh.boxicity <= 2);
        } else {
            CHECK(bs.boxicity <= 2 * bh.boxicity);
            CHECK(bh.boxicity <= bs.boxicity);
        }
        auto down = bip_box_from_cobip(h, parts, bs.witness);
        CHECK(verify_box_representation(down));
        CHECK(down.size() == std::max<std::size_t>(2, bs.witness.size()));
        auto up = cobip_box_from_bip(h, parts, bh.witness);
        CHECK(verify_box_representation(up));
        CHECK(up.size() == 2 * bh.witness.size());
    }
}

TEST_CASE("boxicity versus dimension of the cover poset") {
    const auto lim = OracleLimits::uniform(10);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const int n = 1 + static_cast<int>(s % 5);
        Graph g = random_graph(n, 0.5, Seed{s + 900});
        auto [gc, map] = extended_double_cover(g);
        Poset pc = natural_height2_poset(gc, map.parts());
        const int dim = brute_dimension(pc, lim).dimension;
        const int box = brute_boxicity(g).boxicity;
        CAPTURE(s);
        CHECK(dim <= 2 * box + 4);
        CHECK(box <= 2 * dim);
    }
}

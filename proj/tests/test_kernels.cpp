#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "boxdim/kernels.hpp"

using namespace boxdim;
using namespace boxdim::testing;

namespace {

PairMask mask_of(std::initializer_list<int> bits) {
    PairMask m;
    for (int b : bits) m.set(b);
    return m;
}

}  // namespace

TEST_CASE("PairMask operations") {
    PairMask a = mask_of({0, 5, 70, 127});
    CHECK(a.count() == 4);
    CHECK(a.test(70));
    CHECK_FALSE(a.test(71));
    CHECK(a.lowest() == 0);
    CHECK(mask_of({64, 100}).lowest() == 64);
    CHECK(PairMask{}.lowest() == -1);
    CHECK(mask_of({5, 70}).subset_of(a));
    CHECK_FALSE(a.subset_of(mask_of({5, 70})));
    CHECK(minus(a, mask_of({5, 127})) == mask_of({0, 70}));
    CHECK((mask_of({1}) | mask_of({90})) == mask_of({1, 90}));
    CHECK((a & mask_of({70, 3})) == mask_of({70}));
    CHECK(a.intersects(mask_of({127})));
    CHECK_FALSE(a.intersects(mask_of({1, 2})));
}

TEST_CASE("insert_maximal keeps an antichain") {
    std::vector<CoverCandidate> anti;
    insert_maximal(anti, {mask_of({1}), {0}});
    insert_maximal(anti, {mask_of({1, 2}), {1}});
    insert_maximal(anti, {mask_of({2}), {2}});
    insert_maximal(anti, {mask_of({1, 2}), {3}});
    insert_maximal(anti, {mask_of({3}), {4}});
    REQUIRE(anti.size() == 2);
    std::sort(anti.begin(), anti.end(), [](const auto& x, const auto& y) { return x.covered < y.covered; });
    CHECK(anti[0].covered == mask_of({1, 2}));
    CHECK(anti[0].order == std::vector<int>{1});
    CHECK(anti[1].covered == mask_of({3}));
}

TEST_CASE("maximal_indices") {
    std::vector<PairMask> sets{mask_of({1}), mask_of({1, 2}), mask_of({3}), mask_of({1, 2}), mask_of({2, 3})};
    CHECK(maximal_indices(sets) == std::vector<std::size_t>{1, 4});
}

TEST_CASE("maximal_prefix_covers on pair-ordering gains") {
    // Appending v after prefix S covers every pair (u, v) with u in S: the full permutation
    // covers each unordered pair once, so the union is always everything.
    const int n = 4;
    auto gain = [&](std::uint32_t s, int v) {
        PairMask m;
        for (int u = 0; u < n; ++u)
            if ((s >> u) & 1U) m.set(u < v ? u * n + v : v * n + u);
        return m;
    };
    auto out = maximal_prefix_covers(n, [](std::uint32_t, int) { return true; }, gain);
    REQUIRE(out.size() == 1);
    CHECK(out[0].covered.count() == 6);
    CHECK(out[0].order == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("exact_set_cover small cases") {
    std::vector<PairMask> sets{mask_of({0, 1}), mask_of({2}), mask_of({1, 2}), mask_of({0})};
    auto c = exact_set_cover(mask_of({0, 1, 2}), sets);
    REQUIRE(c);
    CHECK(c->size() == 2);
    CHECK_FALSE(exact_set_cover(mask_of({0, 5}), sets));
    auto none = exact_set_cover(PairMask{}, sets);
    REQUIRE(none);
    CHECK(none->empty());
}

TEST_CASE("exact_set_cover is optimal and schedule independent") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 150; ++t) {
        const int universe = 3 + t % 12;
        const int count = 3 + static_cast<int>(rng() % 10);
        std::vector<PairMask> sets;
        std::vector<std::vector<bool>> bits;
        PairMask all;
        for (int e = 0; e < universe; ++e) all.set(e * 9 % 128);
        for (int i = 0; i < count; ++i) {
            PairMask m;
            std::vector<bool> b(static_cast<std::size_t>(universe));
            for (int e = 0; e < universe; ++e)
                if (rng() % 100 < 30) {
                    m.set(e * 9 % 128);
                    b[static_cast<std::size_t>(e)] = true;
                }
            sets.push_back(m);
            bits.push_back(b);
        }
        auto serial = exact_set_cover(all, sets, Exec::serial);
        auto parallel = exact_set_cover(all, sets, Exec::parallel);
        auto ref = ref_min_cover(universe, bits, count);
        CAPTURE(t);
        REQUIRE(serial.has_value() == ref.has_value());
        CHECK(serial == parallel);
        if (!serial) continue;
        CHECK(static_cast<int>(serial->size()) == *ref);
        PairMask got;
        for (auto i : *serial) got |= sets[i];
        CHECK(all.subset_of(got));
    }
}

TEST_CASE("kernel_threads") { CHECK(kernel_threads() >= 1); }

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "boxdim/box.hpp"
#include "boxdim/generators.hpp"
#include "boxdim/kernels.hpp"
#include "boxdim/order.hpp"

using namespace boxdim;

namespace {

double best_ms(const std::function<void()>& f, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void compare(const char* name, const std::function<void(Exec)>& f, int reps = 3) {
    double s = best_ms([&] { f(Exec::serial); }, reps);
    double p = best_ms([&] { f(Exec::parallel); }, reps);
    std::printf("%-44s serial %10.2f ms   parallel %10.2f ms   speedup %5.2fx\n", name, s, p, s / p);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", kernel_threads());

    Graph sparse = random_graph(7, 0.25, Seed{1});
    compare("interval supergraphs, 7 vertices", [&](Exec e) { enumerate_interval_supergraphs(sparse, {}, e); });

    std::mt19937_64 rng(2);
    std::vector<PairMask> sets;
    PairMask universe;
    for (int e = 0; e < 60; ++e) universe.set(e);
    for (int i = 0; i < 80; ++i) {
        PairMask m;
        for (int e = 0; e < 60; ++e)
            if (rng() % 100 < 12) m.set(e);
        sets.push_back(m);
    }
    compare("set cover, 60 elements / 80 sets", [&](Exec e) { exact_set_cover(universe, sets, e); });

    OracleLimits lim = OracleLimits::uniform(12);
    Graph cover = random_graph(12, 0.5, Seed{3});
    compare("boxicity, random 12-vertex graph", [&](Exec e) { brute_boxicity(cover, lim, e); }, 1);
    Graph km = kn_minus_matching(8).first;
    compare("boxicity, K8 minus a perfect matching", [&](Exec e) { brute_boxicity(km, lim, e); }, 1);

    OracleLimits dlim = OracleLimits::uniform(11);
    compare("dimension, crown(5)", [&](Exec e) { brute_dimension(crown(5), dlim, e); });
    compare("dimension, random order on 11 elements", [&](Exec e) { brute_dimension(random_order(11, 0.3, Seed{4}), dlim, e); }, 1);
    return 0;
}

#include "boxdim/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "boxdim/errors.hpp"

namespace boxdim {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput(fmt::format("probability {} outside [0, 1]", p));
}

void check_size(int n, const char* what) {
    if (n < 0 || n > 4096) throw InvalidInput(fmt::format("{}: size {} out of range", what, n));
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
bool draw(std::mt19937_64& rng, double p) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

// Uniform integer in [0, bound) by rejection.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::pair<Graph, Poset> layered(int parts, int per_part) {
    const int n = parts * per_part;
    auto part = [&](int v) { return (v - 1) / per_part; };
    Graph g(n);
    std::vector<std::pair<int, int>> rel;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (part(u) < part(v)) rel.emplace_back(u, v);
            if (u < v && part(u) != part(v)) g.add_edge(u, v);
        }
    return {std::move(g), Poset::from_relations(n, rel)};
}

}  // namespace

Poset crown(int n) {
    if (n < 3) throw InvalidInput(fmt::format("crown needs n >= 3 (got {})", n));
    check_size(2 * n, "crown");
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) rel.emplace_back(i, n + j);
    return Poset::from_relations(2 * n, rel);
}

std::pair<Graph, Poset> complete_multipartite(int k, int q) {
    if (k < 2 || q < 1) throw InvalidInput(fmt::format("complete_multipartite needs k >= 2, q >= 1 (got {}, {})", k, q));
    check_size(k * q, "complete_multipartite");
    return layered(k, q);
}

std::pair<Graph, Poset> kn_minus_matching(int n) {
    if (n < 4 || n % 2 != 0) throw InvalidInput(fmt::format("kn_minus_matching needs an even n >= 4 (got {})", n));
    check_size(n, "kn_minus_matching");
    return layered(n / 2, 2);
}

Graph hypercube(int d) {
    if (d < 1 || d > 10) throw InvalidInput(fmt::format("hypercube dimension must be in 1..10 (got {})", d));
    const int n = 1 << d;
    Graph g(n);
    for (int x = 0; x < n; ++x)
        for (int bit = 0; bit < d; ++bit) {
            int y = x ^ (1 << bit);
            if (x < y) g.add_edge(x + 1, y + 1);
        }
    return g;
}

Poset random_height2(int n, double p, Seed s) {
    check_probability(p);
    check_size(2 * n, "random_height2");
    std::mt19937_64 rng(s.value);
    std::vector<std::pair<int, int>> rel;
    for (int a = 1; a <= n; ++a)
        for (int b = n + 1; b <= 2 * n; ++b)
            if (draw(rng, p)) rel.emplace_back(a, b);
    return Poset::from_relations(2 * n, rel);
}

Graph random_graph(int n, double p, Seed s) {
    check_probability(p);
    check_size(n, "random_graph");
    std::mt19937_64 rng(s.value);
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (draw(rng, p)) g.add_edge(u, v);
    return g;
}

Poset random_order(int n, double p, Seed s) {
    check_probability(p);
    check_size(n, "random_order");
    std::mt19937_64 rng(s.value);
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(label[static_cast<std::size_t>(i)], label[j]);
    }
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (draw(rng, p)) arcs.emplace_back(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]);
    return Poset::closure_of(n, arcs);
}

}  // namespace boxdim

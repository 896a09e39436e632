#include "boxdim/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boxdim {

void insert_maximal(std::vector<CoverCandidate>& antichain, CoverCandidate c) {
    for (const auto& e : antichain)
        if (c.covered.subset_of(e.covered)) return;
    std::erase_if(antichain, [&](const CoverCandidate& e) { return e.covered.subset_of(c.covered); });
    antichain.push_back(std::move(c));
}

std::vector<std::size_t> maximal_indices(std::span<const PairMask> sets) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
            if (i == j || !sets[i].subset_of(sets[j])) continue;
            // equal masks: the earlier index survives
            dominated = !(sets[j].subset_of(sets[i])) || j < i;
        }
        if (!dominated) keep.push_back(i);
    }
    return keep;
}

namespace {

class CoverSearch {
public:
    CoverSearch(const PairMask& universe, std::span<const PairMask> sets) : universe_(universe), sets_(sets) {
        containing_.resize(PairMask::capacity);
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (int e = 0; e < PairMask::capacity; ++e)
                if (universe.test(e) && sets[i].test(e)) containing_[static_cast<std::size_t>(e)].push_back(i);
    }

    bool coverable() const {
        for (int e = 0; e < PairMask::capacity; ++e)
            if (universe_.test(e) && containing_[static_cast<std::size_t>(e)].empty()) return false;
        return true;
    }

    // Element with the fewest candidate sets among `uncovered`.
    int pivot(const PairMask& uncovered) const {
        int best = -1;
        std::size_t best_count = 0;
        for (int e = 0; e < PairMask::capacity; ++e) {
            if (!uncovered.test(e)) continue;
            std::size_t c = containing_[static_cast<std::size_t>(e)].size();
            if (best < 0 || c < best_count) {
                best = e;
                best_count = c;
            }
        }
        return best;
    }

    const std::vector<std::size_t>& branches(int e) const { return containing_[static_cast<std::size_t>(e)]; }

    bool dfs(const PairMask& uncovered, int budget, std::vector<std::size_t>& chosen) const {
        if (uncovered.empty()) return true;
        if (budget == 0) return false;
        int best_gain = 0;
        for (const auto& s : sets_) best_gain = std::max(best_gain, (s & uncovered).count());
        if (best_gain * budget < uncovered.count()) return false;
        for (std::size_t i : branches(pivot(uncovered))) {
            chosen.push_back(i);
            if (dfs(minus(uncovered, sets_[i]), budget - 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    const PairMask& set(std::size_t i) const { return sets_[i]; }

private:
    PairMask universe_;
    std::span<const PairMask> sets_;
    std::vector<std::vector<std::size_t>> containing_;
};

}  // namespace

std::optional<std::vector<std::size_t>> exact_set_cover(const PairMask& universe, std::span<const PairMask> sets,
                                                        Exec exec) {
    if (universe.empty()) return std::vector<std::size_t>{};
    CoverSearch search(universe, sets);
    if (!search.coverable()) return std::nullopt;

    const int top = search.pivot(universe);
    const auto& first = search.branches(top);
    const std::size_t nb = first.size();

    for (int k = 1; k <= universe.count(); ++k) {
        if (exec == Exec::serial) {
            std::vector<std::size_t> chosen;
            if (search.dfs(universe, k, chosen)) return chosen;
            continue;
        }
        // Top-level branches in parallel; the lowest successful branch wins, which is
        // exactly the branch the serial search would have returned.
        std::vector<std::vector<std::size_t>> found(nb);
        std::vector<char> ok(nb, 0);
        std::atomic<std::size_t> best{nb};
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t b = 0; b < nb; ++b) {
            if (b > best.load(std::memory_order_relaxed)) continue;
            std::vector<std::size_t> chosen{first[b]};
            if (search.dfs(minus(universe, search.set(first[b])), k - 1, chosen)) {
                found[b] = std::move(chosen);
                ok[b] = 1;
                std::size_t cur = best.load();
                while (b < cur && !best.compare_exchange_weak(cur, b)) {
                }
            }
        }
        for (std::size_t b = 0; b < nb; ++b)
            if (ok[b]) return found[b];
    }
    return std::nullopt;
}

int kernel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace boxdim

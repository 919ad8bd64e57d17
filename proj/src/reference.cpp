#include "enriques/reference.hpp"

#include <algorithm>

namespace enriques {

namespace {

bool connected(const CurveSystem& sys, const std::vector<int>& subset) {
    const size_t k = subset.size();
    std::vector<char> vis(k, 0);
    std::vector<size_t> stack{0};
    vis[0] = 1;
    size_t cnt = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < k; ++j)
            if (!vis[j] && sys.intersections.at(subset[i], subset[j]) > 0) {
                vis[j] = 1;
                ++cnt;
                stack.push_back(j);
            }
    }
    return cnt == k;
}

}  // namespace

std::vector<EllipticConfiguration> enumerate_configurations_reference(const CurveSystem& system,
                                                                      int max_support) {
    const int n = system.size();
    std::vector<EllipticConfiguration> out;
    std::vector<int> subset;
    // iterate subsets as bitmasks for n <= ~20, by increasing mask
    if (n > 24) throw Error("reference enumerator is limited to 24 curves");
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        int popcount = __builtin_popcountl(mask);
        if (popcount < 2 || popcount > max_support) continue;
        subset.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1ul << i)) subset.push_back(i);
        if (!connected(system, subset)) continue;
        IntMat g(popcount, popcount);
        for (int i = 0; i < popcount; ++i)
            for (int j = 0; j < popcount; ++j)
                g.at(i, j) = system.intersections.at(subset[static_cast<size_t>(i)], subset[static_cast<size_t>(j)]);
        Inertia in = exact_inertia(g);
        if (in.pos != 0 || in.zero != 1) continue;
        std::vector<Coord> mult = corank1_kernel(g);
        if (mult.empty() || std::any_of(mult.begin(), mult.end(), [](Coord v) { return v <= 0; }))
            continue;
        EllipticConfiguration cfg;
        cfg.klass = LatticeVector::zero();
        for (size_t i = 0; i < subset.size(); ++i) cfg.klass += mult[i] * system.curve(subset[i]);
        cfg.type = label_type(system, subset, mult);
        cfg.support = subset;
        cfg.multiplicities = std::move(mult);
        out.push_back(std::move(cfg));
    }
    std::sort(out.begin(), out.end(),
              [](const EllipticConfiguration& a, const EllipticConfiguration& b) {
                  return a.support < b.support;
              });
    return out;
}

namespace {

void clique_extend(const std::vector<std::vector<char>>& adj, std::vector<int>& current,
                   const std::vector<int>& candidates, int& best, std::vector<int>* witness) {
    if (static_cast<int>(current.size()) > best) {
        best = static_cast<int>(current.size());
        if (witness) *witness = current;
    }
    for (size_t x = 0; x < candidates.size(); ++x) {
        int v = candidates[x];
        std::vector<int> next;
        for (size_t y = x + 1; y < candidates.size(); ++y)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(candidates[y])]) next.push_back(candidates[y]);
        current.push_back(v);
        clique_extend(adj, current, next, best, witness);
        current.pop_back();
    }
}

}  // namespace

int max_clique_reference(const std::vector<std::vector<char>>& adj, std::vector<int>* witness) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    std::vector<int> current;
    int best = 0;
    if (witness) witness->clear();
    clique_extend(adj, current, all, best, witness);
    return best;
}

}  // namespace enriques

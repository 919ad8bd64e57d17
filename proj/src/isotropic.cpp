#include "enriques/isotropic.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace enriques {

std::vector<std::vector<char>> compatibility_graph(const std::vector<HalfFiberClass>& hf) {
    const int n = static_cast<int>(hf.size());
    std::vector<std::vector<char>> adj(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool e = dot(hf[static_cast<size_t>(i)].klass, hf[static_cast<size_t>(j)].klass) == 1;
            adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
            adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = e;
        }
    return adj;
}

namespace {

struct BnB {
    const std::vector<std::vector<char>>& adj;
    const std::vector<int>& order;  // vertices by descending degree, index tie-break
    int cap;
    std::atomic<int>& best;

    // candidates are positions in `order`, strictly increasing
    void search(int depth, std::vector<int>& cand) {
        int b = best.load(std::memory_order_relaxed);
        if (depth > b) {
            int cur = b;
            while (cur < depth && !best.compare_exchange_weak(cur, depth)) {
            }
        }
        if (depth + static_cast<int>(cand.size()) <= best.load(std::memory_order_relaxed)) return;
        if (depth >= cap || best.load(std::memory_order_relaxed) >= cap) return;
        std::vector<int> next;
        for (size_t x = 0; x < cand.size(); ++x) {
            if (depth + static_cast<int>(cand.size() - x) <= best.load(std::memory_order_relaxed)) return;
            int vp = cand[x];
            next.clear();
            int v = order[static_cast<size_t>(vp)];
            for (size_t y = x + 1; y < cand.size(); ++y)
                if (adj[static_cast<size_t>(v)][static_cast<size_t>(order[static_cast<size_t>(cand[y])])])
                    next.push_back(cand[y]);
            search(depth + 1, next);
        }
    }
};

// Is there a clique of size `target` inside the subgraph induced by `cand`
// (vertex ids, not positions)?  Deterministic serial check used for the
// lex-first witness reconstruction.
bool clique_exists(const std::vector<std::vector<char>>& adj, std::vector<int> cand, int target) {
    if (target <= 0) return true;
    if (static_cast<int>(cand.size()) < target) return false;
    for (size_t x = 0; x + static_cast<size_t>(target) <= cand.size(); ++x) {
        int v = cand[x];
        std::vector<int> next;
        for (size_t y = x + 1; y < cand.size(); ++y)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(cand[y])]) next.push_back(cand[y]);
        if (clique_exists(adj, std::move(next), target - 1)) return true;
    }
    return false;
}

}  // namespace

int max_clique(const std::vector<std::vector<char>>& adj, int hard_cap, bool parallel,
               std::vector<int>* lex_first_witness) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) {
        if (lex_first_witness) lex_first_witness->clear();
        return 0;
    }
    std::vector<int> degree(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        degree[static_cast<size_t>(i)] =
            static_cast<int>(std::count(adj[static_cast<size_t>(i)].begin(), adj[static_cast<size_t>(i)].end(), 1));
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[static_cast<size_t>(a)] > degree[static_cast<size_t>(b)]; });

    std::atomic<int> best{1};
    BnB bnb{adj, order, hard_cap, best};

    // each top-level branch fixes order[i] as the first chosen vertex
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            if (best.load(std::memory_order_relaxed) >= hard_cap) continue;
            std::vector<int> cand;
            int v = order[static_cast<size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                if (adj[static_cast<size_t>(v)][static_cast<size_t>(order[static_cast<size_t>(j)])]) cand.push_back(j);
            bnb.search(1, cand);
        }
    } else {
        for (int i = 0; i < n && best.load() < hard_cap; ++i) {
            std::vector<int> cand;
            int v = order[static_cast<size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                if (adj[static_cast<size_t>(v)][static_cast<size_t>(order[static_cast<size_t>(j)])]) cand.push_back(j);
            bnb.search(1, cand);
        }
    }

    int m = best.load();
    if (lex_first_witness) {
        // rebuild the witness greedily in input order; each prefix is kept
        // only if it still completes to an m-clique
        lex_first_witness->clear();
        std::vector<int> chosen;
        std::vector<int> cand(static_cast<size_t>(n));
        std::iota(cand.begin(), cand.end(), 0);
        while (static_cast<int>(chosen.size()) < m) {
            bool advanced = false;
            for (size_t x = 0; x < cand.size(); ++x) {
                int v = cand[x];
                std::vector<int> rest;
                for (size_t y = x + 1; y < cand.size(); ++y)
                    if (adj[static_cast<size_t>(v)][static_cast<size_t>(cand[y])]) rest.push_back(cand[y]);
                int need = m - static_cast<int>(chosen.size()) - 1;
                if (clique_exists(adj, rest, need)) {
                    chosen.push_back(v);
                    cand = std::move(rest);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) throw Error("internal: witness reconstruction failed");
        }
        *lex_first_witness = std::move(chosen);
    }
    return m;
}

CndResult compute_cnd(const std::vector<HalfFiberClass>& hf, SolverOptions opts) {
    for (size_t i = 0; i < hf.size(); ++i)
        if (dot(hf[i].klass, hf[i].klass) != 0) throw NotIsotropicError(static_cast<int>(i));
    CndResult r;
    if (hf.empty()) return r;
    auto adj = compatibility_graph(hf);
    r.m = max_clique(adj, 10, opts.parallel, &r.witness);
    // internal self-check before returning
    std::vector<HalfFiberClass> picked;
    for (int i : r.witness) picked.push_back(hf[static_cast<size_t>(i)]);
    if (!verify_sequence(picked).pass) throw Error("internal: witness failed verification");
    return r;
}

SequenceReport verify_sequence(const std::vector<RationalClass>& members) {
    SequenceReport rep;
    const size_t m = members.size();
    rep.entries.resize(m);
    rep.product.assign(m, std::vector<Rational>(m));
    for (size_t i = 0; i < m; ++i) {
        rep.entries[i].integral = members[i].integral();
        rep.entries[i].primitive = !is_two_divisible(members[i].num) || members[i].den == 2;
    }
    rep.product_ok = true;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Rational p(dot(members[i].num, members[j].num),
                       static_cast<long long>(members[i].den) * members[j].den);
            rep.product[i][j] = p;
            if (p != Rational(i == j ? 0 : 1)) rep.product_ok = false;
        }
    rep.pass = rep.product_ok;
    for (const auto& e : rep.entries) rep.pass = rep.pass && e.integral && e.primitive;
    return rep;
}

SequenceReport verify_sequence(const std::vector<HalfFiberClass>& members) {
    std::vector<RationalClass> rc;
    rc.reserve(members.size());
    for (const auto& h : members) rc.push_back(RationalClass{h.klass, 1});
    return verify_sequence(rc);
}

}  // namespace enriques

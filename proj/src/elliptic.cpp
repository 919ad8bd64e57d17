#include "enriques/elliptic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace enriques {

std::string DynkinLabel::str() const {
    const char* f = family == DynkinFamily::A ? "A~" : family == DynkinFamily::D ? "D~" : "E~";
    return f + std::to_string(n);
}

std::vector<Coord> affine_marks(const DynkinLabel& label) {
    std::vector<Coord> m;
    switch (label.family) {
        case DynkinFamily::A:
            m.assign(static_cast<size_t>(label.n + 1), 1);
            break;
        case DynkinFamily::D:
            m.assign(static_cast<size_t>(label.n + 1), 2);
            m[0] = m[1] = m[2] = m[3] = 1;
            break;
        case DynkinFamily::E:
            if (label.n == 6) m = {1, 1, 1, 2, 2, 2, 3};
            else if (label.n == 7) m = {1, 1, 2, 2, 2, 3, 3, 4};
            else m = {1, 2, 2, 3, 3, 4, 4, 5, 6};
            break;
    }
    return m;
}

namespace {

IntMat restricted_gram(const CurveSystem& sys, const std::vector<int>& support) {
    const int k = static_cast<int>(support.size());
    IntMat g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g.at(i, j) = sys.intersections.at(support[static_cast<size_t>(i)], support[static_cast<size_t>(j)]);
    return g;
}

// Accepts iff the restricted Gram is negative semidefinite with a
// one-dimensional kernel spanned by a strictly positive vector.  Returns the
// primitive multiplicities, or empty.
std::vector<Coord> configuration_multiplicities(const IntMat& g) {
    Inertia in = exact_inertia(g);
    if (in.pos != 0 || in.zero != 1) return {};
    std::vector<Coord> k = corank1_kernel(g);
    if (k.empty()) return {};
    for (Coord v : k)
        if (v <= 0) return {};
    return k;
}

struct ArmWalk {
    int length = 0;
    int end = -1;
};

// follow the unique simple path away from `from` starting at `next`
ArmWalk walk_arm(const std::vector<std::vector<int>>& adj, int from, int next) {
    ArmWalk w;
    int prev = from, cur = next;
    while (true) {
        ++w.length;
        const auto& nb = adj[static_cast<size_t>(cur)];
        if (nb.size() == 1) {
            w.end = cur;
            return w;
        }
        if (nb.size() != 2) {
            w.end = cur;  // hit another branch vertex
            return w;
        }
        int nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
    }
}

}  // namespace

DynkinLabel label_type(const CurveSystem& system, const std::vector<int>& support,
                       const std::vector<Coord>& multiplicities) {
    const int k = static_cast<int>(support.size());
    if (k < 2) throw InconsistentTypeError("configuration support must have at least 2 curves");

    // pairwise products within the support
    bool has_double_edge = false;
    std::vector<std::vector<int>> adj(static_cast<size_t>(k));
    std::vector<int> degree(static_cast<size_t>(k), 0);  // counts edge multiplicity
    int edges = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Coord p = system.intersections.at(support[static_cast<size_t>(i)], support[static_cast<size_t>(j)]);
            if (p == 0) continue;
            if (p > 2 || (p == 2 && k > 2))
                throw InconsistentTypeError("support pair with intersection > 1 inside a configuration");
            if (p == 2) has_double_edge = true;
            adj[static_cast<size_t>(i)].push_back(j);
            adj[static_cast<size_t>(j)].push_back(i);
            degree[static_cast<size_t>(i)] += static_cast<int>(p);
            degree[static_cast<size_t>(j)] += static_cast<int>(p);
            edges += static_cast<int>(p);
        }

    DynkinLabel label;
    if (has_double_edge) {
        label = {DynkinFamily::A, 1};
    } else if (edges == k) {
        // connected with #edges == #vertices and no double edge: the cycle
        for (int d : degree)
            if (d != 2) throw InconsistentTypeError("cyclic support is not a plain cycle");
        label = {DynkinFamily::A, k - 1};
    } else if (edges == k - 1) {
        std::vector<int> branch;
        for (int i = 0; i < k; ++i)
            if (degree[static_cast<size_t>(i)] >= 3) branch.push_back(i);
        if (branch.size() == 1) {
            int b = branch[0];
            if (degree[static_cast<size_t>(b)] == 4) {
                if (k != 5) throw InconsistentTypeError("degree-4 vertex outside a 5-vertex star");
                label = {DynkinFamily::D, 4};
            } else {
                std::vector<int> arms;
                for (int nb : adj[static_cast<size_t>(b)]) arms.push_back(walk_arm(adj, b, nb).length);
                std::sort(arms.begin(), arms.end());
                if (arms == std::vector<int>{2, 2, 2}) label = {DynkinFamily::E, 6};
                else if (arms == std::vector<int>{1, 3, 3}) label = {DynkinFamily::E, 7};
                else if (arms == std::vector<int>{1, 2, 5}) label = {DynkinFamily::E, 8};
                else throw InconsistentTypeError("trivalent tree with non-affine arm lengths");
            }
        } else if (branch.size() == 2) {
            for (int b : branch)
                if (degree[static_cast<size_t>(b)] != 3)
                    throw InconsistentTypeError("two-branch tree with a degree-4 vertex");
            label = {DynkinFamily::D, k - 1};
        } else {
            throw InconsistentTypeError("tree support with " + std::to_string(branch.size()) +
                                        " branch vertices");
        }
    } else {
        throw InconsistentTypeError("support graph is neither a tree nor a single cycle");
    }

    // cross-check against the Kodaira marks table
    std::vector<Coord> got = multiplicities;
    std::vector<Coord> want = affine_marks(label);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
        throw InconsistentTypeError("multiplicities do not match the " + label.str() + " marks");
    return label;
}

namespace {

struct Enumerator {
    const CurveSystem& sys;
    const EnumerateOptions& opts;
    std::vector<std::vector<int>> adj;  // neighbors in the dual graph (any positive product)

    Enumerator(const CurveSystem& s, const EnumerateOptions& o) : sys(s), opts(o) {
        const int n = sys.size();
        adj.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && sys.intersections.at(i, j) > 0) adj[static_cast<size_t>(i)].push_back(j);
    }

    EllipticConfiguration make_config(const std::vector<int>& support,
                                      const std::vector<Coord>& mult) const {
        std::vector<size_t> perm(support.size());
        std::iota(perm.begin(), perm.end(), 0u);
        std::sort(perm.begin(), perm.end(),
                  [&](size_t a, size_t b) { return support[a] < support[b]; });
        EllipticConfiguration cfg;
        cfg.klass = LatticeVector::zero();
        for (size_t i : perm) {
            cfg.support.push_back(support[i]);
            cfg.multiplicities.push_back(mult[i]);
            cfg.klass += mult[i] * sys.curve(support[i]);
        }
        cfg.type = label_type(sys, cfg.support, cfg.multiplicities);
        return cfg;
    }

    void consider(const std::vector<int>& support, std::vector<EllipticConfiguration>& out) const {
        IntMat g = restricted_gram(sys, support);
        std::vector<Coord> mult = configuration_multiplicities(g);
        if (mult.empty()) return;
        out.push_back(make_config(support, mult));
    }

    // Exclusive-neighborhood extension from a fixed root: every connected
    // subset whose minimum vertex is `root` is generated exactly once.
    void extend(int root, std::vector<int>& subset, const std::vector<int>& ext,
                std::vector<char>& seen, std::vector<EllipticConfiguration>& out) const {
        if (static_cast<int>(subset.size()) >= 2) {
            if (opts.prune) {
                // positive inertia is inherited by supersets, so the branch
                // can stop; an accepted corank-1 subset can never extend to
                // another accepted one either.  A pair meeting >= 3 times
                // already gives an indefinite 2x2 minor, no elimination
                // needed.
                int u = subset.back();
                for (size_t i = 0; i + 1 < subset.size(); ++i)
                    if (sys.intersections.at(subset[i], u) >= 3) return;
                IntMat g = restricted_gram(sys, subset);
                Inertia in = exact_inertia(g);
                if (in.pos > 0) return;
                if (in.zero == 1) {
                    std::vector<Coord> mult = corank1_kernel(g);
                    bool positive = !mult.empty();
                    for (Coord v : mult)
                        if (v <= 0) positive = false;
                    if (positive) out.push_back(make_config(subset, mult));
                    return;
                }
                if (in.zero > 1) return;  // corank >= 2 stays >= 1 only by shrinking
            } else {
                consider(subset, out);
            }
        }
        if (static_cast<int>(subset.size()) >= opts.max_support) return;
        for (size_t x = 0; x < ext.size(); ++x) {
            int u = ext[x];
            subset.push_back(u);
            std::vector<int> next_ext(ext.begin() + static_cast<std::ptrdiff_t>(x) + 1, ext.end());
            std::vector<int> added;
            for (int w : adj[static_cast<size_t>(u)])
                if (w > root && !seen[static_cast<size_t>(w)]) {
                    next_ext.push_back(w);
                    seen[static_cast<size_t>(w)] = 1;
                    added.push_back(w);
                }
            extend(root, subset, next_ext, seen, out);
            for (int w : added) seen[static_cast<size_t>(w)] = 0;
            subset.pop_back();
        }
    }

    std::vector<EllipticConfiguration> run_root(int root) const {
        std::vector<EllipticConfiguration> out;
        std::vector<char> seen(static_cast<size_t>(sys.size()), 0);
        seen[static_cast<size_t>(root)] = 1;
        std::vector<int> ext;
        for (int w : adj[static_cast<size_t>(root)])
            if (w > root) {
                ext.push_back(w);
                seen[static_cast<size_t>(w)] = 1;
            }
        std::vector<int> subset{root};
        extend(root, subset, ext, seen, out);
        return out;
    }

    // one top-level branch: the subtree where the subset starts {root,
    // ext[x]}; finer-grained than whole roots, for load balance
    std::vector<EllipticConfiguration> run_branch(int root, size_t x) const {
        std::vector<EllipticConfiguration> out;
        std::vector<char> seen(static_cast<size_t>(sys.size()), 0);
        seen[static_cast<size_t>(root)] = 1;
        std::vector<int> ext;
        for (int w : adj[static_cast<size_t>(root)])
            if (w > root) {
                ext.push_back(w);
                seen[static_cast<size_t>(w)] = 1;
            }
        int u = ext[x];
        std::vector<int> subset{root, u};
        std::vector<int> next_ext(ext.begin() + static_cast<std::ptrdiff_t>(x) + 1, ext.end());
        for (int w : adj[static_cast<size_t>(u)])
            if (w > root && !seen[static_cast<size_t>(w)]) {
                next_ext.push_back(w);
                seen[static_cast<size_t>(w)] = 1;
            }
        extend(root, subset, next_ext, seen, out);
        return out;
    }
};

}  // namespace

std::vector<EllipticConfiguration> enumerate_configurations(const CurveSystem& system,
                                                            EnumerateOptions opts) {
    if (opts.max_support < 2 || opts.max_support > 10)
        throw Error("max_support must be between 2 and 10");
    const int n = system.size();
    Enumerator en(system, opts);
    std::vector<std::vector<EllipticConfiguration>> buckets;

    if (opts.parallel) {
        // one task per (root, first extension) branch
        std::vector<std::pair<int, size_t>> jobs;
        for (int root = 0; root < n; ++root) {
            size_t deg = 0;
            for (int w : en.adj[static_cast<size_t>(root)])
                if (w > root) ++deg;
            for (size_t x = 0; x < deg; ++x) jobs.emplace_back(root, x);
        }
        buckets.resize(jobs.size());
#pragma omp parallel for schedule(dynamic)
        for (size_t j = 0; j < jobs.size(); ++j)
            buckets[j] = en.run_branch(jobs[j].first, jobs[j].second);
    } else {
        buckets.resize(static_cast<size_t>(n));
        for (int root = 0; root < n; ++root) buckets[static_cast<size_t>(root)] = en.run_root(root);
    }

    std::vector<EllipticConfiguration> out;
    for (auto& v : buckets)
        for (auto& cfg : v) out.push_back(std::move(cfg));
    std::sort(out.begin(), out.end(),
              [](const EllipticConfiguration& a, const EllipticConfiguration& b) {
                  return a.support < b.support;
              });
    return out;
}

void audit_configurations(const CurveSystem& system,
                          const std::vector<EllipticConfiguration>& configs) {
    for (const auto& cfg : configs) {
        if (cfg.support.size() != cfg.multiplicities.size())
            throw InvariantViolationError("support/multiplicity length mismatch");
        if (!std::is_sorted(cfg.support.begin(), cfg.support.end()))
            throw InvariantViolationError("support is not sorted");
        if (dot(cfg.klass, cfg.klass) != 0)
            throw InvariantViolationError("configuration class is not isotropic");
        LatticeVector sum = LatticeVector::zero();
        for (size_t i = 0; i < cfg.support.size(); ++i) {
            if (cfg.multiplicities[i] <= 0)
                throw InvariantViolationError("non-positive multiplicity");
            sum += cfg.multiplicities[i] * system.curve(cfg.support[i]);
            if (dot(cfg.klass, system.curve(cfg.support[i])) != 0)
                throw InvariantViolationError("class not orthogonal to a support curve");
        }
        if (!(sum == cfg.klass)) throw InvariantViolationError("class does not match the combination");
        // marks table
        std::vector<Coord> got = cfg.multiplicities;
        std::vector<Coord> want = affine_marks(cfg.type);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) throw InvariantViolationError("multiplicities disagree with the marks table");
        // connectivity of the support
        const size_t k = cfg.support.size();
        std::vector<char> vis(k, 0);
        std::vector<size_t> stack{0};
        vis[0] = 1;
        size_t cnt = 1;
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < k; ++j)
                if (!vis[j] &&
                    system.intersections.at(cfg.support[i], cfg.support[j]) > 0) {
                    vis[j] = 1;
                    ++cnt;
                    stack.push_back(j);
                }
        }
        if (cnt != k) throw InvariantViolationError("support is not connected");
    }
    for (size_t i = 1; i < configs.size(); ++i)
        if (configs[i - 1].support == configs[i].support)
            throw InvariantViolationError("duplicate configuration support");
}

}  // namespace enriques

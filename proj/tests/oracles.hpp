#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here shares code with the algorithms under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "idom/graph.hpp"

namespace oracles {

using idom::Graph;
using idom::VertexSet;

// Exhaustive permutation isomorphism test.
inline bool perm_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    const int n = a.order();
    if (n > 10) throw std::invalid_argument("perm_isomorphic guarded to order <= 10");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// |Aut(G)| by exhaustive permutation check.
inline long long automorphism_count(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::invalid_argument("automorphism_count guarded to order <= 10");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline bool subset_dominating(const Graph& g, std::uint64_t s) {
    std::uint64_t covered = s;
    for (int v : VertexSet(s)) covered |= g.neighbors(v).bits();
    return covered == g.vertices().bits();
}

inline bool subset_independent(const Graph& g, std::uint64_t s) {
    for (int v : VertexSet(s))
        if (g.neighbors(v).bits() & s) return false;
    return true;
}

// gamma(G) by full subset sweep.
inline int oracle_gamma(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("oracle_gamma guarded to order <= 20");
    int best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (std::popcount(s) >= best) continue;
        if (subset_dominating(g, s)) best = std::popcount(s);
    }
    return best;
}

// i(G) by full subset sweep over independent dominating sets.
inline int oracle_i(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("oracle_i guarded to order <= 20");
    int best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (std::popcount(s) >= best) continue;
        if (subset_independent(g, s) && subset_dominating(g, s)) best = std::popcount(s);
    }
    return best;
}

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Every isomorphism class with max degree <= degree_cap, by full labeled sweep
// and pairwise permutation reduction.
inline std::vector<Graph> naive_iso_classes(int n, int degree_cap) {
    if (n > 6) throw std::invalid_argument("naive_iso_classes guarded to order <= 6");
    const int pairs = n * (n - 1) / 2;
    std::vector<Graph> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (g.max_degree() > degree_cap) continue;
        bool fresh = true;
        for (const Graph& r : reps)
            if (perm_isomorphic(g, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(g);
    }
    return reps;
}

// Counts labeled graphs where every vertex has degree exactly `target`
// (or at most `target` when exact is false), by edge-by-edge DFS in
// lexicographic pair order with degree pruning. Includes disconnected graphs.
struct LabeledCounter {
    int n;
    int target;
    bool exact;
    std::vector<int> deg;
    std::vector<std::pair<int, int>> pairs;
    long long count = 0;

    LabeledCounter(int n_, int target_, bool exact_)
        : n(n_), target(target_), exact(exact_), deg(n_, 0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }

    // Pairs touching u at position >= k.
    int remaining_slots(int u, std::size_t k) const {
        int c = 0;
        for (std::size_t j = k; j < pairs.size(); ++j)
            if (pairs[j].first == u || pairs[j].second == u) ++c;
        return c;
    }

    void rec(std::size_t k) {
        if (k == pairs.size()) {
            if (exact)
                for (int u = 0; u < n; ++u)
                    if (deg[u] != target) return;
            ++count;
            return;
        }
        auto [u, v] = pairs[k];
        // u never appears in a later pair once all pairs (u, *) have passed,
        // so its deficit must be fillable by what is left.
        if (exact) {
            for (int x = 0; x < n; ++x)
                if (target - deg[x] > remaining_slots(x, k)) return;
        }
        rec(k + 1);  // skip the edge
        if (deg[u] < target && deg[v] < target) {
            ++deg[u];
            ++deg[v];
            rec(k + 1);
            --deg[u];
            --deg[v];
        }
    }

    long long run() {
        count = 0;
        rec(0);
        return count;
    }
};

inline long long labeled_cubic_count(int n) { return LabeledCounter(n, 3, true).run(); }
inline long long labeled_subcubic_count(int n) { return LabeledCounter(n, 3, false).run(); }

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace oracles

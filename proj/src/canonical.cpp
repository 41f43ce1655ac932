#include "idom/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "idom/graph6.hpp"

namespace idom {

namespace {

// Iterated neighborhood-color refinement. Returns the stable coloring with
// cells renumbered in the label-independent order of their refinement keys.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
    const int n = g.order();
    int ncolors = 0;
    {
        std::vector<int> seen = color;
        std::sort(seen.begin(), seen.end());
        ncolors = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    }
    std::vector<std::vector<int>> key(n);
    std::vector<int> order_idx(n);
    for (;;) {
        for (int v = 0; v < n; ++v) {
            key[v].clear();
            key[v].push_back(color[v]);
            for (int u : g.neighbors(v)) key[v].push_back(color[u]);
            std::sort(key[v].begin() + 1, key[v].end());
        }
        std::iota(order_idx.begin(), order_idx.end(), 0);
        std::sort(order_idx.begin(), order_idx.end(),
                  [&](int a, int b) { return key[a] < key[b]; });
        int c = -1;
        for (int k = 0; k < n; ++k) {
            if (k == 0 || key[order_idx[k]] != key[order_idx[k - 1]]) ++c;
            color[order_idx[k]] = c;
        }
        if (c + 1 == ncolors) return color;
        ncolors = c + 1;
    }
}

Graph apply_labeling(const Graph& g, const std::vector<int>& new_label) {
    const int n = g.order();
    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) rows[new_label[v]] |= std::uint64_t{1} << new_label[u];
    return Graph::from_rows(n, std::move(rows));
}

struct CanonSearch {
    const Graph& g;
    std::string best;
    std::vector<int> best_label;
    bool have = false;

    void run(std::vector<int> color) {
        color = refine(g, color);
        const int n = g.order();
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) ++count[color[v]];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (count[c] >= 2) {
                target = c;
                break;
            }
        if (target < 0) {
            std::string s = write_graph6(apply_labeling(g, color));
            if (!have || s < best) {
                best = std::move(s);
                best_label = color;
                have = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            std::vector<int> next(n);
            for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + 1;
            next[v] -= 1;
            run(next);
        }
    }
};

Graph canonical_core(const Graph& g) {
    CanonSearch search{g};
    search.run(std::vector<int>(g.order(), 0));
    return apply_labeling(g, search.best_label);
}

}  // namespace

Graph canonical_relabel(const Graph& g) {
    const int n = g.order();
    VertexSet isolated;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) isolated.add(v);
    if (isolated.size() == n) return g;  // edgeless is its own canonical form
    if (isolated.empty()) return canonical_core(g);

    Graph core = canonical_core(g.induced(g.vertices() - isolated));
    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < core.order(); ++v) rows[v] = core.neighbors(v).bits();
    return Graph::from_rows(n, std::move(rows));
}

std::string canonical_form(const Graph& g) {
    return write_graph6(canonical_relabel(g));
}

}  // namespace idom

#include "idom/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace idom {

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : order_(order) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("graph order must be between 0 and 64, got " + std::to_string(order));
    adj_.assign(order, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
}

Graph Graph::from_rows(int order, std::vector<std::uint64_t> rows) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("graph order must be between 0 and 64");
    if (static_cast<int>(rows.size()) != order)
        throw std::invalid_argument("row count does not match order");
    const std::uint64_t all = VertexSet::full(order).bits();
    for (int v = 0; v < order; ++v) {
        if (rows[v] & ~all) throw std::invalid_argument("adjacency bit beyond order");
        if ((rows[v] >> v) & 1) throw std::invalid_argument("loops are not allowed");
        for (int u : VertexSet(rows[v]))
            if (!((rows[u] >> v) & 1)) throw std::invalid_argument("adjacency is not symmetric");
    }
    Graph g;
    g.order_ = order;
    g.adj_ = std::move(rows);
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < order_; ++v) twice += degree(v);
    return twice / 2;
}

Graph Graph::induced(VertexSet keep, std::vector<int>* old_of_new) const {
    keep &= vertices();
    std::vector<int> old_idx = keep.to_vector();
    std::vector<int> new_idx(order_, -1);
    for (int i = 0; i < static_cast<int>(old_idx.size()); ++i) new_idx[old_idx[i]] = i;

    std::vector<std::uint64_t> rows(old_idx.size(), 0);
    for (int i = 0; i < static_cast<int>(old_idx.size()); ++i)
        for (int u : VertexSet(adj_[old_idx[i]] & keep.bits()))
            rows[i] |= std::uint64_t{1} << new_idx[u];
    if (old_of_new) *old_of_new = std::move(old_idx);

    Graph g;
    g.order_ = static_cast<int>(rows.size());
    g.adj_ = std::move(rows);
    return g;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    VertexSet unseen = vertices();
    while (!unseen.empty()) {
        int start = unseen.lowest();
        VertexSet comp{start};
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= neighbors(v);
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen = unseen - comp;
    }
    return out;
}

bool Graph::connected() const {
    return order_ <= 1 || components().size() == 1;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
    VertexSet out = s;
    for (int v : s) out |= g.neighbors(v);
    return out;
}

bool has_four_cycle(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((g.neighbors(u) & g.neighbors(v)).size() >= 2) return true;
    return false;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    // BFS from every vertex; the shortest cycle is found at the root closest to it.
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        p.max_degree = std::max(p.max_degree, d);
        switch (d) {
            case 0: ++p.n0; break;
            case 1: ++p.n1; break;
            case 2: ++p.n2; break;
            case 3: ++p.n3; break;
            default: break;
        }
    }
    return p;
}

}  // namespace idom

#include "idom/enumeration.hpp"

#include <array>
#include <fstream>
#include <queue>
#include <unordered_set>

#include "idom/canonical.hpp"
#include "idom/graph6.hpp"

namespace idom {

namespace {

constexpr int kCubicGuard = 16;
constexpr int kSubcubicGuard = 12;

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        dist[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][u] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

// Isomorph-free subcubic generation: level-by-level vertex augmentation with
// canonical-key dedupe. The class (degree cap, C4-free, girth floor) is
// hereditary under vertex deletion, so every order-n class has an order-(n-1)
// parent.
void gen_subcubic(const EnumSpec& spec, const std::function<void(const Graph&)>& emit) {
    std::vector<Graph> level = {Graph(0, {})};
    for (int m = 1; m <= spec.order; ++m) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& parent : level) {
            std::vector<int> eligible;
            for (int v = 0; v < parent.order(); ++v)
                if (parent.degree(v) < 3) eligible.push_back(v);

            std::vector<std::vector<int>> dist;
            if (spec.min_girth) dist = all_pairs_distances(parent);

            auto pair_ok = [&](int a, int b) {
                if (spec.forbid_c4 && (parent.neighbors(a) & parent.neighbors(b)).size() >= 1)
                    return false;  // a common neighbor plus the new vertex closes a C4
                if (spec.min_girth) {
                    int d = dist[a][b];
                    if (d >= 0 && d + 2 < *spec.min_girth) return false;
                }
                return true;
            };

            auto try_child = [&](const std::vector<int>& nbrs) {
                for (std::size_t i = 0; i < nbrs.size(); ++i)
                    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                        if (!pair_ok(nbrs[i], nbrs[j])) return;
                std::vector<std::uint64_t> rows(m, 0);
                for (int v = 0; v < parent.order(); ++v) rows[v] = parent.neighbors(v).bits();
                for (int v : nbrs) {
                    rows[v] |= std::uint64_t{1} << (m - 1);
                    rows[m - 1] |= std::uint64_t{1} << v;
                }
                Graph child = Graph::from_rows(m, std::move(rows));
                if (seen.insert(canonical_form(child)).second) next.push_back(child);
            };

            try_child({});
            const int k = static_cast<int>(eligible.size());
            for (int a = 0; a < k; ++a) {
                try_child({eligible[a]});
                for (int b = a + 1; b < k; ++b) {
                    try_child({eligible[a], eligible[b]});
                    for (int c = b + 1; c < k; ++c) try_child({eligible[a], eligible[b], eligible[c]});
                }
            }
        }
        level = std::move(next);
    }
    for (const Graph& g : level)
        if (matches(spec, g)) emit(g);
}

// Isomorph-free cubic generation: repeatedly complete the lowest deficient
// vertex, restricting choices to already-introduced vertices plus the first
// fresh one, skipping candidates that are twins of an unused smaller
// candidate, and deduplicating finished graphs by canonical key.
struct CubicGen {
    const EnumSpec& spec;
    const std::function<void(const Graph&)>& emit;
    int n;
    std::array<std::uint64_t, Graph::kMaxOrder> adj{};
    std::array<int, Graph::kMaxOrder> deg{};
    std::unordered_set<std::string> seen;

    CubicGen(const EnumSpec& s, const std::function<void(const Graph&)>& e)
        : spec(s), emit(e), n(s.order) {}

    bool creates_c4(int v, int w) const {
        // A new 4-cycle through edge vw is a path v - b - y - w.
        for (int y : VertexSet(adj[w]))
            if (adj[v] & adj[y] & ~(std::uint64_t{1} << w)) return true;
        return false;
    }

    int distance(int a, int b) const {
        if (a == b) return 0;
        std::array<int, Graph::kMaxOrder> dist;
        dist.fill(-1);
        dist[a] = 0;
        std::queue<int> q;
        q.push(a);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : VertexSet(adj[u])) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                if (w == b) return dist[w];
                q.push(w);
            }
        }
        return -1;
    }

    bool edge_ok(int v, int w) const {
        if (spec.forbid_c4 && creates_c4(v, w)) return false;
        if (spec.min_girth) {
            int d = distance(v, w);
            if (d >= 0 && d + 1 < *spec.min_girth) return false;
        }
        return true;
    }

    int introduced() const {
        int intro = 0;
        for (int u = 0; u < n; ++u)
            if (deg[u] > 0) intro = u + 1;
        return intro;
    }

    void run() { complete(); }

    void complete() {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (deg[u] < 3) {
                v = u;
                break;
            }
        if (v < 0) {
            leaf();
            return;
        }
        int intro = introduced();
        if (v >= intro) {
            // v starts a new component; everything built so far is finished.
            if (spec.connected && intro > 0) return;
            intro = v + 1;
        }
        choose(v, 3 - deg[v], v + 1, intro);
    }

    void choose(int v, int need, int min_next, int intro) {
        if (need == 0) {
            complete();
            return;
        }
        int high = std::min(intro, n - 1);
        for (int w = min_next; w <= high; ++w) {
            bool fresh = (w == intro);
            if (!fresh && (deg[w] >= 3 || ((adj[v] >> w) & 1))) continue;
            // Twin prune: an unused smaller candidate with an identical
            // adjacency row reaches the same classes.
            bool twin = false;
            for (int p = v + 1; p < w && !twin; ++p)
                if (deg[p] < 3 && !((adj[v] >> p) & 1) && adj[p] == adj[w]) twin = true;
            if (twin) continue;
            if (!edge_ok(v, w)) continue;
            adj[v] |= std::uint64_t{1} << w;
            adj[w] |= std::uint64_t{1} << v;
            ++deg[v];
            ++deg[w];
            choose(v, need - 1, w + 1, fresh ? intro + 1 : intro);
            adj[v] &= ~(std::uint64_t{1} << w);
            adj[w] &= ~(std::uint64_t{1} << v);
            --deg[v];
            --deg[w];
        }
    }

    void leaf() {
        Graph g = Graph::from_rows(n, std::vector<std::uint64_t>(adj.begin(), adj.begin() + n));
        if (spec.connected && !g.connected()) return;
        if (seen.insert(canonical_form(g)).second) emit(g);
    }
};

}  // namespace

bool matches(const EnumSpec& spec, const Graph& g) {
    if (spec.order >= 0 && g.order() != spec.order) return false;
    if (spec.regularity == Regularity::cubic) {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != 3) return false;
    } else if (g.max_degree() > 3) {
        return false;
    }
    if (spec.forbid_c4 && has_four_cycle(g)) return false;
    if (spec.min_girth) {
        auto gg = girth(g);
        if (gg && *gg < *spec.min_girth) return false;
    }
    if (spec.connected && !g.connected()) return false;
    return true;
}

void enumerate(const EnumSpec& spec, const std::function<void(const Graph&)>& emit) {
    if (spec.order < 0) throw InvalidSpecError("enumerate requires a concrete order");
    if (spec.regularity == Regularity::cubic) {
        if (spec.order % 2 != 0 || spec.order < 4)
            throw InvalidSpecError("cubic enumeration requires an even order >= 4");
        if (spec.order > kCubicGuard && !spec.override_guard)
            throw GuardExceededError("cubic enumeration guarded to order <= 16");
        if (spec.order > Graph::kMaxOrder) throw InvalidSpecError("order exceeds 64");
        CubicGen gen(spec, emit);
        gen.run();
    } else {
        if (spec.order > kSubcubicGuard && !spec.override_guard)
            throw GuardExceededError("subcubic enumeration guarded to order <= 12");
        if (spec.order > Graph::kMaxOrder) throw InvalidSpecError("order exceeds 64");
        gen_subcubic(spec, emit);
    }
}

std::vector<Graph> enumerate(const EnumSpec& spec) {
    std::vector<Graph> out;
    enumerate(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> ingest_graph6(const std::string& path, const EnumSpec& spec, bool strict,
                                 IngestStats* stats) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    IngestStats local;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ++local.lines;
        try {
            Graph g = parse_graph6(line);
            ++local.parsed;
            if (matches(spec, g)) {
                ++local.kept;
                out.push_back(g);
            }
        } catch (const Graph6Error& e) {
            if (strict)
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
            local.malformed.emplace_back(lineno, e.what());
        }
    }
    if (stats) *stats = local;
    return out;
}

}  // namespace idom

#include "idom/structure.hpp"

#include <set>

#include "idom/solvers.hpp"

namespace idom {

namespace {

void require_subcubic(const Graph& g, const char* op) {
    if (g.max_degree() > 3)
        throw std::invalid_argument(std::string(op) + " requires maximum degree at most 3");
}

void require_cubic(const Graph& g, const char* op) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument(std::string(op) + " requires a cubic graph");
}

int induced_edge_count(const Graph& g, VertexSet s) {
    int twice = 0;
    for (int v : s) twice += (g.neighbors(v) & s).size();
    return twice / 2;
}

int count_neighbors_of_degree(const Graph& g, int v, int d) {
    int c = 0;
    for (int u : g.neighbors(v))
        if (g.degree(u) == d) ++c;
    return c;
}

}  // namespace

int vertex_weight(const Graph& g, int v) {
    switch (g.degree(v)) {
        case 0: return 14;
        case 1: return 9;
        case 2: return 6;
        case 3: return 5;
        default:
            throw std::invalid_argument("vertex weight requires degree at most 3");
    }
}

WeightSummary weight_summary(const Graph& g) {
    require_subcubic(g, "weight_summary");
    WeightSummary w;
    w.profile = degree_profile(g);
    w.total = 14 * w.profile.n0 + 9 * w.profile.n1 + 6 * w.profile.n2 + 5 * w.profile.n3;
    return w;
}

int subset_weight(const Graph& g, VertexSet x) {
    require_subcubic(g, "subset_weight");
    int total = 0;
    for (int v : x & g.vertices()) total += vertex_weight(g, v);
    return total;
}

int weight_change(const Graph& g, VertexSet x) {
    require_subcubic(g, "weight_change");
    if ((x & g.vertices()).empty())
        throw std::invalid_argument("weight_change requires non-empty x");
    int after = weight_summary(g.removed(x)).total;
    int before = weight_summary(g).total - subset_weight(g, x);
    return after - before;
}

std::pair<int, int> key_lemma_sides(const Graph& g, VertexSet s) {
    require_subcubic(g, "key_lemma_sides");
    if ((s & g.vertices()).empty())
        throw std::invalid_argument("key_lemma_sides requires non-empty s");
    if (!verify_set(g, s, SetMode::independent))
        throw std::invalid_argument("key_lemma_sides requires an independent s");
    VertexSet u = closed_neighborhood(g, s);
    int lhs = 14 * s.size();
    int rhs = subset_weight(g, u) - weight_change(g, u);
    return {lhs, rhs};
}

ABPartition classify_ab(const Graph& g) {
    require_subcubic(g, "classify_ab");
    ABPartition p;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d <= 1) {
            p.other.add(v);
            continue;
        }
        int two = count_neighbors_of_degree(g, v, 2);
        if (d == 3) {
            (two == 0 ? p.a0 : two == 1 ? p.a1 : two == 2 ? p.a2 : p.a3).add(v);
        } else {
            (two == 0 ? p.b0 : two == 1 ? p.b1 : p.b2).add(v);
        }
    }
    return p;
}

std::vector<ConfigHit> find_forbidden_configs(const Graph& g) {
    require_subcubic(g, "find_forbidden_configs");
    std::vector<ConfigHit> hits;
    std::set<std::pair<int, std::uint64_t>> seen;
    auto emit = [&](ForbiddenConfig part, VertexSet vs) {
        if (seen.emplace(static_cast<int>(part), vs.bits()).second) hits.push_back({part, vs});
    };

    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        VertexSet ones, twos;
        for (int u : g.neighbors(v)) {
            if (g.degree(u) == 1) ones.add(u);
            if (g.degree(u) == 2) twos.add(u);
        }
        // (i) a vertex with two 1-neighbors
        if (ones.size() >= 2) {
            VertexSet vs = ones;
            vs.add(v);
            emit(ForbiddenConfig::i, vs);
        }
        // (ii) a vertex (of degree >= 1) with only 2^- neighbors
        if (g.degree(v) >= 1) {
            bool all_low = true;
            for (int u : g.neighbors(v))
                if (g.degree(u) >= 3) all_low = false;
            if (all_low) {
                VertexSet vs = g.closed_neighbors(v);
                emit(ForbiddenConfig::ii, vs);
            }
        }
        // (iii) a 3-vertex with a 1-neighbor and a 2-neighbor
        if (g.degree(v) == 3 && !ones.empty() && !twos.empty()) {
            VertexSet vs = ones | twos;
            vs.add(v);
            emit(ForbiddenConfig::iii, vs);
        }
    }

    // Triangles
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) {
            if (u <= v) continue;
            for (int w : g.neighbors(u) & g.neighbors(v)) {
                if (w <= u) continue;
                VertexSet tri{v, u, w};
                // (iv) a triangle corner with a 1-neighbor
                for (int corner : tri)
                    for (int x : g.neighbors(corner))
                        if (g.degree(x) == 1) {
                            VertexSet vs = tri;
                            vs.add(x);
                            emit(ForbiddenConfig::iv, vs);
                        }
                // (v) a triangle with a 2-vertex
                for (int corner : tri)
                    if (g.degree(corner) == 2) {
                        emit(ForbiddenConfig::v, tri);
                        break;
                    }
            }
        }

    // (vi) path v-u-w of 3-vertices where v has a 1-neighbor and u does not
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != 3 || count_neighbors_of_degree(g, u, 1) > 0) continue;
        for (int v : g.neighbors(u)) {
            if (g.degree(v) != 3 || count_neighbors_of_degree(g, v, 1) == 0) continue;
            for (int w : g.neighbors(u)) {
                if (w == v || g.degree(w) != 3) continue;
                emit(ForbiddenConfig::vi, VertexSet{v, u, w});
            }
        }
    }
    return hits;
}

CycleWalk find_a2b1_cycle(const Graph& g) {
    require_subcubic(g, "find_a2b1_cycle");
    ABPartition ab = classify_ab(g);
    if (ab.a2.empty())
        throw std::invalid_argument("find_a2b1_cycle requires at least one A2-vertex");

    const int n = g.order();
    CycleWalk res;
    std::vector<int> pos(n, -1);
    std::vector<int>& walk = res.walk;

    auto fail = [&](const std::string& reason) {
        res.success = false;
        res.failed_step = static_cast<int>(walk.size()) - 1;
        res.reason = reason;
        return res;
    };

    int start = ab.a2.lowest();
    walk.push_back(start);
    pos[start] = 0;

    for (int guard = 0; guard <= n + 1; ++guard) {
        int cur = walk.back();
        int prev = walk.size() >= 2 ? walk[walk.size() - 2] : -1;

        std::vector<int> ext;
        // A fresh B1-neighbor opens the B1-B1-A2 detour; otherwise follow A2.
        int u1 = -1;
        for (int u : g.neighbors(cur))
            if (ab.b1.contains(u) && u != prev) {
                u1 = u;
                break;
            }
        if (u1 >= 0) {
            int u2 = -1;
            for (int u : g.neighbors(u1))
                if (g.degree(u) == 2) u2 = u;
            if (u2 < 0 || !ab.b1.contains(u2)) {
                walk.push_back(u1);
                return fail("B1-vertex has no B1-neighbor to continue the detour");
            }
            int u3 = -1;
            for (int u : g.neighbors(u2))
                if (g.degree(u) == 3) u3 = u;
            if (u3 < 0 || !ab.a2.contains(u3)) {
                walk.push_back(u1);
                walk.push_back(u2);
                return fail("detour does not end at an A2-vertex");
            }
            if (u3 == cur) {
                walk.push_back(u1);
                walk.push_back(u2);
                return fail("detour returns to its starting A2-vertex");
            }
            ext = {u1, u2, u3};
        } else {
            int nxt = -1;
            for (int u : g.neighbors(cur))
                if (ab.a2.contains(u) && u != prev) {
                    nxt = u;
                    break;
                }
            if (nxt < 0) return fail("A2-vertex has neither a fresh B1-neighbor nor an A2-neighbor");
            ext = {nxt};
        }

        for (int w : ext) {
            if (pos[w] >= 0) {
                res.cycle.assign(walk.begin() + pos[w], walk.end());
                // Consecutive A2-A2 steps must each leave a B0-neighbor behind.
                const int len = static_cast<int>(res.cycle.size());
                for (int i = 0; i < len; ++i) {
                    int a = res.cycle[i], b = res.cycle[(i + 1) % len];
                    if (ab.a2.contains(a) && ab.a2.contains(b) &&
                        !(g.neighbors(a) & ab.b0).size()) {
                        res.cycle.clear();
                        return fail("A2-A2 step without a B0-neighbor on the cycle");
                    }
                }
                res.success = true;
                return res;
            }
            walk.push_back(w);
            pos[w] = static_cast<int>(walk.size()) - 1;
        }
    }
    return fail("walk failed to close");  // unreachable: every step revisits or grows
}

VertexSet epn(const Graph& g, int v, VertexSet x) {
    if (!x.contains(v)) throw std::invalid_argument("epn requires v to be a member of x");
    VertexSet out;
    for (int u : g.vertices() - x)
        if ((g.closed_neighbors(u) & x) == VertexSet{v}) out.add(u);
    return out;
}

VertexSet reduce_to_near_independent(const Graph& g, VertexSet d) {
    require_cubic(g, "reduce_to_near_independent");
    if (!verify_set(g, d, SetMode::dominating))
        throw NotMinimumDominatingError("input set is not dominating");

    int edges = induced_edge_count(g, d);
    for (;;) {
        int busy = -1;
        for (int v : d)
            if ((g.neighbors(v) & d).size() >= 2) {
                busy = v;
                break;
            }
        if (busy < 0) return d;
        VertexSet priv = epn(g, busy, d);
        if (priv.size() != 1)
            throw NotMinimumDominatingError(
                "swap found |epn(v,D)| != 1; the input is not a minimum dominating set");
        d |= priv;
        d.remove(busy);
        int next_edges = induced_edge_count(g, d);
        if (next_edges >= edges)
            throw std::logic_error("swap failed to reduce edges inside the dominating set");
        edges = next_edges;
    }
}

VertexSet near_independent_to_independent(const Graph& g, VertexSet x) {
    require_cubic(g, "near_independent_to_independent");
    if (!verify_set(g, x, SetMode::near_independent_dominating))
        throw std::invalid_argument(
            "near_independent_to_independent requires a near independent dominating set");

    for (int guard = 0; guard <= g.order(); ++guard) {
        int v = -1;
        for (int u : x)
            if ((g.neighbors(u) & x).size() > 0) {
                v = u;
                break;
            }
        if (v < 0) return x;
        VertexSet priv = epn(g, v, x);
        VertexSet chosen;  // greedy maximal independent subset, ascending index
        for (int u : priv)
            if (!g.neighbors(u).intersects(chosen)) chosen.add(u);
        x |= chosen;
        x.remove(v);
    }
    throw std::logic_error("edge elimination failed to terminate");
}

}  // namespace idom

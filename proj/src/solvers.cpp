#include "idom/solvers.hpp"

#include <stdexcept>

namespace idom {

namespace {

bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

VertexSet greedy_maximal_independent(const Graph& g) {
    VertexSet s;
    for (int v = 0; v < g.order(); ++v)
        if (!g.neighbors(v).intersects(s)) s.add(v);
    return s;
}

struct Searcher {
    const Graph& g;
    std::uint64_t all;
    int coverage;  // Delta + 1
    int best;
    VertexSet best_set;
    std::uint64_t nodes = 0;

    Searcher(const Graph& graph) : g(graph) {
        all = graph.vertices().bits();
        coverage = graph.max_degree() + 1;
        VertexSet greedy = greedy_maximal_independent(graph);
        best = greedy.size();
        best_set = greedy;
    }

    int cover_bound(std::uint64_t dominated) const {
        int uncovered = std::popcount(all & ~dominated);
        return (uncovered + coverage - 1) / coverage;
    }

    // Independent domination: `banned` holds vertices that may not enter the set.
    void search_ids(std::uint64_t chosen, std::uint64_t dominated, std::uint64_t banned, int size) {
        ++nodes;
        if (dominated == all) {
            if (size < best) {
                best = size;
                best_set = VertexSet(chosen);
            }
            return;
        }
        if (size + cover_bound(dominated) >= best) return;
        int u = std::countr_zero(all & ~dominated);
        std::uint64_t candidates = g.closed_neighbors(u).bits() & ~banned;
        for (int w : VertexSet(candidates)) {
            search_ids(chosen | (std::uint64_t{1} << w), dominated | g.closed_neighbors(w).bits(),
                       banned | g.closed_neighbors(w).bits(), size + 1);
            banned |= std::uint64_t{1} << w;  // later branches exclude w
        }
    }

    void search_dom(std::uint64_t chosen, std::uint64_t dominated, std::uint64_t banned, int size) {
        ++nodes;
        if (dominated == all) {
            if (size < best) {
                best = size;
                best_set = VertexSet(chosen);
            }
            return;
        }
        if (size + cover_bound(dominated) >= best) return;
        // Undominated vertex with the fewest remaining coverage options.
        int pick = -1, pick_options = 0;
        for (int u : VertexSet(all & ~dominated)) {
            int options = std::popcount(g.closed_neighbors(u).bits() & ~banned);
            if (options == 0) return;  // u can no longer be dominated
            if (pick < 0 || options < pick_options) {
                pick = u;
                pick_options = options;
            }
        }
        std::uint64_t candidates = g.closed_neighbors(pick).bits() & ~banned;
        for (int w : VertexSet(candidates)) {
            search_dom(chosen | (std::uint64_t{1} << w), dominated | g.closed_neighbors(w).bits(),
                       banned, size + 1);
            banned |= std::uint64_t{1} << w;
        }
    }
};

SolveResult solve_component(const Graph& g, bool independent) {
    Searcher s(g);
    if (independent)
        s.search_ids(0, 0, 0, 0);
    else
        s.search_dom(0, 0, 0, 0);
    SolveResult r;
    r.value = s.best;
    r.witness = s.best_set;
    r.nodes_explored = s.nodes;
    return r;
}

SolveResult solve(const Graph& g, bool independent) {
    auto start = std::chrono::steady_clock::now();
    SolveResult total;
    for (const VertexSet& comp : g.components()) {
        std::vector<int> old_of_new;
        Graph sub = g.induced(comp, &old_of_new);
        SolveResult r = solve_component(sub, independent);
        total.value += r.value;
        total.nodes_explored += r.nodes_explored;
        for (int v : r.witness) total.witness.add(old_of_new[v]);
    }
    total.elapsed = std::chrono::steady_clock::now() - start;
    return total;
}

struct BronKerbosch {
    const Graph& g;
    std::vector<std::uint64_t> comp;  // closed complement rows
    const std::function<void(VertexSet)>& emit;

    BronKerbosch(const Graph& graph, const std::function<void(VertexSet)>& out)
        : g(graph), emit(out) {
        std::uint64_t all = graph.vertices().bits();
        comp.resize(graph.order());
        for (int v = 0; v < graph.order(); ++v)
            comp[v] = all & ~graph.neighbors(v).bits() & ~(std::uint64_t{1} << v);
    }

    void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
            emit(VertexSet(r));
            return;
        }
        int pivot = -1, best = -1;
        for (int u : VertexSet(p | x)) {
            int score = std::popcount(p & comp[u]);
            if (score > best) {
                best = score;
                pivot = u;
            }
        }
        for (int v : VertexSet(p & ~comp[pivot])) {
            std::uint64_t bit = std::uint64_t{1} << v;
            expand(r | bit, p & comp[v], x & comp[v]);
            p &= ~bit;
            x |= bit;
        }
    }
};

}  // namespace

bool verify_set(const Graph& g, VertexSet s, SetMode mode) {
    switch (mode) {
        case SetMode::dominating:
            return closed_neighborhood(g, s) == g.vertices();
        case SetMode::independent:
            return is_independent(g, s);
        case SetMode::independent_dominating:
            return closed_neighborhood(g, s) == g.vertices() && is_independent(g, s);
        case SetMode::near_independent_dominating: {
            if (closed_neighborhood(g, s) != g.vertices()) return false;
            for (int v : s)
                if ((g.neighbors(v) & s).size() > 1) return false;
            return true;
        }
    }
    return false;
}

SolveResult domination_number(const Graph& g) {
    return solve(g, false);
}

SolveResult independent_domination_number(const Graph& g) {
    return solve(g, true);
}

void oracle_enumerate_mis(const Graph& g, const std::function<void(VertexSet)>& emit) {
    if (g.order() > 24)
        throw std::invalid_argument("oracle_enumerate_mis is guarded to order <= 24");
    if (g.order() == 0) {
        emit(VertexSet{});
        return;
    }
    BronKerbosch bk(g, emit);
    bk.expand(0, g.vertices().bits(), 0);
}

std::vector<VertexSet> oracle_enumerate_mis(const Graph& g) {
    std::vector<VertexSet> out;
    oracle_enumerate_mis(g, [&](VertexSet s) { out.push_back(s); });
    return out;
}

}  // namespace idom

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "idom/graph.hpp"

namespace idom {

enum class SetMode {
    dominating,
    independent,
    independent_dominating,
    near_independent_dominating,
};

bool verify_set(const Graph& g, VertexSet s, SetMode mode);

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{};
};

// Exact gamma(G) by branch and bound over an undominated-vertex cover formulation.
SolveResult domination_number(const Graph& g);

// Exact i(G): search over maximal independent sets, branching on the
// lowest-index undominated vertex. Deterministic witnesses.
SolveResult independent_domination_number(const Graph& g);

// Emits every maximal independent set exactly once (Bron-Kerbosch with
// pivoting on the complement graph). Guarded to order <= 24.
void oracle_enumerate_mis(const Graph& g, const std::function<void(VertexSet)>& emit);
std::vector<VertexSet> oracle_enumerate_mis(const Graph& g);

}  // namespace idom

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idom/graph.hpp"

namespace idom {

// Degree-based potential: 14 / 9 / 6 / 5 for degrees 0 / 1 / 2 / 3.
// All weight operations reject graphs with maximum degree above 3.

struct WeightSummary {
    DegreeProfile profile;
    int total = 0;
};

WeightSummary weight_summary(const Graph& g);
int vertex_weight(const Graph& g, int v);
int subset_weight(const Graph& g, VertexSet x);

// Total rise in weight of the surviving vertices when x is deleted.
// Requires non-empty x.
int weight_change(const Graph& g, VertexSet x);

// (14|S|, w(N[S]) - c(N[S])) for an independent non-empty s. A calculator only:
// the strict inequality between the sides characterizes hypothetical minimal
// counterexamples, so no direction is asserted here.
std::pair<int, int> key_lemma_sides(const Graph& g, VertexSet s);

// 3-vertices grouped by their number of degree-2 neighbors (a0..a3), likewise
// 2-vertices (b0..b2); vertices of degree <= 1 land in `other`.
struct ABPartition {
    VertexSet a0, a1, a2, a3;
    VertexSet b0, b1, b2;
    VertexSet other;
};

ABPartition classify_ab(const Graph& g);

enum class ForbiddenConfig { i, ii, iii, iv, v, vi };

struct ConfigHit {
    ForbiddenConfig claim_part;
    VertexSet vertices;
};

// All occurrences of the six local configurations a minimal counterexample
// cannot contain. On general input these are plain structural analytics.
std::vector<ConfigHit> find_forbidden_configs(const Graph& g);

struct CycleWalk {
    bool success = false;
    std::vector<int> cycle;   // vertices of the closed cycle, in walk order
    std::vector<int> walk;    // full walk as visited
    int failed_step = -1;
    std::string reason;
};

// The guided walk through G[A2 u B1]: from an A2-vertex with a fresh
// B1-neighbor extend along the B1-B1-A2 path, otherwise step to an
// A2-neighbor; succeeds when the walk closes into a cycle whose consecutive
// A2-A2 steps each leave a vertex owning a B0-neighbor. On graphs without the
// guarantees the walk relies on, returns the failing step as a certificate.
// Throws std::invalid_argument when there is no A2-vertex at all.
CycleWalk find_a2b1_cycle(const Graph& g);

// External private neighborhood of v with respect to x; requires v in x.
VertexSet epn(const Graph& g, int v, VertexSet x);

struct NotMinimumDominatingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Swaps vertices with two or more D-neighbors for their unique external
// private neighbor until the set induces maximum degree <= 1. Requires a
// cubic graph and a minimum dominating set.
VertexSet reduce_to_near_independent(const Graph& g, VertexSet d);

// Eliminates edges inside a near independent dominating set by trading each
// busy vertex for a maximal independent subset of its private neighborhood.
// Output is independent dominating with |out| <= |x| + n1(G[x])/2.
VertexSet near_independent_to_independent(const Graph& g, VertexSet x);

}  // namespace idom

#pragma once

#include <string>

#include "idom/graph.hpp"

namespace idom {

// Canonically relabeled copy of g: two graphs produce equal results iff isomorphic.
// Color refinement with backtracking over refinement-stable cells; isolated
// vertices are split off first and placed last.
Graph canonical_relabel(const Graph& g);

// Labeling-invariant key: the graph6 encoding of canonical_relabel(g).
std::string canonical_form(const Graph& g);

}  // namespace idom

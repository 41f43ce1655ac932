#pragma once

#include <optional>
#include <string>

#include "idom/graph.hpp"

namespace idom {

enum class FamilyKind {
    Tkl,
    Cycle,
    Path,
    CompleteBipartite,
    Prism5,
    Petersen,
    Edgeless,
    Complete,
};

// Named graph families with fixed labeling conventions so goldens are stable.
struct FamilySpec {
    FamilyKind kind;
    int p1 = 0;
    int p2 = 0;

    static FamilySpec tkl(int k, int l) { return {FamilyKind::Tkl, k, l}; }
    static FamilySpec cycle(int n) { return {FamilyKind::Cycle, n, 0}; }
    static FamilySpec path(int n) { return {FamilyKind::Path, n, 0}; }
    static FamilySpec complete_bipartite(int a, int b) { return {FamilyKind::CompleteBipartite, a, b}; }
    static FamilySpec prism5() { return {FamilyKind::Prism5, 0, 0}; }
    static FamilySpec petersen() { return {FamilyKind::Petersen, 0, 0}; }
    static FamilySpec edgeless(int n) { return {FamilyKind::Edgeless, n, 0}; }
    static FamilySpec complete(int n) { return {FamilyKind::Complete, n, 0}; }
};

// Throws std::invalid_argument naming the violated parameter constraint.
Graph build(const FamilySpec& spec);

// Known independent domination number where one is established for the family;
// nullopt otherwise. Used as an oracle target, never as a solver shortcut.
std::optional<int> family_expected_i(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);

}  // namespace idom

#include "idom/families.hpp"

#include <stdexcept>

namespace idom {

namespace {

Graph build_tkl(int k, int l) {
    if (k < 0 || l < 0 || k + l < 5)
        throw std::invalid_argument("Tkl requires k,l >= 0 and k+l >= 5");
    const int m = k + 4 * l;  // cycle length
    const int order = m + k + l;
    std::vector<std::pair<int, int>> edges;
    // Cycle vertices x_1..x_m are indices 0..m-1.
    for (int j = 0; j < m; ++j) edges.emplace_back(j, (j + 1) % m);
    // Pendant of x_j is index m+j-1, for j = 1..k.
    for (int j = 1; j <= k; ++j) edges.emplace_back(j - 1, m + j - 1);
    // Chord vertex for block i joins x_{k+4i+1} and x_{k+4i+4}, index m+k+i.
    for (int i = 0; i < l; ++i) {
        int c = m + k + i;
        edges.emplace_back(c, k + 4 * i);
        edges.emplace_back(c, k + 4 * i + 3);
    }
    return Graph(order, edges);
}

Graph build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("Cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < n; ++j) edges.emplace_back(j, (j + 1) % n);
    return Graph(n, edges);
}

Graph build_path(int n) {
    if (n < 1) throw std::invalid_argument("Path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
    return Graph(n, edges);
}

Graph build_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("CompleteBipartite requires a,b >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

Graph build_prism5() {
    // C5 x K2: outer cycle 0..4, inner cycle 5..9, rungs i -- i+5.
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < 5; ++j) {
        edges.emplace_back(j, (j + 1) % 5);
        edges.emplace_back(5 + j, 5 + (j + 1) % 5);
        edges.emplace_back(j, 5 + j);
    }
    return Graph(10, edges);
}

Graph build_petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < 5; ++j) {
        edges.emplace_back(j, (j + 1) % 5);
        edges.emplace_back(5 + j, 5 + (j + 2) % 5);
        edges.emplace_back(j, 5 + j);
    }
    return Graph(10, edges);
}

Graph build_complete(int n) {
    if (n < 1) throw std::invalid_argument("Complete requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

Graph build(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Tkl: return build_tkl(spec.p1, spec.p2);
        case FamilyKind::Cycle: return build_cycle(spec.p1);
        case FamilyKind::Path: return build_path(spec.p1);
        case FamilyKind::CompleteBipartite: return build_complete_bipartite(spec.p1, spec.p2);
        case FamilyKind::Prism5: return build_prism5();
        case FamilyKind::Petersen: return build_petersen();
        case FamilyKind::Edgeless:
            if (spec.p1 < 0) throw std::invalid_argument("Edgeless requires n >= 0");
            return Graph(spec.p1, {});
        case FamilyKind::Complete: return build_complete(spec.p1);
    }
    throw std::invalid_argument("unknown family kind");
}

std::optional<int> family_expected_i(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Tkl:
            if (spec.p1 >= 0 && spec.p2 >= 0 && spec.p1 + spec.p2 >= 5) return spec.p1 + 2 * spec.p2;
            return std::nullopt;
        case FamilyKind::CompleteBipartite:
            if (spec.p1 == spec.p2 && spec.p1 >= 1) return spec.p1;
            return std::nullopt;
        case FamilyKind::Prism5: return 4;
        default: return std::nullopt;
    }
}

std::string family_name(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Tkl:
            return "T(" + std::to_string(spec.p1) + "," + std::to_string(spec.p2) + ")";
        case FamilyKind::Cycle: return "C" + std::to_string(spec.p1);
        case FamilyKind::Path: return "P" + std::to_string(spec.p1);
        case FamilyKind::CompleteBipartite:
            return "K(" + std::to_string(spec.p1) + "," + std::to_string(spec.p2) + ")";
        case FamilyKind::Prism5: return "C5xK2";
        case FamilyKind::Petersen: return "Petersen";
        case FamilyKind::Edgeless: return "E" + std::to_string(spec.p1);
        case FamilyKind::Complete: return "K" + std::to_string(spec.p1);
    }
    return "?";
}

}  // namespace idom

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace idom {

// Subset of the vertices of a graph with order <= 64, stored as one machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t mask) : bits_(mask) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) add(v);
    }

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    bool operator==(const VertexSet&) const = default;

    // Iterates over set bits in ascending index order.
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator==(const iterator&) const = default;
    };
    iterator begin() const { return {bits_}; }
    iterator end() const { return {0}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

// Immutable simple graph on at most 64 vertices; adjacency as per-vertex bit rows.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    Graph(int order, const std::vector<std::pair<int, int>>& edges);

    // Builds from raw adjacency rows; validates symmetry, irreflexivity and range.
    static Graph from_rows(int order, std::vector<std::uint64_t> rows);

    int order() const { return order_; }
    VertexSet vertices() const { return VertexSet::full(order_); }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    VertexSet closed_neighbors(int v) const { return VertexSet(adj_[v] | (std::uint64_t{1} << v)); }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int max_degree() const;
    int edge_count() const;

    // Induced subgraph on `keep`, relabeled to 0..k-1 preserving index order.
    // If `old_of_new` is given it receives the original index of each new vertex.
    Graph induced(VertexSet keep, std::vector<int>* old_of_new = nullptr) const;
    Graph removed(VertexSet drop) const { return induced(vertices() - drop); }

    std::vector<VertexSet> components() const;
    bool connected() const;

    bool operator==(const Graph&) const = default;

private:
    int order_ = 0;
    std::vector<std::uint64_t> adj_;
};

struct DegreeProfile {
    int n0 = 0, n1 = 0, n2 = 0, n3 = 0;
    int max_degree = 0;
    bool operator==(const DegreeProfile&) const = default;
};

VertexSet closed_neighborhood(const Graph& g, VertexSet s);
bool has_four_cycle(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

DegreeProfile degree_profile(const Graph& g);

}  // namespace idom

#include <doctest.h>

#include <random>
#include <set>

#include "idom/families.hpp"
#include "idom/solvers.hpp"
#include "oracles.hpp"

using namespace idom;

TEST_CASE("verify_set modes") {
    Graph c5 = build(FamilySpec::cycle(5));
    CHECK(verify_set(c5, VertexSet{0, 2}, SetMode::independent));
    CHECK(verify_set(c5, VertexSet{0, 2}, SetMode::dominating));
    CHECK(verify_set(c5, VertexSet{0, 2}, SetMode::independent_dominating));
    CHECK(!verify_set(c5, VertexSet{0, 1}, SetMode::independent));
    CHECK(!verify_set(c5, VertexSet{0}, SetMode::dominating));
    CHECK(verify_set(c5, VertexSet{0, 1, 3}, SetMode::dominating));
    CHECK(!verify_set(c5, VertexSet{0, 1, 3}, SetMode::independent_dominating));
    // Near independent: dominating and the induced subgraph has max degree <= 1.
    CHECK(verify_set(c5, VertexSet{0, 1, 3}, SetMode::near_independent_dominating));
    CHECK(!verify_set(c5, VertexSet{0, 1, 2}, SetMode::near_independent_dominating));
    CHECK(verify_set(Graph(0, {}), VertexSet{}, SetMode::independent_dominating));
}

TEST_CASE("known exact values") {
    auto i_of = [](const Graph& g) { return independent_domination_number(g).value; };
    auto gamma_of = [](const Graph& g) { return domination_number(g).value; };

    CHECK(i_of(build(FamilySpec::cycle(7))) == 3);
    CHECK(gamma_of(build(FamilySpec::cycle(7))) == 3);
    CHECK(i_of(build(FamilySpec::complete_bipartite(3, 3))) == 3);
    CHECK(gamma_of(build(FamilySpec::complete_bipartite(3, 3))) == 2);
    CHECK(i_of(build(FamilySpec::prism5())) == 4);
    CHECK(gamma_of(build(FamilySpec::prism5())) == 3);
    CHECK(i_of(build(FamilySpec::petersen())) == 3);
    CHECK(gamma_of(build(FamilySpec::petersen())) == 3);
    CHECK(i_of(build(FamilySpec::complete(6))) == 1);
    CHECK(i_of(build(FamilySpec::edgeless(5))) == 5);
    CHECK(gamma_of(build(FamilySpec::edgeless(5))) == 5);
    CHECK(i_of(build(FamilySpec::path(6))) == 2);
    CHECK(i_of(Graph(0, {})) == 0);
    CHECK(gamma_of(Graph(0, {})) == 0);
}

TEST_CASE("witnesses verify and statistics are populated") {
    for (auto spec : {FamilySpec::petersen(), FamilySpec::tkl(5, 0), FamilySpec::cycle(9)}) {
        Graph g = build(spec);
        SolveResult ir = independent_domination_number(g);
        CHECK(verify_set(g, ir.witness, SetMode::independent_dominating));
        CHECK(ir.witness.size() == ir.value);
        CHECK(ir.nodes_explored > 0);
        SolveResult gr = domination_number(g);
        CHECK(verify_set(g, gr.witness, SetMode::dominating));
        CHECK(gr.witness.size() == gr.value);
        CHECK(gr.value <= ir.value);
    }
}

TEST_CASE("solvers agree with the subset-sweep oracle on random graphs") {
    std::mt19937 rng(2026);
    for (int rep = 0; rep < 120; ++rep) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = oracles::random_graph(rng, n, 0.1 + 0.08 * static_cast<double>(rng() % 9));
        CHECK(independent_domination_number(g).value == oracles::oracle_i(g));
        CHECK(domination_number(g).value == oracles::oracle_gamma(g));
    }
}

TEST_CASE("solvers agree with the oracle on every order-5 graph") {
    for (const Graph& g : oracles::naive_iso_classes(5, 4)) {
        CHECK(independent_domination_number(g).value == oracles::oracle_i(g));
        CHECK(domination_number(g).value == oracles::oracle_gamma(g));
    }
}

TEST_CASE("solver witnesses are deterministic") {
    Graph g = build(FamilySpec::petersen());
    CHECK(independent_domination_number(g).witness == independent_domination_number(g).witness);
    CHECK(domination_number(g).witness == domination_number(g).witness);
}

TEST_CASE("maximal independent set enumeration") {
    Graph c5 = build(FamilySpec::cycle(5));
    auto sets = oracle_enumerate_mis(c5);
    CHECK(sets.size() == 5);
    std::set<std::uint64_t> unique;
    for (VertexSet s : sets) {
        CHECK(verify_set(c5, s, SetMode::independent_dominating));
        unique.insert(s.bits());
    }
    CHECK(unique.size() == sets.size());

    // i(G) is the size of the smallest maximal independent set.
    for (auto spec : {FamilySpec::petersen(), FamilySpec::complete_bipartite(3, 3)}) {
        Graph g = build(spec);
        int best = g.order();
        for (VertexSet s : oracle_enumerate_mis(g)) best = std::min(best, s.size());
        CHECK(best == independent_domination_number(g).value);
    }

    CHECK(oracle_enumerate_mis(build(FamilySpec::complete(5))).size() == 5);
    CHECK(oracle_enumerate_mis(Graph(0, {})).size() == 1);  // the empty set
    CHECK_THROWS_AS(oracle_enumerate_mis(Graph(25, {})), std::invalid_argument);
}

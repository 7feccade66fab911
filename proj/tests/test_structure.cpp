#include <doctest.h>

#include "oracles.hpp"
#include "rankforge/canonical.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/exact_linalg.hpp"
#include "rankforge/structure.hpp"

using namespace rankforge;

TEST_CASE("rank drop after deleting a neighborhood")
{
    for (int v = 0; v < 5; ++v) {
        const RankDrop d = rank_drop_neighborhood(Graph::cycle(5), v);
        CHECK(d.lhs == 2);
        CHECK(d.rhs == 3);
        CHECK(d.holds);
    }
    auto c8 = construct_C(8);
    const RankDrop y = rank_drop_neighborhood(c8.graph, c8.vertex("y"));
    CHECK(y.rhs == 6);
    CHECK(y.holds);
    const RankDrop end = rank_drop_neighborhood(Graph::path(5), 0);
    CHECK(end.lhs == 2);
    CHECK(end.holds);
    CHECK_THROWS_AS(rank_drop_neighborhood(Graph::from_edges(3, {{0, 2}, {1, 2}}), 0), PreconditionError);
    CHECK_THROWS_AS(rank_drop_neighborhood(Graph::cycle(5), 5), PreconditionError);
}

TEST_CASE("rank drop after deleting a symmetric difference")
{
    CHECK(rank_drop_symdiff(Graph::path(5), 0, 2).holds);
    const Graph c6 = construct_C(6).graph;
    for (int u = 0; u < c6.order(); ++u) {
        for (int v = u + 1; v < c6.order(); ++v) {
            if (!c6.adjacent(u, v)) {
                CHECK(rank_drop_symdiff(c6, u, v).holds);
            }
        }
    }
    CHECK(rank_drop_symdiff(Graph::cycle(5), 0, 2).holds);
    CHECK_THROWS_AS(rank_drop_symdiff(Graph::cycle(5), 0, 1), PreconditionError);
    CHECK_THROWS_AS(rank_drop_symdiff(Graph::cycle(5), 2, 2), PreconditionError);
}

TEST_CASE("rank drops hold over a reduced corpus")
{
    std::size_t checked = 0;
    for (const Graph& g : oracle::reduced_corpus(500, 12, 101)) {
        for (int u = 0; u < g.order(); ++u) {
            REQUIRE(rank_drop_neighborhood(g, u).holds);
            for (int v = u + 1; v < g.order(); ++v) {
                if (!g.adjacent(u, v)) {
                    REQUIRE(rank_drop_symdiff(g, u, v).holds);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("maximum lower-rank subgraph examples")
{
    const StructureReport p5 = max_subgraph_below_rank(Graph::path(5), 1);
    CHECK(p5.deleted() == VertexSet{1});
    CHECK(p5.h_vertices.size() == 4);
    CHECK(p5.rank_g == 4);
    CHECK(p5.rank_h == 2);
    CHECK(p5.isolated == VertexSet{0});
    CHECK(Graph::path(5).neighbors(0) == p5.deleted());
    CHECK(p5.all_hold());

    const StructureReport c5 = max_subgraph_below_rank(Graph::cycle(5), 1);
    CHECK(c5.h_vertices.size() == 4);
    CHECK(c5.rank_h == 4);
    CHECK(c5.verdicts.at("rank_lower_bound").ok);

    CHECK_THROWS_AS(max_subgraph_below_rank(Graph::from_edges(4, {{0, 3}, {1, 3}, {2, 3}}), 1), PreconditionError);
    CHECK_THROWS_AS(max_subgraph_below_rank(Graph::path(5), 3), PreconditionError);
    CHECK_THROWS_AS(max_subgraph_below_rank(construct_C(8).graph, 1), PreconditionError);
}

TEST_CASE("decomposition properties over a reduced corpus")
{
    for (const Graph& g : oracle::reduced_corpus(500, 12, 55)) {
        const StructureReport rep = max_subgraph_below_rank(g, 1);
        CAPTURE(to_graph6(g));
        CHECK(rep.rank_g == graph_rank(g));
        CHECK(rep.rank_h == graph_rank(induced_subgraph(g, rep.h_vertices)));
        CHECK(rep.rank_h < rep.rank_g);
        CHECK(rep.rank_h >= rep.rank_g - 2);
        if (!is_reduced(induced_subgraph(g, rep.h_vertices))) {
            CHECK(rep.rank_h == rep.rank_g - 2);
        }
        const int deleted = rep.deleted().size();
        for (int u = 0; u < g.order(); ++u) {
            CHECK(deleted <= g.degree(u));
            for (int v = u + 1; v < g.order(); ++v) {
                CHECK(deleted <= symmetric_difference(g, u, v).size());
            }
        }
        CHECK((rep.h_vertices | rep.t1 | rep.t2) == g.vertices());
        CHECK((rep.t1 & rep.t2).empty());
        for (const auto& [a, b] : rep.duplication_pairs) {
            CHECK(rep.h_vertices.contains(a));
            CHECK(rep.h_vertices.contains(b));
        }
        CHECK(rep.all_hold());
        CHECK(validate_lov_matrix_obstruction(rep));

        const StructureReport two = max_subgraph_below_rank(g, 2);
        CHECK(two.rank_h <= two.rank_g - 2);
        CHECK(two.rank_h >= two.rank_g - 3);
    }
}

TEST_CASE("matrix obstruction")
{
    // Classes {0,1} and {2,3} of H; deleted 4 and 5 both see 0, but 4 sees 2 while 5 sees 3.
    Graph g = Graph::from_edges(8, {{6, 0}, {6, 1}, {7, 2}, {7, 3}, {4, 0}, {4, 2}, {5, 0}, {5, 3}});
    StructureReport rep;
    rep.host = g;
    rep.h_vertices = VertexSet{0, 1, 2, 3, 6, 7};
    rep.duplication_pairs = {{0, 1}, {2, 3}};
    CHECK_FALSE(validate_lov_matrix_obstruction(rep));

    Graph fine = Graph::from_edges(8, {{6, 0}, {6, 1}, {7, 2}, {7, 3}, {4, 0}, {4, 2}, {5, 1}, {5, 3}});
    rep.host = fine;
    CHECK(validate_lov_matrix_obstruction(rep));

    rep.host = g;
    rep.h_vertices = g.vertices();
    CHECK(validate_lov_matrix_obstruction(rep));
}

#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rankforge/canonical.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/report_io.hpp"
#include "rankforge/structure.hpp"

using namespace rankforge;

TEST_CASE("graph6 hand encodings")
{
    CHECK(to_graph6(Graph::path(2)) == "A_");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph::complete(4)) == "C~");
    CHECK(from_graph6("A_") == Graph::path(2));
    CHECK(from_graph6(">>graph6<<A_\n") == Graph::path(2));
}

TEST_CASE("graph6 long form and errors")
{
    Graph g(64);
    g.add_edge(0, 63);
    g.add_edge(10, 20);
    const std::string s = to_graph6(g);
    CHECK(s.substr(0, 4) == "~?@?");
    CHECK(from_graph6(s) == g);
    Graph g63(63);
    g63.add_edge(1, 62);
    CHECK(from_graph6(to_graph6(g63)) == g63);

    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("A"), ParseError);
    CHECK_THROWS_AS(from_graph6("A__"), ParseError);
    CHECK_THROWS_AS(from_graph6("A "), ParseError);
    CHECK_THROWS_AS(from_graph6(std::string("A\x01")), ParseError);
    CHECK_THROWS_AS(from_graph6("~?A?"), CapacityError);
}

TEST_CASE("graph6 round trip on a corpus")
{
    for (const Graph& g : oracle::reduced_corpus(300, 12, 4)) {
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    for (int r = 4; r <= 12; ++r) {
        const Graph c = construct_C(r).graph;
        CHECK(from_graph6(to_graph6(c)) == c);
    }
}

TEST_CASE("canonical form is relabeling invariant")
{
    std::mt19937_64 rng(7);
    const std::string c5 = canonical_form(Graph::cycle(5)).cert;
    std::vector<int> perm{0, 1, 2, 3, 4};
    do {
        CHECK(canonical_form(relabel(Graph::cycle(5), perm)).cert == c5);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> corpus = oracle::reduced_corpus(60, 12, 9);
    for (int r = 4; r <= 12; ++r) {
        corpus.push_back(construct_C(r).graph);
    }
    corpus.push_back(construct_B(4));
    for (const Graph& g : corpus) {
        const std::string cert = canonical_form(g).cert;
        for (int t = 0; t < 100; ++t) {
            CHECK(canonical_form(oracle::permuted(g, rng)).cert == cert);
        }
    }
}

TEST_CASE("canonical labeling maps the graph onto the certificate")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const Graph g = oracle::random_graph(2 + t % 10, 0.4, rng);
        const auto cf = canonical_form(g);
        CHECK(relabel(g, cf.labeling) == from_graph6(cf.cert));
        CHECK(canonical_graph(g) == from_graph6(cf.cert));
    }
}

TEST_CASE("isomorphism classes of small graphs")
{
    // Unlabeled graph counts on n = 1..6 vertices: 1, 2, 4, 11, 34, 156.
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> classes;
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t m = 0; m < masks; ++m) {
            classes.insert(canonical_form(oracle::graph_from_mask(n, m)).cert);
        }
        CHECK(classes.size() == expected[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("automorphism group sizes")
{
    CHECK(canonical_form(Graph::cycle(5)).automorphism_group_size == 10);
    CHECK(canonical_form(Graph::complete(5)).automorphism_group_size == 120);
    CHECK(canonical_form(Graph(6)).automorphism_group_size == 720);
    CHECK(canonical_form(Graph::path(5)).automorphism_group_size == 2);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 120; ++t) {
        const Graph g = oracle::random_graph(2 + t % 7, 0.2 + 0.1 * (t % 6), rng);
        CHECK(canonical_form(g).automorphism_group_size == oracle::automorphism_count(g));
    }
}

TEST_CASE("isomorphism tests")
{
    CHECK(are_isomorphic(construct_C(7).graph, construct_C_recursive(7)));
    CHECK(are_isomorphic(construct_B(2), Graph::path(5)));
    CHECK_FALSE(are_isomorphic(construct_C(8).graph, construct_B(4)));
    CHECK_FALSE(are_isomorphic(Graph::path(5), Graph::cycle(5)));
    CHECK(canonical_form(Graph::path(5)).cert != canonical_form(Graph::cycle(5)).cert);

    std::mt19937_64 rng(1);
    const Graph a = construct_C(8).graph;
    const Graph b = oracle::permuted(a, rng);
    const Graph c = oracle::permuted(b, rng);
    CHECK(are_isomorphic(a, a));
    CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
    CHECK((are_isomorphic(a, b) && are_isomorphic(b, c) && are_isomorphic(a, c)));
}

TEST_CASE("role-permuted rebuild of C_8 has the same certificate")
{
    // Rebuild C_8 from its definition with the vertex roles numbered in a different order.
    const auto c8 = construct_C(8);
    std::vector<int> order;
    for (const char* role : {"z", "y", "M'", "x'", "subset-side", "B-side"}) {
        auto members = c8.role(role).members();
        std::reverse(members.begin(), members.end());
        order.insert(order.end(), members.begin(), members.end());
    }
    REQUIRE(order.size() == 16);
    std::vector<int> perm(16);
    for (std::size_t i = 0; i < order.size(); ++i) {
        perm[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    CHECK(canonical_form(relabel(c8.graph, perm)).cert == canonical_form(c8.graph).cert);
}

TEST_CASE("enumeration report JSON")
{
    EnumerationReport r;
    r.rank = 6;
    r.cls = GraphClass::bipartite;
    r.max_order = 10;
    r.extremal = {"I?BD@g[Bw"};
    r.cores_processed = 3;
    r.candidates_total = 40;
    r.nodes_explored = 17;
    r.elapsed_ms = 5;
    const std::string text = to_json(r);
    const auto pos = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
    CHECK(pos("rank") < pos("class"));
    CHECK(pos("class") < pos("max_order"));
    CHECK(pos("max_order") < pos("extremal"));
    CHECK(pos("extremal") < pos("cores_processed"));
    CHECK(pos("cores_processed") < pos("nodes_explored"));
    CHECK(pos("nodes_explored") < pos("elapsed_ms"));
    CHECK(text.find("shard") == std::string::npos);

    const EnumerationReport back = enumeration_report_from_json(text);
    CHECK(back.rank == 6);
    CHECK(back.cls == GraphClass::bipartite);
    CHECK(back.extremal == r.extremal);
    CHECK(back.nodes_explored == 17);
    CHECK(to_json(back) == text);
    CHECK_THROWS_AS(enumeration_report_from_json("{\"rank\": 3}"), ParseError);
    CHECK_THROWS_AS(enumeration_report_from_json("not json"), ParseError);
}

TEST_CASE("structure report JSON")
{
    const StructureReport rep = max_subgraph_below_rank(Graph::path(5), 1);
    const std::string text = to_json(rep);
    CHECK(text.find("\"host\": \"DhC\"") != std::string::npos);
    CHECK(text.find("\"deleted\": [\n    1\n  ]") != std::string::npos);
    CHECK(text.find("\"labeling\"") != std::string::npos);
}

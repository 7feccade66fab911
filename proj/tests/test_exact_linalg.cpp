#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/exact_linalg.hpp"

using namespace rankforge;

namespace {

IntMatrix random_matrix(int rows, int cols, int lo, int hi, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> entry(lo, hi);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m(i, j) = entry(rng);
        }
    }
    return m;
}

// Low-rank products stress the rank-deficient paths.
IntMatrix random_low_rank(int rows, int cols, int k, std::mt19937_64& rng)
{
    IntMatrix a = random_matrix(rows, k, -2, 2, rng);
    IntMatrix b = random_matrix(k, cols, -2, 2, rng);
    return a * b;
}

}  // namespace

TEST_CASE("rank examples")
{
    CHECK(graph_rank(Graph::path(5)) == 4);
    CHECK(graph_rank(Graph::cycle(5)) == 5);
    CHECK(rank_exact(IntMatrix::Zero(4, 3)) == 0);
    CHECK(rank_exact(IntMatrix(0, 0)) == 0);
    CHECK(graph_rank(construct_B(3)) == 6);
}

TEST_CASE("determinant examples")
{
    CHECK(det_exact(IntMatrix::Identity(3, 3)) == 1);
    CHECK(det_exact(adjacency_matrix(Graph::path(2))) == -1);
    CHECK(det_exact(adjacency_matrix(Graph::cycle(5))) == 2);
    CHECK(det_exact(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(det_exact(IntMatrix::Zero(2, 3)), PreconditionError);
}

TEST_CASE("rank agrees with rational elimination")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 16);
    for (int t = 0; t < 200; ++t) {
        const int rows = dim(rng), cols = dim(rng);
        const IntMatrix m = t % 2 ? random_matrix(rows, cols, 0, 1, rng)
                                  : random_low_rank(rows, cols, 1 + t % std::min(rows, cols), rng);
        CHECK(rank_exact(m) == oracle::rational_rank(m));
    }
}

TEST_CASE("rank is transpose invariant")
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> dim(1, 16);
    for (int t = 0; t < 200; ++t) {
        const IntMatrix m = random_matrix(dim(rng), dim(rng), 0, 1, rng);
        CHECK(rank_exact(m) == rank_exact(IntMatrix(m.transpose())));
    }
}

TEST_CASE("rational rank dominates GF(2) rank")
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        const Graph g = oracle::random_graph(1 + t % 12, 0.4, rng);
        CHECK(graph_rank(g) >= oracle::gf2_rank(g));
    }
}

TEST_CASE("determinant agrees with permutation expansion")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 150; ++t) {
        const int n = 1 + t % 7;
        const IntMatrix m = random_matrix(n, n, -3, 3, rng);
        CHECK(oracle::BigInt(static_cast<long long>(det_exact(m))) == oracle::leibniz_det(m));
    }
}

TEST_CASE("adjugate solve")
{
    IntMatrix id = IntMatrix::Identity(2, 2);
    IntVector b(2);
    b << 3, 1;
    auto s = adjugate_solve(id, b);
    CHECK(s.det == 1);
    CHECK(s.y == std::vector<Int128>{3, 1});

    IntMatrix swap(2, 2);
    swap << 0, 1, 1, 0;
    IntVector e(2);
    e << 1, 0;
    auto s2 = adjugate_solve(swap, e);
    CHECK(s2.det == -1);
    CHECK(s2.y == std::vector<Int128>{0, -1});

    CHECK_THROWS_AS(adjugate_solve(adjacency_matrix(Graph::path(3)), IntVector::Ones(3)), SingularMatrixError);

    std::mt19937_64 rng(13);
    int solved = 0;
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + t % 10;
        const IntMatrix a = t % 3 ? adjacency_matrix(oracle::random_graph(n, 0.5, rng)) : random_matrix(n, n, -4, 4, rng);
        const IntVector rhs = random_matrix(n, 1, -5, 5, rng);
        if (det_exact(a) == 0) {
            continue;
        }
        auto sol = adjugate_solve(a, rhs);
        for (int i = 0; i < n; ++i) {
            Int128 lhs = 0;
            for (int j = 0; j < n; ++j) {
                lhs += static_cast<Int128>(a(i, j)) * sol.y[static_cast<std::size_t>(j)];
            }
            CHECK(lhs == sol.det * rhs(i));
        }
        ++solved;
    }
    CHECK(solved > 100);
}

TEST_CASE("full adjugate")
{
    const IntMatrix a = adjacency_matrix(Graph::cycle(5));
    auto [det, adj] = adjugate(a);
    CHECK(det == 2);
    const IntMatrix prod = a * adj;
    CHECK(prod == IntMatrix::Identity(5, 5) * 2);
    CHECK(adj == adj.transpose());
}

TEST_CASE("overflow is reported, not wrapped")
{
    IntMatrix big(2, 2);
    big << std::numeric_limits<std::int64_t>::max(), 1, 1, std::numeric_limits<std::int64_t>::max();
    CHECK_NOTHROW(det_exact(big));
    IntMatrix huge(3, 3);
    const std::int64_t m = std::numeric_limits<std::int64_t>::max();
    huge << m, m - 1, 3, m - 7, m, 5, 1, m - 3, m;
    CHECK_THROWS_AS(det_exact(huge), OverflowError);
}

TEST_CASE("nonsingular principal core")
{
    CHECK(nonsingular_principal_core(Graph::cycle(5)) == VertexSet::first(5));
    for (const Graph& g : {Graph::path(5), construct_B(2)}) {
        const VertexSet s = nonsingular_principal_core(g);
        CHECK(s.size() == 4);
        CHECK(det_exact(principal_submatrix(adjacency_matrix(g), s)) != 0);
    }
    for (const Graph& g : oracle::reduced_corpus(200, 12, 31)) {
        const VertexSet s = nonsingular_principal_core(g);
        CHECK(s.size() == graph_rank(g));
        CHECK(det_exact(principal_submatrix(adjacency_matrix(g), s)) != 0);
    }
}

TEST_CASE("bipartite graphs have even rank")
{
    int seen = 0;
    for (const Graph& g : oracle::reduced_corpus(400, 12, 17)) {
        if (bipartition(g)) {
            CHECK(graph_rank(g) % 2 == 0);
            ++seen;
        }
    }
    CHECK(seen > 20);
}

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rankforge/coding.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/errors.hpp"

using namespace rankforge;

namespace {

BinaryCode code(std::initializer_list<const char*> words)
{
    std::string text;
    for (const char* w : words) {
        text += w;
        text += '\n';
    }
    return BinaryCode::parse(text);
}

// j in the row space of the column-per-word matrix, by rational elimination.
bool j_in_rowspace_oracle(const BinaryCode& c)
{
    const IntMatrix m = c.matrix();
    IntMatrix with_j(m.rows() + 1, m.cols());
    with_j.topRows(m.rows()) = m;
    with_j.row(m.rows()).setOnes();
    return oracle::rational_rank(with_j) == oracle::rational_rank(m);
}

BinaryCode from_mask(int n, std::uint64_t mask)
{
    std::vector<std::uint64_t> words;
    for (int w = 0; w < (1 << n); ++w) {
        if ((mask >> w) & 1U) {
            words.push_back(static_cast<std::uint64_t>(w));
        }
    }
    return BinaryCode(n, words);
}

}  // namespace

TEST_CASE("code text format")
{
    const BinaryCode c = code({"110", "# comment", "", "001"});
    CHECK(c.length() == 3);
    CHECK(c.size() == 2);
    CHECK(c.to_text() == "001\n110\n");
    CHECK(BinaryCode::parse(c.to_text()) == c);
    CHECK_THROWS_AS(BinaryCode::parse("01\n011\n"), ParseError);
    CHECK_THROWS_AS(BinaryCode::parse("0a\n"), ParseError);
    CHECK_THROWS_AS(BinaryCode::parse(""), ParseError);
    CHECK_THROWS_AS(BinaryCode::parse("01\n01\n"), PreconditionError);
    CHECK(word_to_string(0b011, 4) == "1100");
}

TEST_CASE("minimum distance")
{
    CHECK(min_distance(code({"000", "111"})) == 3);
    CHECK(min_distance(BinaryCode::even_weight(3)) == 2);
    CHECK(min_distance(BinaryCode::full_space(3)) == 1);
    CHECK_THROWS_AS(min_distance(code({"01"})), PreconditionError);
}

TEST_CASE("Singleton examples")
{
    auto full = singleton_verify(BinaryCode::full_space(3), 1);
    CHECK(full.holds);
    CHECK(full.bound == 8);
    CHECK(full.equality == SingletonEquality::full_space);
    auto even = singleton_verify(BinaryCode::even_weight(3), 2);
    CHECK(even.holds);
    CHECK(even.equality == SingletonEquality::even_weight);
    auto pair = singleton_verify(code({"0000", "1111"}), 4);
    CHECK(pair.holds);
    CHECK(pair.equality == SingletonEquality::antipodal_pair);
    CHECK(singleton_verify(BinaryCode::odd_weight(4), 2).equality == SingletonEquality::odd_weight);
    CHECK(singleton_verify(code({"0000", "1100"}), 2).equality == SingletonEquality::none);
    try {
        singleton_verify(code({"000", "001", "111"}), 2);
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("000") != std::string::npos);
        CHECK(std::string(e.what()).find("001") != std::string::npos);
    }
}

TEST_CASE("Singleton equality cases are exhaustive and exclusive for n <= 4")
{
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t codes = std::uint64_t{1} << (1 << n);
        std::size_t tight = 0;
        for (std::uint64_t mask = 0; mask < codes; ++mask) {
            if (std::popcount(mask) < 2) {
                continue;
            }
            const BinaryCode c = from_mask(n, mask);
            const int d = min_distance(c);
            const auto v = singleton_verify(c, d);
            REQUIRE(v.holds);
            const auto cases = singleton_equality_cases(c, d);
            if (c.size() == v.bound) {
                ++tight;
                CHECK(!cases.empty());
                CHECK(v.equality == cases.front());
                if (n >= 3) {
                    CHECK(cases.size() == 1);
                }
            } else {
                CHECK(cases.empty());
                CHECK(v.equality == SingletonEquality::none);
            }
        }
        // Omega, even, odd, and the 2^(n-1) antipodal pairs (which coincide with the rest for n <= 2).
        if (n >= 3) {
            CHECK(tight == 3 + (std::size_t{1} << (n - 1)));
        }
    }
}

TEST_CASE("Singleton bound on random codes")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 1000; ++t) {
        const int n = 2 + t % 9;
        std::uniform_int_distribution<std::uint64_t> word(0, (std::uint64_t{1} << n) - 1);
        std::vector<std::uint64_t> words;
        const int k = 2 + t % 12;
        for (int i = 0; i < k; ++i) {
            const std::uint64_t w = word(rng);
            if (std::find(words.begin(), words.end(), w) == words.end()) {
                words.push_back(w);
            }
        }
        if (words.size() < 2) {
            continue;
        }
        const BinaryCode c(n, words);
        CHECK(singleton_verify(c, min_distance(c)).holds);
    }
}

TEST_CASE("Plotkin examples")
{
    auto c5 = plotkin_bound_check(Graph::cycle(5), VertexSet{0, 2});
    CHECK(c5.bound == boost::rational<std::int64_t>(3));
    CHECK(c5.min_symdiff == 2);
    CHECK(c5.holds);
    auto star = plotkin_bound_check(Graph::star(4), VertexSet{1, 2, 3, 4});
    CHECK(star.min_symdiff == 0);
    CHECK(star.bound == boost::rational<std::int64_t>(2, 3));
    CHECK(star.holds);
    const Graph c8 = construct_C(8).graph;
    auto big = plotkin_bound_check(c8, independence_number(c8).witness);
    CHECK(big.holds);
    CHECK(big.bound == boost::rational<std::int64_t>(11 * 5, 20));
    CHECK_THROWS_AS(plotkin_bound_check(Graph::cycle(5), VertexSet{0, 1}), PreconditionError);
    CHECK_THROWS_AS(plotkin_bound_check(Graph::cycle(5), VertexSet{0}), PreconditionError);
}

TEST_CASE("Plotkin bound over every independent set of a corpus")
{
    std::size_t checked = 0;
    for (const Graph& g : oracle::reduced_corpus(500, 12, 23)) {
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
            if (std::popcount(s) >= 2 && oracle::independent(g, s)) {
                CHECK(plotkin_bound_check(g, VertexSet(s)).holds);
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("all-ones vector in the row space")
{
    // Every code containing the zero word fails: x.0 = 0 for every x.
    CHECK_FALSE(j_in_rowspace(BinaryCode::full_space(2)));
    CHECK_FALSE(j_in_rowspace(code({"00"})));
    CHECK(j_in_rowspace(code({"10", "01"})));
    CHECK_FALSE(j_in_rowspace(BinaryCode::odd_weight(4)));
    CHECK(j_in_rowspace(code({"110", "011", "101"})));
    std::mt19937_64 rng(6);
    for (int t = 0; t < 300; ++t) {
        const int n = 3 + t % 4;
        std::uniform_int_distribution<std::uint64_t> word(0, (std::uint64_t{1} << n) - 1);
        std::vector<std::uint64_t> words;
        for (int i = 0; i < 1 + t % 9; ++i) {
            const std::uint64_t w = word(rng);
            if (std::find(words.begin(), words.end(), w) == words.end()) {
                words.push_back(w);
            }
        }
        const BinaryCode c(n, words);
        CHECK(j_in_rowspace(c) == j_in_rowspace_oracle(c));
    }
}

TEST_CASE("f2n check")
{
    CHECK(f2n_check(code({"10000"})).bound == 10);
    CHECK(f2n_check(code({"100000"})).bound == 20);
    CHECK(f2n_check(code({"01100"})).holds);
    CHECK_THROWS_AS(f2n_check(code({"1000"})), PreconditionError);
    CHECK_THROWS_AS(f2n_check(code({"10000", "11000"})), PreconditionError);
    CHECK_THROWS_AS(f2n_check(code({"00000", "11000"})), PreconditionError);

    std::mt19937_64 rng(19);
    int checked = 0;
    while (checked < 1000) {
        const BinaryCode c = oracle::random_feasible_code(5 + checked % 2, rng);
        if (c.size() == 0) {
            continue;
        }
        REQUIRE(j_in_rowspace(c));
        CHECK(f2n_check(c).holds);
        ++checked;
    }
}

TEST_CASE("f2n optimum at n = 5 matches an unpruned search")
{
    const F2nOptimum best = f2n_brute_max(5);
    CHECK(best.max_size <= 10);
    CHECK(static_cast<int>(best.witness.size()) == best.max_size);
    CHECK(f2n_check(best.witness).holds);

    // Every independent set of the 5-cube, checked with the rational oracle.
    Graph cube(32);
    for (int u = 0; u < 32; ++u) {
        for (int b = 0; b < 5; ++b) {
            if (u < (u ^ (1 << b))) {
                cube.add_edge(u, u ^ (1 << b));
            }
        }
    }
    int oracle_best = 0;
    std::vector<std::uint64_t> oracle_witness;
    std::size_t sets = 0;
    auto visit = [&](auto&& self, int next, std::uint64_t chosen, std::uint64_t blocked) -> void {
        ++sets;
        const int k = std::popcount(chosen);
        if (k > oracle_best) {
            std::vector<std::uint64_t> words;
            for (int v : VertexSet(chosen)) {
                words.push_back(static_cast<std::uint64_t>(v));
            }
            const BinaryCode c(5, words);
            if (j_in_rowspace_oracle(c)) {
                oracle_best = k;
                oracle_witness = words;
            }
        }
        for (int v = next; v < 32; ++v) {
            if (!((blocked >> v) & 1U)) {
                self(self, v + 1, chosen | (std::uint64_t{1} << v), blocked | cube.neighbors(v).bits());
            }
        }
    };
    visit(visit, 0, 0, 0);
    CHECK(sets == 254475);  // independent sets of the 5-cube, including the empty set
    CHECK(best.max_size == oracle_best);
    CHECK(oracle_best == 10);
}

TEST_CASE("f2n explorer guards its range")
{
    CHECK_THROWS_AS(f2n_brute_max(4), PreconditionError);
    CHECK_THROWS_AS(f2n_brute_max(7), PreconditionError);
}

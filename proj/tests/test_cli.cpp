#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rankforge/cli.hpp"

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "rankforge");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = rankforge::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("bounds")
{
    const Result r = run({"bounds", "--r", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("c(10)=29\n") != std::string::npos);
    CHECK(r.out.find("b(10)=36\n") != std::string::npos);
    CHECK(run({"bounds", "--r", "7"}).out.find("b(7)=-\n") != std::string::npos);
    CHECK(run({"bounds", "--r", "1"}).code == 2);
}

TEST_CASE("construct piped into rank")
{
    const Result c5 = run({"construct", "C", "--param", "5"});
    CHECK(c5.code == 0);
    CHECK(run({"check", "alpha"}, c5.out).out == "2\n");
    const Result rank = run({"rank", "-"}, c5.out);
    CHECK(rank.code == 0);
    CHECK(rank.out == "5\n");

    const Result both = run({"rank"}, run({"construct", "B", "--param", "3"}).out + c5.out);
    CHECK(both.out == "6\n5\n");
    const Result rec = run({"construct", "C", "--param", "8", "--recursive"});
    CHECK(run({"rank"}, rec.out).out == "8\n");
    CHECK(run({"construct", "Q", "--param", "3"}).code == 2);
}

TEST_CASE("construct to a file")
{
    const auto path = std::filesystem::temp_directory_path() / "rankforge_cli_test.g6";
    CHECK(run({"construct", "O", "--param", "3", "--out", path.string()}).code == 0);
    CHECK(run({"rank", path.string()}).out == "6\n");
    std::filesystem::remove(path);
    CHECK(run({"rank", path.string()}).code == 2);
}

TEST_CASE("reduce and check")
{
    // A path on three vertices has twin endpoints and reduces to a single edge.
    CHECK(run({"reduce"}, "Bo\n").out == "A_\n");
    CHECK(run({"check", "reduced"}, "Bo\n").out == "false\n");
    CHECK(run({"check", "trianglefree"}, "Dhc\n").out == "true\n");
    CHECK(run({"check", "bipartite"}, "Dhc\n").out == "false\n");
    CHECK(run({"check", "alpha"}, "Dhc\n").out == "2\n");
    CHECK(run({"check", "planar"}, "Dhc\n").code == 2);
    CHECK(run({"rank"}, "not graph6\n").code == 2);
}

TEST_CASE("lemmas")
{
    const Result n = run({"lemma", "neighborhood", "--v", "0"}, "Dhc\n");
    CHECK(n.code == 0);
    CHECK(n.out == "rank(G-N(0))=2 rank(G)-2=3 holds\n");
    CHECK(run({"lemma", "symdiff", "--u", "0", "--v", "1"}, "Dhc\n").code == 2);
    const Result lov = run({"lemma", "lov", "--gap", "1"}, "DhC\n");
    CHECK(lov.code == 0);
    CHECK(lov.out.find("\"lov_matrix\"") != std::string::npos);
    CHECK(run({"lemma", "lov", "--gap", "3"}, "DhC\n").code == 2);
}

TEST_CASE("codes")
{
    const Result s = run({"code", "singleton"}, "000\n011\n101\n110\n");
    CHECK(s.code == 0);
    CHECK(s.out == "size=4 bound=4 holds equality=even_weight\n");
    CHECK(run({"code", "plotkin", "--set", "0,2"}, "Dhc\n").out == "min_symdiff=2 bound=3/1 holds\n");
    CHECK(run({"code", "f2n"}, "10000\n01000\n").code == 0);
    CHECK(run({"code", "f2n"}, "00000\n11000\n").code == 2);
    const Result best = run({"code", "f2n-max", "--n", "5"});
    CHECK(best.code == 0);
    CHECK(best.out.rfind("max_size=10\n", 0) == 0);
}

TEST_CASE("enumerate and merge")
{
    const Result full = run({"enumerate", "--rank", "6", "--class", "bipartite", "--quiet"});
    CHECK(full.code == 0);
    CHECK(full.err.empty());
    CHECK(full.out.find("\"max_order\": 10") != std::string::npos);

    const auto dir = std::filesystem::temp_directory_path();
    std::vector<std::string> files;
    for (int i = 0; i < 2; ++i) {
        const auto path = (dir / ("rankforge_shard_" + std::to_string(i) + ".json")).string();
        const Result shard = run({"enumerate", "--rank", "6", "--class", "bipartite", "--shard",
                                  std::to_string(i) + "/2", "--report", path, "--quiet"});
        CHECK(shard.code == 0);
        files.push_back(path);
    }
    const Result merged = run({"merge", files[0], files[1]});
    CHECK(merged.code == 0);
    CHECK(merged.out.find("\"max_order\": 10") != std::string::npos);
    for (const auto& f : files) {
        std::filesystem::remove(f);
    }

    const Result progress = run({"enumerate", "--rank", "5", "--class", "tf", "--jobs", "1"});
    CHECK(progress.err.find("best so far") != std::string::npos);
    CHECK(run({"enumerate", "--rank", "6", "--class", "planar"}).code == 2);
    CHECK(run({"enumerate", "--rank", "6", "--class", "any", "--shard", "2/2"}).code == 2);
}

TEST_CASE("verify")
{
    const Result bi = run({"verify", "--theorem", "bi", "--r", "6", "--quiet"});
    CHECK(bi.code == 0);
    CHECK(bi.out.rfind("PASS bi r=6: ", 0) == 0);
    CHECK(run({"verify", "--theorem", "main", "--r", "5", "--quiet"}).code == 0);

    // Order 9 also admits a second triangle-free non-bipartite graph of rank 7.
    const Result seven = run({"verify", "--theorem", "main", "--r", "7", "--quiet"});
    CHECK(seven.code == 1);
    CHECK(seven.out.find("counterexample H@Tcd?N\n") != std::string::npos);

    CHECK(run({"verify", "--theorem", "main", "--r", "12"}).code == 2);
    CHECK(run({"verify", "--theorem", "nope", "--r", "6"}).code == 2);
    CHECK(run({"verify", "--r", "6"}).code == 2);
    CHECK(run({}).code == 2);
}

#include "rankforge/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankforge/canonical.hpp"
#include "rankforge/coding.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/enumeration.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/exact_linalg.hpp"
#include "rankforge/report_io.hpp"
#include "rankforge/structure.hpp"

namespace rankforge::cli {

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::string slurp(const std::string& path, std::istream& in)
{
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) {
        throw PreconditionError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<Graph> read_graphs(const std::string& path, std::istream& in)
{
    std::vector<Graph> graphs;
    std::istringstream lines(slurp(path, in));
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        graphs.push_back(from_graph6(line));
    }
    if (graphs.empty()) {
        throw PreconditionError("no graph6 input");
    }
    return graphs;
}

Graph read_graph(const std::string& path, std::istream& in)
{
    auto graphs = read_graphs(path, in);
    if (graphs.size() != 1) {
        throw PreconditionError("expected exactly one graph");
    }
    return graphs.front();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw PreconditionError("cannot write " + path);
    }
    f << text;
}

VertexSet parse_set(const std::string& text)
{
    VertexSet s;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 0 || v >= 64) {
            throw PreconditionError("bad vertex '" + item + "'");
        }
        s |= VertexSet::single(v);
    }
    return s;
}

std::string optional_text(const std::optional<std::uint64_t>& v)
{
    return v ? std::to_string(*v) : "-";
}

struct Options {
    int r = 0;
    std::string family;
    int param = 0;
    bool recursive = false;
    std::string out_path;
    std::string input = "-";
    std::string predicate;
    int u = -1;
    int v = -1;
    int gap = 1;
    int d = 0;
    int n = 0;
    std::string set_text;
    std::string cls;
    int jobs = 0;
    std::string report_path;
    std::string shard;
    bool quiet = false;
    std::vector<std::string> merge_inputs;
    std::string theorem;
};

void parse_shard(const std::string& text, EnumerationOptions& opt)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        throw PreconditionError("--shard expects I/N");
    }
    try {
        opt.shard_index = std::stoi(text.substr(0, slash));
        opt.shard_count = std::stoi(text.substr(slash + 1));
    } catch (const std::exception&) {
        throw PreconditionError("--shard expects I/N");
    }
    if (opt.shard_count < 1 || opt.shard_index < 0 || opt.shard_index >= opt.shard_count) {
        throw PreconditionError("--shard index must be in 0..N-1");
    }
}

int cmd_bounds(const Options& o, std::ostream& out)
{
    const BoundsTable t = bounds(o.r);
    const std::string r = "(" + std::to_string(o.r) + ")";
    out << "m" << r << "<=" << t.m_upper << "\n";
    out << "mu" << r << "=" << t.mu << "\n";
    out << "t" << r << "=" << optional_text(t.t) << "\n";
    out << "b" << r << "=" << optional_text(t.b) << "\n";
    out << "c" << r << "=" << optional_text(t.c) << "\n";
    return 0;
}

int cmd_construct(const Options& o, std::ostream& out)
{
    Graph g;
    if (o.family == "B") {
        g = construct_B(o.param);
    } else if (o.family == "O") {
        g = construct_O(o.param);
    } else if (o.family == "C") {
        g = o.recursive ? construct_C_recursive(o.param) : construct_C(o.param).graph;
    } else {
        g = construct_remark_H(o.param);
    }
    write_text(o.out_path, to_graph6(g) + "\n", out);
    return 0;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out)
{
    for (const Graph& g : read_graphs(o.input, in)) {
        if (o.predicate == "reduced") {
            out << (is_reduced(g) ? "true" : "false") << "\n";
        } else if (o.predicate == "trianglefree") {
            out << (is_triangle_free(g) ? "true" : "false") << "\n";
        } else if (o.predicate == "bipartite") {
            out << (bipartition(g) ? "true" : "false") << "\n";
        } else {
            out << independence_number(g).size << "\n";
        }
    }
    return 0;
}

int print_drop(const RankDrop& d, const std::string& lhs, std::ostream& out)
{
    out << lhs << "=" << d.lhs << " rank(G)-2=" << d.rhs << " " << (d.holds ? "holds" : "FAILS") << "\n";
    return d.holds ? 0 : kFail;
}

int cmd_lemma(const std::string& which, const Options& o, std::istream& in, std::ostream& out)
{
    const Graph g = read_graph(o.input, in);
    if (which == "neighborhood") {
        return print_drop(rank_drop_neighborhood(g, o.v), "rank(G-N(" + std::to_string(o.v) + "))", out);
    }
    if (which == "symdiff") {
        return print_drop(rank_drop_symdiff(g, o.u, o.v),
                          "rank(G-(N(" + std::to_string(o.u) + ")^N(" + std::to_string(o.v) + ")))", out);
    }
    StructureReport rep = max_subgraph_below_rank(g, o.gap);
    const bool lov = validate_lov_matrix_obstruction(rep);
    rep.verdicts["lov_matrix"] = lov ? Verdict{} : Verdict{false, "obstructing principal submatrix present"};
    out << to_json(rep);
    return rep.all_hold() ? 0 : kFail;
}

int cmd_code(const std::string& which, const Options& o, std::istream& in, std::ostream& out)
{
    if (which == "f2n-max") {
        const F2nOptimum best = f2n_brute_max(o.n);
        out << "max_size=" << best.max_size << "\n";
        out << "hyperplanes=" << best.hyperplanes << "\n";
        out << best.witness.to_text();
        return 0;
    }
    if (which == "plotkin") {
        const Graph g = read_graph(o.input, in);
        const PlotkinCheck p = plotkin_bound_check(g, parse_set(o.set_text));
        out << "min_symdiff=" << p.min_symdiff << " bound=" << p.bound.numerator() << "/" << p.bound.denominator()
            << " " << (p.holds ? "holds" : "FAILS") << "\n";
        return p.holds ? 0 : kFail;
    }
    const BinaryCode c = BinaryCode::parse(slurp(o.input, in));
    if (which == "singleton") {
        const int d = o.d > 0 ? o.d : min_distance(c);
        const SingletonVerdict s = singleton_verify(c, d);
        out << "size=" << c.size() << " bound=" << s.bound << " " << (s.holds ? "holds" : "FAILS")
            << " equality=" << to_string(s.equality) << "\n";
        return s.holds ? 0 : kFail;
    }
    const F2nCheck f = f2n_check(c);
    out << "size=" << c.size() << " bound=" << f.bound << " " << (f.holds ? "holds" : "FAILS") << "\n";
    return f.holds ? 0 : kFail;
}

EnumerationOptions enumeration_options(const Options& o, std::ostream& err)
{
    EnumerationOptions opt;
    opt.jobs = o.jobs;
    if (!o.shard.empty()) {
        parse_shard(o.shard, opt);
    }
    if (!o.quiet) {
        opt.progress = &err;
    }
    return opt;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto rep = enumerate_extremal(o.r, parse_graph_class(o.cls), enumeration_options(o, err));
    write_text(o.report_path, to_json(rep), out);
    return 0;
}

int cmd_merge(const Options& o, std::istream& in, std::ostream& out)
{
    std::vector<EnumerationReport> shards;
    for (const auto& path : o.merge_inputs) {
        shards.push_back(enumeration_report_from_json(slurp(path, in)));
    }
    write_text(o.report_path, to_json(merge_reports(shards)), out);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const Theorem t = parse_theorem(o.theorem);
    const TheoremCheck check = verify_theorem(t, o.r, enumeration_options(o, err));
    out << (check.pass ? "PASS " : "FAIL ") << to_string(t) << " r=" << o.r << ": " << check.summary << "\n";
    for (const auto& g : check.counterexamples) {
        out << "counterexample " << g << "\n";
    }
    return check.pass ? 0 : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact rank, extremal constructions and enumeration of reduced graphs"};
    app.require_subcommand(1);
    Options o;

    auto* bounds_cmd = app.add_subcommand("bounds", "Order bounds for rank r");
    bounds_cmd->add_option("--r", o.r, "Rank")->required();

    auto* construct = app.add_subcommand("construct", "Build B_n, O_n, C_r or the remark graph (graph6 out)");
    construct->add_option("family", o.family)->required()->check(CLI::IsMember({"B", "O", "C", "remark"}));
    construct->add_option("--param", o.param, "n for B/O, r for C/remark")->required();
    construct->add_flag("--recursive", o.recursive, "C_r by the recursive construction");
    construct->add_option("--out", o.out_path, "Output file (default stdout)");

    auto* rank_cmd = app.add_subcommand("rank", "Rank of each graph6 input");
    rank_cmd->add_option("input", o.input, "File or - for stdin");

    auto* reduce_cmd = app.add_subcommand("reduce", "Remove isolated vertices and twins");
    reduce_cmd->add_option("input", o.input, "File or - for stdin");

    auto* check_cmd = app.add_subcommand("check", "Graph predicates");
    check_cmd->add_option("predicate", o.predicate)
        ->required()
        ->check(CLI::IsMember({"reduced", "trianglefree", "bipartite", "alpha"}));
    check_cmd->add_option("input", o.input, "File or - for stdin");

    auto* lemma = app.add_subcommand("lemma", "Rank-drop and structure checks");
    lemma->require_subcommand(1);
    auto* neighborhood = lemma->add_subcommand("neighborhood", "rank(G - N(v)) <= rank(G) - 2");
    neighborhood->add_option("--v", o.v)->required();
    neighborhood->add_option("input", o.input);
    auto* symdiff = lemma->add_subcommand("symdiff", "rank(G - (N(u) xor N(v))) <= rank(G) - 2");
    symdiff->add_option("--u", o.u)->required();
    symdiff->add_option("--v", o.v)->required();
    symdiff->add_option("input", o.input);
    auto* lov = lemma->add_subcommand("lov", "Largest induced subgraph of lower rank (JSON report)");
    lov->add_option("--gap", o.gap)->check(CLI::IsMember({1, 2}));
    lov->add_option("input", o.input);

    auto* code = app.add_subcommand("code", "Binary code bounds");
    code->require_subcommand(1);
    auto* singleton = code->add_subcommand("singleton", "|C| <= 2^(n-d+1) with equality classification");
    singleton->add_option("--d", o.d, "Distance (default: minimum distance of the code)");
    singleton->add_option("input", o.input);
    auto* plotkin = code->add_subcommand("plotkin", "Symmetric-difference bound for an independent set");
    plotkin->add_option("--set", o.set_text, "Comma-separated vertices")->required();
    plotkin->add_option("input", o.input);
    auto* f2n = code->add_subcommand("f2n", "|C| <= 5*2^(n-4) when the all-ones vector is in the row space");
    f2n->add_option("input", o.input);
    auto* f2n_max = code->add_subcommand("f2n-max", "Exact optimum of the f2n setting by search");
    f2n_max->add_option("--n", o.n)->required();

    auto* enumerate = app.add_subcommand("enumerate", "Extremal reduced graphs of rank r in a class");
    enumerate->add_option("--rank", o.r)->required();
    enumerate->add_option("--class", o.cls)
        ->required()
        ->check(CLI::IsMember({"any", "triangle-free", "bipartite", "triangle-free-nonbipartite", "tf", "tf-nb"}));
    enumerate->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");
    enumerate->add_option("--report", o.report_path, "Report file (default stdout)");
    enumerate->add_option("--shard", o.shard, "Process cores i mod N only, as I/N");
    enumerate->add_flag("--quiet", o.quiet, "No progress lines");

    auto* merge = app.add_subcommand("merge", "Merge shard reports");
    merge->add_option("inputs", o.merge_inputs)->required();
    merge->add_option("--report", o.report_path);

    auto* verify = app.add_subcommand("verify", "Reproduce an extremal claim");
    verify->add_option("--theorem", o.theorem)->required()->check(CLI::IsMember({"main", "bi", "bigen", "remark"}));
    verify->add_option("--r", o.r)->required();
    verify->add_option("--jobs", o.jobs);
    verify->add_flag("--quiet", o.quiet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : kUsage;
    }

    try {
        if (*bounds_cmd) {
            return cmd_bounds(o, out);
        }
        if (*construct) {
            return cmd_construct(o, out);
        }
        if (*rank_cmd) {
            for (const Graph& g : read_graphs(o.input, in)) {
                out << graph_rank(g) << "\n";
            }
            return 0;
        }
        if (*reduce_cmd) {
            for (const Graph& g : read_graphs(o.input, in)) {
                out << to_graph6(reduce(g)) << "\n";
            }
            return 0;
        }
        if (*check_cmd) {
            return cmd_check(o, in, out);
        }
        if (*lemma) {
            return cmd_lemma(lemma->get_subcommands().front()->get_name(), o, in, out);
        }
        if (*code) {
            return cmd_code(code->get_subcommands().front()->get_name(), o, in, out);
        }
        if (*enumerate) {
            return cmd_enumerate(o, out, err);
        }
        if (*merge) {
            return cmd_merge(o, in, out);
        }
        if (*verify) {
            return cmd_verify(o, out, err);
        }
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace rankforge::cli

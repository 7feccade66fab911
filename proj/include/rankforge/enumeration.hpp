#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankforge/exact_linalg.hpp"
#include "rankforge/graph.hpp"

namespace rankforge {

enum class GraphClass { any, triangle_free, bipartite, triangle_free_nonbipartite };

std::string to_string(GraphClass cls);
/// Accepts "any", "triangle-free", "bipartite", "triangle-free-nonbipartite" (and "tf", "tf-nb").
GraphClass parse_graph_class(std::string_view name);
bool in_class(const Graph& g, GraphClass cls);

/// Largest rank the enumeration accepts: 9, or RANKFORGE_MAX_R when set.
int max_enumeration_rank();

/// A graph on r vertices with nonsingular adjacency matrix, plus its adjugate.
struct Core {
    Graph graph;
    Int128 det = 0;
    IntMatrix adjugate;
};

Core make_core(const Graph& g);

/// One representative per isomorphism class of graphs on r vertices whose
/// adjacency matrix is nonsingular and which satisfy the hereditary part of `cls`
/// (triangle-freeness, bipartiteness). Built vertex by vertex with canonical-form
/// rejection, ordered by certificate.
std::vector<Core> gen_cores(int r, GraphClass cls);

/// Neighborhood vector b into the core with y = adj(A) b.
struct ExtensionCandidate {
    std::uint64_t b = 0;
    std::vector<std::int64_t> y;
};

/// All b != 0 with b^T adj(A) b = 0 that are not rows of A, ascending by value.
std::vector<ExtensionCandidate> candidates(const Core& core);

/// Forced adjacency between two extension vertices: b^T adj(A) b2 / det when that
/// is 0 or 1, absent otherwise.
std::optional<int> compatible(const Core& core, const ExtensionCandidate& b, const ExtensionCandidate& b2);

/// The core plus one vertex per chosen candidate (appended in order), with all
/// entries forced by rank preservation. Does not check compatibility.
Graph complete_graph(const Core& core, const std::vector<ExtensionCandidate>& chosen);

struct ExtensionResult {
    int size = -1;  ///< extension vertices in an optimal completion; -1 when none is in class
    /// Every optimal completion, as candidate lists.
    std::vector<std::vector<ExtensionCandidate>> optimal_sets;
    std::uint64_t nodes = 0;
};

/// Largest set of pairwise compatible candidates whose completion lies in `cls`.
ExtensionResult max_extension(const Core& core, GraphClass cls);

struct EnumerationOptions {
    int jobs = 0;                       ///< 0 = hardware concurrency
    int shard_index = 0;
    int shard_count = 1;                ///< cores with index % shard_count == shard_index
    std::ostream* progress = nullptr;   ///< "core i/N: best so far k" lines
    bool seed_with_known_graph = true;  ///< prune below a verified in-class construction
};

struct EnumerationReport {
    int rank = 0;
    GraphClass cls = GraphClass::any;
    int max_order = 0;
    std::vector<std::string> extremal;  ///< canonical graph6, ascending
    std::uint64_t cores_processed = 0;
    std::uint64_t candidates_total = 0;
    std::uint64_t nodes_explored = 0;
    std::int64_t elapsed_ms = 0;
    int shard_index = 0;
    int shard_count = 1;
};

/// Maximum order of a reduced rank-r graph in `cls` and every graph attaining it.
EnumerationReport enumerate_extremal(int r, GraphClass cls, const EnumerationOptions& options = {});

/// Combines shard reports of one (rank, class) run.
EnumerationReport merge_reports(const std::vector<EnumerationReport>& shards);

/// Canonical graph6 of every reduced rank-r graph in `cls` whose order lies in
/// [min_order, max_order], ascending.
std::vector<std::string> enumerate_orders(int r, GraphClass cls, int min_order, int max_order,
                                          const EnumerationOptions& options = {});

enum class Theorem { main, bi, bigen, remark };

std::string to_string(Theorem t);
Theorem parse_theorem(std::string_view name);

struct TheoremCheck {
    bool pass = false;
    std::string summary;
    std::vector<std::string> counterexamples;  ///< graph6
};

/// Reproduces one extremal claim at rank r. Throws PreconditionError outside
/// the guarded range (main 5..9, bi 4/6/8, bigen 6/8, remark 7/9/11; raised by RANKFORGE_MAX_R).
TheoremCheck verify_theorem(Theorem which, int r, const EnumerationOptions& options = {});

}  // namespace rankforge

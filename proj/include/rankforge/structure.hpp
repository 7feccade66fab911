#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/graph.hpp"

namespace rankforge {

struct RankDrop {
    int lhs = 0;  ///< rank after the deletion
    int rhs = 0;  ///< rank(G) - 2
    bool holds = false;
};

/// rank(G - N(v)) against rank(G) - 2. Needs a reduced graph.
RankDrop rank_drop_neighborhood(const Graph& g, int v);

/// rank(G - (N(u) xor N(v))) against rank(G) - 2 for distinct non-adjacent u, v
/// of a reduced graph.
RankDrop rank_drop_symdiff(const Graph& g, int u, int v);

struct Verdict {
    bool ok = true;
    std::string witness;  ///< what failed, empty when ok
};

/// Decomposition of a reduced graph around a maximum-order induced subgraph H
/// of lower rank.
struct StructureReport {
    Graph host;
    int gap = 1;
    VertexSet h_vertices;
    int rank_h = 0;
    int rank_g = 0;
    /// Duplication classes of H as (v_i, v_i') in host numbering, oriented so that
    /// t1 sits in N(v_i) and t2 in N(v_i') when a labeling exists.
    std::vector<std::pair<int, int>> duplication_pairs;
    /// Classes of H with three or more members (each one falsifies the size-two property).
    std::vector<VertexSet> oversized_classes;
    int isolated_count = 0;
    VertexSet isolated;
    VertexSet t1;
    VertexSet t2;
    /// Named checks: "rank_lower_bound", "nonreduced_equality", "deletion_size",
    /// "isolated_neighborhood", "class_sizes", "labeling".
    std::map<std::string, Verdict> verdicts;

    VertexSet deleted() const { return host.vertices() - h_vertices; }
    bool all_hold() const;
};

/// Largest induced H with rank(H) <= rank(G) - gap (gap 1 or 2), found exhaustively
/// by increasing deletion size; ties go to the lexicographically smallest deleted
/// set. Every property of the decomposition is evaluated into `verdicts`.
StructureReport max_subgraph_below_rank(const Graph& g, int gap, int max_order = 14);

/// True iff no two duplication classes and two deleted vertices form the principal
/// submatrix that rules out a consistent T1/T2 labeling: both deleted vertices on
/// the same side of one class and on opposite sides of the other.
bool validate_lov_matrix_obstruction(const StructureReport& report);

}  // namespace rankforge

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankforge/graph.hpp"

namespace rankforge {

/// Order bounds attached to a rank r. Fields outside their domain are absent.
struct BoundsTable {
    int r = 0;
    std::uint64_t m_upper = 0;           ///< 2^r - 1, trivial bound for any reduced graph
    std::uint64_t mu = 0;                ///< order of the Kotlov-Lovasz family
    std::optional<std::uint64_t> t;      ///< reduced trees, even r
    std::optional<std::uint64_t> b;      ///< reduced bipartite graphs, even r
    std::optional<std::uint64_t> c;      ///< reduced non-bipartite triangle-free graphs, r >= 4
};

/// Throws PreconditionError unless 2 <= r <= 63.
BoundsTable bounds(int r);

/// 3 * 2^(floor(r/2) - 2) + floor(r/2), r >= 4.
std::uint64_t c_bound(int r);
/// 2^(r/2) + r/2 - 1, r even.
std::uint64_t b_bound(int r);

/// Bipartite incidence graph of a set family over {0..n-1}: vertices 0..n-1 are
/// the ground set, vertex n+i is family[i]. Subsets are bitmasks.
Graph incidence_graph(int n, const std::vector<std::uint64_t>& family);

/// Incidence graph of all nonempty subsets (binary-counter order).
Graph construct_B(int n);
/// Incidence graph of all odd-size subsets (binary-counter order).
Graph construct_O(int n);

struct LabeledConstruction {
    Graph graph;
    /// Role name -> vertices: "x", "x'", "y", "z", "N", "N'", "M", "M'", "B-side", "subset-side".
    std::map<std::string, VertexSet> roles;

    VertexSet role(const std::string& name) const;
    int vertex(const std::string& name) const;
};

/// The extremal triangle-free graph of rank r, built directly from B_{floor(r/2)-1}.
///
/// Numbering: ground set B = 0..k-1 (x = 0), then the nonempty subsets of B by
/// bitmask, then for even r the copy x' and the copies M' (subset order), for odd
/// r the copies N' (subset order); y and z come last.
LabeledConstruction construct_C(int r);

/// The same graph grown from the 5-path (r = 4) or 5-cycle (r = 5) by the
/// duplicate-and-attach step, two ranks at a time.
Graph construct_C_recursive(int r);

/// For odd r: C_r minus the edge {y, z}.
Graph construct_remark_H(int r);

}  // namespace rankforge

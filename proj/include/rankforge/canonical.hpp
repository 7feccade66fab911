#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rankforge/graph.hpp"

namespace rankforge {

/// Relabeling-invariant certificate of a graph.
struct CanonicalForm {
    int n = 0;
    /// graph6 text of the canonically relabeled graph.
    std::string cert;
    /// labeling[v] is the canonical position of input vertex v.
    std::vector<int> labeling;
    boost::multiprecision::cpp_int automorphism_group_size = 1;
    /// Generators of the automorphism group found during the search.
    std::vector<std::vector<int>> generators;

    /// Certificates alone decide isomorphism.
    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b)
    {
        return a.n == b.n && a.cert == b.cert;
    }
};

/// Partition refinement plus individualization search with automorphism pruning.
/// Target cell: first largest non-singleton cell; its vertices are tried in ascending order.
CanonicalForm canonical_form(const Graph& g);

/// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Standard graph6: size byte(s), then the upper triangle column by column in
/// 6-bit groups, each offset by 63. Orders 63 and 64 use the 126-prefixed long size.
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6; accepts an optional ">>graph6<<" header and trailing
/// whitespace. Throws ParseError on malformed input.
Graph from_graph6(std::string_view text);

}  // namespace rankforge

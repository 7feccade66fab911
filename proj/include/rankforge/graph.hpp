#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rankforge {

/// Neighborhoods are single machine words, so graphs are capped at this order.
inline constexpr int kMaxVertices = 64;

/// A subset of the vertices of some host graph, stored as a 64-bit mask.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);

    /// {0, ..., n-1}
    static constexpr VertexSet first(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest member; -1 when empty.
    constexpr int min() const { return bits_ ? std::countr_zero(bits_) : -1; }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    std::vector<int> members() const;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending member lists.
bool lex_less(VertexSet a, VertexSet b);

/// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices. Throws CapacityError when n > 64.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    /// Center 0 joined to leaves 1..leaves.
    static Graph star(int leaves);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::first(n_); }
    VertexSet neighbors(int v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
    int degree(int v) const { return neighbors(v).size(); }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    /// Appends a vertex adjacent to `nbrs` and returns its index.
    int add_vertex(VertexSet nbrs = {});

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// N(u) xor N(v).
VertexSet symmetric_difference(const Graph& g, int u, int v);

bool is_triangle_free(const Graph& g);
bool is_independent(const Graph& g, VertexSet s);

/// A proper 2-coloring (first, second) if one exists. Isolated vertices, and the
/// smallest vertex of every component, go to the first part.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

/// Closed walk of odd length (first vertex not repeated at the end) when g is
/// not bipartite; absent otherwise.
std::optional<std::vector<int>> odd_closed_walk(const Graph& g);

/// Every proper 2-coloring up to swapping the parts; one per choice of side for
/// each component after the first. Empty when g is not bipartite.
std::vector<std::pair<VertexSet, VertexSet>> all_bipartitions(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

/// Maximal classes (size >= 2) of vertices with equal open neighborhoods,
/// ordered by smallest member.
std::vector<VertexSet> duplication_classes(const Graph& g);

bool is_reduced(const Graph& g);

/// Deletes isolated vertices and all but the smallest member of each duplication
/// class, repeating until reduced.
Graph reduce(const Graph& g);

/// Vertices of `keep`, relabeled 0..|keep|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

inline Graph delete_vertices(const Graph& g, VertexSet removed)
{
    return induced_subgraph(g, g.vertices() - removed);
}

/// Graph whose vertex perm[v] corresponds to vertex v of g.
Graph relabel(const Graph& g, std::span<const int> perm);

struct IndependentSet {
    int size = 0;
    VertexSet witness;
};

/// Exact independence number with one maximum independent set.
IndependentSet independence_number(const Graph& g);

/// Every independent set of size alpha(g), in increasing lex order of members.
/// Throws CapExceededError once more than `cap` sets are found.
std::vector<VertexSet> maximum_independent_sets(const Graph& g, std::size_t cap = 100000);

}  // namespace rankforge

#include "rankforge/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rankforge/errors.hpp"

namespace rankforge {

VertexSet::VertexSet(std::initializer_list<int> members)
{
    for (int v : members) {
        if (v < 0 || v >= kMaxVertices) {
            throw PreconditionError("vertex index " + std::to_string(v) + " out of range");
        }
        bits_ |= std::uint64_t{1} << v;
    }
}

std::vector<int> VertexSet::members() const
{
    return {begin(), end()};
}

bool lex_less(VertexSet a, VertexSet b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) {
            return *ia < *ib;
        }
    }
    return ia == a.end() && ib != b.end();
}

Graph::Graph(int n)
{
    if (n < 0) {
        throw PreconditionError("negative vertex count");
    }
    if (n > kMaxVertices) {
        throw CapacityError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
    }
    n_ = n;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::path(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph Graph::cycle(int n)
{
    if (n < 3) {
        throw PreconditionError("a cycle needs at least 3 vertices");
    }
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph Graph::star(int leaves)
{
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

int Graph::edge_count() const
{
    int twice = 0;
    for (int v = 0; v < n_; ++v) {
        twice += degree(v);
    }
    return twice / 2;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_) {
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw PreconditionError("loops are not allowed");
    }
    rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::add_vertex(VertexSet nbrs)
{
    if (n_ == kMaxVertices) {
        throw CapacityError("cannot add a vertex beyond " + std::to_string(kMaxVertices));
    }
    if (!nbrs.subset_of(vertices())) {
        throw PreconditionError("neighbors of a new vertex must already exist");
    }
    int v = n_++;
    for (int u : nbrs) {
        add_edge(u, v);
    }
    return v;
}

bool operator==(const Graph& a, const Graph& b)
{
    return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

VertexSet symmetric_difference(const Graph& g, int u, int v)
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
        throw PreconditionError("vertex index out of range");
    }
    return g.neighbors(u) ^ g.neighbors(v);
}

bool is_triangle_free(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u && !(g.neighbors(u) & g.neighbors(v)).empty()) {
                return false;
            }
        }
    }
    return true;
}

bool is_independent(const Graph& g, VertexSet s)
{
    for (int v : s) {
        if (!(g.neighbors(v) & s).empty()) {
            return false;
        }
    }
    return true;
}

namespace {

struct Coloring {
    std::vector<int> color;   // -1 unvisited, else 0/1
    std::vector<int> parent;  // BFS tree
    std::vector<int> depth;
    int clash_u = -1;         // an edge inside one color class, if any
    int clash_v = -1;
};

Coloring bfs_color(const Graph& g)
{
    const int n = g.order();
    Coloring c{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, 0)};
    std::vector<int> queue;
    queue.reserve(n);
    for (int root = 0; root < n; ++root) {
        if (c.color[root] != -1) {
            continue;
        }
        c.color[root] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (c.color[w] == -1) {
                    c.color[w] = 1 - c.color[u];
                    c.parent[w] = u;
                    c.depth[w] = c.depth[u] + 1;
                    queue.push_back(w);
                } else if (c.color[w] == c.color[u] && c.clash_u == -1) {
                    c.clash_u = u;
                    c.clash_v = w;
                }
            }
        }
    }
    return c;
}

}  // namespace

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g)
{
    Coloring c = bfs_color(g);
    if (c.clash_u != -1) {
        return std::nullopt;
    }
    VertexSet first, second;
    for (int v = 0; v < g.order(); ++v) {
        (c.color[v] == 0 ? first : second) |= VertexSet::single(v);
    }
    return std::make_pair(first, second);
}

std::optional<std::vector<int>> odd_closed_walk(const Graph& g)
{
    Coloring c = bfs_color(g);
    if (c.clash_u == -1) {
        return std::nullopt;
    }
    // u -> root along the tree, root -> v, then the clashing edge closes the walk.
    std::vector<int> up;
    for (int x = c.clash_u; x != -1; x = c.parent[x]) {
        up.push_back(x);
    }
    std::vector<int> down;
    for (int x = c.clash_v; x != -1; x = c.parent[x]) {
        down.push_back(x);
    }
    std::vector<int> walk = up;
    // up ends at the root and down ends at the same root; skip the duplicate.
    walk.insert(walk.end(), down.rbegin() + 1, down.rend());
    return walk;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int root = 0; root < g.order(); ++root) {
        if (seen.contains(root)) {
            continue;
        }
        VertexSet comp = VertexSet::single(root);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) {
                next |= g.neighbors(v);
            }
            frontier = next - comp;
            comp |= next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

std::vector<std::pair<VertexSet, VertexSet>> all_bipartitions(const Graph& g)
{
    auto base = bipartition(g);
    if (!base) {
        return {};
    }
    auto comps = connected_components(g);
    if (comps.size() > 21) {
        throw CapacityError("too many components to list every bipartition");
    }
    std::vector<std::pair<VertexSet, VertexSet>> out;
    const std::uint64_t combos = std::uint64_t{1} << (comps.size() - 1);
    for (std::uint64_t flip = 0; flip < combos; ++flip) {
        VertexSet first = base->first, second = base->second;
        for (std::size_t i = 1; i < comps.size(); ++i) {
            if ((flip >> (i - 1)) & 1U) {
                VertexSet a = first & comps[i], b = second & comps[i];
                first = (first - comps[i]) | b;
                second = (second - comps[i]) | a;
            }
        }
        out.emplace_back(first, second);
    }
    return out;
}

std::vector<VertexSet> duplication_classes(const Graph& g)
{
    std::map<std::uint64_t, VertexSet> by_nbhd;
    for (int v = 0; v < g.order(); ++v) {
        by_nbhd[g.neighbors(v).bits()] |= VertexSet::single(v);
    }
    std::vector<VertexSet> classes;
    for (const auto& [nbhd, cls] : by_nbhd) {
        if (cls.size() >= 2) {
            classes.push_back(cls);
        }
    }
    std::sort(classes.begin(), classes.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
    return classes;
}

bool is_reduced(const Graph& g)
{
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) {
            return false;
        }
    }
    return duplication_classes(g).empty();
}

Graph reduce(const Graph& g)
{
    Graph cur = g;
    for (;;) {
        VertexSet drop;
        for (int v = 0; v < cur.order(); ++v) {
            if (cur.degree(v) == 0) {
                drop |= VertexSet::single(v);
            }
        }
        for (VertexSet cls : duplication_classes(cur)) {
            drop |= cls.without(cls.min());
        }
        if (drop.empty()) {
            return cur;
        }
        cur = delete_vertices(cur, drop);
    }
}

Graph induced_subgraph(const Graph& g, VertexSet keep)
{
    if (!keep.subset_of(g.vertices())) {
        throw PreconditionError("kept vertices must belong to the graph");
    }
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v : keep) {
        index[static_cast<std::size_t>(v)] = next++;
    }
    Graph h(keep.size());
    for (int u : keep) {
        for (int v : g.neighbors(u) & keep) {
            if (v > u) {
                h.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
            }
        }
    }
    return h;
}

Graph relabel(const Graph& g, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != g.order()) {
        throw PreconditionError("permutation size does not match graph order");
    }
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u) {
                h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
            }
        }
    }
    return h;
}

namespace {

// Number of cliques in a greedy clique cover of `pool`; an upper bound on any
// independent set inside it.
int clique_cover_bound(const Graph& g, VertexSet pool)
{
    int cliques = 0;
    while (!pool.empty()) {
        int v = pool.min();
        VertexSet clique = VertexSet::single(v);
        VertexSet cand = g.neighbors(v) & pool;
        while (!cand.empty()) {
            int w = cand.min();
            clique |= VertexSet::single(w);
            cand &= g.neighbors(w);
        }
        pool -= clique;
        ++cliques;
    }
    return cliques;
}

int max_degree_vertex(const Graph& g, VertexSet pool, int& degree)
{
    int best = -1;
    degree = -1;
    for (int v : pool) {
        int d = (g.neighbors(v) & pool).size();
        if (d > degree) {
            degree = d;
            best = v;
        }
    }
    return best;
}

struct MisSearch {
    explicit MisSearch(const Graph& graph) : g(graph) {}

    const Graph& g;
    // In "all" mode, every set reaching `target` is collected, and pruning keeps ties.
    bool collect_all = false;
    int target = 0;
    std::size_t cap = 0;
    int best = -1;
    VertexSet best_set;
    std::vector<VertexSet> found;

    void run(VertexSet chosen, VertexSet pool)
    {
        // Vertices with no neighbor left in the pool belong to every maximum extension.
        for (;;) {
            VertexSet free;
            for (int v : pool) {
                if ((g.neighbors(v) & pool).empty()) {
                    free |= VertexSet::single(v);
                }
            }
            if (free.empty()) {
                break;
            }
            chosen |= free;
            pool -= free;
        }
        if (!collect_all) {
            // A pool vertex of degree one can always be swapped into an optimum.
            for (int v : pool) {
                if ((g.neighbors(v) & pool).size() == 1) {
                    run(chosen.with(v), pool - g.neighbors(v) - VertexSet::single(v));
                    return;
                }
            }
        }
        if (pool.empty()) {
            record(chosen);
            return;
        }
        const int bound = chosen.size() + clique_cover_bound(g, pool);
        if (collect_all ? bound < target : bound <= best) {
            return;
        }
        int deg = 0;
        int v = max_degree_vertex(g, pool, deg);
        run(chosen.with(v), pool - g.neighbors(v) - VertexSet::single(v));
        run(chosen, pool.without(v));
    }

    void record(VertexSet s)
    {
        if (collect_all) {
            if (s.size() == target) {
                if (found.size() >= cap) {
                    throw CapExceededError("more than " + std::to_string(cap) + " maximum independent sets",
                                           found.size());
                }
                found.push_back(s);
            }
        } else if (s.size() > best) {
            best = s.size();
            best_set = s;
        }
    }
};

}  // namespace

IndependentSet independence_number(const Graph& g)
{
    MisSearch search(g);
    search.run({}, g.vertices());
    return {std::max(search.best, 0), search.best_set};
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g, std::size_t cap)
{
    MisSearch search(g);
    search.collect_all = true;
    search.target = independence_number(g).size;
    search.cap = cap;
    search.run({}, g.vertices());
    std::sort(search.found.begin(), search.found.end(), lex_less);
    return search.found;
}

}  // namespace rankforge

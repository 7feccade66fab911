#include "rankforge/constructions.hpp"

#include <algorithm>
#include <set>

#include "rankforge/errors.hpp"

namespace rankforge {

namespace {

std::uint64_t pow2(int e)
{
    return std::uint64_t{1} << e;
}

void check_capacity(std::uint64_t order, const std::string& what)
{
    if (order > static_cast<std::uint64_t>(kMaxVertices)) {
        throw CapacityError(what + " has " + std::to_string(order) + " vertices, more than " +
                            std::to_string(kMaxVertices));
    }
}

std::vector<int> bfs_distances(const Graph& g, int src)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        for (int w : g.neighbors(queue[h])) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(queue[h])] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

VertexSet first_pair_at_distance(const Graph& g, int d)
{
    for (int u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = u + 1; v < g.order(); ++v) {
            if (dist[static_cast<std::size_t>(v)] == d) {
                return VertexSet{u, v};
            }
        }
    }
    throw InternalError("no vertex pair at the requested distance");
}

}  // namespace

std::uint64_t c_bound(int r)
{
    if (r < 4) {
        throw PreconditionError("c(r) is defined for r >= 4");
    }
    const int h = r / 2;
    return 3 * pow2(h - 2) + static_cast<std::uint64_t>(h);
}

std::uint64_t b_bound(int r)
{
    if (r < 2 || r % 2 != 0) {
        throw PreconditionError("b(r) is defined for even r >= 2");
    }
    return pow2(r / 2) + static_cast<std::uint64_t>(r / 2) - 1;
}

BoundsTable bounds(int r)
{
    if (r < 2 || r > 63) {
        throw PreconditionError("bounds need 2 <= r <= 63");
    }
    BoundsTable t;
    t.r = r;
    t.m_upper = pow2(r) - 1;
    t.mu = (r % 2 == 0) ? pow2((r + 2) / 2) - 2 : 5 * pow2((r - 3) / 2) - 2;
    if (r % 2 == 0) {
        t.t = static_cast<std::uint64_t>(3 * r / 2 - 1);
        t.b = b_bound(r);
    }
    if (r >= 4) {
        t.c = c_bound(r);
    }
    return t;
}

Graph incidence_graph(int n, const std::vector<std::uint64_t>& family)
{
    if (n < 1) {
        throw PreconditionError("incidence graph needs a nonempty ground set");
    }
    check_capacity(static_cast<std::uint64_t>(n) + family.size(), "incidence graph");
    const std::uint64_t ground = VertexSet::first(n).bits();
    std::set<std::uint64_t> seen;
    Graph g(n);
    for (std::uint64_t member : family) {
        if ((member & ~ground) != 0) {
            throw PreconditionError("family member not contained in the ground set");
        }
        if (!seen.insert(member).second) {
            throw PreconditionError("duplicate family member");
        }
        g.add_vertex(VertexSet(member));
    }
    return g;
}

Graph construct_B(int n)
{
    if (n < 1) {
        throw PreconditionError("B_n needs n >= 1");
    }
    check_capacity(pow2(std::min(n, 40)) + static_cast<std::uint64_t>(n) - 1, "B_" + std::to_string(n));
    std::vector<std::uint64_t> family;
    for (std::uint64_t s = 1; s < pow2(n); ++s) {
        family.push_back(s);
    }
    return incidence_graph(n, family);
}

Graph construct_O(int n)
{
    if (n < 1) {
        throw PreconditionError("O_n needs n >= 1");
    }
    check_capacity(pow2(std::min(n, 40) - 1) + static_cast<std::uint64_t>(n), "O_" + std::to_string(n));
    std::vector<std::uint64_t> family;
    for (std::uint64_t s = 1; s < pow2(n); ++s) {
        if (std::popcount(s) % 2 == 1) {
            family.push_back(s);
        }
    }
    return incidence_graph(n, family);
}

VertexSet LabeledConstruction::role(const std::string& name) const
{
    auto it = roles.find(name);
    if (it == roles.end()) {
        throw PreconditionError("construction has no role '" + name + "'");
    }
    return it->second;
}

int LabeledConstruction::vertex(const std::string& name) const
{
    VertexSet s = role(name);
    if (s.size() != 1) {
        throw PreconditionError("role '" + name + "' is not a single vertex");
    }
    return s.min();
}

LabeledConstruction construct_C(int r)
{
    if (r < 4) {
        throw PreconditionError("C_r is defined for r >= 4");
    }
    if (r > 20) {
        throw CapacityError("C_" + std::to_string(r) + " exceeds " + std::to_string(kMaxVertices) + " vertices");
    }
    check_capacity(c_bound(r), "C_" + std::to_string(r));

    const int k = r / 2 - 1;
    LabeledConstruction out;
    Graph& g = out.graph;
    g = Graph(k);
    VertexSet ground = VertexSet::first(k);
    VertexSet with_x, without_x, subsets;
    for (std::uint64_t s = 1; s < pow2(k); ++s) {
        int v = g.add_vertex(VertexSet(s));
        subsets |= VertexSet::single(v);
        ((s & 1U) ? with_x : without_x) |= VertexSet::single(v);
    }
    const int x = 0;
    out.roles["x"] = VertexSet::single(x);
    out.roles["N"] = with_x;
    out.roles["B-side"] = ground;
    out.roles["subset-side"] = subsets;

    if (r % 2 == 0) {
        out.roles["M"] = without_x;
        int xp = g.add_vertex(g.neighbors(x));
        out.roles["x'"] = VertexSet::single(xp);
        VertexSet mp;
        for (int m : without_x) {
            mp |= VertexSet::single(g.add_vertex(g.neighbors(m)));
        }
        out.roles["M'"] = mp;
        int y = g.add_vertex(without_x.with(x));
        int z = g.add_vertex(VertexSet::single(y));
        out.roles["y"] = VertexSet::single(y);
        out.roles["z"] = VertexSet::single(z);
    } else {
        VertexSet np;
        for (int v : with_x) {
            np |= VertexSet::single(g.add_vertex(g.neighbors(v)));
        }
        out.roles["N'"] = np;
        int y = g.add_vertex(with_x);
        int z = g.add_vertex(np.with(y));
        out.roles["y"] = VertexSet::single(y);
        out.roles["z"] = VertexSet::single(z);
    }
    return out;
}

Graph construct_C_recursive(int r)
{
    if (r < 4) {
        throw PreconditionError("C_r is defined for r >= 4");
    }
    if (r > 20) {
        throw CapacityError("C_" + std::to_string(r) + " exceeds " + std::to_string(kMaxVertices) + " vertices");
    }
    check_capacity(c_bound(r), "C_" + std::to_string(r));

    Graph g = (r % 2 == 0) ? Graph::path(5) : Graph::cycle(5);
    for (int cur = (r % 2 == 0) ? 4 : 5; cur + 2 <= r; cur += 2) {
        VertexSet attach;
        if (cur == 4) {
            attach = first_pair_at_distance(g, 3);
        } else if (cur == 5) {
            attach = first_pair_at_distance(g, 2);
        } else {
            // C_6 has two maximum independent sets; both lead to C_8, so take the first.
            auto sets = maximum_independent_sets(g, 2);
            if (sets.size() != 1 && cur != 6) {
                throw InternalError("maximum independent set of C_" + std::to_string(cur) + " is not unique");
            }
            attach = sets.front();
        }
        for (int a : attach) {
            g.add_vertex(g.neighbors(a));
        }
        int u = g.add_vertex(attach);
        g.add_vertex(VertexSet::single(u));
    }
    return g;
}

Graph construct_remark_H(int r)
{
    if (r % 2 == 0) {
        throw PreconditionError("the edge-deleted graph is defined for odd r");
    }
    if (r < 7) {
        throw PreconditionError("the edge-deleted graph needs r >= 7");
    }
    auto c = construct_C(r);
    Graph h = c.graph;
    h.remove_edge(c.vertex("y"), c.vertex("z"));
    return h;
}

}  // namespace rankforge

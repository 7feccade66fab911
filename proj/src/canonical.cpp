#include "rankforge/canonical.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <string>

#include "rankforge/errors.hpp"

namespace rankforge {

namespace {

using Partition = std::vector<std::uint64_t>;

constexpr int kNoJump = INT_MAX;

/// Refines an ordered partition to the coarsest equitable one below it. Each
/// round splits every cell by the vector of neighbor counts into all current
/// cells, placing subcells in increasing signature order.
void refine(const Graph& g, Partition& cells)
{
    std::vector<std::pair<std::vector<int>, int>> sig;
    for (;;) {
        Partition next;
        next.reserve(cells.size());
        bool changed = false;
        for (std::uint64_t cell : cells) {
            if (std::popcount(cell) == 1) {
                next.push_back(cell);
                continue;
            }
            sig.clear();
            for (int v : VertexSet(cell)) {
                std::vector<int> counts(cells.size());
                const std::uint64_t nb = g.neighbors(v).bits();
                for (std::size_t j = 0; j < cells.size(); ++j) {
                    counts[j] = std::popcount(nb & cells[j]);
                }
                sig.emplace_back(std::move(counts), v);
            }
            std::sort(sig.begin(), sig.end());
            std::uint64_t part = 0;
            for (std::size_t i = 0; i < sig.size(); ++i) {
                if (i > 0 && sig[i].first != sig[i - 1].first) {
                    next.push_back(part);
                    part = 0;
                    changed = true;
                }
                part |= std::uint64_t{1} << sig[i].second;
            }
            next.push_back(part);
        }
        cells = std::move(next);
        if (!changed) {
            return;
        }
    }
}

struct Leaf {
    std::vector<int> path;
    std::vector<int> lab;  // canonical position -> vertex
    std::vector<std::uint64_t> rows;
};

int common_prefix(const std::vector<int>& a, const std::vector<int>& b)
{
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) {
        ++i;
    }
    return static_cast<int>(i);
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x)
    {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }

private:
    std::vector<int> parent_;
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run()
    {
        CanonicalForm out;
        out.n = n_;
        if (n_ == 0) {
            out.cert = to_graph6(g_);
            return out;
        }
        std::vector<int> path;
        dfs(Partition{g_.vertices().bits()}, path);

        Graph canon(n_);
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            pos[static_cast<std::size_t>(best_.lab[static_cast<std::size_t>(i)])] = i;
        }
        for (int u = 0; u < n_; ++u) {
            for (int v : VertexSet(best_.rows[static_cast<std::size_t>(u)])) {
                if (v > u) {
                    canon.add_edge(u, v);
                }
            }
        }
        out.cert = to_graph6(canon);
        out.labeling = std::move(pos);
        out.generators = gens_;
        for (std::size_t level = 0; level < first_.path.size(); ++level) {
            std::vector<int> prefix(first_.path.begin(), first_.path.begin() + static_cast<std::ptrdiff_t>(level));
            UnionFind uf = orbits_fixing(prefix);
            const int rep = uf.find(first_.path[level]);
            int size = 0;
            for (int v = 0; v < n_; ++v) {
                size += uf.find(v) == rep ? 1 : 0;
            }
            out.automorphism_group_size *= size;
        }
        return out;
    }

private:
    UnionFind orbits_fixing(const std::vector<int>& prefix) const
    {
        UnionFind uf(n_);
        for (const auto& gen : gens_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gen[static_cast<std::size_t>(v)] == v; });
            if (!fixes) {
                continue;
            }
            for (int v = 0; v < n_; ++v) {
                uf.unite(v, gen[static_cast<std::size_t>(v)]);
            }
        }
        return uf;
    }

    int dfs(Partition cells, std::vector<int>& path)
    {
        refine(g_, cells);
        if (static_cast<int>(cells.size()) == n_) {
            return leaf(cells, path);
        }
        std::size_t target = 0;
        int target_size = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int s = std::popcount(cells[i]);
            if (s > target_size) {
                target_size = s;
                target = i;
            }
        }
        const int level = static_cast<int>(path.size());
        std::vector<int> explored;
        std::size_t gens_seen = 0;
        UnionFind uf(n_);
        for (int c : VertexSet(cells[target])) {
            if (!explored.empty()) {
                // Children in one orbit of the prefix stabilizer have equivalent subtrees.
                if (gens_seen != gens_.size()) {
                    uf = orbits_fixing(path);
                    gens_seen = gens_.size();
                }
                const int rc = uf.find(c);
                if (std::any_of(explored.begin(), explored.end(), [&](int e) { return uf.find(e) == rc; })) {
                    continue;
                }
            }
            explored.push_back(c);
            Partition child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(std::uint64_t{1} << c);
            child.push_back(cells[target] & ~(std::uint64_t{1} << c));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            path.push_back(c);
            const int jump = dfs(std::move(child), path);
            path.pop_back();
            if (jump < level) {
                return jump;
            }
        }
        return kNoJump;
    }

    int leaf(const Partition& cells, const std::vector<int>& path)
    {
        Leaf lf;
        lf.path = path;
        lf.lab.resize(static_cast<std::size_t>(n_));
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            const int v = std::countr_zero(cells[static_cast<std::size_t>(i)]);
            lf.lab[static_cast<std::size_t>(i)] = v;
            pos[static_cast<std::size_t>(v)] = i;
        }
        lf.rows.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = 0;
            for (int w : g_.neighbors(lf.lab[static_cast<std::size_t>(i)])) {
                row |= std::uint64_t{1} << pos[static_cast<std::size_t>(w)];
            }
            lf.rows[static_cast<std::size_t>(i)] = row;
        }
        if (!have_first_) {
            have_first_ = true;
            first_ = lf;
            best_ = std::move(lf);
            return kNoJump;
        }
        if (lf.rows == first_.rows) {
            record_automorphism(lf, first_);
            return common_prefix(lf.path, first_.path);
        }
        if (lf.rows == best_.rows) {
            record_automorphism(lf, best_);
            return common_prefix(lf.path, best_.path);
        }
        if (lf.rows > best_.rows) {
            best_ = std::move(lf);
        }
        return kNoJump;
    }

    void record_automorphism(const Leaf& from, const Leaf& to)
    {
        std::vector<int> gen(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            gen[static_cast<std::size_t>(from.lab[static_cast<std::size_t>(i)])] = to.lab[static_cast<std::size_t>(i)];
        }
        gens_.push_back(std::move(gen));
    }

    const Graph& g_;
    int n_;
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<std::vector<int>> gens_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g)
{
    return CanonSearch(g).run();
}

Graph canonical_graph(const Graph& g)
{
    return from_graph6(canonical_form(g).cert);
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
        return false;
    }
    return canonical_form(a) == canonical_form(b);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) {
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    }
    return out;
}

Graph from_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) {
        text.remove_prefix(header.size());
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("empty graph6 string");
    }
    for (char ch : text) {
        const int b = static_cast<unsigned char>(ch);
        if (b < 63 || b > 126) {
            throw ParseError("graph6 byte out of range: " + std::to_string(b));
        }
    }
    auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]) - 63; };
    int n = 0;
    std::size_t pos = 0;
    if (byte(0) == 63) {
        if (text.size() < 4 || byte(1) == 63) {
            throw ParseError("unsupported graph6 size field");
        }
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n > kMaxVertices) {
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
    }
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
    const std::size_t expected = pos + (bits + 5) / 6;
    if (text.size() != expected) {
        throw ParseError("graph6 length " + std::to_string(text.size()) + " does not match order " +
                         std::to_string(n));
    }
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = byte(pos + k / 6);
            if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

}  // namespace rankforge

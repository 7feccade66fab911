#include "rankforge/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "rankforge/canonical.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/errors.hpp"

namespace rankforge {

namespace {

constexpr int kDefaultMaxRank = 9;
constexpr int kBitsetWords = 16;  // 1024 candidates, enough for r <= 10
constexpr int kHardMaxRank = 10;

class Bits {
public:
    void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }

    bool any(int words) const
    {
        for (int k = 0; k < words; ++k) {
            if (w_[static_cast<std::size_t>(k)] != 0) {
                return true;
            }
        }
        return false;
    }

    int first(int words) const
    {
        for (int k = 0; k < words; ++k) {
            if (auto x = w_[static_cast<std::size_t>(k)]) {
                return k * 64 + std::countr_zero(x);
            }
        }
        return -1;
    }

    void and_with(const Bits& o, int words)
    {
        for (int k = 0; k < words; ++k) {
            w_[static_cast<std::size_t>(k)] &= o.w_[static_cast<std::size_t>(k)];
        }
    }

    void and_not(const Bits& o, int words)
    {
        for (int k = 0; k < words; ++k) {
            w_[static_cast<std::size_t>(k)] &= ~o.w_[static_cast<std::size_t>(k)];
        }
    }

    // this &= ~(a & b)
    void and_not_both(const Bits& a, const Bits& b, int words)
    {
        for (int k = 0; k < words; ++k) {
            const auto i = static_cast<std::size_t>(k);
            w_[i] &= ~(a.w_[i] & b.w_[i]);
        }
    }

private:
    std::array<std::uint64_t, kBitsetWords> w_{};
};

Int128 bilinear(const ExtensionCandidate& a, const ExtensionCandidate& b)
{
    Int128 s = 0;
    for (std::size_t i = 0; i < b.y.size(); ++i) {
        if ((a.b >> i) & 1U) {
            s = detail::checked_add(s, b.y[i]);
        }
    }
    return s;
}

ExtensionCandidate make_candidate(const Core& core, std::uint64_t b)
{
    const auto r = core.adjugate.rows();
    ExtensionCandidate c;
    c.b = b;
    c.y.assign(static_cast<std::size_t>(r), 0);
    for (Eigen::Index i = 0; i < r; ++i) {
        std::int64_t s = 0;
        for (Eigen::Index j = 0; j < r; ++j) {
            if ((b >> j) & 1U) {
                if (__builtin_add_overflow(s, core.adjugate(i, j), &s)) {
                    throw OverflowError("adjugate product overflow");
                }
            }
        }
        c.y[static_cast<std::size_t>(i)] = s;
    }
    return c;
}

bool hereditary_ok(const Graph& g, GraphClass cls)
{
    switch (cls) {
    case GraphClass::any:
        return true;
    case GraphClass::triangle_free:
    case GraphClass::triangle_free_nonbipartite:
        return is_triangle_free(g);
    case GraphClass::bipartite:
        return bipartition(g).has_value();
    }
    return false;
}

void check_rank_guard(int r)
{
    const int hi = max_enumeration_rank();
    if (hi > kHardMaxRank) {
        throw CapacityError("RANKFORGE_MAX_R above " + std::to_string(kHardMaxRank) + " is not supported");
    }
    if (r < 2 || r > hi) {
        throw PreconditionError("rank " + std::to_string(r) + " outside the enumeration range 2.." +
                                std::to_string(hi) + " (set RANKFORGE_MAX_R to raise it)");
    }
}

int guard_upper(int default_upper)
{
    const char* env = std::getenv("RANKFORGE_MAX_R");
    return env ? std::max(default_upper, max_enumeration_rank()) : default_upper;
}

struct Window {
    bool maximize = true;
    int min_extra = 0;  // maximize: initial record to beat or tie
    int max_extra = 64;
};

// Branch and bound over cliques of the compatibility graph of one core (and one
// 2-coloring of it in the bipartite class).
class ExtensionSearch {
public:
    ExtensionSearch(const Core& core, GraphClass cls, const std::vector<ExtensionCandidate>& all,
                    const std::pair<VertexSet, VertexSet>* coloring)
        : core_(core), cls_(cls)
    {
        const bool tf = cls == GraphClass::triangle_free || cls == GraphClass::triangle_free_nonbipartite;
        for (const auto& c : all) {
            const VertexSet b(c.b);
            if (tf && !is_independent(core.graph, b)) {
                continue;
            }
            if (coloring) {
                if (b.subset_of(coloring->first)) {
                    side_.push_back(1);
                } else if (b.subset_of(coloring->second)) {
                    side_.push_back(0);
                } else {
                    continue;
                }
            }
            cands_.push_back(&c);
        }
        const int m = static_cast<int>(cands_.size());
        words_ = (m + 63) / 64;
        compat_.resize(cands_.size());
        adj1_.resize(cands_.size());
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                auto v = compatible(core, *cands_[static_cast<std::size_t>(i)], *cands_[static_cast<std::size_t>(j)]);
                if (!v) {
                    continue;
                }
                const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
                if (*v == 1) {
                    if (tf && (cands_[ui]->b & cands_[uj]->b) != 0) {
                        continue;
                    }
                    if (coloring && side_[ui] == side_[uj]) {
                        continue;
                    }
                    adj1_[ui].set(j);
                    adj1_[uj].set(i);
                }
                compat_[ui].set(j);
                compat_[uj].set(i);
            }
        }
        triangle_free_ = tf;
    }

    void run(const Window& w)
    {
        window_ = w;
        record_ = w.maximize ? w.min_extra : 0;
        Bits pool;
        for (int i = 0; i < static_cast<int>(cands_.size()); ++i) {
            pool.set(i);
        }
        std::vector<int> chosen;
        expand(chosen, pool);
    }

    int best() const { return found_ ? record_ : -1; }
    const std::vector<std::vector<const ExtensionCandidate*>>& results() const { return results_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    int need() const { return window_.maximize ? record_ : window_.min_extra; }

    void evaluate(const std::vector<int>& chosen)
    {
        const int k = static_cast<int>(chosen.size());
        if (k < need()) {
            return;
        }
        std::vector<const ExtensionCandidate*> picked;
        picked.reserve(chosen.size());
        for (int i : chosen) {
            picked.push_back(cands_[static_cast<std::size_t>(i)]);
        }
        if (cls_ == GraphClass::triangle_free_nonbipartite) {
            std::vector<ExtensionCandidate> copy;
            for (auto* p : picked) {
                copy.push_back(*p);
            }
            if (bipartition(complete_graph(core_, copy))) {
                return;
            }
        }
        if (window_.maximize && (!found_ || k > record_)) {
            record_ = k;
            results_.clear();
        }
        found_ = true;
        results_.push_back(std::move(picked));
    }

    void expand(std::vector<int>& chosen, Bits pool)
    {
        ++nodes_;
        evaluate(chosen);
        const int depth = static_cast<int>(chosen.size());
        if (depth >= window_.max_extra) {
            return;
        }
        // Greedy sequential coloring; order_ lists candidates class by class.
        std::vector<int> order;
        std::vector<int> colour;
        Bits rest = pool;
        int colours = 0;
        while (rest.any(words_)) {
            ++colours;
            Bits q = rest;
            while (q.any(words_)) {
                const int v = q.first(words_);
                q.reset(v);
                q.and_not(compat_[static_cast<std::size_t>(v)], words_);
                rest.reset(v);
                order.push_back(v);
                colour.push_back(colours);
            }
        }
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (depth + colour[static_cast<std::size_t>(idx)] < need()) {
                return;
            }
            const int v = order[static_cast<std::size_t>(idx)];
            const auto uv = static_cast<std::size_t>(v);
            Bits child = pool;
            child.and_with(compat_[uv], words_);
            if (triangle_free_) {
                for (int e : chosen) {
                    if (adj1_[uv].test(e)) {
                        child.and_not_both(adj1_[uv], adj1_[static_cast<std::size_t>(e)], words_);
                    }
                }
            }
            chosen.push_back(v);
            expand(chosen, child);
            chosen.pop_back();
            pool.reset(v);
        }
    }

    const Core& core_;
    GraphClass cls_;
    std::vector<const ExtensionCandidate*> cands_;
    std::vector<int> side_;
    std::vector<Bits> compat_;
    std::vector<Bits> adj1_;
    int words_ = 0;
    bool triangle_free_ = false;
    Window window_;
    int record_ = 0;
    bool found_ = false;
    std::vector<std::vector<const ExtensionCandidate*>> results_;
    std::uint64_t nodes_ = 0;
};

struct CoreOutcome {
    int best = -1;  // extension size of the recorded completions
    std::set<std::string> certs;
    std::uint64_t nodes = 0;
    std::uint64_t candidates = 0;
};

Graph complete_from(const Core& core, const std::vector<const ExtensionCandidate*>& picked)
{
    std::vector<ExtensionCandidate> copy;
    copy.reserve(picked.size());
    for (auto* p : picked) {
        copy.push_back(*p);
    }
    return complete_graph(core, copy);
}

void assert_sound(const Graph& g, int r, GraphClass cls)
{
    if (graph_rank(g) != r || !is_reduced(g) || !in_class(g, cls)) {
        throw InternalError("enumeration emitted an invalid graph " + to_graph6(g));
    }
}

CoreOutcome search_core(const Core& core, int r, GraphClass cls, const Window& w)
{
    CoreOutcome out;
    const auto all = candidates(core);
    out.candidates = all.size();
    std::vector<std::pair<VertexSet, VertexSet>> colorings;
    if (cls == GraphClass::bipartite) {
        colorings = all_bipartitions(core.graph);
    }
    auto absorb = [&](ExtensionSearch& s) {
        out.nodes += s.nodes();
        if (s.best() < 0) {
            return;
        }
        if (w.maximize && s.best() < out.best) {
            return;
        }
        if (w.maximize && s.best() > out.best) {
            out.best = s.best();
            out.certs.clear();
        }
        out.best = std::max(out.best, s.best());
        for (const auto& picked : s.results()) {
            Graph g = complete_from(core, picked);
            assert_sound(g, r, cls);
            out.certs.insert(canonical_form(g).cert);
        }
    };
    if (cls == GraphClass::bipartite) {
        for (const auto& col : colorings) {
            ExtensionSearch s(core, cls, all, &col);
            s.run(w);
            absorb(s);
        }
    } else {
        ExtensionSearch s(core, cls, all, nullptr);
        s.run(w);
        absorb(s);
    }
    return out;
}

std::optional<Graph> known_witness(int r, GraphClass cls)
{
    std::vector<Graph> options;
    auto attempt = [&](auto make) {
        try {
            options.push_back(make());
        } catch (const Error&) {
        }
    };
    if (r >= 4 && cls != GraphClass::bipartite) {
        attempt([&] { return construct_C(r).graph; });
    }
    if (r % 2 == 0 && cls != GraphClass::triangle_free_nonbipartite) {
        attempt([&] { return construct_B(r / 2); });
    }
    std::optional<Graph> best;
    for (const auto& g : options) {
        if (graph_rank(g) == r && is_reduced(g) && in_class(g, cls) && (!best || g.order() > best->order())) {
            best = g;
        }
    }
    return best;
}

std::vector<std::size_t> shard_cores(std::size_t count, const EnumerationOptions& opt)
{
    if (opt.shard_count < 1 || opt.shard_index < 0 || opt.shard_index >= opt.shard_count) {
        throw PreconditionError("shard index must lie in 0..shard_count-1");
    }
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < count; ++i) {
        if (i % static_cast<std::size_t>(opt.shard_count) == static_cast<std::size_t>(opt.shard_index)) {
            picked.push_back(i);
        }
    }
    return picked;
}

// Runs search_core over the given cores on a worker pool; outcomes come back in core order.
std::vector<CoreOutcome> run_cores(const std::vector<Core>& cores, const std::vector<std::size_t>& which, int r,
                                   GraphClass cls, const Window& w, const EnumerationOptions& opt)
{
    std::vector<CoreOutcome> outcomes(which.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::atomic<int> best_order{0};
    std::mutex log_mutex;
    std::exception_ptr failure;
    const std::size_t report_every = std::max<std::size_t>(1, which.size() / 100);

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= which.size()) {
                return;
            }
            try {
                outcomes[i] = search_core(cores[which[i]], r, cls, w);
            } catch (...) {
                std::lock_guard lock(log_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = which.size();
                return;
            }
            if (outcomes[i].best >= 0) {
                const int order = r + outcomes[i].best;
                int cur = best_order.load();
                while (order > cur && !best_order.compare_exchange_weak(cur, order)) {
                }
            }
            const std::size_t d = done.fetch_add(1) + 1;
            if (opt.progress && (d % report_every == 0 || d == which.size())) {
                std::lock_guard lock(log_mutex);
                *opt.progress << "core " << d << "/" << which.size() << ": best so far " << best_order.load()
                              << "\n";
                opt.progress->flush();
            }
        }
    };

    int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::clamp(jobs, 1, std::max(1, static_cast<int>(which.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return outcomes;
}

std::int64_t millis_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

std::string order_text(int order)
{
    return std::to_string(order);
}

int min_part(const Graph& g)
{
    int best = -1;
    for (const auto& [a, b] : all_bipartitions(g)) {
        const int m = std::min(a.size(), b.size());
        best = best < 0 ? m : std::min(best, m);
    }
    return best;
}

// Smallest and largest min-part over every 2-coloring.
std::pair<int, int> min_part_range(const Graph& g)
{
    int lo = 65, hi = -1;
    for (const auto& [a, b] : all_bipartitions(g)) {
        const int m = std::min(a.size(), b.size());
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    return {lo, hi};
}

}  // namespace

std::string to_string(GraphClass cls)
{
    switch (cls) {
    case GraphClass::any:
        return "any";
    case GraphClass::triangle_free:
        return "triangle-free";
    case GraphClass::bipartite:
        return "bipartite";
    case GraphClass::triangle_free_nonbipartite:
        return "triangle-free-nonbipartite";
    }
    return "?";
}

GraphClass parse_graph_class(std::string_view name)
{
    if (name == "any" || name == "all") {
        return GraphClass::any;
    }
    if (name == "triangle-free" || name == "tf") {
        return GraphClass::triangle_free;
    }
    if (name == "bipartite" || name == "bi") {
        return GraphClass::bipartite;
    }
    if (name == "triangle-free-nonbipartite" || name == "tf-nb") {
        return GraphClass::triangle_free_nonbipartite;
    }
    throw PreconditionError("unknown graph class '" + std::string(name) + "'");
}

bool in_class(const Graph& g, GraphClass cls)
{
    switch (cls) {
    case GraphClass::any:
        return true;
    case GraphClass::triangle_free:
        return is_triangle_free(g);
    case GraphClass::bipartite:
        return bipartition(g).has_value();
    case GraphClass::triangle_free_nonbipartite:
        return is_triangle_free(g) && !bipartition(g).has_value();
    }
    return false;
}

int max_enumeration_rank()
{
    const char* env = std::getenv("RANKFORGE_MAX_R");
    if (!env || !*env) {
        return kDefaultMaxRank;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) {
        throw PreconditionError("RANKFORGE_MAX_R must be a positive integer");
    }
    return static_cast<int>(std::min<long>(v, 64));
}

Core make_core(const Graph& g)
{
    Core c;
    c.graph = g;
    auto [det, adj] = adjugate(adjacency_matrix(g));
    c.det = det;
    c.adjugate = std::move(adj);
    return c;
}

std::vector<Core> gen_cores(int r, GraphClass cls)
{
    check_rank_guard(r);
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < r; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& g : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                Graph h = g;
                h.add_vertex(VertexSet(mask));
                if (!hereditary_ok(h, cls)) {
                    continue;
                }
                next.try_emplace(canonical_form(h).cert, std::move(h));
            }
        }
        level.clear();
        for (auto& [cert, g] : next) {
            level.push_back(std::move(g));
        }
    }
    std::vector<Core> cores;
    for (const Graph& g : level) {
        if (det_exact(adjacency_matrix(g)) != 0) {
            cores.push_back(make_core(g));
        }
    }
    return cores;
}

std::vector<ExtensionCandidate> candidates(const Core& core)
{
    const int r = core.graph.order();
    std::vector<ExtensionCandidate> out;
    std::set<std::uint64_t> rows;
    for (int v = 0; v < r; ++v) {
        rows.insert(core.graph.neighbors(v).bits());
    }
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << r); ++b) {
        if (rows.count(b)) {
            continue;
        }
        ExtensionCandidate c = make_candidate(core, b);
        if (bilinear(c, c) == 0) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::optional<int> compatible(const Core& core, const ExtensionCandidate& b, const ExtensionCandidate& b2)
{
    const Int128 v = bilinear(b, b2);
    if (v == 0) {
        return 0;
    }
    if (v == core.det) {
        return 1;
    }
    return std::nullopt;
}

Graph complete_graph(const Core& core, const std::vector<ExtensionCandidate>& chosen)
{
    Graph g = core.graph;
    const int r = g.order();
    for (const auto& c : chosen) {
        g.add_vertex(VertexSet(c.b));
    }
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
            if (bilinear(chosen[i], chosen[j]) == core.det) {
                g.add_edge(r + static_cast<int>(i), r + static_cast<int>(j));
            }
        }
    }
    return g;
}

ExtensionResult max_extension(const Core& core, GraphClass cls)
{
    ExtensionResult out;
    const auto all = candidates(core);
    std::vector<std::pair<VertexSet, VertexSet>> colorings;
    const bool bip = cls == GraphClass::bipartite;
    if (bip) {
        colorings = all_bipartitions(core.graph);
    }
    std::set<std::vector<std::uint64_t>> seen;
    auto absorb = [&](ExtensionSearch& s) {
        out.nodes += s.nodes();
        if (s.best() < 0 || s.best() < out.size) {
            return;
        }
        if (s.best() > out.size) {
            out.size = s.best();
            out.optimal_sets.clear();
            seen.clear();
        }
        for (const auto& picked : s.results()) {
            std::vector<std::uint64_t> key;
            for (auto* p : picked) {
                key.push_back(p->b);
            }
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) {
                continue;
            }
            std::vector<ExtensionCandidate> set;
            for (std::uint64_t b : key) {
                set.push_back(make_candidate(core, b));
            }
            out.optimal_sets.push_back(std::move(set));
        }
    };
    Window w;
    w.maximize = true;
    w.min_extra = 0;
    if (bip) {
        for (const auto& col : colorings) {
            ExtensionSearch s(core, cls, all, &col);
            s.run(w);
            absorb(s);
        }
    } else if (hereditary_ok(core.graph, cls)) {
        ExtensionSearch s(core, cls, all, nullptr);
        s.run(w);
        absorb(s);
    }
    std::sort(out.optimal_sets.begin(), out.optimal_sets.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const auto& x, const auto& y) { return x.b < y.b; });
    });
    return out;
}

EnumerationReport enumerate_extremal(int r, GraphClass cls, const EnumerationOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const auto cores = gen_cores(r, cls);
    const auto which = shard_cores(cores.size(), options);

    EnumerationReport rep;
    rep.rank = r;
    rep.cls = cls;
    rep.shard_index = options.shard_index;
    rep.shard_count = options.shard_count;

    Window w;
    w.maximize = true;
    w.min_extra = 0;
    w.max_extra = 64 - r;
    std::optional<Graph> witness;
    if (options.seed_with_known_graph) {
        witness = known_witness(r, cls);
        if (witness) {
            w.min_extra = witness->order() - r;
        }
    }

    auto outcomes = run_cores(cores, which, r, cls, w, options);
    int best = -1;
    for (const auto& o : outcomes) {
        best = std::max(best, o.best);
    }
    if (best < 0 && w.min_extra > 0) {
        // The seed could not be matched anywhere in this shard: search without it.
        w.min_extra = 0;
        auto unseeded = run_cores(cores, which, r, cls, w, options);
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            unseeded[i].nodes += outcomes[i].nodes;
        }
        outcomes = std::move(unseeded);
        for (const auto& o : outcomes) {
            best = std::max(best, o.best);
        }
    }

    std::set<std::string> extremal;
    for (const auto& o : outcomes) {
        rep.cores_processed += 1;
        rep.candidates_total += o.candidates;
        rep.nodes_explored += o.nodes;
        if (best >= 0 && o.best == best) {
            extremal.insert(o.certs.begin(), o.certs.end());
        }
    }
    rep.max_order = best >= 0 ? r + best : 0;
    rep.extremal.assign(extremal.begin(), extremal.end());

    for (const auto& cert : rep.extremal) {
        const Graph g = from_graph6(cert);
        if (g.order() != rep.max_order) {
            throw InternalError("extremal graph of the wrong order");
        }
        assert_sound(g, r, cls);
    }
    if (witness && shard_cores(cores.size(), options).size() == cores.size() &&
        rep.max_order < witness->order()) {
        throw InternalError("enumeration missed the known graph of order " + order_text(witness->order()));
    }
    rep.elapsed_ms = millis_since(start);
    return rep;
}

EnumerationReport merge_reports(const std::vector<EnumerationReport>& shards)
{
    if (shards.empty()) {
        throw PreconditionError("nothing to merge");
    }
    EnumerationReport out;
    out.rank = shards.front().rank;
    out.cls = shards.front().cls;
    std::set<std::string> extremal;
    std::set<int> seen;
    for (const auto& s : shards) {
        if (s.rank != out.rank || s.cls != out.cls) {
            throw PreconditionError("shard reports disagree on rank or class");
        }
        if (s.shard_count != shards.front().shard_count || !seen.insert(s.shard_index).second) {
            throw PreconditionError("shard reports do not partition the cores");
        }
        out.cores_processed += s.cores_processed;
        out.candidates_total += s.candidates_total;
        out.nodes_explored += s.nodes_explored;
        out.elapsed_ms += s.elapsed_ms;
        if (s.max_order > out.max_order) {
            out.max_order = s.max_order;
            extremal.clear();
        }
        if (s.max_order == out.max_order) {
            extremal.insert(s.extremal.begin(), s.extremal.end());
        }
    }
    if (static_cast<int>(seen.size()) != shards.front().shard_count) {
        throw PreconditionError("missing shard reports: " + std::to_string(seen.size()) + " of " +
                                std::to_string(shards.front().shard_count));
    }
    out.extremal.assign(extremal.begin(), extremal.end());
    return out;
}

std::vector<std::string> enumerate_orders(int r, GraphClass cls, int min_order, int max_order,
                                          const EnumerationOptions& options)
{
    const auto cores = gen_cores(r, cls);
    const auto which = shard_cores(cores.size(), options);
    Window w;
    w.maximize = false;
    w.min_extra = std::max(0, min_order - r);
    w.max_extra = std::min(max_order, 64) - r;
    if (w.max_extra < w.min_extra) {
        return {};
    }
    std::set<std::string> all;
    for (const auto& o : run_cores(cores, which, r, cls, w, options)) {
        all.insert(o.certs.begin(), o.certs.end());
    }
    return {all.begin(), all.end()};
}

std::string to_string(Theorem t)
{
    switch (t) {
    case Theorem::main:
        return "main";
    case Theorem::bi:
        return "bi";
    case Theorem::bigen:
        return "bigen";
    case Theorem::remark:
        return "remark";
    }
    return "?";
}

Theorem parse_theorem(std::string_view name)
{
    if (name == "main") {
        return Theorem::main;
    }
    if (name == "bi") {
        return Theorem::bi;
    }
    if (name == "bigen") {
        return Theorem::bigen;
    }
    if (name == "remark") {
        return Theorem::remark;
    }
    throw PreconditionError("unknown theorem '" + std::string(name) + "'");
}

TheoremCheck verify_theorem(Theorem which, int r, const EnumerationOptions& options)
{
    auto range_error = [&](const std::string& allowed) {
        return PreconditionError("r=" + std::to_string(r) + " outside the range of " + to_string(which) + " (" +
                                 allowed + "; set RANKFORGE_MAX_R to raise it)");
    };
    TheoremCheck out;
    switch (which) {
    case Theorem::main: {
        if (r < 5 || r > guard_upper(9)) {
            throw range_error("5..9");
        }
        const auto rep = enumerate_extremal(r, GraphClass::triangle_free_nonbipartite, options);
        const std::string expected = canonical_form(construct_C(r).graph).cert;
        const auto c = static_cast<int>(c_bound(r));
        out.pass = rep.max_order == c && rep.extremal == std::vector<std::string>{expected};
        out.summary = "max order " + std::to_string(rep.max_order) + " (c(" + std::to_string(r) +
                      ")=" + std::to_string(c) + "), " + std::to_string(rep.extremal.size()) +
                      " extremal graph(s)" + (out.pass ? ", isomorphic to C_" + std::to_string(r) : "");
        if (!out.pass) {
            for (const auto& e : rep.extremal) {
                if (e != expected) {
                    out.counterexamples.push_back(e);
                }
            }
        }
        return out;
    }
    case Theorem::bi: {
        if (r < 4 || r % 2 != 0 || r > guard_upper(8)) {
            throw range_error("4, 6, 8");
        }
        const auto rep = enumerate_extremal(r, GraphClass::bipartite, options);
        const std::string expected = canonical_form(construct_B(r / 2)).cert;
        const auto b = static_cast<int>(b_bound(r));
        out.pass = rep.max_order == b && rep.extremal == std::vector<std::string>{expected};
        out.summary = "max order " + std::to_string(rep.max_order) + " (b(" + std::to_string(r) +
                      ")=" + std::to_string(b) + "), " + std::to_string(rep.extremal.size()) +
                      " extremal graph(s)" + (out.pass ? ", isomorphic to B_" + std::to_string(r / 2) : "");
        if (!out.pass) {
            for (const auto& e : rep.extremal) {
                if (e != expected) {
                    out.counterexamples.push_back(e);
                }
            }
        }
        return out;
    }
    case Theorem::bigen: {
        if (r < 6 || r % 2 != 0 || r > guard_upper(8)) {
            throw range_error("6, 8");
        }
        const auto c = static_cast<int>(c_bound(r));
        const auto graphs = enumerate_orders(r, GraphClass::bipartite, c + 1, 64, options);
        for (const auto& cert : graphs) {
            const auto [lo, hi] = min_part_range(from_graph6(cert));
            if (lo != r / 2 || hi != r / 2) {
                out.counterexamples.push_back(cert);
            }
        }
        const std::string b_cert = canonical_form(construct_B(r / 2)).cert;
        const bool has_b = std::binary_search(graphs.begin(), graphs.end(), b_cert);
        out.pass = out.counterexamples.empty() && has_b;
        out.summary = std::to_string(graphs.size()) + " reduced bipartite graph(s) of rank " + std::to_string(r) +
                      " with order > " + std::to_string(c) + ", " + std::to_string(out.counterexamples.size()) +
                      " with min part != " + std::to_string(r / 2) + (has_b ? "" : "; B_r/2 missing");
        return out;
    }
    case Theorem::remark: {
        if (r < 7 || r % 2 == 0 || r > guard_upper(11)) {
            throw range_error("7, 9, 11");
        }
        const Graph h = construct_remark_H(r);
        const int rank = graph_rank(h);
        const bool reduced = is_reduced(h);
        const bool bip = bipartition(h).has_value();
        const int part = bip ? min_part(h) : -1;
        const auto expected_order = static_cast<int>(c_bound(r - 1));
        out.pass = reduced && bip && rank == r - 1 && h.order() == expected_order && part == (r + 1) / 2;
        out.summary = "order " + std::to_string(h.order()) + " (c(" + std::to_string(r - 1) +
                      ")=" + std::to_string(expected_order) + "), rank " + std::to_string(rank) + ", " +
                      (reduced ? "reduced" : "not reduced") + ", " + (bip ? "bipartite" : "not bipartite") +
                      ", min part " + std::to_string(part);
        if (!out.pass) {
            out.counterexamples.push_back(to_graph6(h));
        }
        return out;
    }
    }
    throw PreconditionError("unknown theorem");
}

}  // namespace rankforge

#include "rankforge/exact_linalg.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace rankforge {

namespace detail {

EliminationResult bareiss(Workspace& w)
{
    EliminationResult res;
    Int128 prev = 1;
    int k = 0;
    for (int col = 0; col < w.cols && k < w.rows; ++col) {
        int pivot = -1;
        for (int i = k; i < w.rows; ++i) {
            if (w(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        if (pivot != k) {
            for (int j = 0; j < w.cols; ++j) {
                std::swap(w(pivot, j), w(k, j));
            }
            res.sign = -res.sign;
        }
        const Int128 p = w(k, col);
        for (int i = k + 1; i < w.rows; ++i) {
            const Int128 lead = w(i, col);
            for (int j = col + 1; j < w.cols; ++j) {
                Int128 num = checked_sub(checked_mul(w(i, j), p), checked_mul(lead, w(k, j)));
                if (num % prev != 0) {
                    throw InternalError("inexact division in fraction-free elimination");
                }
                w(i, j) = num / prev;
            }
            w(i, col) = 0;
        }
        prev = p;
        res.last_pivot = p;
        ++k;
    }
    res.rank = k;
    return res;
}

}  // namespace detail

std::pair<Int128, IntMatrix> adjugate(const IntMatrix& a)
{
    const auto n = a.rows();
    IntMatrix adj(n, n);
    Int128 det = 0;
    IntVector e = IntVector::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        e.setZero();
        e(j) = 1;
        auto sol = adjugate_solve(a, e);
        det = sol.det;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Int128 v = sol.y[static_cast<std::size_t>(i)];
            if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
                throw OverflowError("adjugate entry does not fit in 64 bits");
            }
            adj(i, j) = static_cast<std::int64_t>(v);
        }
    }
    if (n == 0) {
        det = 1;
    }
    return {det, adj};
}

IntMatrix adjacency_matrix(const Graph& g)
{
    const int n = g.order();
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            m(u, v) = 1;
        }
    }
    return m;
}

IntMatrix principal_submatrix(const IntMatrix& m, VertexSet rows)
{
    auto idx = rows.members();
    const auto k = static_cast<Eigen::Index>(idx.size());
    IntMatrix out(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            out(i, j) = m(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

int graph_rank(const Graph& g)
{
    return rank_exact(adjacency_matrix(g));
}

namespace {

IntMatrix column_subset(const IntMatrix& m, VertexSet cols)
{
    auto idx = cols.members();
    IntMatrix out(m.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
        out.col(static_cast<Eigen::Index>(j)) = m.col(idx[j]);
    }
    return out;
}

bool next_combination(std::vector<int>& comb, int n)
{
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) {
        --i;
    }
    if (i < 0) {
        return false;
    }
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

}  // namespace

VertexSet nonsingular_principal_core(const Graph& g)
{
    const IntMatrix a = adjacency_matrix(g);
    VertexSet basis;
    for (int j = 0; j < g.order(); ++j) {
        VertexSet trial = basis.with(j);
        if (rank_exact(column_subset(a, trial)) == trial.size()) {
            basis = trial;
        }
    }
    if (det_exact(principal_submatrix(a, basis)) != 0) {
        return basis;
    }
    if (g.order() < 8) {
        const int r = basis.size();
        std::vector<int> comb(static_cast<std::size_t>(r));
        std::iota(comb.begin(), comb.end(), 0);
        do {
            VertexSet s;
            for (int v : comb) {
                s |= VertexSet::single(v);
            }
            if (det_exact(principal_submatrix(a, s)) != 0) {
                return s;
            }
        } while (next_combination(comb, g.order()));
    }
    throw InternalError("no nonsingular principal submatrix of full rank found");
}

}  // namespace rankforge

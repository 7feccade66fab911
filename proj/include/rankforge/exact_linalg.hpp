#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rankforge/errors.hpp"
#include "rankforge/graph.hpp"

namespace rankforge {

using Int128 = __int128;

/// Dense integer matrix. Inputs stay 64-bit; every elimination runs in checked 128-bit arithmetic.
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

namespace detail {

inline Int128 checked_mul(Int128 a, Int128 b)
{
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("128-bit overflow in exact elimination");
    }
    return r;
}

inline Int128 checked_sub(Int128 a, Int128 b)
{
    Int128 r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("128-bit overflow in exact elimination");
    }
    return r;
}

inline Int128 checked_add(Int128 a, Int128 b)
{
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("128-bit overflow in exact elimination");
    }
    return r;
}

/// Row-major working copy for Bareiss elimination.
struct Workspace {
    int rows = 0;
    int cols = 0;
    std::vector<Int128> a;

    Int128& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
};

template <typename Derived>
Workspace make_workspace(const Eigen::MatrixBase<Derived>& m)
{
    Workspace w{static_cast<int>(m.rows()), static_cast<int>(m.cols()), {}};
    w.a.resize(static_cast<std::size_t>(w.rows) * w.cols);
    for (int i = 0; i < w.rows; ++i) {
        for (int j = 0; j < w.cols; ++j) {
            w(i, j) = static_cast<Int128>(m(i, j));
        }
    }
    return w;
}

struct EliminationResult {
    int rank = 0;
    int sign = 1;          // parity of the row swaps
    Int128 last_pivot = 1; // for a nonsingular square matrix, sign * last_pivot is the determinant
};

/// Fraction-free (Bareiss) forward elimination in place. The pivot is the first
/// nonzero entry in column order; every division is exact.
EliminationResult bareiss(Workspace& w);

}  // namespace detail

/// Rank over the rationals.
template <typename Derived>
int rank_exact(const Eigen::MatrixBase<Derived>& m)
{
    auto w = detail::make_workspace(m);
    return detail::bareiss(w).rank;
}

template <typename Derived>
Int128 det_exact(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols()) {
        throw PreconditionError("determinant of a non-square matrix");
    }
    if (m.rows() == 0) {
        return 1;
    }
    auto w = detail::make_workspace(m);
    auto res = detail::bareiss(w);
    if (res.rank < w.rows) {
        return 0;
    }
    return res.sign < 0 ? -res.last_pivot : res.last_pivot;
}

struct AdjugateSolution {
    Int128 det = 0;
    std::vector<Int128> y;  // adj(a) * b, so that a * y == det * b
};

/// Solves a*y = det(a)*b without fractions (Cramer's rule column by column).
template <typename DerivedA, typename DerivedB>
AdjugateSolution adjugate_solve(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    if (a.rows() != a.cols() || b.size() != a.rows()) {
        throw PreconditionError("adjugate_solve needs a square matrix and a matching vector");
    }
    AdjugateSolution out;
    out.det = det_exact(a);
    if (out.det == 0) {
        throw SingularMatrixError("adjugate_solve on a singular matrix");
    }
    IntMatrix replaced = a.template cast<std::int64_t>();
    out.y.resize(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        auto saved = replaced.col(i).eval();
        replaced.col(i) = b.template cast<std::int64_t>();
        out.y[static_cast<std::size_t>(i)] = det_exact(replaced);
        replaced.col(i) = saved;
    }
    return out;
}

/// Full adjugate of a nonsingular matrix together with its determinant. Entries
/// must fit in 64 bits (always the case for the small cores used by enumeration).
std::pair<Int128, IntMatrix> adjugate(const IntMatrix& a);

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix principal_submatrix(const IntMatrix& m, VertexSet rows);

/// Rank of the adjacency matrix over the rationals.
int graph_rank(const Graph& g);

/// A vertex set S with |S| = rank(g) and det(A[S,S]) != 0.
VertexSet nonsingular_principal_core(const Graph& g);

}  // namespace rankforge

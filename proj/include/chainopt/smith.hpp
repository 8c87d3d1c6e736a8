#pragma once

#include <optional>
#include <vector>

#include "chainopt/boundary.hpp"
#include "chainopt/rational.hpp"

namespace chainopt {

/// Smith normal form D = U * M * V with U, V unimodular and the diagonal of
/// D a divisibility chain d_1 | d_2 | ... (positive entries, then zeros).
struct SmithDecomposition {
    std::vector<std::vector<Int>> U;  // rows x rows
    std::vector<std::vector<Int>> V;  // cols x cols
    std::vector<Int> diagonal;        // length min(rows, cols)
    int rank = 0;
};

namespace detail {

inline Int round_div(const Int& a, const Int& b) {
    // Quotient rounding to nearest keeps remainders at most |b|/2.
    Int q, r;
    divide_qr(a, b, q, r);
    Int rr = r < 0 ? Int(-r) : r;
    Int bb = b < 0 ? Int(-b) : b;
    if (2 * rr > bb) q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace detail

/// Exact integer Smith normal form. Pivot rule: nonzero entry of least
/// absolute value, ties broken by lowest row then column.
inline SmithDecomposition smith_normal_form(const SparseIntMatrix& M) {
    const int r = M.rows(), c = M.cols();
    std::vector<std::vector<Int>> A = M.to_dense();
    SmithDecomposition out;
    out.U.assign(r, std::vector<Int>(r, Int(0)));
    out.V.assign(c, std::vector<Int>(c, Int(0)));
    for (int i = 0; i < r; ++i) out.U[i][i] = 1;
    for (int j = 0; j < c; ++j) out.V[j][j] = 1;
    auto& U = out.U;
    auto& V = out.V;

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        std::swap(A[a], A[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < r; ++i) std::swap(A[i][a], A[i][b]);
        for (int i = 0; i < c; ++i) std::swap(V[i][a], V[i][b]);
    };
    auto row_op = [&](int dst, int src, const Int& q) {
        // row dst -= q * row src
        if (q == 0) return;
        for (int j = 0; j < c; ++j)
            if (A[src][j] != 0) A[dst][j] -= q * A[src][j];
        for (int j = 0; j < r; ++j)
            if (U[src][j] != 0) U[dst][j] -= q * U[src][j];
    };
    auto col_op = [&](int dst, int src, const Int& q) {
        // col dst -= q * col src
        if (q == 0) return;
        for (int i = 0; i < r; ++i)
            if (A[i][src] != 0) A[i][dst] -= q * A[i][src];
        for (int i = 0; i < c; ++i)
            if (V[i][src] != 0) V[i][dst] -= q * V[i][src];
    };

    int t = 0;
    const int steps = std::min(r, c);
    while (t < steps) {
        // Locate pivot.
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                if (A[i][j] == 0) continue;
                Int a = A[i][j] < 0 ? Int(-A[i][j]) : A[i][j];
                if (pi < 0 || a < best) {
                    pi = i;
                    pj = j;
                    best = a;
                    if (best == 1) goto found;
                }
            }
    found:
        if (pi < 0) break;  // all zero: done
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (A[i][t] == 0) continue;
                Int q = detail::round_div(A[i][t], A[t][t]);
                row_op(i, t, q);
                if (A[i][t] != 0) {
                    swap_rows(t, i);  // remainder is strictly smaller
                    clean = false;
                }
            }
            for (int j = t + 1; j < c; ++j) {
                if (A[t][j] == 0) continue;
                Int q = detail::round_div(A[t][j], A[t][t]);
                col_op(j, t, q);
                if (A[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce divisibility of the remaining block by the pivot.
            if (A[t][t] != 1 && A[t][t] != -1) {
                for (int i = t + 1; i < r && clean; ++i)
                    for (int j = t + 1; j < c; ++j)
                        if (A[i][j] % A[t][t] != 0) {
                            row_op(t, i, Int(-1));  // row t += row i
                            clean = false;
                            break;
                        }
            }
        }
        if (A[t][t] < 0) {
            for (int j = 0; j < c; ++j) A[t][j] = -A[t][j];
            for (int j = 0; j < r; ++j) U[t][j] = -U[t][j];
        }
        ++t;
    }

    out.rank = t;
    out.diagonal.assign(steps, Int(0));
    for (int i = 0; i < t; ++i) out.diagonal[i] = A[i][i];
    return out;
}

namespace detail {

inline std::vector<Int> dense_mul(const std::vector<std::vector<Int>>& M,
                                  const std::vector<Int>& x) {
    std::vector<Int> y(M.size(), Int(0));
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (M[i][j] != 0 && x[j] != 0) y[i] += M[i][j] * x[j];
    return y;
}

}  // namespace detail

/// Solves M x = b over the integers via the Smith decomposition; returns
/// nullopt when no integer solution exists. Any valid solution may be
/// returned (the system is usually underdetermined).
inline std::optional<std::vector<Int>> solve_integer(const SparseIntMatrix& M,
                                                     const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != M.rows()) throw Error("solve_integer: size mismatch");
    SmithDecomposition snf = smith_normal_form(M);
    std::vector<Int> ub = detail::dense_mul(snf.U, b);
    std::vector<Int> y(M.cols(), Int(0));
    for (int i = 0; i < M.rows(); ++i) {
        if (i < snf.rank) {
            if (ub[i] % snf.diagonal[i] != 0) return std::nullopt;
            y[i] = ub[i] / snf.diagonal[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return detail::dense_mul(snf.V, y);
}

/// Basis of the integer kernel lattice of M: columns of V beyond the rank.
inline std::vector<std::vector<Int>> integer_kernel_basis(const SparseIntMatrix& M) {
    SmithDecomposition snf = smith_normal_form(M);
    std::vector<std::vector<Int>> basis;
    for (int j = snf.rank; j < M.cols(); ++j) {
        std::vector<Int> v(M.cols());
        for (int i = 0; i < M.cols(); ++i) v[i] = snf.V[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace chainopt

#pragma once

#include <vector>

#include "chainopt/chain.hpp"
#include "chainopt/simplicial_complex.hpp"

namespace chainopt {

/// Sparse integer matrix with arbitrary-precision entries. At most one entry
/// per (row, col); stored values are nonzero, ordered column-major.
class SparseIntMatrix {
public:
    struct Entry {
        int row = 0;
        int col = 0;
        Int value;
    };

    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Entries must be appended in strictly increasing (col, row) order.
    void append(int row, int col, Int value) {
        if (value == 0) return;
        if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
            throw Error("matrix entry out of range");
        if (!entries_.empty()) {
            const Entry& last = entries_.back();
            if (col < last.col || (col == last.col && row <= last.row))
                throw Error("matrix entries out of order");
        }
        entries_.push_back({row, col, std::move(value)});
    }

    std::vector<std::vector<Int>> to_dense() const {
        std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_, Int(0)));
        for (const auto& e : entries_) d[e.row][e.col] = e.value;
        return d;
    }

    /// y = M x, dense integer vectors.
    std::vector<Int> multiply(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw Error("matrix-vector size mismatch");
        std::vector<Int> y(rows_, Int(0));
        for (const auto& e : entries_) y[e.row] += e.value * x[e.col];
        return y;
    }

    /// Column-major slices: for each column, the list of (row, value).
    std::vector<std::vector<std::pair<int, const Int*>>> columns() const {
        std::vector<std::vector<std::pair<int, const Int*>>> cols(cols_);
        for (const auto& e : entries_) cols[e.col].emplace_back(e.row, &e.value);
        return cols;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> entries_;
};

/// Matrix of the boundary map from n-chains to (n-1)-chains w.r.t. canonical
/// (increasing vertex order) orientations: column j lists the faces of
/// simplex j with alternating signs.
inline SparseIntMatrix boundary_matrix(const SimplicialComplex& X, int n) {
    if (n < 1 || n > X.dim()) throw Error("boundary_matrix: dimension out of range");
    SparseIntMatrix M(X.size(n - 1), X.size(n));
    for (int j = 0; j < X.size(n); ++j) {
        const Simplex& s = X.simplex(n, j);
        // Faces sorted lexicographically: dropping a later vertex gives a
        // smaller tuple, so iterate i descending to emit rows ascending.
        std::vector<std::pair<int, int>> rows;  // (row, sign)
        for (int i = 0; i <= n; ++i) {
            auto fid = X.simplex_id(s.face(i));
            if (!fid) throw Error("complex not face-closed");
            rows.emplace_back(*fid, i % 2 == 0 ? 1 : -1);
        }
        std::sort(rows.begin(), rows.end());
        for (const auto& [row, sign] : rows) M.append(row, j, Int(sign));
    }
    return M;
}

/// Boundary of a sparse chain, computed directly.
inline Chain apply_boundary(const SimplicialComplex& X, const Chain& c) {
    if (c.dimension < 1) throw Error("apply_boundary: chain dimension must be >= 1");
    if (c.dimension > X.dim()) throw Error("apply_boundary: chain dimension exceeds complex");
    Chain out(c.dimension - 1);
    for (const auto& [id, coeff] : c.coefficients) {
        const Simplex& s = X.simplex(c.dimension, id);
        for (int i = 0; i <= s.dim(); ++i) {
            auto fid = X.simplex_id(s.face(i));
            if (!fid) throw Error("complex not face-closed");
            out.add(*fid, i % 2 == 0 ? coeff : Int(-coeff));
        }
    }
    return out;
}

/// Ids of n-simplices of X that are not in A, ascending. Row/column i of
/// relative_boundary_matrix corresponds to the i-th entry of this list.
inline std::vector<int> complement_ids(const SimplicialComplex& X, const Subcomplex& A, int n) {
    std::vector<int> out;
    for (int id = 0; id < X.size(n); ++id)
        if (!A.contains(n, id)) out.push_back(id);
    return out;
}

/// Matrix of the boundary map on relative chains C_n(X, A), identified with
/// chains supported outside A: rows and columns belonging to A are deleted.
inline SparseIntMatrix relative_boundary_matrix(const SimplicialComplex& X, const Subcomplex& A,
                                                int n) {
    if (n < 1 || n > X.dim()) throw Error("relative_boundary_matrix: dimension out of range");
    std::vector<int> row_ids = complement_ids(X, A, n - 1);
    std::vector<int> col_ids = complement_ids(X, A, n);
    std::vector<int> row_index(X.size(n - 1), -1);
    for (int i = 0; i < static_cast<int>(row_ids.size()); ++i) row_index[row_ids[i]] = i;

    SparseIntMatrix M(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (int j = 0; j < static_cast<int>(col_ids.size()); ++j) {
        const Simplex& s = X.simplex(n, col_ids[j]);
        std::vector<std::pair<int, int>> rows;
        for (int i = 0; i <= n; ++i) {
            auto fid = X.simplex_id(s.face(i));
            if (!fid) throw Error("complex not face-closed");
            if (row_index[*fid] < 0) continue;  // face lies in A
            rows.emplace_back(row_index[*fid], i % 2 == 0 ? 1 : -1);
        }
        std::sort(rows.begin(), rows.end());
        for (const auto& [row, sign] : rows) M.append(row, j, Int(sign));
    }
    return M;
}

}  // namespace chainopt

#pragma once

#include <vector>

#include "dua/errors.hpp"
#include "dua/scalar.hpp"

namespace dua {

using Matrix = std::vector<std::vector<Scalar>>;
using Vector = std::vector<Scalar>;

struct LinearSolution {
    bool consistent = false;
    Vector particular;             // one solution (free variables set to 0)
    std::vector<Vector> nullspace; // basis of the homogeneous solution space
    int rank = 0;
};

/// Gauss-Jordan elimination over an exact field. All entries must share one
/// field context (zero-size systems use `ctx`).
inline LinearSolution solve_linear_system(Matrix a, Vector b, FieldContext ctx = {}) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw PreconditionViolated("solve_linear_system: rhs size mismatch");
    bool have_ctx = false;
    for (auto& row : a) {
        if (row.size() != cols) throw PreconditionViolated("solve_linear_system: ragged matrix");
        for (auto& e : row) {
            if (!have_ctx) {
                ctx = e.context();
                have_ctx = true;
            } else if (!(e.context() == ctx)) {
                throw FieldMismatch("matrix entries from different field contexts");
            }
        }
    }
    for (auto& e : b)
        if (!(e.context() == ctx)) throw FieldMismatch("rhs entry context differs");

    Scalar zero = Scalar::zero_in(ctx), one = Scalar::one_in(ctx);
    std::vector<int> pivot_of_col(cols, -1);
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t sel = prow;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[prow]);
        std::swap(b[sel], b[prow]);
        Scalar inv = a[prow][col].inverse();
        for (size_t j = col; j < cols; ++j) a[prow][j] = a[prow][j] * inv;
        b[prow] = b[prow] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (size_t j = col; j < cols; ++j) a[r][j] = a[r][j] - f * a[prow][j];
            b[r] = b[r] - f * b[prow];
        }
        pivot_of_col[col] = static_cast<int>(prow);
        ++prow;
    }

    LinearSolution out;
    out.rank = static_cast<int>(prow);
    out.consistent = true;
    for (size_t r = prow; r < rows; ++r)
        if (!b[r].is_zero()) out.consistent = false;

    if (out.consistent) {
        out.particular.assign(cols, zero);
        for (size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0) out.particular[col] = b[static_cast<size_t>(pivot_of_col[col])];
    }
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        Vector v(cols, zero);
        v[free_col] = one;
        for (size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = -a[static_cast<size_t>(pivot_of_col[col])][free_col];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

inline int matrix_rank(const Matrix& a, FieldContext ctx = {}) {
    Vector b(a.size(), Scalar::zero_in(a.empty() || a[0].empty() ? ctx : a[0][0].context()));
    return solve_linear_system(a, b, ctx).rank;
}

} // namespace dua

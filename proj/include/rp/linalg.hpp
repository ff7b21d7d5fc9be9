// Exact linear algebra: rational Gaussian elimination for square systems and
// fraction-free (Bareiss) elimination for integer matrix ranks.

#pragma once

#include <optional>
#include <vector>

#include "rp/rational.hpp"

namespace rp {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

inline std::string toString(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += toString(v[i]);
    }
    return s + ")";
}

/// Solve A x = b for square A by exact Gaussian elimination.
/// Returns nullopt when A is singular.
inline std::optional<RationalVector> solveSquare(RationalMatrix A, RationalVector b) {
    const int n = static_cast<int>(A.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (A[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(A[col], A[pivot]);
        std::swap(b[col], b[pivot]);
        const Rational inv = Rational(1) / A[col][col];
        for (int c = col; c < n; ++c) A[col][c] *= inv;
        b[col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            const Rational factor = A[r][col];
            for (int c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
            b[r] -= factor * b[col];
        }
    }
    return b;
}

/// Rank of an integer matrix via Bareiss elimination. Division-free of
/// rationals: every intermediate entry is an exact subdeterminant.
inline int integerRank(IntegerMatrix M) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
    int rank = 0;
    Integer prevPivot = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (M[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(M[row], M[pivot]);
        for (int r = row + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                M[r][c] = (M[r][c] * M[row][col] - M[r][col] * M[row][c]) / prevPivot;
            M[r][col] = 0;
        }
        prevPivot = M[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace rp

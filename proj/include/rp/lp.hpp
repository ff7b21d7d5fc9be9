// Exact rational linear programming over exponent matrices.
//
// For a matrix M whose columns are the minimal generators of a monomial
// ideal and a nonnegative integer vector a, nuStar solves the dual pair
//
//   (a) maximize 1.y   subject to M.y <= a, y >= 0
//   (b) minimize a.z   subject to M'.z >= 1, z >= 0
//
// by primal simplex with Bland's rule, returning the optimum together with
// mutually certifying primal and dual points. dualVertices enumerates every
// vertex of the feasible region of (b); the minimum of a.z over those
// vertices equals the optimum of (a) for every a >= 0.

#pragma once

#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

#include "rp/error.hpp"
#include "rp/ideal.hpp"
#include "rp/linalg.hpp"
#include "rp/rational.hpp"

namespace rp {

struct LPSolution {
    Rational value;
    RationalVector primalPoint;  // y, length m
    RationalVector dualPoint;    // z, length n
};

namespace detail {

inline void checkNoZeroColumn(const ExponentMatrix& M) {
    if (M.hasZeroColumn())
        throw InvalidMatrixError("exponent matrix has a zero column (unit generator)");
}

// Feasibility and strong-duality certificate. Exact: any violation is a bug
// in the solver, not a tolerance issue.
inline void verifySolution(const ExponentMatrix& M, const ExponentVector& a,
                           const LPSolution& s) {
    const int n = M.rows, m = M.cols;
    Rational primalSum = 0;
    for (int j = 0; j < m; ++j) {
        if (s.primalPoint[j] < 0) throw std::logic_error("simplex: negative primal entry");
        primalSum += s.primalPoint[j];
    }
    for (int i = 0; i < n; ++i) {
        Rational row = 0;
        for (int j = 0; j < m; ++j) row += Rational(M.entries[i][j]) * s.primalPoint[j];
        if (row > a[i]) throw std::logic_error("simplex: primal point infeasible");
    }
    Rational dualSum = 0;
    for (int i = 0; i < n; ++i) {
        if (s.dualPoint[i] < 0) throw std::logic_error("simplex: negative dual entry");
        dualSum += Rational(a[i]) * s.dualPoint[i];
    }
    for (int j = 0; j < m; ++j) {
        Rational col = 0;
        for (int i = 0; i < n; ++i) col += Rational(M.entries[i][j]) * s.dualPoint[i];
        if (col < 1) throw std::logic_error("simplex: dual point infeasible");
    }
    if (primalSum != s.value || dualSum != s.value)
        throw std::logic_error("simplex: strong duality certificate failed");
}

inline void dumpTableau(const std::vector<RationalVector>& T, const std::vector<int>& basis,
                        std::ostream& os) {
    os << "tableau (basis:";
    for (int b : basis) os << ' ' << b;
    os << ")\n";
    for (const auto& row : T) {
        for (const auto& v : row) os << ' ' << toString(v);
        os << '\n';
    }
}

}  // namespace detail

/// Optimal value of the LP pair above, with certifying primal/dual points.
/// y = 0 is always feasible and any nonzero-column matrix admits a feasible
/// dual point, so the optimum exists and is finite. Pass a stream to dump
/// every pivot's tableau.
inline LPSolution nuStar(const ExponentMatrix& M, const ExponentVector& a,
                         std::ostream* trace = nullptr) {
    detail::checkNoZeroColumn(M);
    const int n = M.rows, m = M.cols;
    if (a.size() != n) throw DimensionMismatchError("vector length does not match matrix rows");

    if (m == 0) {
        // Zero ideal: empty objective, optimum 0 at the empty point.
        return {Rational(0), {}, RationalVector(n, Rational(0))};
    }

    // Tableau over variables (y_0..y_{m-1}, s_0..s_{n-1}); slacks start basic.
    const int width = m + n + 1;
    std::vector<RationalVector> T(n + 1, RationalVector(width, Rational(0)));
    std::vector<int> basis(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) T[i][j] = M.entries[i][j];
        T[i][m + i] = 1;
        T[i][width - 1] = a[i];
        basis[i] = m + i;
    }
    for (int j = 0; j < m; ++j) T[n][j] = 1;  // reduced costs; rhs holds -value

    while (true) {
        if (trace) detail::dumpTableau(T, basis, *trace);
        int enter = -1;  // Bland: smallest improving index
        for (int j = 0; j < m + n; ++j)
            if (T[n][j] > 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rational bestRatio = 0;
        for (int i = 0; i < n; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][width - 1] / T[i][enter];
            if (leave < 0 || ratio < bestRatio ||
                (ratio == bestRatio && basis[i] < basis[leave])) {
                leave = i;
                bestRatio = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("simplex: unbounded objective despite nonzero columns");

        const Rational pivotInv = Rational(1) / T[leave][enter];
        for (auto& v : T[leave]) v *= pivotInv;
        for (int i = 0; i <= n; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rational factor = T[i][enter];
            for (int c = 0; c < width; ++c) T[i][c] -= factor * T[leave][c];
        }
        basis[leave] = enter;
    }

    LPSolution s;
    s.value = -T[n][width - 1];
    s.primalPoint.assign(m, Rational(0));
    for (int i = 0; i < n; ++i)
        if (basis[i] < m) s.primalPoint[basis[i]] = T[i][width - 1];
    s.dualPoint.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) s.dualPoint[i] = -T[n][m + i];

    detail::verifySolution(M, a, s);
    return s;
}

/// All vertices of Q(M) = { z >= 0 : M'.z >= 1 }, lex-sorted, no duplicates.
struct DualVertexSet {
    std::vector<RationalVector> vertices;
};

inline DualVertexSet dualVertices(const ExponentMatrix& M) {
    detail::checkNoZeroColumn(M);
    const int n = M.rows, m = M.cols;

    // Constraint rows: M' z >= 1 (m rows), then z_i >= 0 (n rows).
    std::vector<RationalVector> rows;
    std::vector<Rational> rhs;
    for (int j = 0; j < m; ++j) {
        RationalVector r(n, Rational(0));
        for (int i = 0; i < n; ++i) r[i] = M.entries[i][j];
        rows.push_back(std::move(r));
        rhs.push_back(Rational(1));
    }
    for (int i = 0; i < n; ++i) {
        RationalVector r(n, Rational(0));
        r[i] = 1;
        rows.push_back(std::move(r));
        rhs.push_back(Rational(0));
    }
    const int total = m + n;

    std::set<RationalVector> found;
    std::vector<int> pick(n);
    // Exhaustive over n-subsets of the constraints: solve each square tight
    // system, keep feasible solutions. Candidate counts are tiny at the
    // generator sizes this library targets.
    auto recurse = [&](auto&& self, int start, int depth) -> void {
        if (depth == n) {
            RationalMatrix A(n, RationalVector(n));
            RationalVector b(n);
            for (int k = 0; k < n; ++k) {
                A[k] = rows[pick[k]];
                b[k] = rhs[pick[k]];
            }
            auto z = solveSquare(std::move(A), std::move(b));
            if (!z) return;
            for (int i = 0; i < n; ++i)
                if ((*z)[i] < 0) return;
            for (int j = 0; j < m; ++j) {
                Rational dot = 0;
                for (int i = 0; i < n; ++i) dot += Rational(M.entries[i][j]) * (*z)[i];
                if (dot < 1) return;
            }
            found.insert(*z);
            return;
        }
        for (int c = start; c <= total - (n - depth); ++c) {
            pick[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    if (n > 0) recurse(recurse, 0, 0);

    DualVertexSet out;
    out.vertices.assign(found.begin(), found.end());
    return out;
}

/// min over the vertex set of a.z — equals nuStar(M, a).value for a >= 0.
inline Rational vertexEnvelope(const DualVertexSet& V, const ExponentVector& a) {
    bool first = true;
    Rational best = 0;
    for (const auto& z : V.vertices) {
        Rational dot = 0;
        for (int i = 0; i < static_cast<int>(z.size()); ++i) dot += Rational(a[i]) * z[i];
        if (first || dot < best) {
            best = dot;
            first = false;
        }
    }
    if (first) throw InvalidMatrixError("empty vertex set");
    return best;
}

}  // namespace rp

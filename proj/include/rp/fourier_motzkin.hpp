// Fourier-Motzkin feasibility oracle for the membership system
//
//   M.y <= a,  y >= 0,  1.y >= t.
//
// Independent of the simplex path: decides feasibility by variable
// elimination alone and never forms a tableau or touches dual points.
// Used as a second route in every place the library's closure computations
// are cross-checked.

#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "rp/error.hpp"
#include "rp/ideal.hpp"
#include "rp/rational.hpp"

namespace rp {

namespace fm_detail {

// One inequality coeffs . y <= rhs.
struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;

    bool operator<(const Row& other) const {
        if (coeffs != other.coeffs) return coeffs < other.coeffs;
        return rhs < other.rhs;
    }
};

// Scale so the largest coefficient magnitude is 1; canonical form for dedup.
inline Row normalize(Row r) {
    Rational maxAbs = 0;
    for (const auto& c : r.coeffs) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (a > maxAbs) maxAbs = a;
    }
    if (maxAbs == 0) return r;
    for (auto& c : r.coeffs) c /= maxAbs;
    r.rhs /= maxAbs;
    return r;
}

// Eliminate the first variable: combine every (positive, negative)
// coefficient pair with positive multipliers, keep the zero-coefficient rows.
inline std::vector<Row> eliminateFirst(const std::vector<Row>& rows) {
    std::vector<const Row*> pos, neg;
    std::set<Row> next;
    auto keep = [&](Row r) {
        r.coeffs.erase(r.coeffs.begin());
        next.insert(normalize(std::move(r)));
    };
    for (const auto& r : rows) {
        if (r.coeffs[0] > 0)
            pos.push_back(&r);
        else if (r.coeffs[0] < 0)
            neg.push_back(&r);
        else
            keep(r);
    }
    const int width = rows.empty() ? 0 : static_cast<int>(rows[0].coeffs.size());
    for (const Row* p : pos)
        for (const Row* q : neg) {
            Row combined;
            combined.coeffs.resize(width);
            const Rational mp = -q->coeffs[0];  // > 0, multiplies p
            const Rational mq = p->coeffs[0];   // > 0, multiplies q
            for (int c = 0; c < width; ++c)
                combined.coeffs[c] = mp * p->coeffs[c] + mq * q->coeffs[c];
            combined.rhs = mp * p->rhs + mq * q->rhs;
            keep(std::move(combined));
        }
    return {next.begin(), next.end()};
}

}  // namespace fm_detail

/// Decide whether some y >= 0 satisfies M.y <= a and 1.y >= threshold.
/// Equivalent to nuStar(M, a).value >= threshold, established independently.
inline bool fmMembershipOracle(const ExponentMatrix& M, const ExponentVector& a,
                               const Rational& threshold) {
    if (M.hasZeroColumn())
        throw InvalidMatrixError("exponent matrix has a zero column (unit generator)");
    const int n = M.rows, m = M.cols;
    if (a.size() != n) throw DimensionMismatchError("vector length does not match matrix rows");
    if (m == 0) return threshold <= 0;

    using fm_detail::Row;
    std::vector<Row> rows;
    for (int i = 0; i < n; ++i) {
        Row r;
        r.coeffs.assign(M.entries[i].begin(), M.entries[i].end());
        r.rhs = a[i];
        rows.push_back(std::move(r));
    }
    for (int j = 0; j < m; ++j) {
        Row r;
        r.coeffs.assign(m, Rational(0));
        r.coeffs[j] = -1;
        r.rhs = 0;
        rows.push_back(std::move(r));
    }
    {
        Row r;  // 1.y >= t  as  -1.y <= -t
        r.coeffs.assign(m, Rational(-1));
        r.rhs = -threshold;
        rows.push_back(std::move(r));
    }

    for (int step = 0; step < m; ++step) {
        rows = fm_detail::eliminateFirst(rows);
        // Early exit on a constant contradiction 0 <= negative.
        for (const auto& r : rows) {
            bool allZero = std::all_of(r.coeffs.begin(), r.coeffs.end(),
                                       [](const Rational& c) { return c == 0; });
            if (allZero && r.rhs < 0) return false;
        }
    }

    for (const auto& r : rows)
        if (r.rhs < 0) return false;
    return true;
}

}  // namespace rp

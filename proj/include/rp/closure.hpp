// Integral closures of powers and rational powers of monomial ideals.
//
// Membership route: x^a lies in the u-th rational power of I exactly when
// nuStar(M, a) >= u, where M is I's exponent matrix. Whole ideals are
// computed by scanning a finite box of candidate exponents and keeping the
// componentwise-minimal members.
//
// Box bound. A minimal generator a of I_u satisfies, in each coordinate i,
//   a_i <= ceil(u * max_j M[i][j]).
// Reason: membership means a = u * (convex combination of columns) + r with
// r >= 0 componentwise, and the combination's i-th entry is at most
// u * max_j M[i][j]; were a_i above the bound, r_i >= 1 would follow, so
// a - e_i would still be a member and a would not be minimal. This bound is
// this library's own derivation — the box-enlargement test in tests/ and the
// Fourier-Motzkin acceptance checks re-verify it empirically on every run.

#pragma once

#include <optional>
#include <vector>

#include "rp/error.hpp"
#include "rp/fourier_motzkin.hpp"
#include "rp/ideal.hpp"
#include "rp/lp.hpp"
#include "rp/rational.hpp"

namespace rp {

/// Positive integer e with nuStar_a(I) in (1/e)Z for every integer a,
/// so that I_u = I_{ceil(u e)/e} for all u.
struct JumpingDenominator {
    Integer value;
};

/// A computed rational power I_u: base ideal, exponent, and the resulting
/// monomial ideal. Monotone in u: larger exponents give smaller ideals.
struct RationalPowerIdeal {
    MonomialIdeal base;
    Rational exponent;
    MonomialIdeal result;
};

/// Outcome of the integrality test for nuStar values, with an offending
/// dual vertex as certificate when the answer is negative.
struct IntegralityCertificate {
    bool integral = false;
    std::optional<RationalVector> witness;
};

/// True iff x^a is in the u-th rational power of I (u >= 0).
inline bool monomialInRationalPower(const MonomialIdeal& I, const ExponentVector& a,
                                    const Rational& u) {
    if (u < 0) throw PreconditionError("rational-power exponent must be nonnegative");
    if (a.size() != I.context.size())
        throw DimensionMismatchError("monomial length does not match ideal context");
    if (I.isUnit()) return true;
    if (I.isZero()) return u <= 0;
    return nuStar(matrixOf(I), a).value >= u;
}

namespace closure_detail {

// Box scan: all componentwise-minimal integer points a with nuStar_a >= u.
// nuStar is evaluated through the dual-vertex envelope, one dot product per
// vertex; the simplex and Fourier-Motzkin routes cross-check this elsewhere.
inline MonomialIdeal rationalPowerByScan(const MonomialIdeal& I, const Rational& u) {
    const ExponentMatrix M = matrixOf(I);
    const DualVertexSet V = dualVertices(M);
    const int n = M.rows;

    std::vector<int> bound(n);
    for (int i = 0; i < n; ++i)
        bound[i] = static_cast<int>(ratCeil(u * M.maxInRow(i)));

    std::vector<ExponentVector> members;
    ExponentVector a = ExponentVector::zero(n);
    while (true) {
        bool dominated = false;
        for (const auto& g : members)
            if (a.dominates(g)) {
                dominated = true;
                break;
            }
        if (!dominated && vertexEnvelope(V, a) >= u) members.push_back(a);

        int i = n - 1;
        while (i >= 0 && a[i] == bound[i]) {
            a[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++a[i];
    }
    return minimalize(I.context, members);
}

}  // namespace closure_detail

/// The u-th rational power I_u = { a : nuStar_a(I) >= u }, as a minimal
/// generating set. I_0 is the unit ideal; for integer u this is the integral
/// closure of I^u.
inline RationalPowerIdeal rationalPower(const MonomialIdeal& I, const Rational& u) {
    if (u < 0) throw PreconditionError("rational-power exponent must be nonnegative");
    RationalPowerIdeal out{I, u, zeroIdeal(I.context)};
    if (u == 0 || I.isUnit())
        out.result = unitIdeal(I.context);
    else if (I.isZero())
        out.result = zeroIdeal(I.context);
    else
        out.result = closure_detail::rationalPowerByScan(I, u);
    return out;
}

/// Minimal generating set of the integral closure of I^k. k = 0 gives the
/// unit ideal; the zero ideal is its own closure.
inline MonomialIdeal integralClosurePower(const MonomialIdeal& I, int k) {
    if (k < 0) throw PreconditionError("closure power must be nonnegative");
    return rationalPower(I, Rational(k)).result;
}

/// lcm of the denominators of all dual-vertex coordinates. Every nuStar
/// value at an integer point is a multiple of 1/e, so rational powers jump
/// only at multiples of 1/e.
inline JumpingDenominator jumpingDenominator(const MonomialIdeal& I) {
    if (I.isZero())
        throw UndefinedOperationError("jumping denominator of the zero ideal is undefined");
    if (I.isUnit()) return {Integer(1)};
    Integer e = 1;
    for (const auto& z : dualVertices(matrixOf(I)).vertices)
        for (const auto& c : z) e = intLcm(e, denominatorOf(c));
    return {e};
}

/// True iff nuStar_a(I) is an integer for every integer vector a; decided by
/// integrality of every dual vertex, with an offending vertex returned as
/// witness otherwise. The test suite cross-validates this criterion against
/// brute-force integrality of nuStar over a box.
inline IntegralityCertificate isNuStarAlwaysIntegral(const MonomialIdeal& I) {
    if (I.isZero())
        throw UndefinedOperationError("integrality test of the zero ideal is undefined");
    IntegralityCertificate cert;
    cert.integral = true;
    if (I.isUnit()) return cert;
    for (const auto& z : dualVertices(matrixOf(I)).vertices)
        for (const auto& c : z)
            if (!isIntegral(c)) {
                cert.integral = false;
                cert.witness = z;
                return cert;
            }
    return cert;
}

/// True iff I equals the integral closure of I^1.
inline bool isIntegrallyClosed(const MonomialIdeal& I) {
    if (I.isZero()) return true;
    return integralClosurePower(I, 1) == I;
}

}  // namespace rp

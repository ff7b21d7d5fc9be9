// Betti splittings, Tor-vanishing certificates, and the depth/regularity
// comparison for integral closures of powers of a sum of ideals in disjoint
// variable sets.
//
// The chain being exercised: the partial sums
//   P_{k,t} = closure(I^k)*closure(J^0) + ... + closure(I^(k-t))*closure(J^t)
// decompose as P_{k,t} = P_{k,t-1} + closure(I^(k-t))*closure(J^t) with
// intersection closure(I^(k-t+1))*closure(J^t); when those decompositions
// are Betti splittings, the depth and regularity of the closure of (I+J)^k
// are determined by the depths and regularities of the closures of powers
// of I and of J alone.

#pragma once

#include <map>
#include <vector>

#include "rp/betti.hpp"
#include "rp/closure.hpp"
#include "rp/expansion.hpp"
#include "rp/ideal.hpp"

namespace rp {

/// P_{k,t} in the juxtaposed context, 0 <= t <= k.
inline MonomialIdeal partialSumIdeal(const MonomialIdeal& I, const MonomialIdeal& J,
                                     int k, int t) {
    if (t < 0 || t > k) throw PreconditionError("partial-sum index must satisfy 0 <= t <= k");
    VariableContext big = juxtapose(I.context, J.context);
    MonomialIdeal acc = zeroIdeal(big);
    for (int l = 0; l <= t; ++l)
        acc = idealSum(acc, idealProduct(embedIdeal(integralClosurePower(I, k - l), big, 0),
                                         embedIdeal(integralClosurePower(J, l), big,
                                                    I.context.size())));
    return acc;
}

/// Per-t outcome of the two partial-sum identities:
///   (a) P_{k,t} = P_{k,t-1} + closure(I^(k-t))*closure(J^t)
///   (b) P_{k,t-1} intersect closure(I^(k-t))*closure(J^t)
///          = closure(I^(k-t+1))*closure(J^t)
struct FiltrationCheck {
    std::vector<bool> identityA;  // index t-1, t = 1..k
    std::vector<bool> identityB;

    bool allHold() const {
        for (bool b : identityA)
            if (!b) return false;
        for (bool b : identityB)
            if (!b) return false;
        return true;
    }
};

inline FiltrationCheck verifyFiltrationIdentities(const MonomialIdeal& I,
                                                  const MonomialIdeal& J, int k) {
    if (k < 1) throw PreconditionError("filtration check requires k >= 1");
    VariableContext big = juxtapose(I.context, J.context);
    FiltrationCheck check;
    MonomialIdeal previous = partialSumIdeal(I, J, k, 0);
    for (int t = 1; t <= k; ++t) {
        MonomialIdeal tail = idealProduct(embedIdeal(integralClosurePower(I, k - t), big, 0),
                                          embedIdeal(integralClosurePower(J, t), big,
                                                     I.context.size()));
        MonomialIdeal current = partialSumIdeal(I, J, k, t);
        check.identityA.push_back(current == idealSum(previous, tail));
        MonomialIdeal expected = idealProduct(
            embedIdeal(integralClosurePower(I, k - t + 1), big, 0),
            embedIdeal(integralClosurePower(J, t), big, I.context.size()));
        check.identityB.push_back(idealIntersection(previous, tail) == expected);
        previous = std::move(current);
    }
    return check;
}

/// Whether the decomposition P = I + J satisfies
/// beta_{i,j}(P) = beta_{i,j}(I) + beta_{i,j}(J) + beta_{i-1,j}(I cap J)
/// for all i, j (graded Betti numbers of the ideals themselves).
inline bool isBettiSplitting(const MonomialIdeal& P, const MonomialIdeal& I,
                             const MonomialIdeal& J) {
    requireSameContext(P, I);
    requireSameContext(P, J);
    if (P != idealSum(I, J))
        throw PreconditionError("Betti splitting requires P = I + J");
    BettiTable tP = bettiTableIdeal(P);
    BettiTable tI = bettiTableIdeal(I);
    BettiTable tJ = bettiTableIdeal(J);
    BettiTable tC = bettiTableIdeal(idealIntersection(I, J));

    std::map<std::pair<int, int>, long long> lhs = tP.entries;
    std::map<std::pair<int, int>, long long> rhs;
    for (const auto& [key, v] : tI.entries) rhs[key] += v;
    for (const auto& [key, v] : tJ.entries) rhs[key] += v;
    for (const auto& [key, v] : tC.entries) rhs[{key.first + 1, key.second}] += v;
    return lhs == rhs;
}

/// Containment certificates that make the closure-power filtration
/// Tor-vanishing. All three families are theorems for every monomial ideal;
/// any false entry signals a defect in the computations, not in the input.
struct TorVanishingCertificates {
    // deltaContain[k]: delta*(closure(I^k)) inside closure(I^(k-1)), k >= 2
    std::map<int, bool> deltaContain;
    // maxContain[k]: closure(I^k) inside m * closure(I^(k-1)), k >= 2
    std::map<int, bool> maxContain;
    // powerGap[{k,e}]: closure(I^(k+e)) inside m^e * closure(I^k)
    std::map<std::pair<int, int>, bool> powerGap;

    bool allHold() const {
        for (const auto& [k, b] : deltaContain)
            if (!b) return false;
        for (const auto& [k, b] : maxContain)
            if (!b) return false;
        for (const auto& [ke, b] : powerGap)
            if (!b) return false;
        return true;
    }
};

inline TorVanishingCertificates checkTorVanishingCertificates(const MonomialIdeal& I,
                                                              int kMax, int eMax) {
    if (kMax < 2) throw PreconditionError("certificate bound kMax must be >= 2");
    if (eMax < 1) throw PreconditionError("certificate bound eMax must be >= 1");
    if (I.isZero()) throw UndefinedOperationError("certificates require a nonzero ideal");

    std::map<int, MonomialIdeal> closures;
    for (int k = 0; k <= kMax + eMax; ++k) closures[k] = integralClosurePower(I, k);

    TorVanishingCertificates certs;
    for (int k = 2; k <= kMax; ++k) {
        certs.deltaContain[k] = contains(closures[k - 1], deltaStar(closures[k]));
        certs.maxContain[k] = contains(maximalIdealPowerTimes(closures[k - 1], 1), closures[k]);
    }
    for (int k = 1; k <= kMax; ++k)
        for (int e = 1; e <= eMax; ++e)
            certs.powerGap[{k, e}] =
                contains(maximalIdealPowerTimes(closures[k], e), closures[k + e]);
    return certs;
}

/// One k of the depth/regularity comparison: the left side is computed
/// directly from the Betti table of S / closure((I+J)^k); the right side is
/// the min/max formula over depths and regularities of closures of powers
/// of I and J. Anti-circular by construction: the two sides share no
/// intermediate values.
struct DepthRegComparison {
    int k = 0;
    int depthDirect = 0, depthFormula = 0;
    int regDirect = 0, regFormula = 0;

    bool depthEqual() const { return depthDirect == depthFormula; }
    bool regEqual() const { return regDirect == regFormula; }
    bool boundsHold() const { return depthDirect >= depthFormula && regDirect <= regFormula; }
};

inline DepthRegComparison computeDepthRegComparison(const MonomialIdeal& I,
                                                    const MonomialIdeal& J, int k) {
    if (k < 1) throw PreconditionError("depth/regularity comparison requires k >= 1");
    DepthRegComparison cmp;
    cmp.k = k;

    MonomialIdeal sumPower = integralClosurePower(externalSum(I, J).ideal, k);
    InvariantReport direct = depthAndReg(sumPower);
    cmp.depthDirect = direct.depth;
    cmp.regDirect = direct.regularity;

    std::map<int, InvariantReport> left, right;
    for (int t = 1; t <= k; ++t) {
        left[t] = depthAndReg(integralClosurePower(I, t));
        right[t] = depthAndReg(integralClosurePower(J, t));
    }

    bool first = true;
    auto consider = [&](int depthTerm, int regTerm) {
        if (first || depthTerm < cmp.depthFormula) cmp.depthFormula = depthTerm;
        if (first || regTerm > cmp.regFormula) cmp.regFormula = regTerm;
        first = false;
    };
    for (int i = 1; i <= k - 1; ++i)
        consider(left[k - i].depth + right[i].depth + 1,
                 left[k - i].regularity + right[i].regularity + 1);
    for (int j = 1; j <= k; ++j)
        consider(left[k - j + 1].depth + right[j].depth,
                 left[k - j + 1].regularity + right[j].regularity);
    return cmp;
}

struct DepthRegReport {
    std::vector<DepthRegComparison> perK;

    bool allEqual() const {
        for (const auto& c : perK)
            if (!c.depthEqual() || !c.regEqual()) return false;
        return true;
    }
};

/// Check the depth/regularity equality for k = 1..kMax. Requires the
/// integrality hypothesis on I (every nuStar value an integer); refuses with
/// the offending dual vertex otherwise. Equality is asserted by the theory
/// whenever the hypothesis holds, so any unequal row is a defect alarm.
inline DepthRegReport verifyDepthRegTheorem(const MonomialIdeal& I, const MonomialIdeal& J,
                                            int kMax) {
    if (kMax < 1) throw PreconditionError("depth/regularity check requires kMax >= 1");
    IntegralityCertificate cert = isNuStarAlwaysIntegral(I);
    if (!cert.integral)
        throw HypothesisError(
            "first summand has a non-integral dual vertex; the depth/regularity "
            "formula is not guaranteed",
            toString(*cert.witness));
    DepthRegReport report;
    for (int k = 1; k <= kMax; ++k) report.perK.push_back(computeDepthRegComparison(I, J, k));
    return report;
}

}  // namespace rp

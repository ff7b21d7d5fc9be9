// Binomial expansions for powers of a sum of ideals in disjoint variables.
//
// For monomial ideals I and J in disjoint contexts and u in Q>=0,
//
//   (I+J)_u  =  sum over omega in [0,u] of  I_omega * J_{u-omega},
//
// and the sum collapses to finitely many distinct terms: with jumping
// denominators e (for I) and f (for J), every factor satisfies
// I_omega = I_{ceil(omega*e)/e}, so sampling omega on the grid of multiples
// of 1/lcm(e, f, denom(u)) meets every distinct product. (The denominator of
// u must divide the grid spacing so that omega = u itself is sampled;
// otherwise the I_u * J_0 term would be lost.)
//
// The integer-power variant keeps only the classical terms
// closure(I^l) * closure(J^(k-l)); the two sides agree whenever every
// nuStar value of I is an integer, and the report lists the exact missing
// monomials when they do not.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rp/closure.hpp"
#include "rp/ideal.hpp"
#include "rp/rational.hpp"

namespace rp {

/// Two-sided comparison of a computed power of a sum against its binomial
/// expansion. rightSide is always contained in leftSide; `equal` holds
/// exactly when nothing is missing.
struct ExpansionReport {
    MonomialIdeal leftSide;
    MonomialIdeal rightSide;
    bool equal = false;
    std::vector<ExponentVector> missingFromRight;
    // Distinct contributing terms, keyed by the smallest omega attaining
    // each; the value is I_omega * J_{u-omega} in the juxtaposed context.
    std::vector<std::pair<Rational, MonomialIdeal>> termIndex;
};

namespace expansion_detail {

inline Integer safeJumpingDenominator(const MonomialIdeal& I) {
    if (I.isZero() || I.isUnit()) return 1;  // rational powers snap at integers
    return jumpingDenominator(I).value;
}

struct TermAccumulator {
    VariableContext big;
    int offset;  // start of the right block
    std::map<Rational, MonomialIdeal> powersLeft, powersRight;
    std::vector<std::pair<Rational, MonomialIdeal>> terms;
    std::vector<ExponentVector> unionGens;

    const MonomialIdeal& leftPower(const MonomialIdeal& I, const Rational& w) {
        auto it = powersLeft.find(w);
        if (it == powersLeft.end())
            it = powersLeft.emplace(w, rationalPower(I, w).result).first;
        return it->second;
    }
    const MonomialIdeal& rightPower(const MonomialIdeal& J, const Rational& w) {
        auto it = powersRight.find(w);
        if (it == powersRight.end())
            it = powersRight.emplace(w, rationalPower(J, w).result).first;
        return it->second;
    }

    void addTerm(const Rational& omega, const MonomialIdeal& I, const Rational& wI,
                 const MonomialIdeal& J, const Rational& wJ) {
        MonomialIdeal term = idealProduct(embedIdeal(leftPower(I, wI), big, 0),
                                          embedIdeal(rightPower(J, wJ), big, offset));
        terms.emplace_back(omega, term);
        unionGens.insert(unionGens.end(), term.generators.begin(), term.generators.end());
    }

    MonomialIdeal total() const { return minimalize(big, unionGens); }
};

}  // namespace expansion_detail

/// The full rational-power expansion of (I+J)_u, in the juxtaposed context.
/// gridRefine multiplies the sampling density (debugging aid; the output is
/// invariant under refinement).
inline ExpansionReport expansionRationalReport(const MonomialIdeal& I, const MonomialIdeal& J,
                                               const Rational& u, int gridRefine = 1) {
    if (u < 0) throw PreconditionError("expansion exponent must be nonnegative");
    if (gridRefine < 1) throw PreconditionError("grid refinement factor must be >= 1");

    expansion_detail::TermAccumulator acc;
    acc.big = juxtapose(I.context, J.context);
    acc.offset = I.context.size();

    const Integer e = expansion_detail::safeJumpingDenominator(I);
    const Integer f = expansion_detail::safeJumpingDenominator(J);
    Integer L = intLcm(intLcm(e, f), denominatorOf(u)) * gridRefine;

    const Integer steps = numeratorOf(u * Rational(L));  // u*L is integral by choice of L
    std::map<std::pair<Rational, Rational>, Rational> seen;  // snapped pair -> first omega
    for (Integer t = 0; t <= steps; ++t) {
        const Rational omega = Rational(t) / Rational(L);
        const Rational wI = Rational(ratCeil(omega * Rational(e))) / Rational(e);
        const Rational wJ = Rational(ratCeil((u - omega) * Rational(f))) / Rational(f);
        if (seen.emplace(std::make_pair(wI, wJ), omega).second)
            acc.addTerm(omega, I, wI, J, wJ);
    }

    ExpansionReport report;
    report.termIndex = acc.terms;
    report.rightSide = acc.total();
    return report;  // leftSide/equal filled by verify
}

inline MonomialIdeal expansionRational(const MonomialIdeal& I, const MonomialIdeal& J,
                                       const Rational& u, int gridRefine = 1) {
    return expansionRationalReport(I, J, u, gridRefine).rightSide;
}

namespace expansion_detail {

inline void finishReport(ExpansionReport& report, MonomialIdeal left) {
    report.leftSide = std::move(left);
    report.missingFromRight.clear();
    for (const auto& g : report.leftSide.generators)
        if (!monomialIn(report.rightSide, g)) report.missingFromRight.push_back(g);
    report.equal = report.missingFromRight.empty() &&
                   contains(report.leftSide, report.rightSide);
}

}  // namespace expansion_detail

/// Compare (I+J)_u, computed directly from the block exponent matrix of the
/// sum, against the expansion above. Equality is a theorem for all monomial
/// ideals; a report with equal == false indicates a defect in this library.
inline ExpansionReport verifyRationalExpansion(const MonomialIdeal& I, const MonomialIdeal& J,
                                               const Rational& u, int gridRefine = 1) {
    ExpansionReport report = expansionRationalReport(I, J, u, gridRefine);
    expansion_detail::finishReport(report, rationalPower(externalSum(I, J).ideal, u).result);
    return report;
}

/// The classical (k+1)-term expansion: sum of closure(I^l) * closure(J^(k-l)).
inline ExpansionReport expansionIntegerReport(const MonomialIdeal& I, const MonomialIdeal& J,
                                              int k) {
    if (k < 0) throw PreconditionError("expansion power must be nonnegative");
    expansion_detail::TermAccumulator acc;
    acc.big = juxtapose(I.context, J.context);
    acc.offset = I.context.size();
    for (int l = 0; l <= k; ++l)
        acc.addTerm(Rational(l), I, Rational(l), J, Rational(k - l));
    ExpansionReport report;
    report.termIndex = acc.terms;
    report.rightSide = acc.total();
    return report;
}

inline MonomialIdeal expansionInteger(const MonomialIdeal& I, const MonomialIdeal& J, int k) {
    return expansionIntegerReport(I, J, k).rightSide;
}

/// Compare the closure of (I+J)^k against the classical expansion. Whenever
/// every nuStar value of I is integral, equality must hold; otherwise the
/// report lists the missing monomials (and equality may genuinely fail).
inline ExpansionReport verifyIntegerExpansion(const MonomialIdeal& I, const MonomialIdeal& J,
                                              int k) {
    ExpansionReport report = expansionIntegerReport(I, J, k);
    expansion_detail::finishReport(report, integralClosurePower(externalSum(I, J).ideal, k));
    return report;
}

}  // namespace rp

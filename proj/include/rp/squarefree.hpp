// Squarefree monomial ideals: minimal primes as minimal vertex covers, and
// symbolic powers as intersections of powers of those primes.

#pragma once

#include <algorithm>
#include <vector>

#include "rp/closure.hpp"
#include "rp/ideal.hpp"

namespace rp {

inline bool isSquarefree(const MonomialIdeal& I) {
    for (const auto& g : I.generators)
        for (int i = 0; i < g.size(); ++i)
            if (g[i] > 1) return false;
    return true;
}

/// Minimal vertex covers of the hypergraph of generator supports, each given
/// as a sorted list of variable indices. Cover C corresponds to the minimal
/// prime (x_i : i in C). Exhaustive over variable subsets.
inline std::vector<std::vector<int>> minimalPrimesSquarefree(const MonomialIdeal& I) {
    if (!isSquarefree(I)) throw PreconditionError("ideal is not squarefree");
    const int n = I.context.size();
    if (I.isZero() || I.isUnit())
        throw UndefinedOperationError("minimal primes require a proper nonzero ideal");
    if (n > 31) throw PreconditionError("cover enumeration supports at most 31 variables");

    std::vector<unsigned> supports;
    for (const auto& g : I.generators) {
        unsigned mask = 0;
        for (int i = 0; i < n; ++i)
            if (g[i] > 0) mask |= 1u << i;
        supports.push_back(mask);
    }

    std::vector<unsigned> covers;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool coversAll = true;
        for (unsigned s : supports)
            if ((s & mask) == 0) {
                coversAll = false;
                break;
            }
        if (coversAll) covers.push_back(mask);
    }
    std::vector<std::vector<int>> minimal;
    for (unsigned c : covers) {
        bool isMinimal = true;
        for (unsigned d : covers)
            if (d != c && (d & c) == d) {
                isMinimal = false;
                break;
            }
        if (!isMinimal) continue;
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (c & (1u << i)) vars.push_back(i);
        minimal.push_back(std::move(vars));
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

/// P^k for the prime P = (x_i : i in vars): all degree-k monomials in those
/// variables.
inline MonomialIdeal primePower(const VariableContext& ctx, const std::vector<int>& vars, int k) {
    if (k == 0) return unitIdeal(ctx);
    if (vars.empty()) return zeroIdeal(ctx);
    std::vector<ExponentVector> gens;
    ExponentVector cur = ExponentVector::zero(ctx.size());
    auto recurse = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == static_cast<int>(vars.size()) - 1) {
            cur[vars[pos]] = remaining;
            gens.push_back(cur);
            cur[vars[pos]] = 0;
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            cur[vars[pos]] = take;
            self(self, pos + 1, remaining - take);
            cur[vars[pos]] = 0;
        }
    };
    recurse(recurse, 0, k);
    return minimalize(ctx, gens);
}

/// k-th symbolic power of a squarefree monomial ideal: the intersection of
/// k-th powers of its minimal primes.
inline MonomialIdeal symbolicPowerSquarefree(const MonomialIdeal& I, int k) {
    if (!isSquarefree(I)) throw PreconditionError("ideal is not squarefree");
    if (k < 1) throw PreconditionError("symbolic power exponent must be >= 1");
    MonomialIdeal acc = unitIdeal(I.context);
    for (const auto& primeVars : minimalPrimesSquarefree(I))
        acc = idealIntersection(acc, primePower(I.context, primeVars, k));
    return acc;
}

/// Bounded certification of the power/symbolic/closure coincidences used as
/// hypotheses by the expansion results: for each k <= K, whether
/// I^(k) = closure(I^k) and I^k = I^(k). Verified up to K only — nothing is
/// claimed beyond the bound. For non-squarefree input only the squarefree
/// flag is meaningful and the per-k lists are empty.
struct CorollaryHypothesesReport {
    bool squarefree = false;
    int bound = 0;
    std::vector<bool> symbolicEqualsClosure;  // index k-1, k = 1..bound
    std::vector<bool> powersEqualSymbolic;

    bool allHold() const {
        if (!squarefree) return false;
        for (bool b : symbolicEqualsClosure)
            if (!b) return false;
        for (bool b : powersEqualSymbolic)
            if (!b) return false;
        return true;
    }
};

inline CorollaryHypothesesReport checkCorollaryHypotheses(const MonomialIdeal& I, int K) {
    if (K < 1) throw PreconditionError("certification bound must be >= 1");
    CorollaryHypothesesReport report;
    report.bound = K;
    report.squarefree = isSquarefree(I);
    if (!report.squarefree) return report;
    for (int k = 1; k <= K; ++k) {
        MonomialIdeal symbolic = symbolicPowerSquarefree(I, k);
        report.symbolicEqualsClosure.push_back(symbolic == integralClosurePower(I, k));
        report.powersEqualSymbolic.push_back(idealPower(I, k) == symbolic);
    }
    return report;
}

}  // namespace rp

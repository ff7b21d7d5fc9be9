// Shared test helpers: deterministic random ideals and brute-force oracles.
// The oracles here deliberately avoid the library's computation paths —
// membership goes through the Fourier-Motzkin oracle or plain divisibility
// recursion, and minimalization is an independent quadratic scan — so that
// they can certify the main implementations.

#pragma once

#include <functional>
#include <random>
#include <vector>

#include "rp/rp.hpp"

namespace rptest {

using namespace rp;

inline VariableContext makeContext(int n, const std::string& stem = "x") {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return VariableContext(names);
}

/// Proper nonzero random monomial ideal: 1..maxGens nonzero generator
/// vectors with entries in [0, maxExp].
inline MonomialIdeal randomIdeal(std::mt19937_64& rng, const VariableContext& ctx,
                                 int maxGens, int maxExp) {
    std::uniform_int_distribution<int> genCount(1, maxGens);
    std::uniform_int_distribution<int> entry(0, maxExp);
    std::vector<ExponentVector> gens;
    const int count = genCount(rng);
    while (static_cast<int>(gens.size()) < count) {
        ExponentVector g = ExponentVector::zero(ctx.size());
        for (int i = 0; i < ctx.size(); ++i) g[i] = entry(rng);
        if (!g.isZero()) gens.push_back(g);
    }
    return minimalize(ctx, gens);
}

/// Visit every integer point of the box [0, bounds[0]] x ... in some order.
inline void forEachBoxPoint(const std::vector<int>& bounds,
                            const std::function<void(const ExponentVector&)>& visit) {
    const int n = static_cast<int>(bounds.size());
    ExponentVector a = ExponentVector::zero(n);
    while (true) {
        visit(a);
        int i = n - 1;
        while (i >= 0 && a[i] == bounds[i]) {
            a[i] = 0;
            --i;
        }
        if (i < 0) return;
        ++a[i];
    }
}

/// Independent quadratic minimalization (no incremental antichain).
inline std::vector<ExponentVector> naiveMinimalize(std::vector<ExponentVector> vectors) {
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < vectors.size(); ++j)
            if (i != j && vectors[i].dominates(vectors[j])) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(vectors[i]);
    }
    return out;
}

/// Search box for generators of the u-th rational power of I.
inline std::vector<int> closureSearchBox(const MonomialIdeal& I, const Rational& u) {
    ExponentMatrix M = matrixOf(I);
    std::vector<int> bounds(M.rows);
    for (int i = 0; i < M.rows; ++i)
        bounds[i] = static_cast<int>(ratCeil(u * M.maxInRow(i)));
    return bounds;
}

/// Closure of I^k computed through the Fourier-Motzkin route only: collect
/// every box point the oracle accepts, then reduce with the naive scan.
inline MonomialIdeal bruteClosureByFm(const MonomialIdeal& I, int k) {
    ExponentMatrix M = matrixOf(I);
    std::vector<ExponentVector> members;
    forEachBoxPoint(closureSearchBox(I, Rational(k)), [&](const ExponentVector& a) {
        if (fmMembershipOracle(M, a, Rational(k))) members.push_back(a);
    });
    return {I.context, naiveMinimalize(std::move(members))};
}

/// x^a in I^k by divisibility recursion over generator choices.
inline bool brutePowerMembership(const MonomialIdeal& I, int k, const ExponentVector& a) {
    if (k == 0) return true;
    for (const auto& g : I.generators) {
        if (!a.dominates(g)) continue;
        ExponentVector rest = a;
        for (int i = 0; i < a.size(); ++i) rest[i] -= g[i];
        if (brutePowerMembership(I, k - 1, rest)) return true;
    }
    return false;
}

/// x^a in the k-th symbolic power of a squarefree ideal: degree at least k
/// in the variables of every minimal prime.
inline bool bruteSymbolicMembership(const std::vector<std::vector<int>>& primes, int k,
                                    const ExponentVector& a) {
    for (const auto& vars : primes) {
        int degree = 0;
        for (int v : vars) degree += a[v];
        if (degree < k) return false;
    }
    return true;
}

}  // namespace rptest

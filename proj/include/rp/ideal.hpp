// Monomial ideals in exact exponent form.
//
// A MonomialIdeal stores the unique minimal monomial generating set as an
// antichain of exponent vectors, sorted lexicographically. Every operation
// returns ideals in that canonical form, so ideal equality is generator-list
// equality and exponent-matrix columns are deterministic.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rp/context.hpp"
#include "rp/error.hpp"

namespace rp {

/// A point of N^n: the exponent of a monomial in an n-variable context.
struct ExponentVector {
    std::vector<int> entries;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> e) : entries(std::move(e)) {
        for (int v : entries)
            if (v < 0) throw PreconditionError("exponents must be nonnegative");
    }
    ExponentVector(std::initializer_list<int> e) : ExponentVector(std::vector<int>(e)) {}

    static ExponentVector zero(int n) { return ExponentVector(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[i]; }
    int& operator[](int i) { return entries[i]; }

    bool isZero() const {
        return std::all_of(entries.begin(), entries.end(), [](int v) { return v == 0; });
    }

    int totalDegree() const {
        int d = 0;
        for (int v : entries) d += v;
        return d;
    }

    /// Componentwise >=, i.e. the monomial x^this is divisible by x^other.
    bool dominates(const ExponentVector& other) const {
        if (size() != other.size())
            throw DimensionMismatchError("exponent vectors of unequal length");
        for (int i = 0; i < size(); ++i)
            if (entries[i] < other.entries[i]) return false;
        return true;
    }

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
        if (a.size() != b.size())
            throw DimensionMismatchError("exponent vectors of unequal length");
        ExponentVector r = a;
        for (int i = 0; i < b.size(); ++i) r.entries[i] += b.entries[i];
        return r;
    }

    friend ExponentVector operator*(int c, const ExponentVector& a) {
        if (c < 0) throw PreconditionError("scale factor must be nonnegative");
        ExponentVector r = a;
        for (auto& v : r.entries) v *= c;
        return r;
    }

    /// Componentwise maximum: exponent of lcm(x^a, x^b).
    static ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
        if (a.size() != b.size())
            throw DimensionMismatchError("exponent vectors of unequal length");
        ExponentVector r = a;
        for (int i = 0; i < b.size(); ++i) r.entries[i] = std::max(r.entries[i], b.entries[i]);
        return r;
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
        return !(a == b);
    }
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
        return a.entries < b.entries;  // lexicographic
    }
};

/// Monomial ideal given by its minimal generators. The zero ideal has no
/// generators; the unit ideal is generated by the zero vector alone.
struct MonomialIdeal {
    VariableContext context;
    std::vector<ExponentVector> generators;  // canonical: lex-sorted antichain

    bool isZero() const { return generators.empty(); }
    bool isUnit() const { return generators.size() == 1 && generators[0].isZero(); }
    bool isProper() const { return !isUnit(); }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.context == b.context && a.generators == b.generators;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }
};

inline MonomialIdeal zeroIdeal(const VariableContext& ctx) { return {ctx, {}}; }

inline MonomialIdeal unitIdeal(const VariableContext& ctx) {
    return {ctx, {ExponentVector::zero(ctx.size())}};
}

/// Canonicalize an arbitrary generating set: keep the componentwise-minimal
/// vectors, deduplicate, sort lexicographically. The result is the unique
/// minimal generating set of the ideal the input generates.
inline MonomialIdeal minimalize(const VariableContext& ctx, const std::vector<ExponentVector>& gens) {
    std::vector<ExponentVector> antichain;
    for (const auto& g : gens) {
        if (g.size() != ctx.size())
            throw DimensionMismatchError("generator length does not match context size");
        bool dominated = false;
        for (const auto& kept : antichain)
            if (g.dominates(kept)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        // g survives; evict what it now dominates
        std::vector<ExponentVector> next;
        next.reserve(antichain.size() + 1);
        for (auto& kept : antichain)
            if (!kept.dominates(g)) next.push_back(std::move(kept));
        next.push_back(g);
        antichain = std::move(next);
    }
    std::sort(antichain.begin(), antichain.end());
    return {ctx, antichain};
}

inline void requireSameContext(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.context != b.context)
        throw ContextMismatchError("ideals live in different variable contexts");
}

/// True iff x^a lies in I, i.e. a dominates some minimal generator.
inline bool monomialIn(const MonomialIdeal& I, const ExponentVector& a) {
    if (a.size() != I.context.size())
        throw DimensionMismatchError("monomial length does not match ideal context");
    for (const auto& g : I.generators)
        if (a.dominates(g)) return true;
    return false;
}

/// True iff J is contained in I (as ideals in the shared context).
inline bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    requireSameContext(I, J);
    for (const auto& g : J.generators)
        if (!monomialIn(I, g)) return false;
    return true;
}

inline MonomialIdeal idealSum(const MonomialIdeal& I, const MonomialIdeal& J) {
    requireSameContext(I, J);
    std::vector<ExponentVector> gens = I.generators;
    gens.insert(gens.end(), J.generators.begin(), J.generators.end());
    return minimalize(I.context, gens);
}

inline MonomialIdeal idealProduct(const MonomialIdeal& I, const MonomialIdeal& J) {
    requireSameContext(I, J);
    std::vector<ExponentVector> gens;
    gens.reserve(I.generators.size() * J.generators.size());
    for (const auto& f : I.generators)
        for (const auto& g : J.generators) gens.push_back(f + g);
    return minimalize(I.context, gens);
}

/// I^k, with I^0 the unit ideal (also for the zero ideal).
inline MonomialIdeal idealPower(const MonomialIdeal& I, int k) {
    if (k < 0) throw PreconditionError("ideal power exponent must be nonnegative");
    MonomialIdeal acc = unitIdeal(I.context);
    for (int i = 0; i < k; ++i) acc = idealProduct(acc, I);
    return acc;
}

/// Intersection of monomial ideals: generated by lcm(f, g) over generator pairs.
inline MonomialIdeal idealIntersection(const MonomialIdeal& I, const MonomialIdeal& J) {
    requireSameContext(I, J);
    std::vector<ExponentVector> gens;
    gens.reserve(I.generators.size() * J.generators.size());
    for (const auto& f : I.generators)
        for (const auto& g : J.generators) gens.push_back(ExponentVector::join(f, g));
    return minimalize(I.context, gens);
}

/// delta*(I): generated by f/x over minimal generators f and variables x | f.
/// delta* of the unit ideal is the unit ideal; the zero ideal is outside the domain.
inline MonomialIdeal deltaStar(const MonomialIdeal& I) {
    if (I.isZero()) throw UndefinedOperationError("delta* of the zero ideal is undefined");
    if (I.isUnit()) return I;
    std::vector<ExponentVector> gens;
    for (const auto& g : I.generators)
        for (int i = 0; i < g.size(); ++i)
            if (g[i] > 0) {
                ExponentVector h = g;
                h[i] -= 1;
                gens.push_back(h);
            }
    return minimalize(I.context, gens);
}

/// The maximal homogeneous ideal m = (all variables of the context).
inline MonomialIdeal maximalIdeal(const VariableContext& ctx) {
    std::vector<ExponentVector> gens;
    for (int i = 0; i < ctx.size(); ++i) {
        ExponentVector e = ExponentVector::zero(ctx.size());
        e[i] = 1;
        gens.push_back(e);
    }
    return minimalize(ctx, gens);
}

/// m^e * I for the maximal ideal m of I's context, e >= 1.
inline MonomialIdeal maximalIdealPowerTimes(const MonomialIdeal& I, int e) {
    if (e < 1) throw PreconditionError("maximal-ideal multiplier must be >= 1");
    return idealProduct(idealPower(maximalIdeal(I.context), e), I);
}

/// The n x m matrix whose columns are the minimal generators of an ideal,
/// in the canonical generator order.
struct ExponentMatrix {
    int rows = 0;  // n = number of variables
    int cols = 0;  // m = number of generators
    std::vector<std::vector<int>> entries;  // entries[i][j], row-major

    int maxInRow(int i) const {
        int mx = 0;
        for (int j = 0; j < cols; ++j) mx = std::max(mx, entries[i][j]);
        return mx;
    }

    bool hasZeroColumn() const {
        for (int j = 0; j < cols; ++j) {
            bool allZero = true;
            for (int i = 0; i < rows; ++i)
                if (entries[i][j] != 0) {
                    allZero = false;
                    break;
                }
            if (allZero) return true;
        }
        return false;
    }
};

inline ExponentMatrix matrixOf(const MonomialIdeal& I) {
    ExponentMatrix M;
    M.rows = I.context.size();
    M.cols = static_cast<int>(I.generators.size());
    M.entries.assign(M.rows, std::vector<int>(M.cols, 0));
    for (int j = 0; j < M.cols; ++j)
        for (int i = 0; i < M.rows; ++i) M.entries[i][j] = I.generators[j][i];
    return M;
}

/// Result of placing two ideals from disjoint contexts side by side: the sum
/// ideal in the juxtaposed context (blockSplit = left context size) and the
/// block-diagonal exponent matrix of that sum.
struct ExternalSum {
    MonomialIdeal ideal;
    ExponentMatrix matrix;
};

/// Pad a vector from the left block (offset 0) or right block into the
/// juxtaposed context.
inline ExponentVector embedVector(const ExponentVector& a, int offset, int totalSize) {
    ExponentVector r = ExponentVector::zero(totalSize);
    for (int i = 0; i < a.size(); ++i) r[offset + i] = a[i];
    return r;
}

/// Extend an ideal into a juxtaposed context by padding its generators.
inline MonomialIdeal embedIdeal(const MonomialIdeal& I, const VariableContext& big, int offset) {
    std::vector<ExponentVector> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(embedVector(g, offset, big.size()));
    return minimalize(big, gens);
}

inline ExternalSum externalSum(const MonomialIdeal& I, const MonomialIdeal& J) {
    VariableContext big = juxtapose(I.context, J.context);
    std::vector<ExponentVector> gens;
    for (const auto& g : I.generators) gens.push_back(embedVector(g, 0, big.size()));
    for (const auto& g : J.generators)
        gens.push_back(embedVector(g, I.context.size(), big.size()));
    ExternalSum result;
    result.ideal = minimalize(big, gens);
    result.matrix = matrixOf(result.ideal);
    return result;
}

}  // namespace rp

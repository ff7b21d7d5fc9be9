// Graded Betti numbers of monomial ideals and their quotients over a
// characteristic-zero field, computed without building free resolutions:
// for each candidate multidegree a in the lcm lattice of the generators,
// beta_{i,a}(I) is the rank of the (i-1)-st reduced homology of the upper
// Koszul complex K^a(I) = { squarefree b <= a : x^(a-b) in I }, taken over
// the rationals. Homology ranks are exact (fraction-free elimination).
//
// All ranks here are characteristic-0; Betti numbers of monomial ideals can
// differ in small positive characteristic, which this module does not model.

#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rp/error.hpp"
#include "rp/ideal.hpp"
#include "rp/linalg.hpp"

namespace rp {

/// beta_{i,j} indexed by (homological degree, internal degree).
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;
    std::string subject;
    int contextSize = 0;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int maxHomologicalDegree() const {
        int mx = 0;
        for (const auto& [key, v] : entries)
            if (v != 0) mx = std::max(mx, key.first);
        return mx;
    }
    int regularity() const {
        int mx = 0;
        bool any = false;
        for (const auto& [key, v] : entries)
            if (v != 0) {
                mx = any ? std::max(mx, key.second - key.first) : key.second - key.first;
                any = true;
            }
        return any ? mx : 0;
    }
    std::vector<long long> totals() const {
        std::vector<long long> t(maxHomologicalDegree() + 1, 0);
        for (const auto& [key, v] : entries) t[key.first] += v;
        return t;
    }
};

struct InvariantReport {
    int depth = 0;
    int regularity = 0;
    int projectiveDimension = 0;
    BettiTable table;  // of the quotient S/I
};

namespace betti_detail {

// All joins (componentwise maxima) of nonempty generator subsets; every
// multidegree carrying a nonzero Betti number lies in this set.
inline std::set<ExponentVector> lcmLattice(const MonomialIdeal& I) {
    std::set<ExponentVector> lattice(I.generators.begin(), I.generators.end());
    std::vector<ExponentVector> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty()) {
        std::vector<ExponentVector> next;
        for (const auto& a : frontier)
            for (const auto& g : I.generators) {
                ExponentVector j = ExponentVector::join(a, g);
                if (lattice.insert(j).second) next.push_back(j);
            }
        frontier = std::move(next);
    }
    return lattice;
}

// Reduced homology ranks of the upper Koszul complex at multidegree a.
// Returns h[d] = dim over Q of the (d-1)-st reduced homology, so h[i] is
// beta_{i,a}(I). Empty when x^a is not in I.
inline std::vector<long long> koszulHomology(const MonomialIdeal& I, const ExponentVector& a) {
    if (!monomialIn(I, a)) return {};
    std::vector<int> supp;
    for (int i = 0; i < a.size(); ++i)
        if (a[i] > 0) supp.push_back(i);
    const int s = static_cast<int>(supp.size());

    // faces[k] = masks (over supp) of the k-element faces of K^a.
    std::vector<std::vector<unsigned>> faces(s + 1);
    std::vector<std::map<unsigned, int>> index(s + 1);
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        ExponentVector b = a;
        for (int t = 0; t < s; ++t)
            if (mask & (1u << t)) b[supp[t]] -= 1;
        if (!monomialIn(I, b)) continue;
        int size = __builtin_popcount(mask);
        index[size][mask] = static_cast<int>(faces[size].size());
        faces[size].push_back(mask);
    }

    // rankBoundary[k] = rank of the map from k-element faces to (k-1)-element
    // faces; the map to the empty face has rank 1 when vertices exist.
    std::vector<int> rankBoundary(s + 2, 0);
    rankBoundary[1] = faces[1].empty() ? 0 : 1;
    for (int k = 2; k <= s; ++k) {
        if (faces[k].empty()) continue;
        IntegerMatrix D(faces[k - 1].size(), std::vector<Integer>(faces[k].size(), 0));
        for (int col = 0; col < static_cast<int>(faces[k].size()); ++col) {
            unsigned mask = faces[k][col];
            int position = 0;
            for (int t = 0; t < s; ++t) {
                if (!(mask & (1u << t))) continue;
                unsigned sub = mask & ~(1u << t);
                auto it = index[k - 1].find(sub);
                if (it != index[k - 1].end())
                    D[it->second][col] = (position % 2 == 0) ? 1 : -1;
                ++position;
            }
        }
        rankBoundary[k] = integerRank(std::move(D));
    }

    std::vector<long long> h(s + 1, 0);
    // h[0] = reduced H_{-1}: the empty face minus the image of the vertices.
    h[0] = 1 - rankBoundary[1];
    for (int i = 1; i <= s; ++i)
        h[i] = static_cast<long long>(faces[i].size()) - rankBoundary[i] - rankBoundary[i + 1];
    return h;
}

}  // namespace betti_detail

/// Multigraded Betti numbers of the ideal I (beta_0 sits at the generators).
inline std::map<std::pair<int, ExponentVector>, long long> multigradedBetti(
    const MonomialIdeal& I) {
    std::map<std::pair<int, ExponentVector>, long long> betti;
    if (I.isZero()) return betti;
    if (I.isUnit()) {
        betti[{0, ExponentVector::zero(I.context.size())}] = 1;  // S itself, free
        return betti;
    }
    for (const auto& a : betti_detail::lcmLattice(I)) {
        auto h = betti_detail::koszulHomology(I, a);
        for (int i = 0; i < static_cast<int>(h.size()); ++i)
            if (h[i] != 0) betti[{i, a}] += h[i];
    }
    return betti;
}

/// Graded Betti table of the ideal I, coarsened to total degree.
inline BettiTable bettiTableIdeal(const MonomialIdeal& I) {
    BettiTable table;
    table.subject = "I";
    table.contextSize = I.context.size();
    for (const auto& [key, v] : multigradedBetti(I))
        table.entries[{key.first, key.second.totalDegree()}] += v;
    return table;
}

/// Graded Betti table of the quotient S/I. Degenerate inputs follow the
/// module conventions: S/0 = S is free (single beta_{0,0} = 1) and S/S = 0
/// has the empty table.
inline BettiTable bettiTable(const MonomialIdeal& I) {
    BettiTable table;
    table.subject = "S/I";
    table.contextSize = I.context.size();
    if (I.isUnit()) return table;
    table.entries[{0, 0}] = 1;
    for (const auto& [key, v] : multigradedBetti(I))
        table.entries[{key.first + 1, key.second.totalDegree()}] += v;
    return table;
}

/// Depth, regularity and projective dimension of S/I, read off the Betti
/// table: pd = max nonzero homological degree, depth = n - pd, and
/// reg = max (j - i). The zero ideal gives the free module (depth n, reg 0);
/// the unit ideal is outside the domain (S/S is the zero module).
inline InvariantReport depthAndReg(const MonomialIdeal& I) {
    if (I.isUnit())
        throw UndefinedOperationError("depth/regularity of the zero module is undefined");
    InvariantReport report;
    report.table = bettiTable(I);
    report.projectiveDimension = report.table.maxHomologicalDegree();
    report.depth = I.context.size() - report.projectiveDimension;
    report.regularity = report.table.regularity();
    return report;
}

/// Triangular text layout: column i, row d shows beta_{i, i+d}.
inline std::string formatBettiGrid(const BettiTable& table) {
    const int pd = table.maxHomologicalDegree();
    const int reg = table.regularity();
    auto totals = table.totals();

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    for (int i = 0; i <= pd; ++i) header.push_back(std::to_string(i));
    cells.push_back(header);
    std::vector<std::string> totalRow{"total:"};
    for (int i = 0; i <= pd; ++i) totalRow.push_back(std::to_string(totals[i]));
    cells.push_back(totalRow);
    for (int d = 0; d <= reg; ++d) {
        std::vector<std::string> row{std::to_string(d) + ":"};
        for (int i = 0; i <= pd; ++i) {
            long long v = table.at(i, i + d);
            row.push_back(v == 0 ? "." : std::to_string(v));
        }
        cells.push_back(row);
    }

    std::vector<std::size_t> width(pd + 2, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            os << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace rp

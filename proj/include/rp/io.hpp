// The ideal text format and monomial rendering.
//
//   # comment
//   vars x y z
//   x^2*y
//   y3z          (compact power notation)
//
// The zero ideal is written with the single keyword `zero`; the unit ideal
// is the single generator `1`. Canonical serialized form lists generators
// in lexicographic exponent order with explicit `^` and `*`, so that
// parse -> serialize -> parse is the identity on canonical files.

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rp/error.hpp"
#include "rp/ideal.hpp"
#include "rp/rational.hpp"

namespace rp {

struct ParsedIdeal {
    MonomialIdeal ideal;
    std::vector<std::string> warnings;
};

namespace io_detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Longest declared name matching text at pos, or -1.
inline int matchVariable(const VariableContext& ctx, const std::string& text, std::size_t pos) {
    int best = -1;
    std::size_t bestLen = 0;
    for (int i = 0; i < ctx.size(); ++i) {
        const std::string& name = ctx.names[i];
        if (name.size() > bestLen && text.compare(pos, name.size(), name) == 0) {
            best = i;
            bestLen = name.size();
        }
    }
    return best;
}

inline ExponentVector parseMonomial(const VariableContext& ctx, const std::string& text,
                                    int line) {
    ExponentVector a = ExponentVector::zero(ctx.size());
    if (text == "1") return a;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '*') {
            ++pos;
            continue;
        }
        int var = matchVariable(ctx, text, pos);
        if (var < 0)
            throw ParseError("unknown variable or bad character '" + std::string(1, text[pos]) + "'",
                             line, static_cast<int>(pos) + 1);
        pos += ctx.names[var].size();
        long exponent = 1;
        bool explicitExp = false;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            explicitExp = true;
        }
        if (pos < text.size() && text[pos] == '-')
            throw ParseError("negative exponent", line, static_cast<int>(pos) + 1);
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            exponent = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                exponent = exponent * 10 + (text[pos] - '0');
                if (exponent > 1000000)
                    throw ParseError("exponent too large", line, static_cast<int>(pos) + 1);
                ++pos;
            }
        } else if (explicitExp) {
            throw ParseError("expected digits after '^'", line, static_cast<int>(pos) + 1);
        }
        a[var] += static_cast<int>(exponent);
    }
    return a;
}

}  // namespace io_detail

inline ParsedIdeal parseIdealText(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;

    VariableContext ctx;
    bool haveVars = false;
    bool sawZero = false;
    std::vector<ExponentVector> gens;

    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = io_detail::trim(line);
        if (line.empty()) continue;

        if (!haveVars) {
            std::istringstream ls(line);
            std::string keyword;
            ls >> keyword;
            if (keyword != "vars")
                throw ParseError("expected 'vars' declaration", lineNo, 1);
            std::vector<std::string> names;
            std::string name;
            while (ls >> name) names.push_back(name);
            if (names.empty()) throw ParseError("no variables declared", lineNo, 5);
            try {
                ctx = VariableContext(names);
            } catch (const PreconditionError& e) {
                throw ParseError(e.what(), lineNo, 5);
            }
            haveVars = true;
            continue;
        }

        if (line == "zero") {
            sawZero = true;
            continue;
        }
        gens.push_back(io_detail::parseMonomial(ctx, line, lineNo));
    }

    if (!haveVars) throw ParseError("empty file: expected 'vars' declaration", std::max(lineNo, 1), 1);
    if (sawZero && !gens.empty())
        throw ParseError("'zero' cannot be combined with generators", lineNo, 1);
    if (!sawZero && gens.empty())
        throw ParseError("empty generator list; write 'zero' for the zero ideal", lineNo, 1);

    ParsedIdeal out;
    out.ideal = minimalize(ctx, gens);

    std::vector<ExponentVector> sortedInput = gens;
    std::sort(sortedInput.begin(), sortedInput.end());
    sortedInput.erase(std::unique(sortedInput.begin(), sortedInput.end()), sortedInput.end());
    if (!sawZero && sortedInput != out.ideal.generators)
        out.warnings.push_back("input generators were not minimal; reduced to " +
                               std::to_string(out.ideal.generators.size()) + " generator(s)");
    return out;
}

inline ParsedIdeal parseIdealFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ideal file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parseIdealText(buffer.str());
}

/// Render x^a. Compact form concatenates factors (`xy^3`); the explicit form
/// separates them (`x*y^3`) and survives any variable naming.
inline std::string monomialString(const VariableContext& ctx, const ExponentVector& a,
                                  bool compact = true) {
    std::string s;
    for (int i = 0; i < ctx.size(); ++i) {
        if (a[i] == 0) continue;
        if (!s.empty() && !compact) s += '*';
        s += ctx.names[i];
        if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string idealToLine(const MonomialIdeal& I) {
    if (I.isZero()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < I.generators.size(); ++i) {
        if (i) s += ", ";
        s += monomialString(I.context, I.generators[i]);
    }
    return s + ")";
}

inline std::string serializeIdeal(const MonomialIdeal& I) {
    std::ostringstream os;
    os << "vars";
    for (const auto& v : I.context.names) os << ' ' << v;
    os << '\n';
    if (I.isZero()) {
        os << "zero\n";
        return os.str();
    }
    for (const auto& g : I.generators)
        os << monomialString(I.context, g, /*compact=*/false) << '\n';
    return os.str();
}

/// Parse `p` or `p/q` into an exact rational.
inline Rational parseRational(const std::string& text) {
    auto parseInt = [&](const std::string& part) -> Integer {
        if (part.empty()) throw PreconditionError("bad rational '" + text + "'");
        std::size_t start = part[0] == '-' ? 1 : 0;
        if (start == part.size()) throw PreconditionError("bad rational '" + text + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw PreconditionError("bad rational '" + text + "'");
        return Integer(part);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parseInt(text));
    Integer num = parseInt(text.substr(0, slash));
    Integer den = parseInt(text.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in '" + text + "'");
    return Rational(num) / Rational(den);
}

}  // namespace rp

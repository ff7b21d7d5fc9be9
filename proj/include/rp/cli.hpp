// Command-line front end. A thin adapter: parse arguments and ideal files,
// call the library, render. No mathematical logic lives here; the test suite
// checks that every printed result equals the corresponding library value
// verbatim.
//
// Exit codes: 0 success; 1 argument or ideal-file parse error; 2 a
// precondition or mathematical hypothesis fails for the given input (the
// certificate is printed); 3 defect alarm — an identity the theory
// guarantees came out false, which indicates a bug in this library.

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "rp/rp.hpp"

namespace rp {

namespace cli_detail {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kHypothesis = 2;
constexpr int kDefect = 3;

struct Options {
    std::string format = "text";
    bool structured() const { return format == "structured"; }
};

inline Json idealJson(const MonomialIdeal& I) {
    Json j;
    j["vars"] = I.context.names;
    std::vector<std::string> gens;
    if (I.isZero()) {
        j["zero"] = true;
    } else {
        for (const auto& g : I.generators)
            gens.push_back(monomialString(I.context, g, /*compact=*/false));
    }
    j["generators"] = gens;
    return j;
}

inline Json documentHead(const std::string& command) {
    Json j;
    j["format"] = "rp/1";
    j["command"] = command;
    return j;
}

inline void emit(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

inline void printGenerators(const MonomialIdeal& I, std::ostream& out) {
    if (I.isZero()) {
        out << "zero\n";
        return;
    }
    for (const auto& g : I.generators) out << monomialString(I.context, g) << '\n';
}

inline std::string monomialList(const MonomialIdeal& ctxSource,
                                const std::vector<ExponentVector>& monomials) {
    std::string s;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (i) s += ", ";
        s += monomialString(ctxSource.context, monomials[i]);
    }
    return s;
}

inline MonomialIdeal loadIdeal(const std::string& path, std::ostream& err) {
    ParsedIdeal parsed = parseIdealFile(path);
    for (const auto& w : parsed.warnings) err << "warning: " << path << ": " << w << '\n';
    return parsed.ideal;
}

inline Json expansionJson(const ExpansionReport& report) {
    Json j;
    j["left"] = idealJson(report.leftSide);
    j["right"] = idealJson(report.rightSide);
    j["equal"] = report.equal;
    std::vector<std::string> missing;
    for (const auto& m : report.missingFromRight)
        missing.push_back(monomialString(report.leftSide.context, m, /*compact=*/false));
    j["missing"] = missing;
    Json terms = Json::array();
    for (const auto& [omega, term] : report.termIndex) {
        Json t;
        t["omega"] = toString(omega);
        t["term"] = idealJson(term);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline void printExpansionReport(const ExpansionReport& report, std::ostream& out) {
    if (report.equal)
        out << "EQUAL\n";
    else
        out << "NOT EQUAL; missing: " << monomialList(report.leftSide, report.missingFromRight)
            << '\n';
    out << "left:  " << idealToLine(report.leftSide) << '\n';
    out << "right: " << idealToLine(report.rightSide) << '\n';
    for (const auto& [omega, term] : report.termIndex)
        out << "term omega=" << toString(omega) << ": " << idealToLine(term) << '\n';
}

inline Json bettiJson(const BettiTable& table) {
    Json entries = Json::array();
    for (const auto& [key, v] : table.entries) {
        Json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["beta"] = v;
        entries.push_back(e);
    }
    Json j;
    j["subject"] = table.subject;
    j["entries"] = entries;
    return j;
}

}  // namespace cli_detail

/// Run one command. `argv` excludes the program name.
inline int runCli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    using Json = cli_detail::Json;

    CLI::App app{"exact rational powers and integral closures of monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --format after the subcommand name
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    std::string fileA, fileB;
    int k = 0;
    std::string uText;
    int bound = 3;
    bool gridRefine = false;

    auto* closureCmd = app.add_subcommand("closure", "integral closure of I^k");
    closureCmd->add_option("-k", k, "power")->required();
    closureCmd->add_option("ideal", fileA, "ideal file")->required();

    auto* ratCmd = app.add_subcommand("rational-power", "rational power I_u");
    ratCmd->add_option("-u", uText, "exponent p/q")->required();
    ratCmd->add_option("ideal", fileA, "ideal file")->required();

    auto* jumpCmd = app.add_subcommand("jumping-denominator",
                                       "e with I_u constant between multiples of 1/e");
    jumpCmd->add_option("ideal", fileA, "ideal file")->required();

    auto* integralityCmd =
        app.add_subcommand("check-integrality", "are all nu* values integers?");
    integralityCmd->add_option("ideal", fileA, "ideal file")->required();

    auto* expandCmd = app.add_subcommand("expand", "binomial expansion of (I+J)_u");
    expandCmd->add_option("-u", uText, "rational exponent p/q");
    expandCmd->add_option("-k", k, "integer power (classical expansion)");
    expandCmd->add_flag("--grid-refine", gridRefine, "double the omega sampling grid");
    expandCmd->add_option("idealI", fileA, "left ideal file")->required();
    expandCmd->add_option("idealJ", fileB, "right ideal file")->required();

    auto* verifyExpCmd =
        app.add_subcommand("verify-expansion", "compare (I+J) power against its expansion");
    verifyExpCmd->add_option("-u", uText, "rational exponent p/q");
    verifyExpCmd->add_option("-k", k, "integer power (classical expansion)");
    verifyExpCmd->add_flag("--grid-refine", gridRefine, "double the omega sampling grid");
    verifyExpCmd->add_option("idealI", fileA, "left ideal file")->required();
    verifyExpCmd->add_option("idealJ", fileB, "right ideal file")->required();

    auto* symbolicCmd = app.add_subcommand(
        "symbolic", "symbolic power of a squarefree ideal, or bounded certification");
    symbolicCmd->add_option("-k", k, "symbolic power exponent");
    symbolicCmd->add_option("--bound", bound, "certify power/symbolic/closure equalities up to K");
    symbolicCmd->add_option("ideal", fileA, "ideal file")->required();

    auto* bettiCmd = app.add_subcommand("betti", "graded Betti table of S/I");
    bettiCmd->add_option("ideal", fileA, "ideal file")->required();

    auto* depthRegCmd = app.add_subcommand("depth-reg", "depth and regularity of S/I");
    depthRegCmd->add_option("ideal", fileA, "ideal file")->required();

    auto* verifyDrCmd = app.add_subcommand(
        "verify-depth-reg", "depth/reg of closures of (I+J)^k against the two-block formula");
    verifyDrCmd->add_option("-k", k, "check k = 1..kMax")->required();
    verifyDrCmd->add_option("idealI", fileA, "left ideal file")->required();
    verifyDrCmd->add_option("idealJ", fileB, "right ideal file")->required();

    auto* torCmd = app.add_subcommand("certify-tor",
                                      "containment certificates for the closure filtration");
    torCmd->add_option("--bound", bound, "kMax (eMax is fixed at 2)")->capture_default_str();
    torCmd->add_option("ideal", fileA, "ideal file")->required();

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    Rational uValue;
    if (!uText.empty()) {
        try {
            uValue = parseRational(uText);
            if (uValue < 0) throw PreconditionError("exponent must be nonnegative");
        } catch (const Error& e) {
            err << "error: bad -u argument: " << e.what() << '\n';
            return kUsage;
        }
    }

    try {
        if (*closureCmd) {
            MonomialIdeal I = loadIdeal(fileA, err);
            MonomialIdeal result = integralClosurePower(I, k);
            if (opt.structured()) {
                Json j = documentHead("closure");
                j["k"] = k;
                j["input"] = idealJson(I);
                j["result"] = idealJson(result);
                emit(j, out);
            } else {
                printGenerators(result, out);
            }
            return kOk;
        }
        if (*ratCmd) {
            MonomialIdeal I = loadIdeal(fileA, err);
            RationalPowerIdeal result = rationalPower(I, uValue);
            if (opt.structured()) {
                Json j = documentHead("rational-power");
                j["u"] = toString(uValue);
                j["input"] = idealJson(I);
                j["result"] = idealJson(result.result);
                emit(j, out);
            } else {
                printGenerators(result.result, out);
            }
            return kOk;
        }
        if (*jumpCmd) {
            MonomialIdeal I = loadIdeal(fileA, err);
            JumpingDenominator e = jumpingDenominator(I);
            if (opt.structured()) {
                Json j = documentHead("jumping-denominator");
                j["input"] = idealJson(I);
                j["e"] = e.value.str();
                emit(j, out);
            } else {
                out << e.value << '\n';
            }
            return kOk;
        }
        if (*integralityCmd) {
            MonomialIdeal I = loadIdeal(fileA, err);
            IntegralityCertificate cert = isNuStarAlwaysIntegral(I);
            if (opt.structured()) {
                Json j = documentHead("check-integrality");
                j["input"] = idealJson(I);
                j["integral"] = cert.integral;
                if (cert.witness) j["witness_vertex"] = toString(*cert.witness);
                emit(j, out);
            } else if (cert.integral) {
                out << "integral: yes\n";
            } else {
                out << "integral: no\nwitness vertex: " << toString(*cert.witness) << '\n';
            }
            return kOk;
        }
        if (*expandCmd || *verifyExpCmd) {
            const bool verify = static_cast<bool>(*verifyExpCmd);
            CLI::App* cmd = verify ? verifyExpCmd : expandCmd;
            const bool haveU = cmd->count("-u") > 0;
            const bool haveK = cmd->count("-k") > 0;
            if (haveU == haveK)
                throw PreconditionError("exactly one of -u and -k is required");
            MonomialIdeal I = loadIdeal(fileA, err);
            MonomialIdeal J = loadIdeal(fileB, err);
            const int refine = gridRefine ? 2 : 1;

            ExpansionReport report;
            bool hypothesis = true;  // rational expansion holds unconditionally
            if (haveU) {
                report = verify ? verifyRationalExpansion(I, J, uValue, refine)
                                : expansionRationalReport(I, J, uValue, refine);
            } else {
                report = verify ? verifyIntegerExpansion(I, J, k) : expansionIntegerReport(I, J, k);
                hypothesis = I.isZero() ? true : isNuStarAlwaysIntegral(I).integral;
            }

            if (!verify) {
                if (opt.structured()) {
                    Json j = documentHead("expand");
                    if (haveU)
                        j["u"] = uText;
                    else
                        j["k"] = k;
                    j["inputs"] = Json::array({idealJson(I), idealJson(J)});
                    j["result"] = idealJson(report.rightSide);
                    emit(j, out);
                } else {
                    printGenerators(report.rightSide, out);
                }
                return kOk;
            }

            if (opt.structured()) {
                Json j = documentHead("verify-expansion");
                if (haveU)
                    j["u"] = uText;
                else
                    j["k"] = k;
                j["inputs"] = Json::array({idealJson(I), idealJson(J)});
                j["expected_equal"] = hypothesis;
                j["report"] = expansionJson(report);
                emit(j, out);
            } else {
                printExpansionReport(report, out);
            }
            if (!report.equal && hypothesis) return kDefect;
            return kOk;
        }
        if (*symbolicCmd) {
            const bool haveK = symbolicCmd->count("-k") > 0;
            const bool haveBound = symbolicCmd->count("--bound") > 0;
            if (haveK == haveBound)
                throw PreconditionError("exactly one of -k and --bound is required");
            MonomialIdeal I = loadIdeal(fileA, err);
            if (haveK) {
                MonomialIdeal result = symbolicPowerSquarefree(I, k);
                if (opt.structured()) {
                    Json j = documentHead("symbolic");
                    j["k"] = k;
                    j["input"] = idealJson(I);
                    j["result"] = idealJson(result);
                    emit(j, out);
                } else {
                    printGenerators(result, out);
                }
                return kOk;
            }
            CorollaryHypothesesReport report = checkCorollaryHypotheses(I, bound);
            if (opt.structured()) {
                Json j = documentHead("symbolic");
                j["bound"] = bound;
                j["input"] = idealJson(I);
                j["squarefree"] = report.squarefree;
                j["symbolic_equals_closure"] = report.symbolicEqualsClosure;
                j["powers_equal_symbolic"] = report.powersEqualSymbolic;
                j["all_hold_up_to_bound"] = report.allHold();
                emit(j, out);
            } else {
                out << "squarefree: " << (report.squarefree ? "yes" : "no") << '\n';
                for (int kk = 1; kk <= report.bound && report.squarefree; ++kk)
                    out << "k=" << kk << ": symbolic=closure "
                        << (report.symbolicEqualsClosure[kk - 1] ? "yes" : "no")
                        << ", power=symbolic "
                        << (report.powersEqualSymbolic[kk - 1] ? "yes" : "no") << '\n';
                out << "verified up to K=" << report.bound << ": "
                    << (report.allHold() ? "all equalities hold" : "some equality fails") << '\n';
            }
            return kOk;
        }
        if (*bettiCmd) {
            MonomialIdeal I = loadIdeal(fileA, err);
            BettiTable table = bettiTable(I);
            if (opt.structured()) {
                Json j = documentHead("betti");
                j["input"] = idealJson(I);
                j["betti"] = bettiJson(table);
                emit(j, out);
            } else {
                out << formatBettiGrid(table);
            }
            return kOk;
        }
        if (*depthRegCmd) {
            MonomialIdeal I = loadIdeal(fileA, err);
            InvariantReport report = depthAndReg(I);
            if (opt.structured()) {
                Json j = documentHead("depth-reg");
                j["input"] = idealJson(I);
                j["depth"] = report.depth;
                j["regularity"] = report.regularity;
                j["projective_dimension"] = report.projectiveDimension;
                j["betti"] = bettiJson(report.table);
                emit(j, out);
            } else {
                out << "depth: " << report.depth << '\n';
                out << "regularity: " << report.regularity << '\n';
                out << "projective dimension: " << report.projectiveDimension << '\n';
            }
            return kOk;
        }
        if (*verifyDrCmd) {
            MonomialIdeal I = loadIdeal(fileA, err);
            MonomialIdeal J = loadIdeal(fileB, err);
            DepthRegReport report = verifyDepthRegTheorem(I, J, k);
            if (opt.structured()) {
                Json j = documentHead("verify-depth-reg");
                j["kMax"] = k;
                j["inputs"] = Json::array({idealJson(I), idealJson(J)});
                Json rows = Json::array();
                for (const auto& c : report.perK) {
                    Json r;
                    r["k"] = c.k;
                    r["depth_direct"] = c.depthDirect;
                    r["depth_formula"] = c.depthFormula;
                    r["reg_direct"] = c.regDirect;
                    r["reg_formula"] = c.regFormula;
                    r["equal"] = c.depthEqual() && c.regEqual();
                    rows.push_back(r);
                }
                j["rows"] = rows;
                j["all_equal"] = report.allEqual();
                emit(j, out);
            } else {
                for (const auto& c : report.perK)
                    out << "k=" << c.k << ": depth " << c.depthDirect << " vs " << c.depthFormula
                        << ", reg " << c.regDirect << " vs " << c.regFormula << " -> "
                        << (c.depthEqual() && c.regEqual() ? "equal" : "NOT EQUAL") << '\n';
                out << (report.allEqual() ? "all equal\n" : "MISMATCH\n");
            }
            return report.allEqual() ? kOk : kDefect;
        }
        if (*torCmd) {
            MonomialIdeal I = loadIdeal(fileA, err);
            TorVanishingCertificates certs = checkTorVanishingCertificates(I, bound, 2);
            if (opt.structured()) {
                Json j = documentHead("certify-tor");
                j["kMax"] = bound;
                j["eMax"] = 2;
                j["input"] = idealJson(I);
                Json delta = Json::array(), maxc = Json::array(), gap = Json::array();
                for (const auto& [kk, b] : certs.deltaContain)
                    delta.push_back(Json{{"k", kk}, {"holds", b}});
                for (const auto& [kk, b] : certs.maxContain)
                    maxc.push_back(Json{{"k", kk}, {"holds", b}});
                for (const auto& [ke, b] : certs.powerGap)
                    gap.push_back(Json{{"k", ke.first}, {"e", ke.second}, {"holds", b}});
                j["delta_containments"] = delta;
                j["maximal_ideal_containments"] = maxc;
                j["power_gap_containments"] = gap;
                j["all_hold"] = certs.allHold();
                emit(j, out);
            } else {
                for (const auto& [kk, b] : certs.deltaContain)
                    out << "delta*(closure(I^" << kk << ")) in closure(I^" << (kk - 1)
                        << "): " << (b ? "yes" : "NO") << '\n';
                for (const auto& [kk, b] : certs.maxContain)
                    out << "closure(I^" << kk << ") in m*closure(I^" << (kk - 1)
                        << "): " << (b ? "yes" : "NO") << '\n';
                for (const auto& [ke, b] : certs.powerGap)
                    out << "closure(I^" << (ke.first + ke.second) << ") in m^" << ke.second
                        << "*closure(I^" << ke.first << "): " << (b ? "yes" : "NO") << '\n';
                out << (certs.allHold() ? "all certificates hold\n" : "CERTIFICATE FAILURE\n");
            }
            return certs.allHold() ? kOk : kDefect;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const HypothesisError& e) {
        out << "hypothesis failed: " << e.what() << '\n';
        out << "certificate: " << e.certificate() << '\n';
        return kHypothesis;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return dynamic_cast<const PreconditionError*>(&e) ||
                       dynamic_cast<const UndefinedOperationError*>(&e) ||
                       dynamic_cast<const ContextMismatchError*>(&e) ||
                       dynamic_cast<const InvalidMatrixError*>(&e) ||
                       dynamic_cast<const DimensionMismatchError*>(&e)
                   ? kHypothesis
                   : kUsage;
    } catch (const std::logic_error& e) {
        err << "internal defect: " << e.what() << '\n';
        return kDefect;
    }
    err << "error: no command\n";
    return kUsage;
}

}  // namespace rp

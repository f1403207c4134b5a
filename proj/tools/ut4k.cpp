// Command-line front end. All numeric output is exact (rational strings);
// --approx adds clearly labeled decimal approximations. Timing goes to
// stderr so JSON reports are byte-identical across runs.
#include "ut4k/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;            // also: isomorphic
constexpr int kExitNotIsomorphic = 1; // also: failed verification facts
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCaveat = 4; // success, completeness caveat present
constexpr int kExitInternal = 70;

void emit(const ut4k::CommandResult& result, const std::string& jsonPath)
{
    std::cout << result.human;
    if (!jsonPath.empty()) {
        std::ofstream out(jsonPath);
        if (!out) throw ut4k::ParseError("cannot write JSON report to '" + jsonPath + "'");
        out << result.report.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ut4k: exact ordered K-theory of the algebras attached to the rank-4 "
                 "unitriangular group, with isomorphism certificates"};
    app.require_subcommand(1);

    std::string theta, eta, preset, matrixFile, jsonPath, boundText = "10000";
    bool approx = false;

    const auto addCommon = [&](CLI::App* sub) {
        sub->add_option("--json", jsonPath, "write the exact JSON report to this file");
        sub->add_flag("--approx", approx,
                      "include decimal approximations, labeled non-authoritative");
    };

    CLI::App* inv = app.add_subcommand(
        "invariant", "ordered K-theory invariant of B_theta (K-groups, cone, trace range)");
    inv->add_option("--theta", theta,
                    "theta as poly:<c0>,<c1>,...;interval:<lo>,<hi> (rational coefficients in "
                    "ascending order, constant first) or quad:(x+y*sqrt(k))/z")
        ->required();
    addCommon(inv);

    CLI::App* cls = app.add_subcommand("classify", "decide B_theta ~ B_eta with a GL(3,Z) certificate");
    cls->add_option("--theta", theta, "theta spec (poly: or quad:)")->required();
    cls->add_option("--eta", eta, "eta spec: elt:<c0,c1,...> in Q(theta), or quad:(x+y*sqrt(k))/z")
        ->required();
    addCommon(cls);

    CLI::App* eqv = app.add_subcommand("equivalents", "enumerate all eta with B_eta ~ B_theta");
    eqv->add_option("--theta", theta, "theta spec (poly: or quad:)")->required();
    eqv->add_option("--bound", boundText, "search bound for the degree-3 case (default 10000)");
    addCommon(eqv);

    CLI::App* kgr = app.add_subcommand("kgroups", "crossed-product K-groups with intermediates");
    kgr->add_option("--preset", preset, "ut4 | heisenberg-step3");
    kgr->add_option("--matrix", matrixFile,
                    "JSON file with {\"matrix\": [[...]]} (exterior route) or {\"m0\":..., \"m1\":...}");
    addCommon(kgr);

    CLI::App* ver = app.add_subcommand("verify", "run the built-in fact suite and report pass/fail");
    addCommon(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        ut4k::CommandResult result;
        if (inv->parsed()) {
            result = ut4k::cmdInvariant(theta, approx);
        } else if (cls->parsed()) {
            result = ut4k::cmdClassify(theta, eta, approx);
        } else if (eqv->parsed()) {
            ut4k::Int bound;
            try {
                bound = ut4k::Int::fromString(boundText);
            } catch (const std::invalid_argument&) {
                throw ut4k::ParseError("--bound must be a positive integer");
            }
            if (bound < ut4k::Int(1)) throw ut4k::ParseError("--bound must be a positive integer");
            result = ut4k::cmdEquivalents(theta, bound, approx);
        } else if (kgr->parsed()) {
            if (preset.empty() && matrixFile.empty())
                throw ut4k::ParseError("kgroups needs --preset or --matrix");
            result = ut4k::cmdKGroups(preset, matrixFile);
        } else {
            result = ut4k::cmdVerify();
        }
        emit(result, jsonPath);
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cerr << "elapsed: " << elapsed.count() << " ms\n";
        return result.exitCode;
    } catch (const ut4k::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ut4k::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

#include "ut4k/commands.hpp"

#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <regex>

using namespace ut4k;
using namespace testsupport;

TEST_CASE("spec grammar round trips")
{
    for (const std::string text :
         {"poly:-1,-1,0,1;interval:1,2", "poly:-1/9,-2/3,1;interval:0,1",
          "quad:(1+1*sqrt(2))/3", "quad:(0+1*sqrt(2))/1", "quad:(-1+2*sqrt(2/9))/3",
          "quad:(1-2*sqrt(2))/3", "elt:5,1,0", "elt:1/2,-3,0,7/9"}) {
        CAPTURE(text);
        const ThetaSpec spec = parseThetaSpec(text);
        const ThetaSpec again = parseThetaSpec(formatThetaSpec(spec));
        CHECK(formatThetaSpec(spec) == formatThetaSpec(again));
        CHECK(spec.kind == again.kind);
    }

    // Whitespace is tolerated.
    const ThetaSpec spaced = parseThetaSpec("poly: -1, -1, 0, 1; interval: 1, 2");
    CHECK(spaced.poly.size() == 4);

    const ThetaSpec surd = parseThetaSpec("quad:(1+2*sqrt(2))/3");
    CHECK(surd.surd.x == Int(1));
    CHECK(surd.surd.y == Int(2));
    CHECK(surd.surd.z == Int(3));
    CHECK(surd.surd.kNum == Int(2));

    const ThetaSpec neg = parseThetaSpec("quad:(1-2*sqrt(2))/3");
    CHECK(neg.surd.y == Int(-2));
}

TEST_CASE("parse failures are reported as such")
{
    for (const std::string bad :
         {"", "nonsense", "poly:1,2,3", "poly:;interval:1,2", "poly:1,x;interval:1,2",
          "quad:(1+2sqrt(2))/3", "quad:1+2*sqrt(2)", "elt:", "poly:-2,0,1;interval:1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS((void)parseThetaSpec(bad), ParseError);
    }
}

TEST_CASE("field construction from specs enforces the domain")
{
    CHECK_THROWS_AS((void)fieldFromSpec(parseThetaSpec("poly:-4,0,1;interval:1,3")), DomainError);
    CHECK_THROWS_AS((void)fieldFromSpec(parseThetaSpec("elt:1,2")), DomainError);
    CHECK_THROWS_AS((void)fieldFromSpec(parseThetaSpec("quad:(1+1*sqrt(4))/3")), DomainError);
    const FieldPtr f = fieldFromSpec(parseThetaSpec("poly:-2,0,1;interval:1,2"));
    CHECK(f->degree() == 2);
    // eta specs: polynomial form is not accepted relative to a field.
    CHECK_THROWS_AS((void)etaFromSpec(f, parseThetaSpec("poly:-2,0,1;interval:1,2")), DomainError);
    CHECK_THROWS_AS((void)etaFromSpec(f, parseThetaSpec("elt:1,2,3")), DomainError);
    const auto eta = etaFromSpec(f, parseThetaSpec("elt:1,2"));
    REQUIRE(eta.has_value());
    CHECK(eta->coords()(1) == Rat(2));
}

TEST_CASE("pretty printing of field elements")
{
    CHECK(prettyElement(ratVec({Rat(0), Rat(4), Rat(3)})) == "4*theta + 3*theta^2");
    CHECK(prettyElement(ratVec({Rat(5), Rat(1), Rat(0)})) == "5 + theta");
    CHECK(prettyElement(ratVec({Rat(0), Rat(-1), Rat(0)})) == "-theta");
    CHECK(prettyElement(ratVec({Rat(Int(1), Int(3)), Rat(0)})) == "1/3");
    CHECK(prettyElement(ratVec({Rat(0), Rat(0)})) == "0");
    CHECK(prettyElement(ratVec({Rat(1), Rat(Int(-2), Int(3))})) == "1 - 2/3*theta");
}

TEST_CASE("exact JSON serialization")
{
    CHECK(toJson(Rat(Int(1), Int(3))) == "1/3");
    CHECK(toJson(Int(-7)) == "-7");

    const IntMatrix m = fromRows({{1, 2}, {3, 4}});
    const nlohmann::json jm = toJson(m);
    CHECK(jm[0][1] == "2");
    CHECK(allEqual(intMatrixFromJson(jm), m));
    // Plain integer entries are accepted too.
    CHECK(allEqual(intMatrixFromJson(nlohmann::json::parse("[[1,2],[3,4]]")), m));

    FpAbelianGroup g;
    g.freeRank = 1;
    g.invariantFactors = {Int(2)};
    const nlohmann::json jg = toJson(g);
    CHECK(jg["rank"] == 1);
    CHECK(jg["torsion"][0] == "2");
    CHECK(jg["pretty"] == "Z + Z/2");

    // Group elements serialize as the 6-tuple [a12, a13, a14, a23, a24, a34].
    const UT4Element u{Int(1), Int(2), Int(3), Int(4), Int(5), Int(6)};
    CHECK(toJson(u) == nlohmann::json::parse(R"(["1","2","3","4","5","6"])"));
}

TEST_CASE("invariant reports match the documented shape and are deterministic")
{
    const CommandResult r1 = cmdInvariant("quad:(1+1*sqrt(2))/3", false);
    const CommandResult r2 = cmdInvariant("quad:(1+1*sqrt(2))/3", false);
    CHECK(r1.report.dump() == r2.report.dump());
    CHECK(r1.exitCode == 0);

    const auto& inv = r1.report["outputs"]["invariant"];
    CHECK(inv["k0"]["rank"] == 10);
    CHECK(inv["k0"]["torsion"].empty());
    CHECK(inv["k1"]["rank"] == 10);
    CHECK(inv["cone_normal"].size() == 10);
    CHECK(inv["order_unit"][0] == "1");
    CHECK(inv["trace_range"]["denominator"] == "9");
    CHECK(inv["theta"]["minpoly"].size() == 3);

    // The quadratic surd view reproduces the (1/3)Z + (1/9)sqrt(2)Z basis.
    const auto& surd = r1.report["outputs"]["surd_view"];
    CHECK(surd["radicand"] == "2");
    CHECK(surd["trace_range"]["denominator"] == "9");
    CHECK(surd["trace_range"]["hnf_basis"][0][0] == "3");
    CHECK(surd["trace_range"]["hnf_basis"][0][1] == "0");
    CHECK(surd["trace_range"]["hnf_basis"][1][0] == "0");
    CHECK(surd["trace_range"]["hnf_basis"][1][1] == "1");

    // Distinct isolating intervals give distinct reports (conjugate roots).
    const CommandResult plus = cmdInvariant("poly:-2,0,1;interval:1,2", false);
    const CommandResult minus = cmdInvariant("poly:-2,0,1;interval:-2,-1", false);
    CHECK(plus.report["outputs"]["invariant"]["theta"]["interval"] !=
          minus.report["outputs"]["invariant"]["theta"]["interval"]);
}

TEST_CASE("classification and equivalents reports")
{
    const CommandResult iso = cmdClassify("poly:-1,-1,0,1;interval:1,2", "elt:5,1,0", false);
    CHECK(iso.exitCode == 0);
    CHECK(iso.report["outputs"]["verdict"] == "isomorphic");
    CHECK(iso.report["outputs"]["eta_is_plus_minus_theta_mod_Z"] == true);
    CHECK(iso.report["outputs"]["certificate"][1][0] == "5");

    const CommandResult no =
        cmdClassify("quad:(1+1*sqrt(2))/3", "quad:(1+2*sqrt(2))/3", false);
    CHECK(no.exitCode == 1);
    CHECK(no.report["outputs"]["verdict"] == "not_isomorphic");
    CHECK(no.report["outputs"]["eta_is_plus_minus_theta_mod_Z"] == false);

    const CommandResult eq = cmdEquivalents("poly:-1,-1,0,1;interval:1,2", Int(1000), false);
    CHECK(eq.exitCode == 4); // bounded search caveat
    CHECK(eq.report["outputs"]["count"] == 5);
    CHECK(eq.report["outputs"]["complete"] == false);
    for (const auto& cls : eq.report["outputs"]["classes"])
        CHECK(cls.contains("certificate"));

    const CommandResult eq5 = cmdEquivalents("poly:-1,-1,0,0,0,1;interval:1,2", Int(10), false);
    CHECK(eq5.exitCode == 0);
    CHECK(eq5.report["outputs"]["count"] == 1);
}

TEST_CASE("kgroups command covers the presets and matrix files")
{
    const CommandResult ut4 = cmdKGroups("ut4", "");
    CHECK(ut4.exitCode == 0);
    CHECK(ut4.report["outputs"]["k0"]["rank"] == 10);
    CHECK(ut4.report["outputs"]["k1"]["rank"] == 10);
    CHECK(ut4.report["outputs"]["intermediates"]["k1_cokernel"]["rank"] == 4);
    CHECK(ut4.report["outputs"]["intermediates"]["k0_cokernel"]["rank"] == 6);
    CHECK(!ut4.report["warnings"].empty());

    const CommandResult heis = cmdKGroups("heisenberg-step3", "");
    CHECK(heis.report["outputs"]["k1"]["torsion"][0] == "2");

    CHECK_THROWS_AS((void)cmdKGroups("fourier", ""), ParseError);
    CHECK_THROWS_AS((void)cmdKGroups("", "/nonexistent/file.json"), ParseError);

    // A matrix file on the exterior route: the 2x2 shear is the rank-2
    // nilpotent case, K0 = K1 = Z^3 (coker Z^2 plus a rank-1 kernel, and the
    // even part is trivial).
    const std::string path = "/tmp/ut4k_test_matrix.json";
    {
        std::ofstream out(path);
        out << R"({"matrix": [["1","1"],["0","1"]]})";
    }
    const CommandResult shear = cmdKGroups("", path);
    CHECK(shear.report["outputs"]["k0"]["rank"] == 3);
    CHECK(shear.report["outputs"]["k1"]["rank"] == 3);
    CHECK(shear.report["outputs"]["k0"]["torsion"].empty());
    CHECK(shear.report["outputs"]["k1"]["torsion"].empty());

    // Direct m0/m1 route.
    {
        std::ofstream out(path);
        out << R"({"m0": [[1,0],[0,1]], "m1": [[1,2],[0,1]]})";
    }
    const CommandResult direct = cmdKGroups("", path);
    CHECK(direct.report["outputs"]["k1"]["rank"] == 3);
    CHECK(direct.report["outputs"]["k1"]["torsion"][0] == "2");

    // Non-unimodular input is rejected as a bad file.
    {
        std::ofstream out(path);
        out << R"({"matrix": [[2,0],[0,1]]})";
    }
    CHECK_THROWS_AS((void)cmdKGroups("", path), ParseError);
}

TEST_CASE("verify command passes its fact suite and carries the documented note")
{
    const CommandResult v = cmdVerify();
    CHECK(v.exitCode == 0);
    CHECK(v.report["outputs"]["all_pass"] == true);
    bool noted = false;
    for (const auto& w : v.report["warnings"])
        noted = noted || w.get<std::string>().find("Z^6") != std::string::npos;
    CHECK(noted);
}

namespace {

// Minimal validator for the subset of JSON Schema the shipped schema uses:
// $ref into definitions, type, const, enum, required, properties, items,
// minItems, maxItems, pattern.
bool validateNode(const nlohmann::json& root, const nlohmann::json& schema,
                  const nlohmann::json& value, std::string& err)
{
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) {
            err = "unsupported $ref " + ref;
            return false;
        }
        return validateNode(root, root["definitions"][ref.substr(prefix.size())], value, err);
    }
    if (schema.contains("const") && value != schema["const"]) {
        err = "const mismatch: " + value.dump();
        return false;
    }
    if (schema.contains("enum")) {
        bool any = false;
        for (const auto& e : schema["enum"]) any = any || e == value;
        if (!any) {
            err = "enum mismatch: " + value.dump();
            return false;
        }
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        const bool ok = (t == "object" && value.is_object()) ||
                        (t == "array" && value.is_array()) ||
                        (t == "string" && value.is_string()) ||
                        (t == "integer" && value.is_number_integer()) ||
                        (t == "boolean" && value.is_boolean());
        if (!ok) {
            err = "type mismatch, want " + t + ": " + value.dump().substr(0, 60);
            return false;
        }
    }
    if (schema.contains("pattern")) {
        const std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_match(value.get<std::string>(), re)) {
            err = "pattern mismatch: " + value.dump();
            return false;
        }
    }
    if (schema.contains("minimum") && value.get<long>() < schema["minimum"].get<long>()) {
        err = "below minimum: " + value.dump();
        return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!value.contains(k.get<std::string>())) {
                    err = "missing required key " + k.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (const auto& [k, sub] : schema["properties"].items())
                if (value.contains(k) && !validateNode(root, sub, value[k], err)) {
                    err = k + ": " + err;
                    return false;
                }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<size_t>()) {
            err = "too few items";
            return false;
        }
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<size_t>()) {
            err = "too many items";
            return false;
        }
        if (schema.contains("items"))
            for (size_t i = 0; i < value.size(); ++i)
                if (!validateNode(root, schema["items"], value[i], err)) {
                    err = "item " + std::to_string(i) + ": " + err;
                    return false;
                }
    }
    return true;
}

} // namespace

TEST_CASE("reports of every command validate against the shipped schema")
{
    std::ifstream in(std::string(UT4K_SOURCE_DIR) + "/docs/report.schema.json");
    REQUIRE(in.good());
    nlohmann::json schema;
    in >> schema;

    const std::vector<CommandResult> samples = {
        cmdInvariant("quad:(1+1*sqrt(2))/3", false),
        cmdInvariant("poly:-1,-1,0,1;interval:1,2", true),
        cmdClassify("poly:-1,-1,0,1;interval:1,2", "elt:0,4,3", false),
        cmdClassify("quad:(1+1*sqrt(2))/3", "quad:(1+2*sqrt(2))/3", false),
        cmdEquivalents("poly:-1,-1,0,1;interval:1,2", Int(100), false),
        cmdKGroups("ut4", ""),
        cmdKGroups("heisenberg-step3", ""),
        cmdVerify(),
    };
    for (const CommandResult& sample : samples) {
        std::string err;
        const bool ok = validateNode(schema, schema, sample.report, err);
        CAPTURE(err);
        CHECK(ok);
    }

    // The invariant payload also validates against its dedicated definition.
    std::string err;
    CHECK(validateNode(schema, schema["definitions"]["invariant"],
                       samples[0].report["outputs"]["invariant"], err));
    CAPTURE(err);
}

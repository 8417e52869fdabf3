#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cli_runner.hpp"
#include "darboux/certificate.hpp"
#include "darboux/expr.hpp"

using namespace darboux;
using testcli::RunResult;
using testcli::run_cli;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("analyze: curated command lines") {
    SUBCASE("jacobian pair") {
        const RunResult r = run_cli("analyze --d1 \"1,0\" --d2 \"0,1\"");
        CHECK(r.exit_code == 0);
        CHECK(r.output ==
              "kind: jacobian_pair\n"
              "u1: -y\n"
              "u2: x\n"
              "c: 1\n");
    }
    SUBCASE("common Darboux polynomial from the determinant") {
        const RunResult r = run_cli("analyze --d1 \"x,y\" --d2 \"x,-y\"");
        CHECK(r.exit_code == 0);
        CHECK(r.output ==
              "kind: common_darboux\n"
              "f: -2*x*y\n"
              "lambda1: 2\n"
              "lambda2: 0\n"
              "branch: delta_nonconstant\n");
    }
    SUBCASE("non-commuting pair exits 2") {
        const RunResult r = run_cli("analyze --d1 \"1,0\" --d2 \"x,0\"");
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("derivations do not commute") != std::string::npos);
    }
    SUBCASE("degenerate kernel branch") {
        const RunResult r = run_cli("analyze --d1 \"x^2,x*y\" --d2 \"x*y,y^2\"");
        CHECK(r.exit_code == 0);
        CHECK(r.output ==
              "kind: common_darboux\n"
              "f: x\n"
              "lambda1: x\n"
              "lambda2: y\n"
              "branch: degenerate_kernel\n");
    }
}

TEST_CASE("analyze --json emits the schema and verify accepts it") {
    const RunResult r = run_cli("analyze --d1 \"1,0\" --d2 \"0,1\" --json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("kind") == "jacobian_pair");
    CHECK(doc.at("verified") == true);
    CHECK(doc.at("inputs").at("d1").at("p") == "1");
    CHECK(doc.at("common_darboux").is_null());
    CHECK(doc.at("jacobian_pair").at("u1") == "-y");
    CHECK(doc.at("jacobian_pair").at("u2") == "x");
    CHECK(doc.at("jacobian_pair").at("c") == "1");

    const auto path = temp_file("darboux_cli_cert.json");
    std::ofstream(path) << r.output;
    const RunResult v = run_cli("verify " + path.string());
    CHECK(v.exit_code == 0);
    CHECK(v.output == "valid\n");
    std::filesystem::remove(path);
}

TEST_CASE("analyze --squarefree strips multiplicity from the certificate") {
    // (x*d/dx + y*d/dy, x*d/dy) commute with determinant x^2
    const RunResult plain = run_cli("analyze --d1 \"x,y\" --d2 \"0,x\"");
    REQUIRE(plain.exit_code == 0);
    CHECK(plain.output ==
          "kind: common_darboux\n"
          "f: x^2\n"
          "lambda1: 2\n"
          "lambda2: 0\n"
          "branch: delta_nonconstant\n");

    const RunResult sqf = run_cli("analyze --d1 \"x,y\" --d2 \"0,x\" --squarefree");
    REQUIRE(sqf.exit_code == 0);
    CHECK(sqf.output ==
          "kind: common_darboux\n"
          "f: x\n"
          "lambda1: 1\n"
          "lambda2: 0\n"
          "branch: delta_nonconstant\n");
}

TEST_CASE("utility subcommands") {
    CHECK(run_cli("delta --d1 \"1,0\" --d2 \"0,1\"").output == "1\n");
    CHECK(run_cli("cofactor --d \"x,y\" --f \"x*y\"").output == "2\n");
    CHECK(run_cli("potential --d \"1,0\"").output == "-y\n");
    CHECK(run_cli("bracket --d1 \"1,0\" --d2 \"0,1\"").output == "0,0\n");
    CHECK(run_cli("div --d \"x,y\"").output == "2\n");

    const RunResult reduced = run_cli("reduce --d \"3*x,3*y\"");
    CHECK(reduced.exit_code == 0);
    CHECK(reduced.output == "d0: x,y\nmu: 3\n");

    const RunResult solved = run_cli("solve --d \"x,y\" --lambda 1 --max-degree 1");
    CHECK(solved.exit_code == 0);
    CHECK(solved.output == "x\ny\n");

    const RunResult none = run_cli("solve --d \"x,y\" --lambda 0 --max-degree 3");
    CHECK(none.exit_code == 0);
    CHECK(none.output.empty());
}

TEST_CASE("exit codes") {
    SUBCASE("parse errors exit 1") {
        CHECK(run_cli("analyze --d1 \"x+\" --d2 \"0,1\"").exit_code == 1);
        CHECK(run_cli("delta --d1 \"x\" --d2 \"0,1\"").exit_code == 1);  // missing comma
        CHECK(run_cli("potential --d \"x,y,1\"").exit_code == 1);       // extra comma
    }
    SUBCASE("domain violations exit 2") {
        CHECK(run_cli("potential --d \"x,y\"").exit_code == 2);
        CHECK(run_cli("analyze --d1 \"1,0\" --d2 \"2,0\"").exit_code == 2);
        CHECK(run_cli("analyze --d1 \"0,0\" --d2 \"0,1\"").exit_code == 2);
        CHECK(run_cli("reduce --d \"0,0\"").exit_code == 2);
        CHECK(run_cli("solve --d \"x,y\" --lambda 0 --max-degree 0").exit_code == 2);
        const RunResult nd = run_cli("cofactor --d \"1,0\" --f \"x\"");
        CHECK(nd.exit_code == 2);
        CHECK(nd.output.find("not a Darboux polynomial") != std::string::npos);
    }
    SUBCASE("bad certificates") {
        const auto path = temp_file("darboux_cli_bad_cert.json");
        std::ofstream(path) << "{ not json";
        CHECK(run_cli("verify " + path.string()).exit_code == 1);

        // structurally valid JSON whose claimed certificate is false
        Derivation d1{parse_poly("1"), parse_poly("0")};
        Derivation d2{parse_poly("0"), parse_poly("1")};
        nlohmann::json doc = certificate_to_json(
            d1, d2, JacobianPair{parse_poly("y"), parse_poly("x"), Rat(1)}, true);
        std::ofstream(path) << doc.dump();
        const RunResult r = run_cli("verify " + path.string());
        CHECK(r.exit_code == 3);
        CHECK(r.output == "invalid\n");
        std::filesystem::remove(path);
    }
    SUBCASE("missing required flags exit 1") {
        CHECK(run_cli("analyze --d1 \"1,0\"").exit_code == 1);
        CHECK(run_cli("frobnicate").exit_code == 1);
    }
}

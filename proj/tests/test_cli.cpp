#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <string>

#include "relvel/lawlab.hpp"
#include "relvel/vecio.hpp"
#include "support.hpp"

using namespace relvel;
using json = nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RELVEL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void check_schema(const json& rec, const std::string& command) {
    CHECK(rec.at("schema_version") == "1");
    CHECK(rec.at("command") == command);
    CHECK(rec.contains("inputs"));
    CHECK(rec.contains("result"));
    CHECK(rec.contains("diagnostics"));
}

}  // namespace

TEST_CASE("parse and canonical form round-trip exactly") {
    std::mt19937_64 rng(401);
    for (int it = 0; it < 300; ++it) {
        const CVec3 v = it % 2 == 0 ? random_real_vec3(rng, 10.0) : random_cvec3(rng, 3.0);
        const auto back = parse_cvec3(canonical(v));
        REQUIRE(back.has_value());
        CHECK(*back == v);
        // printing the parsed value must reproduce the canonical string
        CHECK(canonical(*back) == canonical(v));
    }
    const auto tiny = parse_cvec3("1e-300,2.5e307,-0.0");
    REQUIRE(tiny.has_value());
    CHECK(canonical(*tiny) == "1e-300,2.5e+307,-0");
}

TEST_CASE("parser rejects malformed vectors") {
    CHECK(!parse_cvec3("").has_value());
    CHECK(!parse_cvec3("1,2").has_value());
    CHECK(!parse_cvec3("1,2,3,4").has_value());
    CHECK(!parse_cvec3("1,2,x").has_value());
    CHECK(!parse_cvec3("1,2,3;4,5").has_value());
    CHECK(!parse_cvec3("1,2,3;4,5,6;7,8,9").has_value());
    CHECK(!parse_cvec3("nan,0,0").has_value());
    CHECK(!parse_cvec3("inf,0,0").has_value());
    CHECK(parse_cvec3(" 0.5 , 0 , 0 ").has_value());
    CHECK(parse_cvec3("0.5,0,0;0,0,0.25").has_value());
}

TEST_CASE("pretty renders complex components as re+im*i") {
    CHECK(pretty(CVec3{0.5, 0.5, CScalar{0, 0.25}}) == "(0.5, 0.5, 0+0.25i)");
    CHECK(pretty(CVec3{0.5, 0.5, CScalar{0, -0.25}}) == "(0.5, 0.5, 0-0.25i)");
    CHECK(pretty(CVec3{-0.5, 0.433012701892219, 0}) == "(-0.5, 0.433012702, 0)");
}

TEST_CASE("add: einstein collinear") {
    const auto r = run_cli("add --law einstein --a 0.5,0,0 --b 0.5,0,0 --format json");
    CHECK(r.exit_code == 0);
    const json rec = json::parse(r.out);
    check_schema(rec, "add");
    CHECK(rec["inputs"]["a"] == "0.5,0,0");
    const auto w = rec["result"]["w"];
    CHECK(w["re"][0].get<double>() == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(w["re"][1].get<double>() == 0.0);
    CHECK(w["im"][2].get<double>() == 0.0);
    CHECK(rec["diagnostics"]["denom"]["re"].get<double>() == doctest::Approx(1.25));
}

TEST_CASE("add: recsym picks up the imaginary part") {
    const auto r = run_cli("add --law recsym --a 0.5,0,0 --b 0,0.5,0 --format json");
    CHECK(r.exit_code == 0);
    const json rec = json::parse(r.out);
    const auto w = rec["result"]["w"];
    CHECK(w["re"][0].get<double>() == 0.5);
    CHECK(w["re"][1].get<double>() == 0.5);
    CHECK(w["im"][2].get<double>() == 0.25);
    CHECK(rec["result"]["w_canonical"] == "0.5,0.5,0;0,0,0.25");

    const auto text = run_cli("add --law recsym --a 0.5,0,0 --b 0,0.5,0");
    CHECK(text.out == "w = (0.5, 0.5, 0+0.25i)\ndenom = 1\n");
}

TEST_CASE("add: identity") {
    const auto r = run_cli("add --law einstein --a 0,0,0 --b 0.9,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "w = (0.9, 0, 0)\ndenom = 1\n");
}

TEST_CASE("relative emits both orientations and the defect") {
    const auto r =
        run_cli("relative --law einstein --observer 0.5,0,0 --object 0,0.5,0 --format json");
    CHECK(r.exit_code == 0);
    const json rec = json::parse(r.out);
    check_schema(rec, "relative");
    CHECK(rec["result"]["reciprocity_defect"].get<double>() > 1e-3);

    const auto rs =
        run_cli("relative --law recsym --observer 0.5,0,0 --object 0,0.5,0 --format json");
    const json rs_rec = json::parse(rs.out);
    CHECK(rs_rec["result"]["reciprocity_defect"].get<double>() <= 1e-12);

    const auto same = run_cli("relative --law einstein --observer 0.3,0,0 --object 0.3,0,0");
    CHECK(same.out.find("reciprocity_defect = 0\n") != std::string::npos);
}

TEST_CASE("exit codes: usage and domain errors") {
    CHECK(run_cli("add --law einstein --a bogus --b 0,0,0").exit_code == 2);
    CHECK(run_cli("add --law nonsense --a 0,0,0 --b 0,0,0").exit_code == 2);
    CHECK(run_cli("add --law einstein --a 0,0,0").exit_code == 2);            // missing --b
    CHECK(run_cli("add --law einstein --a 1,0,0 --b 0,0,0").exit_code == 3);  // superluminal
    CHECK(run_cli("add --law einstein --a \"0.1,0,0;0.1,0,0\" --b 0,0,0").exit_code == 3);
    // denominator 1 + a.b/c^2 = 0 for purely imaginary unit inputs
    CHECK(run_cli("add --law recsym --a \"0,0,0;1,0,0\" --b \"0,0,0;1,0,0\"").exit_code == 3);
    CHECK(run_cli("check --law-id dual_path --op einstein --samples 10").exit_code == 2);
    CHECK(run_cli("check --law-id identity --op einstein --regime complex_disc --samples 10")
              .exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("suite --samples 0").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("check: verdict drives the exit code") {
    const auto holds =
        run_cli("check --law-id associativity --op recsym --samples 2000 --seed 42 --format json");
    CHECK(holds.exit_code == 0);
    const json rec = json::parse(holds.out);
    check_schema(rec, "check");
    CHECK(rec["result"]["verdict"] == "HOLDS");
    CHECK(rec["result"]["samples"].get<std::uint64_t>() +
              rec["result"]["skips"].get<std::uint64_t>() ==
          2000);

    const auto violated =
        run_cli("check --law-id associativity --op einstein --samples 2000 --seed 42");
    CHECK(violated.exit_code == 1);
    CHECK(json::parse(violated.out)["result"]["verdict"] == "VIOLATED");

    const auto parallel = run_cli(
        "check --law-id reciprocity --op einstein --regime collinear --samples 2000 --seed 42");
    CHECK(parallel.exit_code == 0);

    const auto csv =
        run_cli("check --law-id identity --op recsym --samples 500 --seed 1 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("law,op,regime,", 0) == 0);
}

TEST_CASE("check report is byte-identical across thread counts") {
    const std::string base =
        "check --law-id associativity --op recsym --regime complex_disc --samples 4000 --seed 9";
    const auto one = run_cli(base + " --threads 1");
    const auto four = run_cli(base + " --threads 4");
    CHECK(one.exit_code == four.exit_code);
    CHECK(one.out == four.out);
}

TEST_CASE("hunt emits a sound counterexample") {
    const auto r = run_cli(
        "hunt --law-id associativity --op einstein --samples 500 --seed 42 --tol 1e-6 "
        "--format json");
    CHECK(r.exit_code == 0);
    const json rec = json::parse(r.out);
    check_schema(rec, "hunt");
    REQUIRE(rec["result"]["found"] == true);

    // re-evaluate the emitted inputs from scratch through the library
    std::vector<CVec3> inputs;
    for (const auto& s : rec["result"]["inputs"]) {
        const auto v = parse_cvec3(s.get<std::string>());
        REQUIRE(v.has_value());
        inputs.push_back(*v);
    }
    const double d = lawlab::defect(lawlab::LawId::associativity, lawlab::OpId::einstein, inputs,
                                    LightSpeed{1.0});
    CHECK(d > 1e-6);
    CHECK(d == rec["result"]["defect"].get<double>());

    const auto missing =
        run_cli("hunt --law-id associativity --op recsym --samples 500 --seed 42");
    CHECK(missing.exit_code == 1);
    CHECK(json::parse(missing.out)["result"]["found"] == false);

    const auto raw = run_cli(
        "hunt --law-id associativity --op einstein --samples 500 --seed 42 --tol 1e-6 "
        "--shrink off --format json");
    CHECK(json::parse(raw.out)["result"]["shrink_steps"].get<int>() == 0);
}

TEST_CASE("suite runs the battery and exits green") {
    const auto r = run_cli("suite --seed 42 --samples 1500 --format json");
    CHECK(r.exit_code == 0);
    const json rec = json::parse(r.out);
    check_schema(rec, "suite");
    CHECK(rec["result"]["all_matched"] == true);
    CHECK(rec["result"]["entries"].size() >= 25);

    const auto csv = run_cli("suite --seed 42 --samples 1500 --format csv");
    CHECK(csv.exit_code == 0);
    const auto lines = std::count(csv.out.begin(), csv.out.end(), '\n');
    CHECK(lines == static_cast<long>(rec["result"]["entries"].size()) + 1);
}

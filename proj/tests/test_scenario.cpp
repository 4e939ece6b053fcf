#include <doctest.h>

#include "mpcalc/casebook.hpp"
#include "mpcalc/scenario.hpp"
#include "support.hpp"

using namespace mpcalc;
using mpcalc::testing::f1;

#ifndef MPCALC_SOURCE_DIR
#define MPCALC_SOURCE_DIR "."
#endif

TEST_CASE("analyze reports are deterministic") {
    ArthurParameter psi(f1(), {{"rho2", 1, 1}, {"chi_a", 2, 1}});
    ScenarioResult a = run_analyze(psi);
    ScenarioResult b = run_analyze(psi);
    CHECK(a.machine.dump(2) == b.machine.dump(2));
    CHECK(a.markdown == b.markdown);
    CHECK(a.machine["component_group"]["order"] == 4);
    CHECK(a.machine["x_psi"] == "10");
    CHECK(a.machine["splittings"].size() == 4);
    CHECK(a.machine["descent"]["ok"] == true);
    CHECK(a.markdown.find("```json") != std::string::npos);
}

TEST_CASE("scenario dispatch") {
    Json doc;
    doc["command"] = "analyze";
    doc["catalog"] = Json::parse(fixtures::f1());
    doc["parameter"] = Json::array({Json{{"constituent", "one"}, {"b", 4}}});
    ScenarioResult r = run_scenario(doc, {});
    CHECK(r.machine["classification"]["unramified"] == true);
    CHECK(r.machine["epsilon_restriction"] == 1);

    SUBCASE("unknown commands are schema errors") {
        doc["command"] = "nope";
        CHECK_THROWS_AS(run_scenario(doc, {}), Error);
    }
    SUBCASE("a scenario without a catalog is rejected") {
        Json bare{{"command", "analyze"}, {"parameter", Json::array()}};
        CHECK_THROWS_AS(run_scenario(bare, {}), Error);
    }
    SUBCASE("validate reports the cross-constraint status") {
        Json v{{"command", "validate"}, {"catalog", Json::parse(fixtures::f1x())}};
        ScenarioResult rv = run_scenario(v, {});
        CHECK(rv.machine["ok"] == true);
    }
}

TEST_CASE("shipped data files agree with the built-in fixtures") {
    Catalog from_file = Catalog::from_file(std::string(MPCALC_SOURCE_DIR) + "/data/f1.json");
    CHECK(from_file.to_json() == f1().to_json());
    Catalog x_from_file = Catalog::from_file(std::string(MPCALC_SOURCE_DIR) + "/data/f1x.json");
    CHECK(x_from_file.to_json() == mpcalc::testing::f1x().to_json());
}

TEST_CASE("multiplicity scenarios run from their documents") {
    Json doc = Json::parse(R"({
      "command": "multiplicity",
      "global_parameter": [{"cuspidal": "zeta_dot", "b": 4, "mult": 1}],
      "V": ["v1", "v2"]
    })");
    doc["catalog"] = Json::parse(fixtures::principal_two_place());
    doc["packets"] = Json::object();
    for (const std::string place : {"v1", "v2"}) {
        doc["packets"][place] = Json::parse(R"json({
          "parameter": [{"constituent": "one", "b": 4, "mult": 1}],
          "members": [
            {"label": "omega_plus(one)", "character": "0", "spherical": true},
            {"label": "omega_minus(one)", "character": "1"}
          ]
        })json");
    }
    ScenarioResult r = run_scenario(doc, {});
    CHECK(r.machine["X"].size() == 2);
    CHECK(r.machine["members"].size() == 2);
    CHECK(r.machine["epsilon"] == "0");
    CHECK(r.machine["nu_trivial_at_s_psi"] == true);

    ScenarioResult again = run_scenario(doc, {});
    CHECK(again.machine.dump(2) == r.machine.dump(2));   // byte-identical
}

TEST_CASE("casebook ids are stable") {
    CHECK(casebook_ids().size() == 5);
    CHECK_THROWS_AS(run_case("nope"), Error);
    CaseResult r = run_case("waldspurger-n1");
    CHECK(r.pass);
    CHECK(render_case(r).find("result: PASS") != std::string::npos);
}

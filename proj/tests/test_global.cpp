#include <doctest.h>

#include "support.hpp"

using namespace mpcalc;

namespace {

const GlobalCatalog& principal_cat() {
    static const GlobalCatalog g = GlobalCatalog::from_string(fixtures::principal_two_place());
    return g;
}

const GlobalCatalog& sk_cat() {
    static const GlobalCatalog g = GlobalCatalog::from_string(fixtures::sk_global(-1));
    return g;
}

} // namespace

TEST_CASE("global parameters mirror the local parity rules") {
    GlobalParameter gp(sk_cat(), {{"phi_dot", 1, 1}, {"chi_dot", 2, 1}});
    CHECK(gp.discrete());
    CHECK(gp.good_parity());
    CHECK(gp.dim() == 4);
    REQUIRE(gp.keys().size() == 2);
    CHECK(gp.keys()[0].id == "chi_dot");

    // symplectic entry with even b is of orthogonal type: odd mult rejected
    CHECK_THROWS_AS(GlobalParameter(sk_cat(), {{"phi_dot", 2, 1}}), Error);
    GlobalParameter even(sk_cat(), {{"phi_dot", 2, 2}});
    CHECK_FALSE(even.good_parity());
}

TEST_CASE("localization substitutes the local multisets") {
    GlobalParameter gp(principal_cat(), {{"zeta_dot", 4, 1}});
    Localization loc = localize(gp, "v1");
    CHECK(loc.shift0 == ArthurParameter(principal_cat().place("v1").catalog, {{"one", 4, 1}}));
    CHECK(loc.shifted.empty());
    CHECK(loc.unramified);
    REQUIRE(loc.map.rows() == 1);
    REQUIRE(loc.map.cols() == 1);
    CHECK(loc.map.at(0, 0) == 1);

    SUBCASE("missing localizations are reported") {
        Json doc = Json::parse(fixtures::principal_two_place());
        doc["global_cuspidals"][0]["localizations"].erase("v2");
        doc["global_cuspidals"][0]["unramified_places"] = Json::array({"v1", "v3"});
        GlobalCatalog g = GlobalCatalog::from_json(doc);
        GlobalParameter gp2(g, {{"zeta_dot", 4, 1}});
        CHECK_THROWS_AS(localize(gp2, "v2"), Error);
        try {
            localize(gp2, "v2");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MissingLocalization);
        }
    }
}

TEST_CASE("localization merges parities when summands collide") {
    // two global entries localizing to the same local constituent: the two
    // global generators act on the same local key
    Json doc = Json::parse(fixtures::sk_global(-1));
    doc["global_cuspidals"].push_back(Json{
        {"id", "psi_dot"}, {"dim", 2}, {"duality", "symplectic"}, {"global_root_number", -1},
        {"localizations", Json{
            {"v1", Json::array({Json{{"constituent", "rho2"}, {"shift", "0"}, {"mult", 1}}})},
            {"v2", Json::array({Json{{"constituent", "rho2p"}, {"shift", "0"}, {"mult", 1}}})}}}});
    GlobalCatalog g = GlobalCatalog::from_json(doc);
    GlobalParameter gp(g, {{"phi_dot", 1, 1}, {"psi_dot", 1, 1}});
    Localization loc = localize(gp, "v1");
    // local parameter is 2(rho2 * r(1)): one I+ key of multiplicity two
    CHECK(loc.shift0 == ArthurParameter(g.place("v1").catalog, {{"rho2", 1, 2}}));
    REQUIRE(loc.map.rows() == 1);
    REQUIRE(loc.map.cols() == 2);
    CHECK(loc.map.at(0, 0) == 1);
    CHECK(loc.map.at(0, 1) == 1);

    // the distinguished elements are compatible with localization
    Distinguished dg = distinguished_of_keys(gp.keys());
    Distinguished dl = distinguished_elements(loc.shift0);
    CHECK(loc.map.apply(dg.x_psi) == dl.x_psi);
    CHECK(loc.map.apply(dg.z) == dl.z);
    CHECK(nu_factorization_check(gp, {"v1", "v2"}).ok);
}

TEST_CASE("shifted localizations stay out of the component group") {
    Json doc = Json::parse(fixtures::sk_global(-1));
    doc["global_cuspidals"].push_back(Json{
        {"id", "pair_dot"}, {"dim", 2}, {"duality", "symplectic"}, {"global_root_number", 1},
        {"localizations", Json{
            {"v1", Json::array({Json{{"constituent", "chi_a"}, {"shift", "1/2"}, {"mult", 1}},
                                Json{{"constituent", "chi_a"}, {"shift", "-1/2"}, {"mult", 1}}})},
            {"v2", Json::array({Json{{"constituent", "rho2p"}, {"shift", "0"}, {"mult", 1}}})}}}});
    GlobalCatalog g = GlobalCatalog::from_json(doc);
    GlobalParameter gp(g, {{"pair_dot", 1, 1}});
    Localization loc = localize(gp, "v1");
    CHECK(loc.shift0.empty());
    REQUIRE(loc.shifted.size() == 2);
    CHECK(loc.map.rows() == 0);
    CHECK_FALSE(loc.unramified);

    // the global epsilon still factorizes: shifted dual pairs contribute det(-1)
    FactorizationReport rep = nu_factorization_check(gp, {"v1", "v2"});
    CHECK(rep.ok);
}

TEST_CASE("localization diagnostics report ranks with witnesses") {
    GlobalParameter sk(sk_cat(), {{"phi_dot", 1, 1}, {"chi_dot", 2, 1}});
    LocalizationDiagnostics d = localization_diagnostics(sk, {"v1"}, "v2");
    CHECK(d.injective_into_v0);
    CHECK(d.surjective_at_u);
    CHECK_FALSE(d.kernel_witness.has_value());

    // two entries with identical localizations everywhere are not separated
    Json doc = Json::parse(fixtures::sk_global(-1));
    doc["global_cuspidals"].push_back(Json{
        {"id", "psi_dot"}, {"dim", 2}, {"duality", "symplectic"}, {"global_root_number", -1},
        {"localizations", Json{
            {"v1", Json::array({Json{{"constituent", "rho2"}, {"shift", "0"}, {"mult", 1}}})},
            {"v2", Json::array({Json{{"constituent", "rho2p"}, {"shift", "0"}, {"mult", 1}}})}}}});
    GlobalCatalog g = GlobalCatalog::from_json(doc);
    GlobalParameter gp(g, {{"phi_dot", 1, 1}, {"psi_dot", 1, 1}});
    LocalizationDiagnostics d2 = localization_diagnostics(gp, {"v1", "v2"}, "v1");
    CHECK_FALSE(d2.injective_into_v0);
    REQUIRE(d2.kernel_witness.has_value());
    CHECK(d2.kernel_witness->str() == "11");
    CHECK(d2.surjective_at_u);   // the merged key is still covered

    // even localized multiplicities never reach the local group
    Json doc2 = Json::parse(fixtures::sk_global(-1));
    doc2["global_cuspidals"].push_back(Json{
        {"id", "quad_dot"}, {"dim", 4}, {"duality", "symplectic"}, {"global_root_number", 1},
        {"localizations", Json{
            {"v1", Json::array({Json{{"constituent", "rho2"}, {"shift", "0"}, {"mult", 2}}})},
            {"v2", Json::array({Json{{"constituent", "rho2p"}, {"shift", "0"}, {"mult", 2}}})}}}});
    GlobalCatalog g2 = GlobalCatalog::from_json(doc2);
    GlobalParameter gp2(g2, {{"quad_dot", 1, 1}});
    LocalizationDiagnostics d3 = localization_diagnostics(gp2, {"v1", "v2"}, "v1");
    CHECK_FALSE(d3.injective_into_v0);
    REQUIRE(d3.kernel_witness.has_value());
    CHECK(d3.kernel_witness->str() == "1");
    CHECK_FALSE(d3.surjective_at_u);
    REQUIRE(d3.missed_character_at_u.has_value());
    CHECK(d3.missed_character_at_u->str() == "1");
}

TEST_CASE("global nu and its factorization") {
    GlobalParameter sk(sk_cat(), {{"phi_dot", 1, 1}, {"chi_dot", 2, 1}});
    CHECK(nu_global(sk).str() == "01");

    FactorizationReport rep = nu_factorization_check(sk, {"v1", "v2"});
    CHECK(rep.ok);
    CHECK(rep.nu_trivial_at_s_psi);
    CHECK(rep.rows.size() == 4);

    SUBCASE("a corrupted local root number is detected") {
        Json doc = Json::parse(fixtures::sk_global(-1));
        // give v1 its own catalog copy with the root number of rho2 flipped
        Json cat1{{"quadratic_characters", doc["quadratic_characters"]},
                  {"constituents", doc["constituents"]}};
        for (Json& c : cat1["constituents"])
            if (c["id"] == "rho2") c["root_number"] = "1";
        doc["places"][0]["catalog"] = cat1;
        GlobalCatalog g = GlobalCatalog::from_json(doc);
        GlobalParameter gp(g, {{"phi_dot", 1, 1}, {"chi_dot", 2, 1}});
        FactorizationReport bad = nu_factorization_check(gp, {"v1", "v2"});
        CHECK_FALSE(bad.ok);
        // the mismatch sits at the place carrying the corrupted constituent
        bool localized = false;
        for (const FactorizationRow& row : bad.rows) {
            if (row.ok) continue;
            int expected = row.global_eps;
            for (const auto& [place, eps] : row.local_eps)
                if (place == "v2") expected *= eps;
            localized |= row.local_eps.at("v1") != expected;
        }
        CHECK(localized);
    }
    SUBCASE("places outside V must be unramified") {
        GlobalParameter gp(principal_cat(), {{"zeta_dot", 4, 1}});
        FactorizationReport ok = nu_factorization_check(gp, {"v1", "v2"});
        CHECK(ok.ok);   // v3 is marked unramified

        Json doc = Json::parse(fixtures::principal_two_place());
        doc["global_cuspidals"][0]["unramified_places"] = Json::array({"v1", "v2"});
        doc["places"][2].erase("unramified");
        GlobalCatalog g = GlobalCatalog::from_json(doc);
        GlobalParameter gp2(g, {{"zeta_dot", 4, 1}});
        CHECK_FALSE(nu_factorization_check(gp2, {"v1", "v2"}).ok);
    }
}

TEST_CASE("the multiplicity character composes the two sign characters") {
    GlobalParameter sk(sk_cat(), {{"phi_dot", 1, 1}, {"chi_dot", 2, 1}});
    CHECK(epsilon_psi(sk).str() == "10");
    GlobalParameter generic(sk_cat(), {{"phi_dot", 1, 1}});
    CHECK(epsilon_psi(generic) == nu_global(generic));
    GlobalParameter principal(principal_cat(), {{"zeta_dot", 4, 1}});
    CHECK(epsilon_psi(principal).is_zero());
}

TEST_CASE("the character constraint set is an affine subspace") {
    GlobalParameter principal(principal_cat(), {{"zeta_dot", 4, 1}});
    auto x2 = character_constraint_set(principal, {"v1", "v2"});
    REQUIRE(x2.size() == 2);
    CHECK(x2[0][0].str() == "0");
    CHECK(x2[1][1].str() == "1");

    auto x3 = character_constraint_set(principal, {"v1", "v2", "v3"});
    CHECK(x3.size() == 4);
    for (const auto& tuple : x3) {
        int parity = 0;
        for (const BitVec& chi : tuple) parity ^= chi.at(0);
        CHECK(parity == 0);
    }
}

TEST_CASE("the constraint set is empty when the character misses the image") {
    // everything localizes into a dual pair: the local groups are trivial,
    // but nu is nontrivial globally
    Json local_cat = Json::parse(R"({
      "quadratic_characters": [
        {"id": "one", "value_at_minus_one": 1, "is_trivial": true, "is_unramified": true,
         "frobenius_value": 1}],
      "constituents": [
        {"id": "one", "dim": 1, "duality": "orthogonal", "det_at_minus_one": 1,
         "root_number": "1", "is_unramified_character": true, "det_character": "one"},
        {"id": "s1", "dim": 1, "duality": {"dual": "s2"}, "det_at_minus_one": 1},
        {"id": "s2", "dim": 1, "duality": {"dual": "s1"}, "det_at_minus_one": 1}]
    })");
    Json loc = Json::array({Json{{"constituent", "s1"}, {"shift", "0"}, {"mult", 1}},
                            Json{{"constituent", "s2"}, {"shift", "0"}, {"mult", 1}}});
    Json doc{{"places", Json::array({Json{{"id", "v1"}, {"catalog", local_cat}},
                                     Json{{"id", "v2"}, {"catalog", local_cat}}})},
             {"global_cuspidals", Json::array({Json{
                 {"id", "pair_dot"}, {"dim", 2}, {"duality", "symplectic"},
                 {"global_root_number", -1},
                 {"localizations", Json{{"v1", loc}, {"v2", loc}}}}})}};
    GlobalCatalog g = GlobalCatalog::from_json(doc);
    GlobalParameter gp(g, {{"pair_dot", 1, 1}});
    CHECK(nu_global(gp).str() == "1");
    CHECK(character_constraint_set(gp, {"v1", "v2"}).empty());
    std::map<std::string, PacketModel> packets;
    packets.emplace("v1", PacketModel(localize(gp, "v1").shift0, {}));
    packets.emplace("v2", PacketModel(localize(gp, "v2").shift0, {}));
    CHECK(global_packet_members(gp, packets, {"v1", "v2"}).empty());
    CHECK_THROWS_AS(global_packet_members(gp, {}, {"v1", "v2"}), Error);
}

TEST_CASE("global packet members multiply the copy multiplicities") {
    GlobalParameter principal(principal_cat(), {{"zeta_dot", 4, 1}});
    const Catalog& c1 = principal_cat().place("v1").catalog;
    const Catalog& c2 = principal_cat().place("v2").catalog;
    std::map<std::string, PacketModel> packets;
    packets.emplace("v1", build_principal_packet(c1, "one", 2));
    // two copies of the minus member at v2
    ArthurParameter p2(c2, {{"one", 4, 1}});
    std::vector<PacketMember> members{
        {"omega_plus(one)", BitVec(1), 1, true, false},
        {"omega_minus(one)", BitVec::parse("1"), 1, false, false},
        {"omega_minus(one)", BitVec::parse("1"), 2, false, false}};
    packets.emplace("v2", PacketModel(p2, members));

    auto tuples = global_packet_members(principal, packets, {"v1", "v2"});
    REQUIRE(tuples.size() == 2);
    CHECK(tuples[0].labels == std::vector<std::string>{"omega_minus(one)", "omega_minus(one)"});
    CHECK(tuples[0].multiplicity == 2);
    CHECK(tuples[1].multiplicity == 1);

    SUBCASE("an empty fiber drops the tuple") {
        std::map<std::string, PacketModel> partial;
        partial.emplace("v1", build_principal_packet(c1, "one", 2));
        partial.emplace("v2", PacketModel(p2, {{"omega_plus(one)", BitVec(1), 1, true, false}}));
        auto t = global_packet_members(principal, partial, {"v1", "v2"});
        REQUIRE(t.size() == 1);
        CHECK(t[0].labels[0] == "omega_plus(one)");
    }
    SUBCASE("a ramified place without a packet is an error") {
        GlobalParameter sk(sk_cat(), {{"phi_dot", 1, 1}, {"chi_dot", 2, 1}});
        CHECK_THROWS_AS(global_packet_members(sk, {}, {"v1", "v2"}), Error);
    }
    SUBCASE("a packet for the wrong parameter is rejected") {
        std::map<std::string, PacketModel> wrong;
        wrong.emplace("v1", build_principal_packet(c1, "one", 1));
        wrong.emplace("v2", build_principal_packet(c2, "one", 2));
        CHECK_THROWS_AS(global_packet_members(principal, wrong, {"v1", "v2"}), Error);
    }
}

TEST_CASE("stable coefficient rows verify the order identity") {
    // three-summand discrete fixture: |S| = 8
    Json doc = Json::parse(fixtures::sk_global(-1));
    doc["global_cuspidals"].push_back(Json{
        {"id", "eta_dot"}, {"dim", 1}, {"duality", "orthogonal"}, {"global_root_number", 1},
        {"localizations", Json{
            {"v1", Json::array({Json{{"constituent", "one"}, {"shift", "0"}, {"mult", 1}}})},
            {"v2", Json::array({Json{{"constituent", "one"}, {"shift", "0"}, {"mult", 1}}})}}}});
    GlobalCatalog g = GlobalCatalog::from_json(doc);
    GlobalParameter gp(g, {{"phi_dot", 1, 1}, {"chi_dot", 2, 1}, {"eta_dot", 4, 1}});
    auto rows = stable_coefficient_table(gp);
    REQUIRE(rows.size() == 8);
    bool saw_mixed = false;
    for (const StableRow& row : rows) {
        CHECK(row.s_order == 8);
        CHECK(row.identity_ok);
        if (row.datum.n_prime > 0 && row.datum.n_dblprime > 0) {
            saw_mixed = true;
            CHECK(row.center == 4);
            CHECK(row.sbar_order == Rat::of(2, 1));
            CHECK((row.iota * Rat::of(1, 2)) == Rat::of(1, 8));
        } else {
            CHECK(row.center == 2);
            CHECK(row.sbar_order == Rat::of(4, 1));
        }
    }
    CHECK(saw_mixed);

    // the empty parameter: every quantity is one
    GlobalParameter zero(g, {});
    auto edge = stable_coefficient_table(zero);
    REQUIRE(edge.size() == 1);
    CHECK(edge[0].s_order == 1);
    CHECK(edge[0].center == 1);
    CHECK(edge[0].iota == Rat::of(1, 1));
    CHECK(edge[0].sbar_order == Rat::of(1, 1));
    CHECK(edge[0].identity_ok);
}

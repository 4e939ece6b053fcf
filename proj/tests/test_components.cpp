#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace mpcalc;
using mpcalc::testing::f1;
using mpcalc::testing::f1x;

TEST_CASE("centralizer shapes follow the buckets") {
    CHECK(centralizer(ArthurParameter(f1(), {{"rho2", 1, 1}, {"chi_a", 2, 1}})).str() == "O(1) x O(1)");
    CHECK(centralizer(ArthurParameter(f1(), {{"chi_a", 2, 2}})).str() == "O(2)");
    ArthurParameter mixed(f1x(), {{"rho2", 2, 2}, {"sigma_p", 1, 1}, {"sigma_m", 1, 1}});
    CHECK(centralizer(mixed).str() == "Sp(2) x GL(1)");
    CHECK(component_group(mixed).dim() == 0);
    CHECK(centralizer(ArthurParameter(f1(), {})).str() == "1");
}

TEST_CASE("component groups are indexed by the symplectic-type keys") {
    ComponentGroup g = component_group(ArthurParameter(f1(), {{"rho2", 1, 1}, {"chi_a", 2, 1}}));
    REQUIRE(g.dim() == 2);
    CHECK(g.order() == 4);
    CHECK(g.basis()[0].str() == "chi_a*r(2)");
    CHECK(g.basis()[1].str() == "rho2*r(1)");
    CHECK(g.index_of("rho2", 1) == 1);
    CHECK(g.index_of("rho2", 3) == -1);
    CHECK(g.elements().size() == 4);
}

TEST_CASE("distinguished elements read the parity of b and of the multiplicity") {
    SUBCASE("principal parameter") {
        Distinguished d = distinguished_elements(ArthurParameter(f1(), {{"one", 4, 1}}));
        CHECK(d.x_psi.str() == "1");
        CHECK(d.z.str() == "1");
    }
    SUBCASE("rank-2 example") {
        Distinguished d = distinguished_elements(ArthurParameter(f1(), {{"rho2", 1, 1}, {"chi_a", 2, 1}}));
        CHECK(d.x_psi.str() == "10");   // basis order (chi_a, 2), (rho2, 1)
        CHECK(d.z.str() == "11");
    }
    SUBCASE("even multiplicity kills both classes") {
        // the -1 block sits inside the connected part of O(2)
        Distinguished d = distinguished_elements(ArthurParameter(f1(), {{"chi_a", 2, 2}}));
        CHECK(d.x_psi.str() == "0");
        CHECK(d.z.str() == "0");
    }
}

TEST_CASE("splittings enumerate eigenvalue multiplicities") {
    SUBCASE("O(2) factor has three classes") {
        ArthurParameter psi(f1(), {{"chi_a", 2, 2}});
        auto ss = enumerate_splittings(psi);
        REQUIRE(ss.size() == 3);
        CHECK(ss[0].parts[0] == std::make_pair(2, 0));
        CHECK(ss[1].parts[0] == std::make_pair(1, 1));
        CHECK(ss[2].parts[0] == std::make_pair(0, 2));
        CHECK(splitting_image(psi, ss[0]).str() == "0");
        CHECK(splitting_image(psi, ss[1]).str() == "1");
        CHECK(splitting_image(psi, ss[2]).str() == "0");
    }
    SUBCASE("discrete parameters are in bijection with the group") {
        ArthurParameter psi(f1(), {{"rho2", 1, 1}, {"chi_a", 2, 1}});
        auto ss = enumerate_splittings(psi);
        REQUIRE(ss.size() == 4);
        std::set<std::string> images;
        for (const Splitting& s : ss) images.insert(splitting_image(psi, s).str());
        CHECK(images.size() == 4);
    }
    SUBCASE("Sp factors only admit even minus-multiplicities") {
        ArthurParameter psi(f1(), {{"rho2", 2, 2}});
        auto ss = enumerate_splittings(psi);
        REQUIRE(ss.size() == 2);
        CHECK(ss[0].parts[0] == std::make_pair(2, 0));
        CHECK(ss[1].parts[0] == std::make_pair(0, 2));
        for (const Splitting& s : ss) CHECK(splitting_image(psi, s).size() == 0);
    }
}

TEST_CASE("the image map onto the component group is surjective") {
    for (const ArthurParameter& psi : enumerate_parameters(f1x(), 3, EnumRestriction::All)) {
        std::set<std::string> images;
        for (const Splitting& s : enumerate_splittings(psi))
            images.insert(splitting_image(psi, s).str());
        CHECK(images.size() == static_cast<std::size_t>(component_group(psi).order()));
    }
}

TEST_CASE("splittings cut the parameter into an endoscopic pair") {
    ArthurParameter psi(f1(), {{"rho2", 1, 1}, {"chi_a", 2, 1}});
    auto keys = summand_keys(psi);
    Splitting s;
    s.parts = {{0, 1}, {1, 0}};   // -1 exactly on the chi_a part
    EndoscopicPair pair = splitting_to_endoscopic(psi, s);
    CHECK(pair.datum.n_prime == 1);
    CHECK(pair.datum.n_dblprime == 1);
    REQUIRE(pair.psi_prime.size() == 1);
    CHECK(pair.psi_prime[0].constituent == "rho2");
    REQUIRE(pair.psi_dblprime.size() == 1);
    CHECK(pair.psi_dblprime[0].constituent == "chi_a");

    Splitting trivial;
    trivial.parts = {{1, 0}, {1, 0}};
    EndoscopicPair p0 = splitting_to_endoscopic(psi, trivial);
    CHECK(p0.datum.n_prime == 2);
    CHECK(p0.datum.n_dblprime == 0);
    CHECK(p0.psi_dblprime.empty());

    Splitting minus;
    minus.parts = {{0, 1}, {0, 1}};
    EndoscopicPair p1 = splitting_to_endoscopic(psi, minus);
    CHECK(p1.datum.n_prime == 0);
    CHECK(p1.psi_prime.empty());
    CHECK(ArthurParameter(f1(), p1.psi_dblprime) == psi);
    (void)keys;
}

TEST_CASE("merging the endoscopic pair recovers the parameter and the splitting") {
    for (const ArthurParameter& psi : enumerate_parameters(f1x(), 3, EnumRestriction::All)) {
        auto keys = summand_keys(psi);
        for (const Splitting& s : enumerate_splittings(psi)) {
            EndoscopicPair pair = splitting_to_endoscopic(psi, s);
            std::vector<Summand> merged = pair.psi_prime;
            merged.insert(merged.end(), pair.psi_dblprime.begin(), pair.psi_dblprime.end());
            CHECK(ArthurParameter(f1x(), merged) == psi);
            CHECK(pair.datum.n_prime + pair.datum.n_dblprime == psi.n());
            // the splitting is recoverable from the minus multiplicities
            std::map<std::pair<std::string, int>, int> minus;
            for (const Summand& m : pair.psi_dblprime) minus[{m.constituent, m.b}] = m.mult;
            for (std::size_t i = 0; i < keys.size(); ++i)
                CHECK(minus[{keys[i].id, keys[i].b}] == s.parts[i].second);
        }
    }
}

TEST_CASE("iota is the reciprocal center order") {
    CHECK(iota_coefficient({2, 0}) == Rat::of(1, 2));
    CHECK(iota_coefficient({1, 1}) == Rat::of(1, 4));
    CHECK(iota_coefficient({0, 0}) == Rat::of(1, 1));
    CHECK(iota_coefficient({0, 3}) == Rat::of(1, 2));
}

TEST_CASE("the component map onto the l-parameter side") {
    SUBCASE("rank-2 example maps onto the odd-b generator") {
        ArthurParameter psi(f1(), {{"rho2", 1, 1}, {"chi_a", 2, 1}});
        ComponentMapToPhi cm = component_map_to_phi(psi);
        REQUIRE(cm.target_basis == std::vector<std::string>{"rho2"});
        CHECK(cm.matrix.row(0).str() == "01");   // kills (chi_a,2), keeps (rho2,1)
        CHECK(cm.matrix.apply(distinguished_elements(psi).x_psi).is_zero());
        CHECK(cm.matrix.rank() == 1);
    }
    SUBCASE("repeated constituents share a target generator") {
        ArthurParameter psi(f1(), {{"rho2", 1, 1}, {"rho2", 3, 1}});
        ComponentMapToPhi cm = component_map_to_phi(psi);
        REQUIRE(cm.target_basis == std::vector<std::string>{"rho2"});
        CHECK(cm.matrix.row(0).str() == "11");
    }
    SUBCASE("even b maps to the trivial group") {
        ComponentMapToPhi cm = component_map_to_phi(ArthurParameter(f1(), {{"one", 4, 1}}));
        CHECK(cm.target_basis.empty());
        CHECK(cm.matrix.rows() == 0);
    }
    SUBCASE("surjective and trivial on the distinguished element, exhaustively") {
        for (const ArthurParameter& psi : enumerate_parameters(f1(), 4, EnumRestriction::All)) {
            ComponentMapToPhi cm = component_map_to_phi(psi);
            CHECK(cm.matrix.rank() == cm.target_basis.size());
            CHECK(cm.matrix.apply(distinguished_elements(psi).x_psi).is_zero());
        }
    }
    SUBCASE("unbounded constituents are refused") {
        Catalog cat = Catalog::from_string(R"({
          "quadratic_characters": [{"id": "q", "value_at_minus_one": 1}],
          "constituents": [{"id": "x", "dim": 1, "duality": "orthogonal",
                            "det_at_minus_one": 1, "root_number": "1",
                            "det_character": "q", "bounded": false}]
        })");
        CHECK_THROWS_AS(component_map_to_phi(ArthurParameter(cat, {{"x", 2, 1}})), Error);
    }
}

#include "mpcalc/casebook.hpp"

#include <algorithm>
#include <set>

#include "mpcalc/fixtures.hpp"
#include "mpcalc/scenario.hpp"

namespace mpcalc {

namespace {

struct Checker {
    CaseResult result;
    void check(const std::string& what, bool pass) {
        result.checks.push_back({what, pass});
    }
    CaseResult done() {
        result.pass = std::all_of(result.checks.begin(), result.checks.end(),
                                  [](const CaseCheck& c) { return c.pass; });
        return result;
    }
};

CoefficientVector make_vec(std::initializer_list<std::pair<std::string, long long>> items) {
    CoefficientVector v;
    for (const auto& [k, c] : items) v[k] = c;
    return v;
}

CaseResult case_principal_local() {
    Checker ck;
    ck.result.id = "principal-local";
    Catalog cat = Catalog::from_string(fixtures::f1x());

    // unramified principal packet at n = 2
    PacketModel pm = build_principal_packet(cat, "one", 2);
    const ArthurParameter& psi = pm.parameter();
    BitVec triv(1), sgn = BitVec::parse("1");

    ck.check("two members with the trivial and the sign character", pm.members().size() == 2);
    ck.check("plus member spherical for unramified zeta",
             pm.members()[1].label == "omega_plus(one)" && pm.members()[1].spherical);

    CoefficientVector t_at_1 = t_vector(pm, triv);
    CoefficientVector t_at_s = t_vector(pm, sgn);
    ck.check("T at x = 1 is omega_plus - omega_minus",
             t_at_1 == make_vec({{"omega_plus(one)", 1}, {"omega_minus(one)", -1}}));
    ck.check("T at the nontrivial x is omega_plus + omega_minus",
             t_at_s == make_vec({{"omega_plus(one)", 1}, {"omega_minus(one)", 1}}));

    ck.check("fourier coefficient of the trivial character is omega_plus",
             fourier_pi(pm, triv) == make_vec({{"omega_plus(one)", 1}}));
    ck.check("fourier coefficient of the sign character is omega_minus",
             fourier_pi(pm, sgn) == make_vec({{"omega_minus(one)", 1}}));

    auto splittings = enumerate_splittings(psi);
    ck.check("two splittings for the principal parameter", splittings.size() == 2);
    CoefficientVector tr_triv = transfer_vector(pm, splittings.front());
    CoefficientVector tr_minus = transfer_vector(pm, splittings.back());
    ck.check("transfer at the trivial splitting is omega_plus - omega_minus",
             tr_triv == t_at_1);
    ck.check("transfer at the all-minus splitting is omega_plus + omega_minus",
             tr_minus == t_at_s);

    // ramified principal packet at n = 1: no spherical member
    PacketModel pm_a = build_principal_packet(cat, "chi_a", 1);
    bool any_spherical = false;
    for (const PacketMember& m : pm_a.members()) any_spherical |= m.spherical;
    ck.check("no spherical member for ramified zeta", !any_spherical);
    ck.check("principal packets are multiplicity-free",
             pm.members().size() == 2 && pm_a.members().size() == 2);

    // variation: delta_c is trivial on principal parameters, twice = identity
    BitVec delta = delta_c_character(psi, "a");
    ck.check("delta_c trivial on the principal parameter", delta.is_zero());
    PacketModel once = relabel_variation(pm, "a");
    bool same_chars = true;
    for (std::size_t i = 0; i < pm.members().size(); ++i)
        same_chars &= once.members()[i].character == pm.members()[i].character;
    ck.check("variation leaves the characters unchanged", same_chars);
    PacketModel twice = relabel_variation(once, "a");
    ck.check("variation twice returns the original parameter",
             twice.parameter() == pm.parameter());

    return ck.done();
}

CaseResult case_principal_global() {
    Checker ck;
    ck.result.id = "principal-global";
    GlobalCatalog gcat = GlobalCatalog::from_string(fixtures::principal_two_place());
    GlobalParameter gp(gcat, {{"zeta_dot", 4, 1}});

    ck.check("principal global parameter is discrete", gp.discrete());
    ck.check("multiplicity character is trivial", epsilon_psi(gp).is_zero());

    Distinguished d = distinguished_of_keys(gp.keys());
    ck.check("nu is trivial at the image of s_psi", nu_global(gp).pair(d.x_psi) == 1);

    std::vector<std::string> v{"v1", "v2"};
    auto xset = character_constraint_set(gp, v);
    ck.check("constraint set is the even-parity pairs",
             xset.size() == 2 && xset[0][0].str() == "0" && xset[0][1].str() == "0" &&
             xset[1][0].str() == "1" && xset[1][1].str() == "1");

    std::map<std::string, PacketModel> packets;
    packets.emplace("v1", build_principal_packet(gcat.place("v1").catalog, "one", 2));
    packets.emplace("v2", build_principal_packet(gcat.place("v2").catalog, "one", 2));
    auto members = global_packet_members(gp, packets, v);
    bool members_ok = members.size() == 2;
    if (members_ok) {
        members_ok = members[0].labels == std::vector<std::string>{"omega_minus(one)", "omega_minus(one)"} &&
                     members[1].labels == std::vector<std::string>{"omega_plus(one)", "omega_plus(one)"} &&
                     members[0].multiplicity == 1 && members[1].multiplicity == 1;
    }
    ck.check("member tuples are the matched-sign pairs with multiplicity 1", members_ok);

    // enlarging V forces the trivial character and the spherical member at v3
    std::vector<std::string> v3{"v1", "v2", "v3"};
    auto members3 = global_packet_members(gp, packets, v3);
    bool forced = members3.size() == 2;
    for (const GlobalMemberTuple& t : members3) {
        forced &= t.labels.size() == 3 && t.labels[2] == "spherical(v3)" && t.characters[2].is_zero();
    }
    ck.check("enlarging V forces the trivial character at the new place", forced);

    FactorizationReport fact = nu_factorization_check(gp, v);
    ck.check("global epsilon factorizes over V", fact.ok);

    bool stable_ok = true;
    for (const StableRow& row : stable_coefficient_table(gp)) stable_ok &= row.identity_ok;
    ck.check("stable coefficient identity at every splitting", stable_ok);

    return ck.done();
}

CaseResult case_waldspurger() {
    Checker ck;
    ck.result.id = "waldspurger-n1";
    Catalog cat = Catalog::from_string(fixtures::waldspurger());

    auto all = enumerate_parameters(cat, 1, EnumRestriction::All);
    // rank 1: a parameter is either a bounded L-parameter (all b = 1) or principal
    std::set<std::string> tempered, principal;
    for (const ArthurParameter& psi : all) {
        bool all_b_one = true;
        for (const Summand& s : psi.summands()) all_b_one &= s.b == 1;
        bool is_principal = psi.summands().size() == 1 && psi.summands()[0].b == 2 &&
                            psi.summands()[0].mult == 1 &&
                            cat.constituent(psi.summands()[0].constituent).dim == 1;
        if (all_b_one) tempered.insert(psi.str());
        if (is_principal) principal.insert(psi.str());
        if (!all_b_one && !is_principal)
            ck.check("unexpected parameter " + psi.str(), false);
    }
    ck.check("enumeration is the union of bounded and principal parameters",
             tempered.size() + principal.size() == all.size());
    ck.check("three bounded parameters at rank 1", tempered.size() == 3);
    ck.check("two principal parameters at rank 1", principal.size() == 2);

    auto good = enumerate_parameters(cat, 1, EnumRestriction::GoodParity);
    auto discrete = enumerate_parameters(cat, 1, EnumRestriction::Discrete);
    ck.check("good-parity enumeration has three parameters", good.size() == 3);
    ck.check("discrete enumeration coincides with good parity at rank 1",
             discrete.size() == good.size());

    return ck.done();
}

CaseResult case_mp4_psi_star() {
    Checker ck;
    ck.result.id = "mp4-psi-star";
    Catalog cat = Catalog::from_string(fixtures::f1x());

    auto all = enumerate_parameters(cat, 2, EnumRestriction::All);
    std::vector<ArthurParameter> star;
    for (const ArthurParameter& psi : all)
        if (classify(psi).in_psi_star) star.push_back(psi);
    ck.check("the anti-tempered good-parity family at rank 2 is nonempty", !star.empty());

    // the four shapes: zeta*r(4); (rho,1)+(zeta,2); (zeta,2)+(zeta',2); 2(zeta,2)
    std::set<std::string> shapes;
    bool all_trivial = true, all_fixed = true;
    for (const ArthurParameter& psi : star) {
        BitVec mu = xu_character_anti_tempered(psi);
        all_trivial &= mu.is_zero();
        all_fixed &= mu_tilde(psi, mu) == mu;
        std::string shape;
        for (const Summand& s : psi.summands()) {
            if (!shape.empty()) shape += "+";
            shape += "(dim" + std::to_string(cat.constituent(s.constituent).dim) + ",b" +
                     std::to_string(s.b) + ",m" + std::to_string(s.mult) + ")";
        }
        shapes.insert(shape);
    }
    ck.check("the packet-comparison character is trivial on every family", all_trivial);
    ck.check("mu~ = mu on every family (nu agrees with its dual)", all_fixed);
    ck.check("the non-tempered shapes of the family are present",
             shapes.count("(dim1,b4,m1)") && shapes.count("(dim1,b2,m1)+(dim2,b1,m1)") &&
             shapes.count("(dim1,b2,m1)+(dim1,b2,m1)") && shapes.count("(dim1,b2,m2)"));

    // outside the family: an unramified character breaks the comparison
    ArthurParameter outside(cat, {{"one", 2, 1}, {"rho2", 1, 1}});
    bool refused = false;
    try {
        xu_character_anti_tempered(outside);
    } catch (const Error& e) {
        refused = e.kind() == ErrorKind::UnsupportedXuCase;
    }
    ck.check("an unramified-character summand is refused", refused);
    BitVec zero(component_group(outside).dim());
    ck.check("mu~ differs from mu outside the family", !(mu_tilde(outside, zero) == zero));

    return ck.done();
}

CaseResult case_mp4_sk() {
    Checker ck;
    ck.result.id = "mp4-sk";
    GlobalCatalog minus = GlobalCatalog::from_string(fixtures::sk_global(-1));
    GlobalCatalog plus = GlobalCatalog::from_string(fixtures::sk_global(+1));

    GlobalParameter sk_minus(minus, {{"phi_dot", 1, 1}, {"chi_dot", 2, 1}});
    GlobalParameter sk_plus(plus, {{"phi_dot", 1, 1}, {"chi_dot", 2, 1}});

    BitVec art_minus = global_arthur_sign_character(sk_minus);
    BitVec art_plus = global_arthur_sign_character(sk_plus);
    ck.check("sign character has both bits set when the pair sign is -1",
             art_minus.str() == "11");
    ck.check("sign character is trivial when the pair sign is +1", art_plus.is_zero());
    Distinguished d = distinguished_of_keys(sk_minus.keys());
    ck.check("sign character factors through the quotient by z", art_minus.pair(d.z) == 1);

    ck.check("multiplicity character is eps_art * nu",
             epsilon_psi(sk_minus).str() == "10" && epsilon_psi(sk_plus).str() == "01");

    std::vector<std::string> v{"v1", "v2"};
    auto x_minus = character_constraint_set(sk_minus, v);
    auto x_plus = character_constraint_set(sk_plus, v);
    bool shifted = x_minus.size() == 4 && x_plus.size() == 4;
    if (shifted) {
        for (const auto& t : x_minus) shifted &= (t[0] ^ t[1]).str() == "10";
        for (const auto& t : x_plus) shifted &= (t[0] ^ t[1]).str() == "01";
    }
    ck.check("the constraint set is shifted by the extra pair sign", shifted);

    // generic parameter: trivial sign character
    GlobalParameter generic(minus, {{"phi_dot", 1, 1}});
    ck.check("generic parameter has trivial sign character",
             global_arthur_sign_character(generic).is_zero());
    ck.check("rank-2 principal parameter has trivial sign character",
             global_arthur_sign_character(GlobalParameter(minus, {{"chi_dot", 4, 1}})).is_zero());

    return ck.done();
}

} // namespace

const std::vector<std::string>& casebook_ids() {
    static const std::vector<std::string> ids{
        "principal-local", "principal-global", "waldspurger-n1", "mp4-psi-star", "mp4-sk"};
    return ids;
}

CaseResult run_case(const std::string& id) {
    if (id == "principal-local") return case_principal_local();
    if (id == "principal-global") return case_principal_global();
    if (id == "waldspurger-n1") return case_waldspurger();
    if (id == "mp4-psi-star") return case_mp4_psi_star();
    if (id == "mp4-sk") return case_mp4_sk();
    fail(ErrorKind::Schema, "unknown casebook id \"" + id + "\"");
}

std::string render_case(const CaseResult& r) {
    std::string out = "# Casebook: " + r.id + "\n\n";
    for (const CaseCheck& c : r.checks)
        out += std::string(c.pass ? "- ok: " : "- FAIL: ") + c.description + "\n";
    out += r.pass ? "\nresult: PASS\n" : "\nresult: FAIL\n";
    return out;
}

} // namespace mpcalc

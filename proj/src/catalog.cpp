#include "mpcalc/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mpcalc {

std::string duality_name(Duality d) {
    switch (d) {
        case Duality::Symplectic: return "symplectic";
        case Duality::Orthogonal: return "orthogonal";
        case Duality::NonSelfDual: return "non_self_dual";
    }
    return "?";
}

bool symplectic_type(const Constituent& c, int b) {
    if (!c.self_dual())
        fail(ErrorKind::NotSelfDual, "constituent " + c.id + " is not self-dual");
    bool r_symplectic = (b % 2 == 0);
    return c.symplectic() != r_symplectic;
}

namespace {

int get_sign(const Json& j, const std::string& key, const std::string& ctx) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(ErrorKind::Schema, ctx + ": missing integer field \"" + key + "\"");
    return parse_sign(j[key].get<int>(), ctx + "." + key);
}

int get_opt_sign(const Json& j, const std::string& key, int dflt, const std::string& ctx) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_number_integer())
        fail(ErrorKind::Schema, ctx + ": field \"" + key + "\" must be 1 or -1");
    return parse_sign(j[key].get<int>(), ctx + "." + key);
}

std::string get_string(const Json& j, const std::string& key, const std::string& ctx) {
    if (!j.contains(key) || !j[key].is_string())
        fail(ErrorKind::Schema, ctx + ": missing string field \"" + key + "\"");
    return j[key].get<std::string>();
}

int get_positive(const Json& j, const std::string& key, int dflt, const std::string& ctx) {
    if (!j.contains(key)) {
        if (dflt > 0) return dflt;
        fail(ErrorKind::Schema, ctx + ": missing positive integer field \"" + key + "\"");
    }
    if (!j[key].is_number_integer() || j[key].get<long long>() < 1 || j[key].get<long long>() > 1'000'000)
        fail(ErrorKind::Schema, ctx + ": field \"" + key + "\" must be a positive integer");
    return j[key].get<int>();
}

bool get_bool(const Json& j, const std::string& key, bool dflt, const std::string& ctx) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_boolean())
        fail(ErrorKind::Schema, ctx + ": field \"" + key + "\" must be a boolean");
    return j[key].get<bool>();
}

Duality parse_duality(const Json& j, std::string& dual_id, const std::string& ctx) {
    if (!j.contains("duality"))
        fail(ErrorKind::Schema, ctx + ": missing field \"duality\"");
    const Json& d = j["duality"];
    if (d.is_string()) {
        std::string s = d.get<std::string>();
        if (s == "symplectic") return Duality::Symplectic;
        if (s == "orthogonal") return Duality::Orthogonal;
        fail(ErrorKind::Schema, ctx + ": duality must be \"symplectic\", \"orthogonal\" or {\"dual\": id}");
    }
    if (d.is_object() && d.contains("dual") && d["dual"].is_string()) {
        dual_id = d["dual"].get<std::string>();
        return Duality::NonSelfDual;
    }
    fail(ErrorKind::Schema, ctx + ": duality must be \"symplectic\", \"orthogonal\" or {\"dual\": id}");
}

Json duality_json(const Constituent& c) {
    if (c.self_dual()) return Json(duality_name(c.duality));
    return Json{{"dual", c.dual_id}};
}

} // namespace

const Constituent& Catalog::constituent(const std::string& id) const {
    auto it = constituents_.find(id);
    if (it == constituents_.end())
        fail(ErrorKind::DanglingReference, "unknown constituent \"" + id + "\"");
    return it->second;
}

const QuadraticCharacter& Catalog::character(const std::string& id) const {
    auto it = characters_.find(id);
    if (it == characters_.end())
        fail(ErrorKind::DanglingReference, "unknown quadratic character \"" + id + "\"");
    return it->second;
}

void Catalog::add_character(QuadraticCharacter qc) {
    const std::string ctx = "quadratic character " + qc.id;
    if (qc.id.empty()) fail(ErrorKind::Schema, "quadratic character with empty id");
    if (characters_.count(qc.id))
        fail(ErrorKind::Consistency, ctx + ": duplicate id");
    if (qc.is_unramified && !qc.frobenius_value)
        fail(ErrorKind::Consistency, ctx + ": unramified character requires frobenius_value");
    if (qc.is_trivial) {
        if (qc.value_at_minus_one != 1)
            fail(ErrorKind::Consistency, ctx + ": trivial character must have value_at_minus_one = 1");
        if (qc.frobenius_value && *qc.frobenius_value != 1)
            fail(ErrorKind::Consistency, ctx + ": trivial character must have frobenius_value = 1");
        for (const auto& [cls, v] : qc.square_class_values)
            if (v != 1)
                fail(ErrorKind::Consistency, ctx + ": trivial character must be 1 on square class \"" + cls + "\"");
    }
    auto it = qc.square_class_values.find("minus_one");
    if (it != qc.square_class_values.end() && it->second != qc.value_at_minus_one)
        fail(ErrorKind::Consistency, ctx + ": square_class_values[minus_one] disagrees with value_at_minus_one");
    characters_.emplace(qc.id, std::move(qc));
}

void Catalog::add_constituent(Constituent c) {
    const std::string ctx = "constituent " + c.id;
    if (c.id.empty()) fail(ErrorKind::Schema, "constituent with empty id");
    if (constituents_.count(c.id))
        fail(ErrorKind::Consistency, ctx + ": duplicate id");
    if (c.dim < 1 || c.sl2_dim < 1)
        fail(ErrorKind::Consistency, ctx + ": dim and sl2_dim must be positive");
    if (c.dim % c.sl2_dim != 0)
        fail(ErrorKind::Consistency, ctx + ": dim must be a multiple of sl2_dim");
    if (archimedean_ && c.sl2_dim != 1)
        fail(ErrorKind::Consistency, ctx + ": archimedean catalog requires sl2_dim = 1");
    if (c.self_dual()) {
        c.dual_id = c.id;
        if (!c.root_number) {
            if (c.is_unramified_character) c.root_number = Mu4::one();
            else fail(ErrorKind::Consistency, ctx + ": self-dual constituent requires root_number");
        }
        if (c.root_number->square() != Mu4::of_sign(c.det_at_minus_one))
            fail(ErrorKind::Consistency, ctx + ": root_number^2 = det_at_minus_one violated (root="
                 + c.root_number->str() + ", det(-1)=" + std::to_string(c.det_at_minus_one) + ")");
    } else {
        if (c.root_number)
            fail(ErrorKind::Consistency, ctx + ": root_number only applies to self-dual constituents");
        if (c.dual_id.empty() || c.dual_id == c.id)
            fail(ErrorKind::Consistency, ctx + ": non-self-dual constituent requires a distinct dual id");
    }
    if (c.symplectic()) {
        if (c.det_at_minus_one != 1)
            fail(ErrorKind::Consistency, ctx + ": symplectic constituent must have det_at_minus_one = 1");
        if (!c.root_number->is_real())
            fail(ErrorKind::Consistency, ctx + ": symplectic constituent must have root_number in {1,-1}");
        if ((c.dim * c.sl2_dim) % 2 != 0)
            fail(ErrorKind::Consistency, ctx + ": symplectic forces dim*sl2_dim even");
    }
    if (c.is_unramified_character) {
        if (c.dim != 1 || c.sl2_dim != 1)
            fail(ErrorKind::Consistency, ctx + ": unramified character requires dim = sl2_dim = 1");
        if (c.self_dual() && !c.orthogonal())
            fail(ErrorKind::Consistency, ctx + ": self-dual unramified character must be orthogonal");
        if (c.det_at_minus_one != 1)
            fail(ErrorKind::Consistency, ctx + ": unramified character has value 1 at -1");
        if (c.self_dual() && *c.root_number != Mu4::one())
            fail(ErrorKind::Consistency, ctx + ": unramified constituent with conductor-standard data has root_number 1");
    }
    constituents_.emplace(c.id, std::move(c));
}

void Catalog::finalize() {
    for (auto& [id, qc] : characters_) character_order_.push_back(id);
    for (auto& [id, c] : constituents_) constituent_order_.push_back(id);

    for (auto& [id, c] : constituents_) {
        const std::string ctx = "constituent " + id;
        if (!c.self_dual()) {
            auto it = constituents_.find(c.dual_id);
            if (it == constituents_.end())
                fail(ErrorKind::DanglingReference, ctx + ": unknown dual \"" + c.dual_id + "\"");
            const Constituent& d = it->second;
            if (d.self_dual() || d.dual_id != id)
                fail(ErrorKind::Consistency, ctx + ": dual pairing with " + c.dual_id + " is not an involution");
            if (d.dim != c.dim || d.sl2_dim != c.sl2_dim || d.det_at_minus_one != c.det_at_minus_one)
                fail(ErrorKind::Consistency, ctx + ": dual pair must have equal dim, sl2_dim and det_at_minus_one");
        }
        if (c.orthogonal()) {
            if (!c.det_character)
                fail(ErrorKind::Consistency, ctx + ": orthogonal constituent requires det_character");
            const QuadraticCharacter& qc = character(*c.det_character);
            if (qc.value_at_minus_one != c.det_at_minus_one)
                fail(ErrorKind::Consistency, ctx + ": det_character value at -1 disagrees with det_at_minus_one");
        }
        if (c.is_unramified_character) {
            auto it = characters_.find(id);
            if (it == characters_.end())
                fail(ErrorKind::DanglingReference, ctx + ": unramified character constituent requires a quadratic character of the same id");
            if (!it->second.is_unramified || !it->second.frobenius_value)
                fail(ErrorKind::Consistency, ctx + ": matching quadratic character must be unramified with frobenius_value");
        }
    }
}

std::string Catalog::twist(const std::string& constituent_id, const std::string& character_id) const {
    const Constituent& c = constituent(constituent_id);
    const QuadraticCharacter& z = character(character_id);
    if (z.is_trivial) return c.id;
    auto it = twists_.find({constituent_id, character_id});
    if (it == twists_.end())
        fail(ErrorKind::MissingTwist, "twist (" + constituent_id + ", " + character_id + ") absent from table");
    return it->second;
}

bool Catalog::has_twist(const std::string& constituent_id, const std::string& character_id) const {
    if (has_character(character_id) && character(character_id).is_trivial) return has_constituent(constituent_id);
    return twists_.count({constituent_id, character_id}) > 0;
}

std::string Catalog::sl2_swap(const std::string& constituent_id, int b) const {
    const Constituent& c = constituent(constituent_id);
    if (b == 1 && c.sl2_dim == 1) return c.id;
    auto it = swaps_.find({constituent_id, b});
    if (it == swaps_.end())
        fail(ErrorKind::UnsupportedSwap, "catalog lacks the SL2 swap entry for (" +
             constituent_id + ", b=" + std::to_string(b) + ")");
    return it->second;
}

bool Catalog::has_sl2_swap(const std::string& constituent_id, int b) const {
    if (b == 1 && has_constituent(constituent_id) && constituent(constituent_id).sl2_dim == 1) return true;
    return swaps_.count({constituent_id, b}) > 0;
}

std::optional<int> Catalog::rs_sign(const std::string& a, const std::string& b) const {
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = rs_.find(key);
    if (it == rs_.end()) return std::nullopt;
    return it->second;
}

const QuadraticCharacter& Catalog::character_of_square_class(const std::string& square_class) const {
    for (const auto& id : character_order_) {
        const QuadraticCharacter& qc = characters_.at(id);
        if (qc.square_class && *qc.square_class == square_class) return qc;
    }
    fail(ErrorKind::DanglingReference, "no quadratic character declared for square class \"" + square_class + "\"");
}

Catalog Catalog::from_json(const Json& doc) {
    if (!doc.is_object()) fail(ErrorKind::Schema, "catalog document must be a JSON object");
    Catalog cat;
    cat.archimedean_ = get_bool(doc, "archimedean", false, "catalog");

    if (doc.contains("quadratic_characters")) {
        if (!doc["quadratic_characters"].is_array())
            fail(ErrorKind::Schema, "quadratic_characters must be an array");
        for (const Json& j : doc["quadratic_characters"]) {
            QuadraticCharacter qc;
            qc.id = get_string(j, "id", "quadratic character");
            const std::string ctx = "quadratic character " + qc.id;
            qc.value_at_minus_one = get_sign(j, "value_at_minus_one", ctx);
            qc.is_trivial = get_bool(j, "is_trivial", false, ctx);
            qc.is_unramified = get_bool(j, "is_unramified", false, ctx);
            if (j.contains("frobenius_value"))
                qc.frobenius_value = get_sign(j, "frobenius_value", ctx);
            if (j.contains("square_class"))
                qc.square_class = get_string(j, "square_class", ctx);
            if (j.contains("square_class_values")) {
                if (!j["square_class_values"].is_object())
                    fail(ErrorKind::Schema, ctx + ": square_class_values must be an object");
                for (auto it = j["square_class_values"].begin(); it != j["square_class_values"].end(); ++it)
                    qc.square_class_values[it.key()] =
                        parse_sign(it.value().get<int>(), ctx + ".square_class_values." + it.key());
            }
            cat.add_character(std::move(qc));
        }
    }

    if (doc.contains("constituents")) {
        if (!doc["constituents"].is_array())
            fail(ErrorKind::Schema, "constituents must be an array");
        for (const Json& j : doc["constituents"]) {
            Constituent c;
            c.id = get_string(j, "id", "constituent");
            const std::string ctx = "constituent " + c.id;
            c.dim = get_positive(j, "dim", -1, ctx);
            c.sl2_dim = get_positive(j, "sl2_dim", 1, ctx);
            c.duality = parse_duality(j, c.dual_id, ctx);
            c.det_at_minus_one = get_opt_sign(j, "det_at_minus_one", 1, ctx);
            if (j.contains("root_number")) {
                if (!j["root_number"].is_string())
                    fail(ErrorKind::Schema, ctx + ": root_number must be one of \"1\",\"-1\",\"i\",\"-i\"");
                c.root_number = Mu4::parse(j["root_number"].get<std::string>());
            }
            c.is_unramified_character = get_bool(j, "is_unramified_character", false, ctx);
            if (j.contains("det_character"))
                c.det_character = get_string(j, "det_character", ctx);
            c.bounded = get_bool(j, "bounded", true, ctx);
            cat.add_constituent(std::move(c));
        }
    }

    cat.finalize();

    if (doc.contains("twists")) {
        if (!doc["twists"].is_array()) fail(ErrorKind::Schema, "twists must be an array");
        for (const Json& j : doc["twists"]) {
            TwistEntry e{get_string(j, "constituent", "twist entry"),
                         get_string(j, "character", "twist entry"),
                         get_string(j, "result", "twist entry")};
            const std::string ctx = "twist (" + e.constituent + ", " + e.character + ")";
            const Constituent& src = cat.constituent(e.constituent);
            const QuadraticCharacter& z = cat.character(e.character);
            const Constituent& dst = cat.constituent(e.result);
            if (z.is_trivial && e.result != e.constituent)
                fail(ErrorKind::Consistency, ctx + ": twisting by the trivial character is the identity");
            if (dst.dim != src.dim || dst.sl2_dim != src.sl2_dim)
                fail(ErrorKind::Consistency, ctx + ": twisting must preserve dim and sl2_dim");
            if (src.self_dual() && dst.duality != src.duality)
                fail(ErrorKind::Consistency, ctx + ": twisting a self-dual constituent must preserve its duality type");
            if (!cat.twists_.emplace(std::make_pair(e.constituent, e.character), e.result).second)
                fail(ErrorKind::Consistency, ctx + ": duplicate twist entry");
        }
    }

    if (doc.contains("sl2_swaps")) {
        if (!doc["sl2_swaps"].is_array()) fail(ErrorKind::Schema, "sl2_swaps must be an array");
        for (const Json& j : doc["sl2_swaps"]) {
            SwapEntry e{get_string(j, "constituent", "sl2_swap entry"),
                        get_positive(j, "b", -1, "sl2_swap entry"),
                        get_string(j, "result", "sl2_swap entry")};
            const std::string ctx = "sl2_swap (" + e.constituent + ", b=" + std::to_string(e.b) + ")";
            const Constituent& src = cat.constituent(e.constituent);
            const Constituent& dst = cat.constituent(e.result);
            if (dst.sl2_dim != e.b)
                fail(ErrorKind::Consistency, ctx + ": result must have sl2_dim = b");
            if (src.dim / src.sl2_dim != dst.dim / dst.sl2_dim)
                fail(ErrorKind::Consistency, ctx + ": swap must preserve the core dimension");
            if (src.self_dual() != dst.self_dual())
                fail(ErrorKind::Consistency, ctx + ": swap must preserve self-duality");
            if (src.self_dual() && symplectic_type(src, e.b) != symplectic_type(dst, src.sl2_dim))
                fail(ErrorKind::Consistency, ctx + ": swap must preserve the symplectic/orthogonal type of the full summand");
            auto insert = [&cat, &ctx](const std::string& id, int b, const std::string& result) {
                auto [it, fresh] = cat.swaps_.emplace(std::make_pair(id, b), result);
                if (!fresh && it->second != result)
                    fail(ErrorKind::Consistency, ctx + ": conflicting swap entries");
            };
            insert(e.constituent, e.b, e.result);
            insert(e.result, src.sl2_dim, e.constituent);  // involution
        }
    }

    if (doc.contains("rankin_selberg")) {
        if (!doc["rankin_selberg"].is_array()) fail(ErrorKind::Schema, "rankin_selberg must be an array");
        for (const Json& j : doc["rankin_selberg"]) {
            if (!j.contains("pair") || !j["pair"].is_array() || j["pair"].size() != 2)
                fail(ErrorKind::Schema, "rankin_selberg entry requires \"pair\": [id, id]");
            RSEntry e{j["pair"][0].get<std::string>(), j["pair"][1].get<std::string>(),
                      get_sign(j, "sign", "rankin_selberg entry")};
            cat.constituent(e.a);
            cat.constituent(e.b);
            cat.rs_raw_.push_back(e);
            auto key = e.a <= e.b ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
            cat.rs_.emplace(key, e.sign);  // first declaration wins; conflicts surface in cross_constraints
        }
    }

    return cat;
}

Catalog Catalog::from_string(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(ErrorKind::Schema, "catalog text is not valid JSON");
    return from_json(doc);
}

Catalog Catalog::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Schema, "cannot open catalog file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

Json Catalog::to_json() const {
    Json doc = Json::object();
    if (archimedean_) doc["archimedean"] = true;
    Json chars = Json::array();
    for (const auto& id : character_order_) {
        const QuadraticCharacter& qc = characters_.at(id);
        Json j{{"id", qc.id}, {"value_at_minus_one", qc.value_at_minus_one}};
        if (qc.is_trivial) j["is_trivial"] = true;
        if (qc.is_unramified) j["is_unramified"] = true;
        if (qc.frobenius_value) j["frobenius_value"] = *qc.frobenius_value;
        if (qc.square_class) j["square_class"] = *qc.square_class;
        if (!qc.square_class_values.empty()) {
            Json vals = Json::object();
            for (const auto& [k, v] : qc.square_class_values) vals[k] = v;
            j["square_class_values"] = vals;
        }
        chars.push_back(j);
    }
    doc["quadratic_characters"] = chars;
    Json cons = Json::array();
    for (const auto& id : constituent_order_) {
        const Constituent& c = constituents_.at(id);
        Json j{{"id", c.id}, {"dim", c.dim}, {"sl2_dim", c.sl2_dim},
               {"duality", duality_json(c)}, {"det_at_minus_one", c.det_at_minus_one}};
        if (c.root_number) j["root_number"] = c.root_number->str();
        if (c.is_unramified_character) j["is_unramified_character"] = true;
        if (c.det_character) j["det_character"] = *c.det_character;
        if (!c.bounded) j["bounded"] = false;
        cons.push_back(j);
    }
    doc["constituents"] = cons;
    Json tw = Json::array();
    for (const auto& [key, result] : twists_)
        tw.push_back(Json{{"constituent", key.first}, {"character", key.second}, {"result", result}});
    doc["twists"] = tw;
    Json sw = Json::array();
    for (const auto& [key, result] : swaps_)
        sw.push_back(Json{{"constituent", key.first}, {"b", key.second}, {"result", result}});
    doc["sl2_swaps"] = sw;
    Json rs = Json::array();
    for (const auto& [key, sign] : rs_)
        rs.push_back(Json{{"pair", Json::array({key.first, key.second})}, {"sign", sign}});
    doc["rankin_selberg"] = rs;
    return doc;
}

ValidationReport Catalog::cross_constraints() const {
    ValidationReport rep;
    auto violation = [&rep](const std::string& entity, const std::string& msg) {
        rep.violations.push_back({entity, msg});
    };

    // twist involution: (c, z) -> d requires (d, z) -> c
    for (const auto& [key, result] : twists_) {
        auto back = twists_.find({result, key.second});
        if (back == twists_.end())
            violation("twist (" + result + ", " + key.second + ")",
                      "inverse of twist (" + key.first + ", " + key.second + ") -> " + result + " is missing");
        else if (back->second != key.first)
            violation("twist (" + result + ", " + key.second + ")",
                      "twisting twice by " + key.second + " is not the identity on " + key.first);
        // det of the twist: det(phi.zeta)(-1) = det(phi)(-1) * zeta(-1)^dim
        const Constituent& src = constituents_.at(key.first);
        const Constituent& dst = constituents_.at(result);
        const QuadraticCharacter& z = characters_.at(key.second);
        int expected = src.det_at_minus_one * ((src.dim % 2 == 1) ? z.value_at_minus_one : 1);
        if (dst.det_at_minus_one != expected)
            violation("twist (" + key.first + ", " + key.second + ")",
                      "det_at_minus_one of " + result + " disagrees with det(phi)(-1)*zeta(-1)^dim");
    }

    // dual involution (also enforced at load; kept in the pairwise report)
    for (const auto& id : constituent_order_) {
        const Constituent& c = constituents_.at(id);
        if (c.self_dual()) continue;
        auto it = constituents_.find(c.dual_id);
        if (it == constituents_.end() || it->second.dual_id != id)
            violation("constituent " + id, "dual pairing is not an involution");
    }

    // SL2 swap compatibility: for an sl2_dim = 1 core, the root number of the
    // swap target is forced by the epsilon recursion in the SL2 variable.
    for (const auto& [key, result] : swaps_) {
        const Constituent& src = constituents_.at(key.first);
        const Constituent& dst = constituents_.at(result);
        if (src.sl2_dim != 1 || !src.self_dual() || !dst.self_dual()) continue;
        int b = key.second;
        Mu4 expected = src.root_number->pow(b);
        if (src.is_unramified_character) {
            const QuadraticCharacter& qc = characters_.at(src.id);
            Mu4 minus_frob = Mu4::of_sign(-*qc.frobenius_value);
            expected *= minus_frob.pow(b - 1);
        }
        if (*dst.root_number != expected)
            violation("sl2_swap (" + key.first + ", b=" + std::to_string(b) + ")",
                      "root_number of " + result + " must be " + expected.str() +
                      " to match the SL2 epsilon recursion, got " + dst.root_number->str());
        int det_expected = (b % 2 == 0) ? 1 : src.det_at_minus_one;
        if (dst.det_at_minus_one != det_expected)
            violation("sl2_swap (" + key.first + ", b=" + std::to_string(b) + ")",
                      "det_at_minus_one of " + result + " must equal det(core)(-1)^b");
    }

    // Rankin-Selberg table: conflicting duplicates, and entries on pairs whose
    // external tensor product is not symplectic.
    std::map<std::pair<std::string, std::string>, int> seen;
    for (const RSEntry& e : rs_raw_) {
        auto key = e.a <= e.b ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
        auto [it, fresh] = seen.emplace(key, e.sign);
        if (!fresh && it->second != e.sign)
            violation("rankin_selberg {" + key.first + ", " + key.second + "}",
                      "conflicting signs declared for the same unordered pair");
        const Constituent& ca = constituents_.at(e.a);
        const Constituent& cb = constituents_.at(e.b);
        if (!ca.self_dual() || !cb.self_dual() || ca.symplectic() == cb.symplectic())
            violation("rankin_selberg {" + key.first + ", " + key.second + "}",
                      "pair is not of symplectic type (exactly one factor must be symplectic)");
    }

    return rep;
}

// ---- GlobalCatalog ------------------------------------------------------

const Place& GlobalCatalog::place(const std::string& id) const {
    auto it = places_.find(id);
    if (it == places_.end())
        fail(ErrorKind::DanglingReference, "unknown place \"" + id + "\"");
    return it->second;
}

const GlobalCuspidal& GlobalCatalog::cuspidal(const std::string& id) const {
    auto it = cuspidals_.find(id);
    if (it == cuspidals_.end())
        fail(ErrorKind::DanglingReference, "unknown global cuspidal \"" + id + "\"");
    return it->second;
}

std::optional<int> GlobalCatalog::rs_sign(const std::string& a, const std::string& b) const {
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = rs_.find(key);
    if (it == rs_.end()) return std::nullopt;
    return it->second;
}

GlobalCatalog GlobalCatalog::from_json(const Json& doc) {
    GlobalCatalog g;
    g.base_ = Catalog::from_json(doc);

    if (doc.contains("places")) {
        if (!doc["places"].is_array()) fail(ErrorKind::Schema, "places must be an array");
        for (const Json& j : doc["places"]) {
            Place p;
            p.id = get_string(j, "id", "place");
            if (g.places_.count(p.id))
                fail(ErrorKind::Consistency, "place " + p.id + ": duplicate id");
            p.unramified = get_bool(j, "unramified", false, "place " + p.id);
            p.catalog = j.contains("catalog") ? Catalog::from_json(j["catalog"]) : g.base_;
            g.place_order_.push_back(p.id);
            g.places_.emplace(p.id, std::move(p));
        }
    }
    std::sort(g.place_order_.begin(), g.place_order_.end());

    if (doc.contains("global_cuspidals")) {
        if (!doc["global_cuspidals"].is_array()) fail(ErrorKind::Schema, "global_cuspidals must be an array");
        for (const Json& j : doc["global_cuspidals"]) {
            GlobalCuspidal c;
            c.id = get_string(j, "id", "global cuspidal");
            const std::string ctx = "global cuspidal " + c.id;
            if (g.cuspidals_.count(c.id)) fail(ErrorKind::Consistency, ctx + ": duplicate id");
            c.dim = get_positive(j, "dim", -1, ctx);
            c.duality = parse_duality(j, c.dual_id, ctx);
            if (c.self_dual()) {
                c.dual_id = c.id;
                c.global_root_number = get_sign(j, "global_root_number", ctx);
            } else if (j.contains("global_root_number")) {
                fail(ErrorKind::Consistency, ctx + ": global_root_number only applies to self-dual entries");
            }
            if (j.contains("localizations")) {
                if (!j["localizations"].is_object())
                    fail(ErrorKind::Schema, ctx + ": localizations must be an object keyed by place");
                for (auto it = j["localizations"].begin(); it != j["localizations"].end(); ++it) {
                    std::vector<LocalizationEntry> entries;
                    if (!it.value().is_array())
                        fail(ErrorKind::Schema, ctx + ": localization at " + it.key() + " must be an array");
                    for (const Json& ej : it.value()) {
                        LocalizationEntry e;
                        e.constituent = get_string(ej, "constituent", ctx + "@" + it.key());
                        e.shift = ej.contains("shift")
                            ? HalfInt::parse(ej["shift"].is_string() ? ej["shift"].get<std::string>()
                                                                     : std::to_string(ej["shift"].get<int>()))
                            : HalfInt{0};
                        e.mult = get_positive(ej, "mult", 1, ctx + "@" + it.key());
                        entries.push_back(e);
                    }
                    c.localizations.emplace(it.key(), std::move(entries));
                }
            }
            if (j.contains("unramified_places")) {
                if (!j["unramified_places"].is_array())
                    fail(ErrorKind::Schema, ctx + ": unramified_places must be an array");
                for (const Json& pj : j["unramified_places"]) c.unramified_places.insert(pj.get<std::string>());
            }
            g.cuspidal_order_.push_back(c.id);
            g.cuspidals_.emplace(c.id, std::move(c));
        }
    }
    std::sort(g.cuspidal_order_.begin(), g.cuspidal_order_.end());

    if (doc.contains("global_rankin_selberg")) {
        if (!doc["global_rankin_selberg"].is_array())
            fail(ErrorKind::Schema, "global_rankin_selberg must be an array");
        for (const Json& j : doc["global_rankin_selberg"]) {
            if (!j.contains("pair") || !j["pair"].is_array() || j["pair"].size() != 2)
                fail(ErrorKind::Schema, "global_rankin_selberg entry requires \"pair\": [id, id]");
            std::string a = j["pair"][0].get<std::string>();
            std::string b = j["pair"][1].get<std::string>();
            int sign = get_sign(j, "sign", "global_rankin_selberg entry");
            auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
            g.rs_.emplace(key, sign);
        }
    }

    g.finalize();
    return g;
}

void GlobalCatalog::finalize() {
    for (const auto& [a, b] : rs_) {
        cuspidal(a.first);
        cuspidal(a.second);
        (void)b;
    }
    for (const auto& id : cuspidal_order_) {
        const GlobalCuspidal& c = cuspidals_.at(id);
        const std::string ctx = "global cuspidal " + id;
        if (!c.self_dual()) {
            auto it = cuspidals_.find(c.dual_id);
            if (it == cuspidals_.end())
                fail(ErrorKind::DanglingReference, ctx + ": unknown dual \"" + c.dual_id + "\"");
            if (it->second.self_dual() || it->second.dual_id != id)
                fail(ErrorKind::Consistency, ctx + ": dual pairing is not an involution");
            if (it->second.dim != c.dim)
                fail(ErrorKind::Consistency, ctx + ": dual pair must have equal dim");
        }
        for (const auto& p : c.unramified_places) place(p);
        for (const auto& [place_id, entries] : c.localizations) {
            const Place& p = place(place_id);
            const std::string lctx = ctx + " at place " + place_id;
            long long total = 0;
            std::map<std::pair<std::string, int>, int> multiset;
            for (const LocalizationEntry& e : entries) {
                const Constituent& lc = p.catalog.constituent(e.constituent);
                total += static_cast<long long>(e.mult) * lc.dim;
                multiset[{e.constituent, e.shift.twice}] += e.mult;
                bool marked_unramified = p.unramified || c.unramified_places.count(place_id);
                if (marked_unramified && !lc.is_unramified_character)
                    fail(ErrorKind::Consistency, lctx + ": localization at an unramified place must consist of unramified characters with shift data only");
            }
            if (total != c.dim)
                fail(ErrorKind::Consistency, lctx + ": localization dimension " + std::to_string(total) +
                     " does not match entry dimension " + std::to_string(c.dim));
            if (c.self_dual()) {
                // a self-dual entry localizes to a self-dual multiset, with
                // shift s paired against -s on the dual constituent
                for (const auto& [key, m] : multiset) {
                    const Constituent& lc = p.catalog.constituent(key.first);
                    auto partner = multiset.find({lc.dual_id, -key.second});
                    if (partner == multiset.end() || partner->second != m)
                        fail(ErrorKind::Consistency, lctx + ": localization of a self-dual entry must pair (" +
                             key.first + ", shift) with its dual at the opposite shift");
                    // type bookkeeping: self-dual shift-0 constituents of the
                    // opposite duality type carry even multiplicity, so the
                    // localized parameters stay well-typed
                    if (key.second == 0 && lc.self_dual() &&
                        lc.symplectic() != c.symplectic() && m % 2 != 0)
                        fail(ErrorKind::Consistency, lctx + ": constituent " + key.first +
                             " has the opposite duality type and must appear with even multiplicity");
                }
            }
        }
    }
}

GlobalCatalog GlobalCatalog::from_string(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(ErrorKind::Schema, "catalog text is not valid JSON");
    return from_json(doc);
}

GlobalCatalog GlobalCatalog::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Schema, "cannot open catalog file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

} // namespace mpcalc

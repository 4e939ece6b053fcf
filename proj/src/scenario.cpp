#include "mpcalc/scenario.hpp"

#include <fstream>
#include <sstream>

namespace mpcalc {

namespace {

std::string md_table_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    return out + "\n";
}

std::string md_table_sep(std::size_t n) {
    std::string out = "|";
    for (std::size_t i = 0; i < n; ++i) out += " --- |";
    return out + "\n";
}

std::string sign_str(int s) { return s == 1 ? "+1" : "-1"; }

std::string bits_or_dash(const BitVec& v) { return v.size() ? v.str() : "-"; }

Json splitting_json(const std::vector<KeyInfo>& keys, const Splitting& s) {
    Json parts = Json::array();
    for (std::size_t i = 0; i < keys.size(); ++i)
        parts.push_back(Json::array({keys[i].str(), s.parts[i].first, s.parts[i].second}));
    return parts;
}

std::string splitting_str(const std::vector<KeyInfo>& keys, const Splitting& s) {
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) out += ", ";
        out += keys[i].str() + ":(" + std::to_string(s.parts[i].first) + "," +
               std::to_string(s.parts[i].second) + ")";
    }
    return out.empty() ? "-" : out;
}

void append_machine_block(std::string& md, const Json& machine) {
    md += "\n## Machine-readable result\n\n```json\n";
    md += machine.dump(2);
    md += "\n```\n";
}

} // namespace

ScenarioResult run_analyze(const ArthurParameter& psi) {
    const Catalog& cat = psi.catalog();
    Classification cls = classify(psi);
    std::vector<KeyInfo> keys = summand_keys(psi);
    ComponentGroup group = component_group(psi);
    Distinguished dist = distinguished_elements(psi);
    BitVec nu = nu_character(psi);
    CentralizerShape shape = centralizer(psi);

    Json machine = Json::object();
    machine["command"] = "analyze";
    machine["parameter"] = psi.to_json();
    machine["dim"] = psi.dim();

    Json buckets = Json::array();
    for (std::size_t i = 0; i < psi.summands().size(); ++i) {
        const Summand& s = psi.summands()[i];
        buckets.push_back(Json{{"summand", s.constituent + "*r(" + std::to_string(s.b) + ")"},
                               {"mult", s.mult},
                               {"bucket", bucket_name(cls.per_summand[i].bucket)}});
    }
    machine["classification"] = Json{{"buckets", buckets},
                                     {"good_parity", cls.good_parity},
                                     {"discrete", cls.discrete},
                                     {"anti_tempered", cls.anti_tempered},
                                     {"unramified", cls.unramified},
                                     {"in_psi_star", cls.in_psi_star}};
    machine["centralizer"] = shape.str();
    Json basis = Json::array();
    for (const KeyInfo& k : group.basis()) basis.push_back(k.str());
    machine["component_group"] = Json{{"basis", basis}, {"order", group.order()}};
    machine["x_psi"] = dist.x_psi.str();
    machine["z"] = dist.z.str();
    machine["nu"] = nu.str();
    machine["restriction"] = restriction_to_lf(psi).to_json();

    bool bounded = true;
    for (const Summand& s : psi.summands())
        if (!cat.constituent(s.constituent).bounded) bounded = false;
    if (bounded) {
        machine["phi_psi"] = associated_l_parameter(psi).to_json();
        ComponentMapToPhi cm = component_map_to_phi(psi);
        Json rows = Json::array();
        for (std::size_t r = 0; r < cm.matrix.rows(); ++r) rows.push_back(cm.matrix.row(r).str());
        bool kills_x = cm.matrix.apply(dist.x_psi).is_zero();
        bool surjective = cm.matrix.rank() == cm.target_basis.size();
        machine["component_map_to_phi"] = Json{{"target_basis", cm.target_basis},
                                               {"matrix", rows},
                                               {"kills_x_psi", kills_x},
                                               {"surjective", surjective}};
    } else {
        machine["phi_psi"] = nullptr;
        machine["component_map_to_phi"] = nullptr;
    }

    GoodParityReduction red = good_parity_reduction(psi);
    Json gl = Json::array();
    for (const Summand& s : red.gl_part)
        gl.push_back(Json{{"constituent", s.constituent}, {"b", s.b}, {"mult", s.mult}});
    machine["good_parity_reduction"] = Json{{"psi0", red.psi0.to_json()}, {"gl_part", gl}};

    Json splittings = Json::array();
    for (const Splitting& s : enumerate_splittings(psi)) {
        EndoscopicPair endo = splitting_to_endoscopic(psi, s);
        Json row = Json::object();
        row["parts"] = splitting_json(keys, s);
        BitVec image = splitting_image(psi, s);
        row["image"] = image.str();
        row["endoscopic"] = Json::array({endo.datum.n_prime, endo.datum.n_dblprime});
        row["iota"] = iota_coefficient(endo.datum).str();
        row["epsilon_minus"] = epsilon_minus_part(psi, s);
        if (bounded) row["epsilon_phi_route"] = epsilon_phi_psi_minus_part(psi, s);
        row["nu_at_image"] = nu.pair(image);
        splittings.push_back(row);
    }
    machine["splittings"] = splittings;

    DescentReport descent = verify_descent(psi);
    machine["descent"] = Json{{"ok", descent.ok},
                              {"fibers", descent.fibers_checked},
                              {"violations", descent.violations}};
    machine["epsilon_restriction"] = epsilon_restriction(psi);

    // ---- markdown ----
    std::string md;
    md += "# Parameter analysis\n\n";
    md += "Parameter: `" + psi.str() + "`  (dimension " + std::to_string(psi.dim()) + ")\n\n";
    md += "## Classification\n\n";
    md += md_table_row({"summand", "mult", "bucket"});
    md += md_table_sep(3);
    for (const Json& b : buckets)
        md += md_table_row({b["summand"].get<std::string>(), std::to_string(b["mult"].get<int>()),
                            b["bucket"].get<std::string>()});
    md += "\nflags: ";
    std::vector<std::pair<std::string, bool>> flags{{"good_parity", cls.good_parity},
                                                    {"discrete", cls.discrete},
                                                    {"anti_tempered", cls.anti_tempered},
                                                    {"unramified", cls.unramified},
                                                    {"in_psi_star", cls.in_psi_star}};
    bool first = true;
    for (auto& [name, value] : flags) {
        if (!first) md += ", ";
        md += name + "=" + (value ? "yes" : "no");
        first = false;
    }
    md += "\n\n## Component group\n\n";
    md += "Centralizer: `" + shape.str() + "`, component group of order " +
          std::to_string(group.order()) + "\n\n";
    md += "basis: ";
    if (group.dim() == 0) md += "(trivial group)";
    for (std::size_t i = 0; i < group.dim(); ++i) {
        if (i) md += ", ";
        md += "`" + group.basis()[i].str() + "`";
    }
    md += "\n\nx_psi = `" + bits_or_dash(dist.x_psi) + "`, z = `" + bits_or_dash(dist.z) +
          "`, nu = `" + bits_or_dash(nu) + "`, eps(psi|_LF) = " +
          sign_str(machine["epsilon_restriction"].get<int>()) + "\n\n";
    if (bounded)
        md += "phi_psi: `" + associated_l_parameter(psi).str() + "`\n\n";
    md += "## Splittings\n\n";
    md += md_table_row({"parts (m', m'')", "image", "(n', n'')", "iota", "eps(psi^{s=-1})",
                        "eps via phi_psi", "nu(image)"});
    md += md_table_sep(7);
    for (const Json& row : splittings) {
        Splitting s;
        for (const Json& p : row["parts"]) s.parts.push_back({p[1].get<int>(), p[2].get<int>()});
        md += md_table_row({splitting_str(keys, s), row["image"].get<std::string>().empty() ? "-" : row["image"].get<std::string>(),
                            "(" + std::to_string(row["endoscopic"][0].get<long long>()) + ", " +
                                std::to_string(row["endoscopic"][1].get<long long>()) + ")",
                            row["iota"].get<std::string>(),
                            sign_str(row["epsilon_minus"].get<int>()),
                            row.contains("epsilon_phi_route") ? sign_str(row["epsilon_phi_route"].get<int>()) : "-",
                            sign_str(row["nu_at_image"].get<int>())});
    }
    md += "\n## Descent\n\n";
    md += descent.ok ? "All fibers consistent (" + std::to_string(descent.fibers_checked) + " fibers).\n"
                     : "VIOLATIONS FOUND:\n";
    for (const std::string& v : descent.violations) md += "- " + v + "\n";

    append_machine_block(md, machine);
    return {md, machine};
}

ScenarioResult run_multiplicity(const GlobalParameter& gp, const std::vector<std::string>& v,
                                const std::map<std::string, PacketModel>& packets,
                                const std::optional<BitVec>& art_override) {
    ComponentGroup group = component_group_of_keys(gp.keys());
    BitVec nu = nu_global(gp);
    BitVec art = art_override ? *art_override : global_arthur_sign_character(gp);
    BitVec eps = epsilon_psi(gp, art_override);   // validates an override against z
    Distinguished dist = distinguished_of_keys(gp.keys());

    Json machine = Json::object();
    machine["command"] = "multiplicity";
    machine["global_parameter"] = gp.to_json();
    machine["discrete"] = gp.discrete();
    Json basis = Json::array();
    for (const KeyInfo& k : group.basis()) basis.push_back(k.str());
    machine["component_group"] = Json{{"basis", basis}, {"order", group.order()}};
    machine["nu"] = nu.str();
    machine["epsilon_art"] = art.str();
    machine["epsilon"] = eps.str();
    machine["nu_trivial_at_s_psi"] = nu.pair(dist.x_psi) == 1;
    machine["V"] = v;

    Json xset = Json::array();
    auto tuples = character_constraint_set(gp, eps, v);
    for (const auto& tuple : tuples) {
        Json t = Json::array();
        for (const BitVec& chi : tuple) t.push_back(chi.str());
        xset.push_back(t);
    }
    machine["X"] = xset;

    Json members = Json::array();
    for (const GlobalMemberTuple& t : global_packet_members(gp, packets, eps, v)) {
        Json chars = Json::array();
        for (const BitVec& chi : t.characters) chars.push_back(chi.str());
        members.push_back(Json{{"labels", t.labels}, {"characters", chars},
                               {"multiplicity", t.multiplicity}});
    }
    machine["members"] = members;

    Json stable = Json::array();
    for (const StableRow& row : stable_coefficient_table(gp)) {
        stable.push_back(Json{{"endoscopic", Json::array({row.datum.n_prime, row.datum.n_dblprime})},
                              {"center", row.center},
                              {"iota", row.iota.str()},
                              {"sbar_order", row.sbar_order.str()},
                              {"identity_ok", row.identity_ok}});
    }
    machine["stable_table"] = stable;

    // ---- markdown ----
    std::string md;
    md += "# Multiplicity evaluation\n\n";
    md += "Global parameter: `" + gp.str() + "` over V = {";
    for (std::size_t i = 0; i < v.size(); ++i) md += (i ? ", " : "") + v[i];
    md += "}\n\n";
    md += "nu = `" + bits_or_dash(nu) + "`, eps_art = `" + bits_or_dash(art) +
          "`, multiplicity character = `" + bits_or_dash(eps) + "`\n\n";
    md += "## Character constraint set\n\n";
    if (tuples.empty()) {
        md += "(empty: the character does not lie in the image of the diagonal pullback)\n";
    } else {
        std::vector<std::string> header{"#"};
        for (const std::string& p : v) header.push_back("chi_" + p);
        md += md_table_row(header);
        md += md_table_sep(header.size());
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            std::vector<std::string> cells{std::to_string(i + 1)};
            for (const BitVec& chi : tuples[i]) cells.push_back(chi.size() ? chi.str() : "-");
            md += md_table_row(cells);
        }
    }
    md += "\n## Packet member tuples\n\n";
    if (machine["members"].empty()) {
        md += "(none)\n";
    } else {
        std::vector<std::string> header;
        for (const std::string& p : v) header.push_back(p);
        header.push_back("multiplicity");
        md += md_table_row(header);
        md += md_table_sep(header.size());
        for (const Json& m : machine["members"]) {
            std::vector<std::string> cells;
            for (const Json& l : m["labels"]) cells.push_back(l.get<std::string>());
            cells.push_back(std::to_string(m["multiplicity"].get<long long>()));
            md += md_table_row(cells);
        }
    }
    md += "\n## Stable coefficient table\n\n";
    md += md_table_row({"(n', n'')", "#Z", "iota", "#Sbar", "identity"});
    md += md_table_sep(5);
    for (const Json& row : machine["stable_table"]) {
        md += md_table_row({"(" + std::to_string(row["endoscopic"][0].get<long long>()) + ", " +
                                std::to_string(row["endoscopic"][1].get<long long>()) + ")",
                            std::to_string(row["center"].get<long long>()),
                            row["iota"].get<std::string>(),
                            row["sbar_order"].get<std::string>(),
                            row["identity_ok"].get<bool>() ? "ok" : "FAIL"});
    }

    append_machine_block(md, machine);
    return {md, machine};
}

ScenarioResult run_validate(const Catalog& cat) {
    ValidationReport rep = cat.cross_constraints();
    Json machine = Json::object();
    machine["command"] = "validate";
    machine["constituents"] = cat.constituent_ids();
    machine["quadratic_characters"] = cat.character_ids();
    Json v = Json::array();
    for (const ValidationIssue& issue : rep.violations)
        v.push_back(Json{{"entity", issue.entity}, {"message", issue.message}});
    machine["violations"] = v;
    machine["ok"] = rep.ok();

    std::string md = "# Catalog validation\n\n";
    md += std::to_string(cat.constituent_ids().size()) + " constituents, " +
          std::to_string(cat.character_ids().size()) + " quadratic characters.\n\n";
    if (rep.ok()) {
        md += "All pairwise constraints hold.\n";
    } else {
        md += "Violations:\n";
        for (const ValidationIssue& issue : rep.violations)
            md += "- " + issue.entity + ": " + issue.message + "\n";
    }
    append_machine_block(md, machine);
    return {md, machine};
}

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Schema, "cannot open file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    Json doc = Json::parse(ss.str(), nullptr, false);
    if (doc.is_discarded()) fail(ErrorKind::Schema, "file \"" + path + "\" is not valid JSON");
    return doc;
}

Json resolve_catalog_doc(const Json& doc, const std::vector<std::string>& catalog_files,
                         const std::string& scenario_dir) {
    if (!catalog_files.empty()) {
        // later files override scalar keys; array keys are concatenated
        Json merged = Json::object();
        for (const std::string& path : catalog_files) {
            Json part = load_json_file(path);
            for (auto it = part.begin(); it != part.end(); ++it) {
                if (merged.contains(it.key()) && merged[it.key()].is_array() && it.value().is_array()) {
                    for (const Json& e : it.value()) merged[it.key()].push_back(e);
                } else {
                    merged[it.key()] = it.value();
                }
            }
        }
        return merged;
    }
    if (doc.contains("catalog")) return doc["catalog"];
    if (doc.contains("catalog_file")) {
        std::string path = doc["catalog_file"].get<std::string>();
        if (!std::ifstream(path) && !scenario_dir.empty() && path.front() != '/')
            path = scenario_dir + "/" + path;
        return load_json_file(path);
    }
    fail(ErrorKind::Schema, "scenario requires a catalog (inline, catalog_file, or --catalog)");
}

} // namespace

ScenarioResult run_scenario(const Json& doc, const std::vector<std::string>& catalog_files,
                            const std::string& scenario_dir) {
    if (!doc.is_object() || !doc.contains("command") || !doc["command"].is_string())
        fail(ErrorKind::Schema, "scenario requires a string field \"command\"");
    std::string command = doc["command"].get<std::string>();
    Json cat_doc = resolve_catalog_doc(doc, catalog_files, scenario_dir);

    if (command == "analyze") {
        Catalog cat = Catalog::from_json(cat_doc);
        if (!doc.contains("parameter"))
            fail(ErrorKind::Schema, "analyze scenario requires \"parameter\"");
        return run_analyze(ArthurParameter::from_json(cat, doc["parameter"]));
    }
    if (command == "validate") {
        Catalog cat = Catalog::from_json(cat_doc);
        return run_validate(cat);
    }
    if (command == "multiplicity") {
        GlobalCatalog gcat = GlobalCatalog::from_json(cat_doc);
        if (!doc.contains("global_parameter"))
            fail(ErrorKind::Schema, "multiplicity scenario requires \"global_parameter\"");
        GlobalParameter gp = GlobalParameter::from_json(gcat, doc["global_parameter"]);
        std::vector<std::string> v;
        if (!doc.contains("V") || !doc["V"].is_array())
            fail(ErrorKind::Schema, "multiplicity scenario requires a place list \"V\"");
        for (const Json& p : doc["V"]) v.push_back(p.get<std::string>());
        std::map<std::string, PacketModel> packets;
        if (doc.contains("packets")) {
            if (!doc["packets"].is_object())
                fail(ErrorKind::Schema, "\"packets\" must be an object keyed by place");
            for (auto it = doc["packets"].begin(); it != doc["packets"].end(); ++it) {
                const Place& place = gcat.place(it.key());
                packets.emplace(it.key(), PacketModel::from_json(place.catalog, it.value()));
            }
        }
        return run_multiplicity(gp, v, packets);
    }
    fail(ErrorKind::Schema, "unknown command \"" + command + "\" (expected analyze, multiplicity or validate)");
}

std::string emit(const ScenarioResult& r, const std::string& format) {
    if (format == "json") return r.machine.dump(2) + "\n";
    return r.markdown;
}

} // namespace mpcalc

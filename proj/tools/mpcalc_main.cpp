// Command-line front end: load catalogs and scenarios, run the symbolic
// calculus, emit Markdown reports with an embedded machine-readable block.
//
// Exit codes: 0 success, 1 domain error, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mpcalc/casebook.hpp"
#include "mpcalc/fixtures.hpp"
#include "mpcalc/scenario.hpp"

namespace {

mpcalc::Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) mpcalc::fail(mpcalc::ErrorKind::Schema, "cannot open file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    mpcalc::Json doc = mpcalc::Json::parse(ss.str(), nullptr, false);
    if (doc.is_discarded())
        mpcalc::fail(mpcalc::ErrorKind::Schema, "file \"" + path + "\" is not valid JSON");
    return doc;
}

std::string dirname_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic Arthur-parameter and epsilon-factor calculus for metaplectic groups"};
    app.require_subcommand(1);

    std::vector<std::string> catalog_files;
    std::string scenario_path, parameter_literal, format = "md";
    unsigned long long seed = 1;
    int max_n = 6;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--catalog", catalog_files, "catalog file (repeatable)");
        sub->add_option("--format", format, "output format: md or json")
            ->check(CLI::IsMember({"md", "json"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "classify a parameter and tabulate its splittings");
    add_common(analyze);
    analyze->add_option("--scenario", scenario_path, "scenario file");
    analyze->add_option("--parameter", parameter_literal, "parameter literal (JSON array)");

    CLI::App* multiplicity = app.add_subcommand("multiplicity", "evaluate the global multiplicity data");
    add_common(multiplicity);
    multiplicity->add_option("--scenario", scenario_path, "scenario file")->required();

    CLI::App* validate = app.add_subcommand("validate", "load a catalog and report cross constraints");
    add_common(validate);

    CLI::App* casebook = app.add_subcommand("casebook", "run a built-in scenario with pinned expectations");
    std::string case_id;
    casebook->add_option("case", case_id, "one of: principal-local, principal-global, waldspurger-n1, mp4-psi-star, mp4-sk, all")
        ->required();

    // accepted for compatibility with randomized property drivers
    app.add_option("--seed", seed, "seed for randomized property commands");
    app.add_option("--max-n", max_n, "bound for enumerations");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            mpcalc::Json doc;
            std::string dir;
            if (!scenario_path.empty()) {
                doc = read_json_file(scenario_path);
                dir = dirname_of(scenario_path);
                if (!doc.contains("command")) doc["command"] = "analyze";
            } else {
                doc = mpcalc::Json::object();
                doc["command"] = "analyze";
                if (parameter_literal.empty())
                    mpcalc::fail(mpcalc::ErrorKind::Schema, "analyze requires --scenario or --parameter");
                mpcalc::Json param = mpcalc::Json::parse(parameter_literal, nullptr, false);
                if (param.is_discarded())
                    mpcalc::fail(mpcalc::ErrorKind::Schema, "--parameter is not valid JSON");
                doc["parameter"] = param;
            }
            std::cout << mpcalc::emit(mpcalc::run_scenario(doc, catalog_files, dir), format);
            return 0;
        }
        if (multiplicity->parsed()) {
            mpcalc::Json doc = read_json_file(scenario_path);
            if (!doc.contains("command")) doc["command"] = "multiplicity";
            std::cout << mpcalc::emit(
                mpcalc::run_scenario(doc, catalog_files, dirname_of(scenario_path)), format);
            return 0;
        }
        if (validate->parsed()) {
            mpcalc::Json doc{{"command", "validate"}};
            auto result = mpcalc::run_scenario(doc, catalog_files);
            std::cout << mpcalc::emit(result, format);
            return result.machine["ok"].get<bool>() ? 0 : 1;
        }
        if (casebook->parsed()) {
            bool all_pass = true;
            std::vector<std::string> ids =
                case_id == "all" ? mpcalc::casebook_ids() : std::vector<std::string>{case_id};
            for (const std::string& id : ids) {
                mpcalc::CaseResult r = mpcalc::run_case(id);
                std::cout << mpcalc::render_case(r);
                all_pass &= r.pass;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const mpcalc::Error& e) {
        std::cerr << e.kind_name() << ": " << e.what() << "\n";
        return e.is_input_error() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

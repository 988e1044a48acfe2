// Command-line front end: one subcommand per operation, plus scenario files and the
// built-in verification set.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "artinian.hpp"

namespace {

using artinian::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::map<std::string, std::string> text;
    bool augmentation = false;
    std::string json_out;
};

/// "--gens" style values: an existing file is read (newlines and commas separate items).
std::string inline_or_file(const std::string& value) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(value, ec)) return value;
    std::ifstream in(value);
    std::stringstream buf;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!first) buf << ',';
        buf << line;
        first = false;
    }
    return buf.str();
}

void write_report(const artinian::Report& report, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << Json(report).dump(2) << '\n';
}

int exit_code(const artinian::Report& report) {
    int code = kExitOk;
    for (const auto& e : report.scenarios) {
        if (e.status == "error" && e.error_kind == "parse") return kExitUsage;
        if (e.status != "pass") code = kExitFailure;
    }
    return code;
}

Json build_scenario(const std::string& op, const Options& o) {
    Json s{{"name", op}, {"op", op}};
    static const std::map<std::string, std::string> list_fields = {
        {"gens", "gens"},         {"right-gens", "right_gens"}, {"source-gens", "source_gens"},
        {"target-gens", "target_gens"}, {"images", "images"},   {"monomials", "monomials"}};
    static const std::map<std::string, std::string> scalar_fields = {
        {"vars", "vars"},       {"poly", "poly"},           {"a", "a"},
        {"box", "box"},         {"mode", "mode"},           {"samples", "a_samples"},
        {"right-vars", "right_vars"}, {"right-poly", "right_poly"}, {"source-vars", "source_vars"},
        {"target-vars", "target_vars"}};
    static const std::map<std::string, std::string> int_fields = {
        {"degree-cap", "degree_cap"}, {"n", "n"}, {"order", "order"}, {"budget", "budget"}};
    for (const auto& [flag, value] : o.text) {
        if (auto it = list_fields.find(flag); it != list_fields.end()) {
            s[it->second] = inline_or_file(value);
        } else if (auto it2 = scalar_fields.find(flag); it2 != scalar_fields.end()) {
            s[it2->second] = value;
        } else if (auto it3 = int_fields.find(flag); it3 != int_fields.end()) {
            s[it3->second] = std::stoi(value);
        } else if (flag == "family") {
            bool digits = !value.empty() && value.find_first_not_of("0123456789") == std::string::npos;
            s["family"] = digits ? Json(std::stoi(value)) : Json(value);
        } else if (flag == "expect") {
            s["expect"] = Json::parse(value);
        }
    }
    if (o.augmentation) s["augmentation"] = true;
    return s;
}

void add_common(CLI::App* sub, Options& o) {
    for (const char* flag : {"vars", "gens", "poly", "a", "box", "degree-cap", "n", "family", "mode", "order",
                             "samples", "monomials", "budget", "right-vars", "right-gens", "right-poly",
                             "source-vars", "source-gens", "target-vars", "target-gens", "images", "expect"}) {
        std::string name = std::string("--") + flag;
        sub->add_option_function<std::string>(name, [&o, f = std::string(flag)](const std::string& v) { o.text[f] = v; },
                                               std::string("scenario field '") + flag + "'");
    }
    sub->add_flag("--augmentation", o.augmentation, "use the augmentation as the morphism (tensor-kernel)");
    sub->add_option("--json", o.json_out, "write the report to this file");
}

void print_entry(const artinian::ReportEntry& e) {
    std::cout << (e.status == "pass" ? "PASS " : e.status == "fail" ? "FAIL " : "ERROR") << "  " << e.name;
    if (!e.error.empty()) std::cout << "  (" << e.error << ")";
    std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in Artinian local algebras and their splittings"};
    app.require_subcommand(1);
    Options o;

    std::map<std::string, CLI::App*> ops;
    for (const auto& op : artinian::operation_names()) {
        CLI::App* sub = app.add_subcommand(op, "run the '" + op + "' operation and print its value as JSON");
        add_common(sub, o);
        ops[op] = sub;
    }

    std::string scenario_file;
    CLI::App* run = app.add_subcommand("run", "run a scenario file (top-level JSON array)");
    run->add_option("file", scenario_file, "scenario file")->required();
    run->add_option("--json", o.json_out, "write the report to this file");

    CLI::App* checks = app.add_subcommand("paper-checks", "run the built-in verification set");
    checks->add_option("--json", o.json_out, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            Json scenarios;
            try {
                std::ifstream in(scenario_file);
                if (!in) {
                    std::cerr << "cannot read " << scenario_file << '\n';
                    return kExitUsage;
                }
                scenarios = Json::parse(in);
            } catch (const Json::parse_error& e) {
                std::cerr << "invalid JSON: " << e.what() << '\n';
                return kExitUsage;
            }
            if (!scenarios.is_array()) {
                std::cerr << "scenario file must hold a top-level JSON array\n";
                return kExitUsage;
            }
            artinian::Report report = artinian::run_scenarios(scenarios, print_entry);
            write_report(report, o.json_out);
            std::cout << "status: " << report.status << '\n';
            return exit_code(report);
        }
        if (checks->parsed()) {
            artinian::Report report = artinian::builtin_checks(print_entry);
            write_report(report, o.json_out);
            std::cout << "status: " << report.status << '\n';
            return report.status == "pass" ? kExitOk : kExitFailure;
        }
        for (const auto& [op, sub] : ops) {
            if (!sub->parsed()) continue;
            Json scenario;
            try {
                scenario = build_scenario(op, o);
            } catch (const std::exception& e) {
                std::cerr << "invalid arguments: " << e.what() << '\n';
                return kExitUsage;
            }
            artinian::Report report;
            report.scenarios.push_back(artinian::run_scenario(scenario, 0));
            if (report.scenarios.front().status != "pass") report.status = "fail";
            write_report(report, o.json_out);
            const auto& entry = report.scenarios.front();
            if (entry.status == "error") {
                std::cerr << "error: " << entry.error << '\n';
            } else {
                std::cout << entry.value.dump(2) << '\n';
                if (entry.status == "fail") std::cerr << "value does not match --expect\n";
            }
            return exit_code(report);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

// JSON scenarios and reports: one entry point per operation family.
//
// A scenario is a JSON object {"name", "op", ...inputs, "expect"?}. Inputs use exact
// rationals written as strings ("1/100") and polynomials in the text format of parse.hpp.
#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "artinian/flat.hpp"
#include "artinian/jacobian.hpp"
#include "artinian/parse.hpp"
#include "artinian/splitting.hpp"

namespace artinian {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportEntry {
    int index = 0;
    std::string name;
    std::string op;
    std::string status;  ///< "pass", "fail" or "error"
    Json value;
    std::string error;
    std::string error_kind;  ///< "parse", "domain" or empty
    double elapsed_ms = 0;

    bool operator==(const ReportEntry& o) const {
        return index == o.index && name == o.name && op == o.op && status == o.status && value == o.value &&
               error == o.error && error_kind == o.error_kind && elapsed_ms == o.elapsed_ms;
    }
};

struct Report {
    std::string version = kToolVersion;
    std::vector<ReportEntry> scenarios;
    std::string status = "pass";

    bool operator==(const Report& o) const {
        return version == o.version && scenarios == o.scenarios && status == o.status;
    }
};

inline void to_json(Json& j, const ReportEntry& e) {
    j = Json{{"index", e.index},   {"name", e.name},   {"op", e.op},
             {"status", e.status}, {"value", e.value}, {"error", e.error},
             {"error_kind", e.error_kind}, {"elapsed_ms", e.elapsed_ms}};
}

inline void from_json(const Json& j, ReportEntry& e) {
    j.at("index").get_to(e.index);
    j.at("name").get_to(e.name);
    j.at("op").get_to(e.op);
    j.at("status").get_to(e.status);
    e.value = j.at("value");
    j.at("error").get_to(e.error);
    e.error_kind = j.value("error_kind", std::string());
    j.at("elapsed_ms").get_to(e.elapsed_ms);
}

inline void to_json(Json& j, const Report& r) {
    j = Json{{"version", r.version}, {"scenarios", r.scenarios}, {"status", r.status}};
}

inline void from_json(const Json& j, Report& r) {
    j.at("version").get_to(r.version);
    j.at("scenarios").get_to(r.scenarios);
    j.at("status").get_to(r.status);
}

/// Thrown for malformed scenario objects (missing or mistyped fields).
class ScenarioError : public Error {
public:
    using Error::Error;
};

namespace scenario_detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        auto b = item.find_first_not_of(" \t\r\n");
        auto e = item.find_last_not_of(" \t\r\n");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

/// A list field given either as a JSON array of strings or as one separated string.
inline std::vector<std::string> string_list(const Json& s, const std::string& key, char sep = ',') {
    const Json& v = s.at(key);
    if (v.is_string()) return split(v.get<std::string>(), sep);
    if (!v.is_array()) throw ScenarioError("field '" + key + "' must be a string or an array");
    std::vector<std::string> out;
    for (const auto& x : v) {
        if (!x.is_string()) throw ScenarioError("field '" + key + "' must contain strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

inline Rational rational_field(const Json& s, const std::string& key) {
    const Json& v = s.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ScenarioError("field '" + key + "' must be a rational string or an integer");
}

inline std::vector<Rational> rational_list(const Json& s, const std::string& key) {
    std::vector<Rational> out;
    const Json& v = s.at(key);
    if (v.is_string()) {
        for (const auto& t : split(v.get<std::string>(), ',')) out.push_back(parse_rational(t));
        return out;
    }
    if (!v.is_array()) throw ScenarioError("field '" + key + "' must be a list of rationals");
    for (const auto& x : v) out.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    return out;
}

inline int int_field(const Json& s, const std::string& key, int fallback) {
    if (!s.contains(key)) return fallback;
    if (!s.at(key).is_number_integer()) throw ScenarioError("field '" + key + "' must be an integer");
    return s.at(key).get<int>();
}

inline std::string string_field(const Json& s, const std::string& key, const std::string& fallback) {
    if (!s.contains(key)) return fallback;
    if (!s.at(key).is_string()) throw ScenarioError("field '" + key + "' must be a string");
    return s.at(key).get<std::string>();
}

inline std::string str(const Rational& q) { return to_string(q); }

inline int degree_cap(const Json& s) { return int_field(s, "degree_cap", kDefaultDegreeCap); }

/// Variables of the main algebra: "vars", else those of the family polynomial.
inline std::vector<std::string> variables(const Json& s, const std::string& key = "vars") {
    if (s.contains(key)) return string_list(s, key);
    if (key == "vars" && s.contains("family") && s.at("family").is_number_integer())
        return default_variables(s.at("family").get<int>());
    return {"x", "y"};
}

inline std::vector<Polynomial> polys(const Json& s, const std::string& key, const std::vector<std::string>& vars) {
    std::vector<Polynomial> out;
    for (const auto& t : string_list(s, key)) out.push_back(parse_poly(t, vars));
    return out;
}

/// The scenario's family polynomial f_n, when "family" is an index.
inline std::optional<Polynomial> family_poly(const Json& s) {
    if (!s.contains("family") || !s.at("family").is_number_integer()) return std::nullopt;
    return family(s.at("family").get<int>());
}

/// Main algebra: "gens" over "vars", or the Milnor algebra of f_n for "family": n.
inline AlgebraPtr algebra(const Json& s, const std::string& gens_key = "gens", const std::string& vars_key = "vars") {
    if (s.contains(gens_key))
        return artinian_closure(LocalIdeal(polys(s, gens_key, variables(s, vars_key))), degree_cap(s));
    if (gens_key == "gens") {
        if (auto f = family_poly(s)) return artinian_closure(jacobian_ideal(*f), degree_cap(s));
    }
    throw ScenarioError("missing field '" + gens_key + "'");
}

/// Main element: "poly" over "vars", or f_n for "family": n.
inline Polynomial element(const Json& s, const std::string& key = "poly", const std::string& vars_key = "vars") {
    if (s.contains(key)) return parse_poly(s.at(key).get<std::string>(), variables(s, vars_key));
    if (key == "poly") {
        if (auto f = family_poly(s)) return *f;
    }
    throw ScenarioError("missing field '" + key + "'");
}

inline Json interval_json(const Interval& x) { return Json::array({str(x.lo()), str(x.hi())}); }

inline Json enclosure_json(const RootEnclosure& e) {
    Json j = Json::array();
    for (std::size_t i = 0; i < e.box.size(); ++i)
        j.push_back(e.exact[i] ? Json::array({str(*e.exact[i]), str(*e.exact[i])}) : interval_json(e.box[i]));
    return j;
}

inline SplitSystem split_system(const Json& s) {
    std::string fam = string_field(s, "family", "first");
    Rational a = s.contains("a") ? rational_field(s, "a") : Rational(0);
    if (fam == "first") return first_splitting(a);
    if (fam == "second") return second_splitting(int_field(s, "n", 2), a);
    throw ScenarioError("family must be 'first' or 'second'");
}

inline BoxRegion box_field(const Json& s, int dim) {
    if (!s.contains("box")) return BoxRegion::cube(dim, make_rational(-1, 2), make_rational(1, 2));
    BoxRegion r;
    for (const auto& side : string_list(s, "box")) {
        auto parts = split(side, ':');
        if (parts.size() != 2) throw ScenarioError("box sides must be written lo:hi");
        Rational lo = parse_rational(parts[0]);
        Rational hi = parse_rational(parts[1]);
        if (lo > hi) throw DomainError("box side has lower bound above upper bound");
        r.sides.emplace_back(lo, hi);
    }
    if (r.dimension() == 1 && dim > 1) r.sides.assign(static_cast<std::size_t>(dim), r.sides.front());
    if (r.dimension() != dim) throw ArityMismatch("box dimension differs from system arity");
    return r;
}

inline RealRootCount roots_in_box(const Json& s, const SplitSystem& sys) {
    if (sys.arity() == 2) return count_real_roots(sys, box_field(s, 2), int_field(s, "budget", kDefaultRefinementBudget));
    return seeded_roots(sys);
}

inline std::vector<Monomial> monomial_list(const Json& s, const std::string& key, int n,
                                           const std::vector<std::string>& vars) {
    std::vector<Monomial> out;
    for (const auto& p : polys(s, key, vars)) {
        if (p.terms().size() != 1 || p.leading_coefficient() != 1)
            throw ScenarioError("monomial list entries must be monomials");
        Monomial m(n);
        for (int i = 0; i < n; ++i) m.set(i, p.leading_monomial()[i]);
        out.push_back(m);
    }
    return out;
}

using Handler = std::function<Json(const Json&)>;

inline const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"quotient-dim", [](const Json& s) { return Json(quotient_dim(algebra(s))); }},
        {"normal-form",
         [](const Json& s) {
             AlgebraPtr a = algebra(s);
             return Json(format_poly(normal_form(a, element(s)).lift(), variables(s)));
         }},
        {"member", [](const Json& s) { return Json(member(algebra(s), element(s))); }},
        {"nilpotency",
         [](const Json& s) {
             AlgebraPtr a = algebra(s);
             auto k = nilpotency_index(normal_form(a, element(s)));
             return k ? Json(*k) : Json(nullptr);
         }},
        {"principal-dim",
         [](const Json& s) {
             AlgebraPtr a = algebra(s);
             return Json(principal_ideal_dim(normal_form(a, element(s))));
         }},
        {"jacobian",
         [](const Json& s) {
             JacobianData d = jacobian_data(element(s), degree_cap(s));
             Json gens = Json::array();
             for (const auto& g : d.delta.generators()) gens.push_back(format_poly(g, variables(s)));
             return Json{{"generators", gens}, {"milnor_number", d.milnor_algebra->dim()}};
         }},
        {"bs-exponent", [](const Json& s) { return Json(bs_exponent(element(s), degree_cap(s))); }},
        {"family",
         [](const Json& s) {
             int n = int_field(s, "n", int_field(s, "family", 1));
             Polynomial f = family(n);
             JacobianData d = jacobian_data(f, degree_cap(s));
             auto k = nilpotency_index(normal_form(d.milnor_algebra, f));
             return Json{{"poly", format_poly(f, default_variables(n))},
                         {"milnor_number", d.milnor_algebra->dim()},
                         {"nilpotency", k ? Json(*k) : Json(nullptr)}};
         }},
        {"prolong",
         [](const Json& s) {
             auto vars = variables(s);
             ProlongedIdeal p = prolong(LocalIdeal(polys(s, "gens", vars)));
             std::vector<std::string> all = vars;
             for (const auto& v : vars) all.push_back("d" + v);
             Json gens = Json::array();
             for (const auto& g : p.prolonged.generators()) gens.push_back(format_poly(g, all));
             return Json{{"vars", all}, {"generators", gens}};
         }},
        {"flat-check",
         [](const Json& s) {
             AlgebraPtr a = algebra(s);
             Polynomial p = element(s);
             std::string mode = string_field(s, "mode", "both");
             Json out = Json::object();
             if (mode != "c1" && mode != "c2" && mode != "both") throw ScenarioError("mode must be c1, c2 or both");
             if (mode != "c2") out["c1"] = flat_member_c1(a, p, degree_cap(s));
             if (mode != "c1") {
                 std::optional<int> budget;
                 if (s.contains("budget")) budget = int_field(s, "budget", 0);
                 out["c2"] = flat_member_c2(a, p, budget);
             }
             if (mode == "both") out["agree"] = out["c1"] == out["c2"];
             return out;
         }},
        {"tensor",
         [](const Json& s) {
             AlgebraPtr a = algebra(s);
             AlgebraPtr b = algebra(s, "right_gens", "right_vars");
             AlgebraPtr t = tensor(a, b, degree_cap(s));
             return Json{{"dim", t->dim()},
                         {"left_dim", a->dim()},
                         {"right_dim", b->dim()},
                         {"multiplicative", t->dim() == a->dim() * b->dim()}};
         }},
        {"tensor-kernel",
         [](const Json& s) {
             AlgebraPtr a = algebra(s);
             AlgebraPtr w = algebra(s, "source_gens", "source_vars");
             std::optional<AlgebraMorphism> phi;
             if (s.value("augmentation", false)) {
                 phi = AlgebraMorphism::augmentation(w);
             } else {
                 AlgebraPtr w2 = algebra(s, "target_gens", "target_vars");
                 phi = AlgebraMorphism(w, w2, polys(s, "images", variables(s, "target_vars")));
             }
             TensorKernelReport r = tensor_kernel_report(a, *phi);
             return Json{{"tensor_dim", r.tensor_dim},
                         {"kernel_dim", r.kernel_dim},
                         {"ideal_dim", r.ideal_dim},
                         {"phi_kernel_dim", r.phi_kernel_dim},
                         {"equal", r.equal}};
         }},
        {"pushout",
         [](const Json& s) {
             AlgebraPtr a = algebra(s);
             AlgebraPtr b = algebra(s, "right_gens", "right_vars");
             QuotientElement a0 = normal_form(a, element(s));
             QuotientElement b0 = normal_form(b, element(s, "right_poly", "right_vars"));
             AlgebraPtr p = pushout(a0, b0, degree_cap(s));
             return Json{{"dim", p->dim()}, {"injective", pushout_injective(a0, b0, degree_cap(s))}};
         }},
        {"split-count",
         [](const Json& s) {
             SplitSystem sys = split_system(s);
             RealRootCount r = roots_in_box(s, sys);
             Json encl = Json::array();
             for (const auto& e : r.enclosures) encl.push_back(enclosure_json(e));
             return Json{{"count", r.count}, {"enclosures", encl}};
         }},
        {"complex-count", [](const Json& s) { return Json(complex_root_count(split_system(s))); }},
        {"transversality",
         [](const Json& s) {
             SplitSystem sys = split_system(s);
             RealRootCount r = roots_in_box(s, sys);
             return Json(transversality_check(sys, r.enclosures, int_field(s, "budget", kDefaultRefinementBudget)));
         }},
        {"sign-table",
         [](const Json& s) {
             Json out = Json::array();
             for (const auto& e : h_sign_table(rational_field(s, "a")))
                 out.push_back(Json{{"point", str(e.point)}, {"value", str(e.value)}, {"sign", e.sign}});
             return out;
         }},
        {"root-gap",
         [](const Json& s) {
             RootGapReport r = root_gap_analysis(rational_list(s, "a_samples"));
             Json gaps = Json::array();
             for (const auto& g : r.samples)
                 gaps.push_back(Json{{"a", str(g.a)}, {"gap", interval_json(round_outward(g.gap, 64))}});
             return Json{{"slope", r.slope}, {"gaps", gaps}};
         }},
        {"param-nf",
         [](const Json& s) {
             std::string fam = string_field(s, "family", "first");
             int n = fam == "first" ? 2 : int_field(s, "n", 2);
             ParamSystem sys = fam == "first" ? first_splitting_param() : second_splitting_param(n);
             std::vector<std::string> vars = s.contains("vars") ? variables(s) : default_variables(n);
             std::vector<std::string> with_a = vars;
             with_a.push_back("a");
             std::vector<Monomial> monos = s.contains("monomials") ? monomial_list(s, "monomials", n, vars)
                                           : fam == "first"       ? default_param_monomials()
                                                                  : grid_monomials(n, 3 * n - 3);
             Polynomial f = parse_poly(s.at("poly").get<std::string>(), with_a);
             ParamNormalForm r = param_normal_form(f, int_field(s, "order", 1), sys, monos, degree_cap(s));
             Json lambda = Json::object();
             for (std::size_t i = 0; i < r.monomials.size(); ++i)
                 lambda[format_monomial(r.monomials[i], vars)] = format_poly(r.lambda[i], with_a);
             return Json{{"lambda", lambda},
                         {"certificate", r.certificate_holds},
                         {"cross_check", r.cross_check_holds},
                         {"certified_degree", r.certified_degree}};
         }},
        {"interpolation",
         [](const Json& s) {
             std::string fam = string_field(s, "family", "first");
             int n = fam == "first" ? 2 : int_field(s, "n", 2);
             std::vector<std::string> vars = s.contains("vars") ? variables(s) : default_variables(n);
             std::vector<Monomial> monos = s.contains("monomials") ? monomial_list(s, "monomials", n, vars)
                                           : fam == "first"       ? default_param_monomials()
                                                                  : grid_monomials(n, 3 * n - 3);
             auto make = [&](const Rational& a) {
                 return fam == "first" ? first_splitting(a) : second_splitting(n, a);
             };
             InterpolationReport r = interpolation_analysis(make, box_field(s, n), monos, rational_list(s, "a_samples"));
             Json samples = Json::array();
             for (const auto& d : r.samples)
                 samples.push_back(Json{{"a", str(d.a)},
                                        {"det", interval_json(round_outward(d.determinant, 64))},
                                        {"sign", d.determinant.certified_sign()}});
             return Json{{"samples", samples},
                         {"fitted_order", r.fitted_order ? Json(*r.fitted_order) : Json(nullptr)}};
         }},
    };
    return table;
}

inline bool rational_text(const Json& v, Rational& out) {
    if (!v.is_string()) return false;
    try {
        out = parse_rational(v.get<std::string>());
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace scenario_detail

/// Compares a computed value with an expectation. Objects match key-wise (extra value keys
/// are ignored); {"$range": [lo, hi]} accepts a number in [lo, hi]; {"$contains": [p...]}
/// accepts an enclosure containing the point; rational strings compare as rationals.
inline bool matches(const Json& expect, const Json& value) {
    using scenario_detail::rational_text;
    if (expect.is_object() && expect.contains("$range")) {
        if (!value.is_number()) return false;
        double v = value.get<double>();
        return expect["$range"].at(0).get<double>() <= v && v <= expect["$range"].at(1).get<double>();
    }
    if (expect.is_object() && expect.contains("$contains")) {
        const Json& point = expect["$contains"];
        if (!value.is_array() || value.size() != point.size()) return false;
        for (std::size_t i = 0; i < point.size(); ++i) {
            Rational p;
            Rational lo;
            Rational hi;
            if (!rational_text(point[i], p) || !value[i].is_array() || value[i].size() != 2 ||
                !rational_text(value[i][0], lo) || !rational_text(value[i][1], hi))
                return false;
            if (p < lo || p > hi) return false;
        }
        return true;
    }
    if (expect.is_object()) {
        if (!value.is_object()) return false;
        for (const auto& [k, v] : expect.items())
            if (!value.contains(k) || !matches(v, value.at(k))) return false;
        return true;
    }
    if (expect.is_array()) {
        if (!value.is_array() || value.size() != expect.size()) return false;
        for (std::size_t i = 0; i < expect.size(); ++i)
            if (!matches(expect[i], value[i])) return false;
        return true;
    }
    Rational a;
    Rational b;
    if (rational_text(expect, a) && rational_text(value, b)) return a == b;
    if (expect.is_number() && value.is_number()) return expect.get<double>() == value.get<double>();
    return expect == value;
}

inline std::vector<std::string> operation_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : scenario_detail::handlers()) out.push_back(k);
    return out;
}

/// Runs one scenario. Errors are captured in the entry, never thrown.
inline ReportEntry run_scenario(const Json& s, int index = 0) {
    ReportEntry e;
    e.index = index;
    auto start = std::chrono::steady_clock::now();
    try {
        if (!s.is_object()) throw ScenarioError("scenario must be a JSON object");
        e.name = s.value("name", std::string());
        e.op = s.value("op", std::string());
        const auto& table = scenario_detail::handlers();
        auto it = table.find(e.op);
        if (it == table.end()) throw ScenarioError("unknown operation '" + e.op + "'");
        e.value = it->second(s);
        e.status = (!s.contains("expect") || matches(s.at("expect"), e.value)) ? "pass" : "fail";
    } catch (const ParseError& ex) {
        e.status = "error";
        e.error = ex.what();
        e.error_kind = "parse";
    } catch (const std::exception& ex) {
        // Scenario validation errors (including JSON type errors) are reported, not fatal.
        e.status = "error";
        e.error = ex.what();
        e.error_kind = "domain";
    }
    e.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return e;
}

/// Runs a top-level array of scenarios in order.
inline Report run_scenarios(const Json& scenarios, const std::function<void(const ReportEntry&)>& on_entry = {}) {
    if (!scenarios.is_array()) throw ScenarioError("scenario file must hold a top-level JSON array");
    Report r;
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        r.scenarios.push_back(run_scenario(scenarios[i], static_cast<int>(i)));
        if (on_entry) on_entry(r.scenarios.back());
        if (r.scenarios.back().status != "pass") r.status = "fail";
    }
    return r;
}

/// Report without timings, for determinism comparisons.
inline Json report_values(const Report& r) {
    Json j = r;
    for (auto& e : j["scenarios"]) e.erase("elapsed_ms");
    return j;
}

/// The built-in verification set, grouped by check number in each name.
inline Json builtin_check_scenarios() {
    const Json simple = {"5*x^4 + 2*x*y^2", "2*x^2*y + 5*y^4"};
    const Json b0 = {"5*x^4 + 3*x^2*y^3", "3*x^3*y^2 + 5*y^5", "y^6"};
    const std::string f = "x^5 + x^2*y^2 + y^5";
    const std::string b = "x^5 + x^3*y^3 + y^5";
    Json s = Json::array();
    auto add = [&](Json scenario) { s.push_back(std::move(scenario)); };

    add({{"name", "01 simple locus dimension"}, {"op", "quotient-dim"}, {"gens", simple}, {"expect", 11}});
    add({{"name", "02 principal ideal of f"}, {"op", "principal-dim"}, {"gens", simple}, {"poly", f}, {"expect", 1}});
    add({{"name", "02 nilpotency of f"}, {"op", "nilpotency"}, {"gens", simple}, {"poly", f}, {"expect", 2}});
    add({{"name", "03 b0 nonzero"}, {"op", "member"}, {"gens", b0}, {"poly", b}, {"expect", false}});
    add({{"name", "03 b0 squares to zero"}, {"op", "nilpotency"}, {"gens", b0}, {"poly", b}, {"expect", 2}});
    add({{"name", "03 principal ideal of b0"}, {"op", "principal-dim"}, {"gens", b0}, {"poly", b}, {"expect", 1}});
    add({{"name", "03 b0 flat"}, {"op", "flat-check"}, {"mode", "c2"}, {"gens", b0}, {"poly", b},
         {"expect", {{"c2", true}}}});
    for (int n = 1; n <= 3; ++n) {
        int dim = 1;
        for (int i = 0; i < n; ++i) dim *= 3 * n - 2;
        add({{"name", "04 family nilpotency n=" + std::to_string(n)}, {"op", "nilpotency"}, {"family", n}, {"expect", n}});
        add({{"name", "04 family dimension n=" + std::to_string(n)}, {"op", "quotient-dim"}, {"family", n}, {"expect", dim}});
    }
    for (const char* p : {"x^3 + y^3", "x^2*y + y^4", "x^5 + x^2*y^2 + y^5", "x^4 + y^4 + x^2*y^2"})
        add({{"name", std::string("05 bs exponent ") + p}, {"op", "bs-exponent"}, {"poly", p},
             {"expect", {{"$range", {1, 64}}}}});
    add({{"name", "05 bs exponent homogeneous"}, {"op", "bs-exponent"}, {"poly", "x^3*y + x*y^3"}, {"expect", 1}});
    add({{"name", "06 conditions agree on f"}, {"op", "flat-check"}, {"gens", simple}, {"poly", f},
         {"expect", {{"agree", true}}}});
    add({{"name", "06 conditions agree on b0"}, {"op", "flat-check"}, {"gens", b0}, {"poly", b},
         {"expect", {{"agree", true}}}});
    add({{"name", "07 coproduct exactness (augmentation)"}, {"op", "tensor-kernel"}, {"gens", simple},
         {"source_vars", "t"}, {"source_gens", {"t^3"}}, {"augmentation", true}, {"expect", {{"equal", true}}}});
    add({{"name", "07 coproduct exactness (truncation)"}, {"op", "tensor-kernel"}, {"gens", b0}, {"source_vars", "t"},
         {"source_gens", {"t^4"}}, {"target_vars", "t"}, {"target_gens", {"t^2"}}, {"images", {"t"}},
         {"expect", {{"equal", true}}}});
    add({{"name", "07 tensor multiplicativity"}, {"op", "tensor"}, {"gens", simple}, {"right_vars", "u,v"},
         {"right_gens", {"u^2", "v^3"}}, {"expect", {{"dim", 66}, {"multiplicative", true}}}});
    add({{"name", "08 pushout injective"}, {"op", "pushout"}, {"gens", simple}, {"poly", f}, {"right_gens", b0},
         {"right_poly", b}, {"expect", {{"injective", true}}}});
    for (const char* a : {"1/100", "1/1000"}) {
        std::string tag = std::string(" a=") + a;
        add({{"name", "09 first splitting count" + tag}, {"op", "split-count"}, {"family", "first"}, {"a", a},
             {"box", "-1/4:1/4,-1/4:1/4"}, {"expect", {{"count", 11}}}});
        add({{"name", "09 first splitting transverse" + tag}, {"op", "transversality"}, {"family", "first"}, {"a", a},
             {"box", "-1/4:1/4,-1/4:1/4"}, {"expect", true}});
        add({{"name", "09 first splitting complex count" + tag}, {"op", "complex-count"}, {"family", "first"},
             {"a", a}, {"expect", 16}});
    }
    add({{"name", "10 sign table a=1/10"}, {"op", "sign-table"}, {"a", "1/10"},
         {"expect",
          {{{"point", "-1/5"}, {"value", "-403/100000"}, {"sign", -1}},
           {{"sign", 1}},
           {{"sign", -1}},
           {{"point", "1/10"}, {"value", "97/50000"}, {"sign", 1}}}}});
    add({{"name", "10 sign table a=1/100"}, {"op", "sign-table"}, {"a", "1/100"},
         {"expect", {{{"sign", -1}}, {{"sign", 1}}, {{"sign", -1}}, {{"sign", 1}}}}});
    add({{"name", "11 root gap exponent"}, {"op", "root-gap"}, {"a_samples", {"1/100", "1/1000", "1/10000", "1/100000"}},
         {"expect", {{"slope", {{"$range", {1.4, 1.6}}}}}}});
    add({{"name", "12 second splitting count a=1/100"}, {"op", "split-count"}, {"family", "second"}, {"n", 2},
         {"a", "1/100"}, {"box", "-1/2:1/2,-1/2:1/2"}, {"expect", {{"count", 16}}}});
    add({{"name", "12 second splitting transverse a=1/100"}, {"op", "transversality"}, {"family", "second"},
         {"n", 2}, {"a", "1/100"}, {"expect", true}});
    add({{"name", "12 interpolation a=1/100"}, {"op", "interpolation"}, {"family", "second"}, {"n", 2},
         {"a_samples", {"1/100"}}, {"expect", {{"samples", {{{"a", "1/100"}}}}}}});
    for (int order = 1; order <= 3; ++order)
        for (const char* p : {"x^4", "x^2*y^2", "1", "3*x^5*y - 2/7*a*x^3*y^2 + x*y^5 - a^2*y^6 + 5*x^2*y"})
            add({{"name", "13 parameterized normal form N=" + std::to_string(order) + " f=" + p}, {"op", "param-nf"},
                 {"poly", p}, {"order", order}, {"expect", {{"certificate", true}, {"cross_check", true}}}});
    return s;
}

inline Report builtin_checks(const std::function<void(const ReportEntry&)>& on_entry = {}) {
    return run_scenarios(builtin_check_scenarios(), on_entry);
}

}  // namespace artinian

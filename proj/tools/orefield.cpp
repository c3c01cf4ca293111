/*
   Copyright 2026 The orefield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// orefield: command-line front end.
//
// Exit codes: 0 success, 2 malformed input, 3 invalid scenario or failed
// validation, 4 a requested check failed, 5 internal error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <orefield.hpp>

namespace {

using namespace orefield;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCheck = 4;
constexpr int kExitInternal = 5;

struct Options {
    std::string scenario;
    std::string catalog;
    std::string field = "Qi";
    std::string format = "text";
    int precision = kDefaultPrecision;
    std::uint64_t seed = 20260417;
    int max_deg = kCenterDegreeCap;
    int trials = 100;
    bool left = false;
    std::vector<std::string> exprs;
};

bool json_output(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const Json& doc, const std::string& text) {
    if (json_output(o))
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

std::shared_ptr<const GroundField> named_field(const std::string& name) {
    if (name == "Q") return fields::rationals();
    if (name == "Qi") return fields::gaussian_conjugation();
    if (name == "HQ") return fields::hamilton_rational();
    throw Error(Errc::InvalidArgument, "unknown field '" + name + "' (use Q, Qi or HQ)");
}

bool is_tower_name(const std::string& name) {
    auto names = catalog::tower_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

/// The scenario selected by --scenario or --catalog, if any.
std::optional<ScenarioFile> selected(const Options& o) {
    if (!o.scenario.empty() && !o.catalog.empty())
        throw Error(Errc::InvalidArgument, "give either --scenario or --catalog, not both");
    if (!o.scenario.empty()) return read_scenario_file(o.scenario);
    if (o.catalog.empty()) return std::nullopt;
    ScenarioFile f;
    if (is_tower_name(o.catalog))
        f.tower = catalog::tower_spec(o.catalog);
    else
        f.extension = catalog::extension_spec(o.catalog);
    return f;
}

ScenarioFile required(const Options& o) {
    auto f = selected(o);
    if (!f) throw Error(Errc::InvalidArgument, "this command needs --scenario FILE or --catalog NAME");
    return *f;
}

const char* type_name(const Value& v) {
    if (std::holds_alternative<SkewFraction>(v)) return "fraction";
    if (std::holds_alternative<TwistedSeries>(v)) return "series";
    return "extension";
}

/// Expression context; an extension scenario (or a tower's top level) supplies x.
struct Context {
    std::shared_ptr<const GroundField> field;
    std::shared_ptr<const ExtensionScenario> extension;
    ExprContext expr;
};

Context context(const Options& o) {
    Context c;
    auto f = selected(o);
    if (f) {
        const ExtensionSpec& spec = f->extension ? *f->extension : f->tower->levels.back();
        c.extension = ExtensionScenario::build_or_throw(spec);
        c.field = spec.field;
    } else {
        c.field = named_field(o.field);
    }
    c.expr.field = c.field.get();
    c.expr.scenario = c.extension.get();
    c.expr.precision = o.precision;
    return c;
}

int finish(const Options& o, const std::string& command, const std::string& name, const Report& report,
           int failure_code = kExitCheck) {
    Json doc;
    doc["command"] = command;
    doc["scenario"] = name;
    const Json body = report.to_json();
    for (const auto& item : body.items()) doc[item.key()] = item.value();
    emit(o, doc, report.to_text() + (report.all_passed() ? "all checks passed\n" : "some checks failed\n"));
    return report.all_passed() ? kExitOk : failure_code;
}

int cmd_eval(const Options& o) {
    auto c = context(o);
    const auto& text = o.exprs.at(0);
    auto v = evaluate(text, c.expr);
    Json doc;
    doc["command"] = "eval";
    doc["input"] = text;
    doc["type"] = type_name(v);
    doc["value"] = to_string(v);
    emit(o, doc, to_string(v) + "\n");
    return kExitOk;
}

SkewPolynomial as_polynomial(const Value& v, const std::string& what) {
    const auto* f = std::get_if<SkewFraction>(&v);
    if (!f || !f->is_polynomial()) throw Error(Errc::NotPolynomial, what + " is not a polynomial in t");
    return f->den().leading().inverse() * f->num();
}

int cmd_divmod(const Options& o) {
    auto c = context(o);
    auto f = as_polynomial(evaluate(o.exprs.at(0), c.expr), "dividend");
    auto g = as_polynomial(evaluate(o.exprs.at(1), c.expr), "divisor");
    auto d = o.left ? divmod_left(f, g) : divmod_right(f, g);
    const auto rebuilt = o.left ? g * d.quotient + d.remainder : d.quotient * g + d.remainder;
    const bool ok = rebuilt == f && d.remainder.degree() < g.degree();
    Json doc;
    doc["command"] = "divmod";
    doc["side"] = o.left ? "left" : "right";
    doc["quotient"] = to_string(d.quotient);
    doc["remainder"] = to_string(d.remainder);
    doc["identity"] = ok;
    std::string text = "q = " + to_string(d.quotient) + "\nr = " + to_string(d.remainder) + "\n";
    text += std::string(o.left ? "f = g*q + r" : "f = q*g + r") + (ok ? " holds\n" : " FAILS\n");
    emit(o, doc, text);
    return ok ? kExitOk : kExitCheck;
}

int cmd_invert(const Options& o) {
    auto c = context(o);
    auto v = evaluate(o.exprs.at(0), c.expr);
    Value inv;
    bool ok = false;
    if (auto f = std::get_if<SkewFraction>(&v)) {
        auto i = f->inverse();
        ok = (*f * i).is_one() && (i * *f).is_one();
        inv = i;
    } else if (auto s = std::get_if<TwistedSeries>(&v)) {
        auto i = s->inverse();
        ok = agree(*s * i, TwistedSeries::one(s->field(), (*s * i).precision()));
        inv = i;
    } else {
        const auto& m = std::get<TensorElement>(v);
        auto i = m.inverse();
        ok = (m * i).is_one() && (i * m).is_one();
        inv = i;
    }
    Json doc;
    doc["command"] = "invert";
    doc["input"] = o.exprs.at(0);
    doc["type"] = type_name(v);
    doc["inverse"] = to_string(inv);
    doc["verified"] = ok;
    emit(o, doc, to_string(inv) + "\n" + (ok ? "a * a^-1 = a^-1 * a = 1\n" : "inverse check FAILED\n"));
    return ok ? kExitOk : kExitCheck;
}

int cmd_center(const Options& o) {
    auto c = context(o);
    auto basis = fr_center_basis(*c.field, o.max_deg);
    Json doc;
    doc["command"] = "center";
    doc["field"] = c.field->description();
    doc["max-deg"] = o.max_deg;
    doc["basis"] = Json::array();
    std::string text;
    for (const auto& b : basis) {
        doc["basis"].push_back(to_string(b));
        text += to_string(b) + "\n";
    }
    emit(o, doc, text);
    return kExitOk;
}

int cmd_extend(const Options& o) {
    auto f = required(o);
    if (!f.extension) throw Error(Errc::InvalidArgument, "'" + f.name() + "' is a tower; use the tower command");
    auto built = ExtensionScenario::build(*f.extension);
    Report report;
    report.add_all(built.checks);
    return finish(o, "extend", f.name(), report, built.ok() ? kExitCheck : kExitValidation);
}

int cmd_tower(const Options& o) {
    auto f = required(o);
    if (!f.tower) throw Error(Errc::InvalidArgument, "'" + f.name() + "' is not a tower; use the extend command");
    auto ts = TowerScenario::build(*f.tower);
    Report report;
    report.add_all(ts->validation_checks());
    report.add_all(suites::tower(*ts));
    return finish(o, "tower", f.name(), report);
}

bool wanted(const ScenarioFile& f, const std::string& group) {
    return f.checks.empty() || std::find(f.checks.begin(), f.checks.end(), group) != f.checks.end();
}

int cmd_verify(const Options& o) {
    auto f = required(o);
    if (o.trials < 1) throw Error(Errc::InvalidArgument, "--trials must be positive");
    const auto& field = f.field();
    const auto seed = o.seed;
    const int n = o.trials;
    Report report;
    std::vector<std::shared_ptr<const ExtensionScenario>> levels;
    if (f.extension) {
        auto built = ExtensionScenario::build(*f.extension);
        if (wanted(f, "validation")) report.add_all(built.checks);
        if (!built.ok()) return finish(o, "verify", f.name(), report, kExitValidation);
        levels.push_back(built.scenario);
    }
    std::shared_ptr<const TowerScenario> ts;
    if (f.tower) {
        ts = TowerScenario::build(*f.tower);
        if (wanted(f, "validation")) report.add_all(ts->validation_checks());
        levels = ts->levels();
    }
    if (wanted(f, "ring")) report.add_all(suites::ring_laws(field, "", seed, n, std::max(1, n / 10)));
    if (wanted(f, "division")) {
        report.add_all(suites::division(field, "", seed + 1, n));
        if (&field == fields::gaussian_conjugation().get()) report.add(suites::worked_division(field, ""));
    }
    if (wanted(f, "fractions")) report.add_all(suites::fractions(field, "", seed + 2, std::max(1, n / 2)));
    if (wanted(f, "centre")) report.add(suites::centre_structure(field, "", std::min(o.max_deg, kCenterDegreeCap)));
    if (wanted(f, "laurent"))
        report.add_all(suites::laurent(field, "", seed + 3, std::max(1, n / 2), o.precision));
    if (wanted(f, "extension")) {
        for (std::size_t k = 0; k < levels.size(); ++k) {
            const std::string label = ts ? "level-" + std::to_string(k + 1) : "";
            // Inverses over quartic and larger L are big; sample fewer and smaller.
            const bool large = levels[k]->degree() > 2;
            report.add_all(suites::extension(*levels[k], label, seed + 4 + k, std::max(1, large ? n / 50 : n / 4),
                                             std::max(1, n / 10), std::max(1, n / 10), std::min(o.precision, 48),
                                             large ? 1 : 4));
        }
    }
    if (ts && wanted(f, "tower")) report.add_all(suites::tower(*ts));
    return finish(o, "verify", f.name(), report);
}

int cmd_export(const Options& o) {
    if (o.catalog.empty()) throw Error(Errc::InvalidArgument, "export needs --catalog NAME");
    Json doc = is_tower_name(o.catalog) ? export_tower(catalog::tower_spec(o.catalog))
                                        : export_extension(catalog::extension_spec(o.catalog));
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_catalog(const Options& o) {
    Json doc;
    doc["extensions"] = catalog::extension_names();
    doc["towers"] = catalog::tower_names();
    std::string text = "extensions:";
    for (const auto& n : catalog::extension_names()) text += " " + n;
    text += "\ntowers:";
    for (const auto& n : catalog::tower_names()) text += " " + n;
    emit(o, doc, text + "\n");
    return kExitOk;
}

int report_error(const Options& o, const std::exception& e, const std::string& code, int exit_code) {
    if (json_output(o)) {
        Json doc;
        doc["error"] = code;
        doc["message"] = e.what();
        std::cout << doc.dump(2) << "\n";
    }
    std::cerr << "orefield: " << e.what() << "\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact arithmetic in twisted polynomial rings and the skew fields built from them"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    auto format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto source = [&](CLI::App* sub) {
        sub->add_option("--scenario", o.scenario, "Scenario file (JSON)");
        sub->add_option("--catalog", o.catalog, "Built-in scenario or tower name");
    };
    auto arithmetic = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "Ground field when no scenario is given")
            ->check(CLI::IsMember({"Q", "Qi", "HQ"}));
        sub->add_option("--precision", o.precision, "Series precision")->check(CLI::Range(1, 4096));
        source(sub);
        format(sub);
    };

    auto* eval = app.add_subcommand("eval", "Evaluate an expression and print its canonical form");
    eval->add_option("expr", o.exprs, "Expression")->required()->expected(1)->allow_extra_args(false);
    arithmetic(eval);

    auto* divmod = app.add_subcommand("divmod", "Euclidean division f = q*g + r in H[t,sigma]");
    divmod->add_option("operands", o.exprs, "Dividend f and divisor g")->required()->expected(2)->allow_extra_args(false);
    divmod->add_flag("--left", o.left, "Divide on the left: f = g*q + r");
    arithmetic(divmod);

    auto* invert = app.add_subcommand("invert", "Invert a fraction, series or extension element");
    invert->add_option("expr", o.exprs, "Expression")->required()->expected(1)->allow_extra_args(false);
    arithmetic(invert);

    auto* center = app.add_subcommand("center", "Central polynomials of H[t,sigma] up to a degree");
    center->add_option("--max-deg", o.max_deg, "Largest degree")->check(CLI::Range(0, kCenterDegreeCap));
    arithmetic(center);

    auto* extend = app.add_subcommand("extend", "Validate a scalar extension scenario");
    source(extend);
    format(extend);

    auto* tower = app.add_subcommand("tower", "Validate a tower and its restriction maps");
    source(tower);
    format(tower);

    auto* verify = app.add_subcommand("verify", "Run every invariant suite on a scenario");
    source(verify);
    format(verify);
    verify->add_option("--seed", o.seed, "Seed of the random suites");
    verify->add_option("--precision", o.precision, "Series precision")->check(CLI::Range(8, 4096));
    verify->add_option("--max-deg", o.max_deg, "Degree bound of the centre check")
        ->check(CLI::Range(0, kCenterDegreeCap));
    verify->add_option("--trials", o.trials, "Size of the random suites");

    auto* exporter = app.add_subcommand("export", "Print a built-in scenario as a scenario file");
    exporter->add_option("--catalog", o.catalog, "Built-in scenario or tower name")->required();

    auto* list = app.add_subcommand("catalog", "List the built-in scenarios and towers");
    format(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*eval) return cmd_eval(o);
        if (*divmod) return cmd_divmod(o);
        if (*invert) return cmd_invert(o);
        if (*center) return cmd_center(o);
        if (*extend) return cmd_extend(o);
        if (*tower) return cmd_tower(o);
        if (*verify) return cmd_verify(o);
        if (*exporter) return cmd_export(o);
        if (*list) return cmd_catalog(o);
    } catch (const SyntaxError& e) {
        return report_error(o, e, "SyntaxError", kExitParse);
    } catch (const Error& e) {
        return report_error(o, e, std::string(errc_name(e.code())), kExitValidation);
    } catch (const std::exception& e) {
        return report_error(o, e, "Internal", kExitInternal);
    }
    return kExitInternal;
}

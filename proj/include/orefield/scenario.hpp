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

#ifndef OREFIELD_SCENARIO_HPP
#define OREFIELD_SCENARIO_HPP

// Scenario files: JSON documents describing an extension or a tower.
// Ground elements and elements of k^<sigma>(t^n) are written as expression
// strings; polynomials in x are arrays of coefficients, constant first.
// Unknown keys are rejected before anything is computed.

#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "basefield.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "extend.hpp"
#include "ground.hpp"
#include "group.hpp"
#include "tower.hpp"

namespace orefield {

using Json = nlohmann::ordered_json;

/// Checks a scenario may request; an empty list means all that apply.
inline const std::vector<std::string>& check_groups() {
    static const std::vector<std::string> names{"validation", "ring",      "division", "fractions",
                                                "centre",     "laurent",   "extension", "tower"};
    return names;
}

struct ScenarioFile {
    std::optional<ExtensionSpec> extension;
    std::optional<TowerSpec> tower;
    std::vector<std::string> checks;

    const GroundField& field() const {
        return extension ? *extension->field : *tower->levels.at(0).field;
    }
    std::shared_ptr<const GroundField> field_ptr() const {
        return extension ? extension->field : tower->levels.at(0).field;
    }
    const std::string& name() const { return extension ? extension->name : tower->name; }
};

namespace detail {

[[noreturn]] inline void bad_scenario(const std::string& where, const std::string& msg) {
    throw Error(Errc::InvalidScenario, where + ": " + msg);
}

inline void allow_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed,
                       std::initializer_list<const char*> required = {}) {
    if (!obj.is_object()) bad_scenario(where, "expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& item : obj.items())
        if (!ok.count(item.key())) bad_scenario(where, "unknown key '" + item.key() + "'");
    for (const char* r : required)
        if (!obj.contains(r)) bad_scenario(where, std::string("missing key '") + r + "'");
}

inline std::string get_string(const Json& j, const std::string& where) {
    if (!j.is_string()) bad_scenario(where, "expected a string");
    return j.get<std::string>();
}

inline long get_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) bad_scenario(where, "expected an integer");
    return j.get<long>();
}

inline Rational get_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0) bad_scenario(where, "not a rational number");
        q.canonicalize();
        return q;
    }
    bad_scenario(where, "expected an integer or a rational string");
}

inline Json rational_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

inline std::shared_ptr<const GroundField> read_field(const Json& j) {
    const std::string where = "field";
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "Q") return fields::rationals();
        if (name == "Qi") return fields::gaussian_conjugation();
        if (name == "HQ") return fields::hamilton_rational();
        bad_scenario(where, "unknown field '" + name + "' (use Q, Qi, HQ or an object)");
    }
    allow_keys(j, where, {"kind", "modulus", "sigma", "alpha", "beta", "generator"}, {"kind"});
    FieldDescriptor d;
    const auto kind = get_string(j["kind"], where + ".kind");
    if (kind == "rationals")
        d.kind = FieldKind::Rationals;
    else if (kind == "number-field")
        d.kind = FieldKind::NumberField;
    else if (kind == "quaternions")
        d.kind = FieldKind::Quaternions;
    else
        bad_scenario(where + ".kind", "expected rationals, number-field or quaternions");
    if (j.contains("modulus")) {
        if (!j["modulus"].is_array()) bad_scenario(where + ".modulus", "expected an array");
        for (const auto& c : j["modulus"]) d.modulus.emplace_back(get_int(c, where + ".modulus"));
    }
    if (j.contains("sigma")) {
        if (!j["sigma"].is_array()) bad_scenario(where + ".sigma", "expected an array");
        for (const auto& c : j["sigma"]) d.sigma_image.push_back(get_rational(c, where + ".sigma"));
    }
    if (j.contains("alpha")) d.alpha = get_rational(j["alpha"], where + ".alpha");
    if (j.contains("beta")) d.beta = get_rational(j["beta"], where + ".beta");
    if (j.contains("generator")) d.generator = get_string(j["generator"], where + ".generator");
    return GroundField::make(d);
}

inline Json field_json(const std::shared_ptr<const GroundField>& field) {
    if (field == fields::rationals()) return "Q";
    if (field == fields::gaussian_conjugation()) return "Qi";
    if (field == fields::hamilton_rational()) return "HQ";
    const auto& d = field->descriptor();
    Json j;
    j["kind"] = d.kind == FieldKind::Rationals ? "rationals" : d.kind == FieldKind::NumberField ? "number-field" : "quaternions";
    if (!d.modulus.empty()) {
        j["modulus"] = Json::array();
        for (const auto& c : d.modulus) j["modulus"].push_back(rational_json(Rational(c)));
    }
    if (!d.sigma_image.empty()) {
        j["sigma"] = Json::array();
        for (const auto& c : d.sigma_image) j["sigma"].push_back(rational_json(c));
    }
    if (d.kind == FieldKind::Quaternions) {
        j["alpha"] = rational_json(d.alpha);
        j["beta"] = rational_json(d.beta);
    }
    if (d.kind != FieldKind::Rationals) j["generator"] = d.generator;
    return j;
}

inline Value read_expression(const Json& j, const GroundField& field, const std::string& where) {
    const auto text = get_string(j, where);
    ExprContext ctx;
    ctx.field = &field;
    return evaluate(text, ctx);
}

inline GroundElement read_ground(const Json& j, const GroundField& field, const std::string& where) {
    auto v = read_expression(j, field, where);
    const auto* f = std::get_if<SkewFraction>(&v);
    if (!f || f->num().degree() > 0 || f->den().degree() != 0) bad_scenario(where, "expected a constant");
    return f->num().is_zero() ? field.zero() : f->den().coeffs()[0].inverse() * f->num().coeffs()[0];
}

inline BaseElement read_base(const Json& j, const GroundField& field, const std::string& where) {
    auto v = read_expression(j, field, where);
    const auto* f = std::get_if<SkewFraction>(&v);
    if (!f) bad_scenario(where, "expected an element of H(t,sigma)");
    if (!in_base_field(*f)) throw Error(Errc::NotInBaseField, where + ": " + to_string(*f) + " is not in k^<sigma>(t^n)");
    return to_base(*f);
}

inline BasePolynomial read_polynomial(const Json& j, const GroundField& field, const std::string& where) {
    if (!j.is_array() || j.empty()) bad_scenario(where, "expected a nonempty array of coefficients");
    std::vector<BaseElement> c;
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(read_base(j[k], field, where + "[" + std::to_string(k) + "]"));
    return base_polynomial(field, std::move(c));
}

inline Json polynomial_json(const BasePolynomial& p) {
    Json a = Json::array();
    if (p.coeffs().empty()) a.push_back("0");
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

inline FiniteGroup read_group(const Json& j, const std::string& where) {
    allow_keys(j, where, {"elements", "table"}, {"elements", "table"});
    std::vector<std::string> names;
    if (!j["elements"].is_array()) bad_scenario(where + ".elements", "expected an array");
    for (const auto& n : j["elements"]) names.push_back(get_string(n, where + ".elements"));
    std::vector<std::vector<std::size_t>> table;
    if (!j["table"].is_array()) bad_scenario(where + ".table", "expected an array of rows");
    for (const auto& row : j["table"]) {
        if (!row.is_array()) bad_scenario(where + ".table", "expected an array of rows");
        std::vector<std::size_t> r;
        for (const auto& v : row) {
            const long x = get_int(v, where + ".table");
            if (x < 0) bad_scenario(where + ".table", "negative index");
            r.push_back(static_cast<std::size_t>(x));
        }
        table.push_back(std::move(r));
    }
    try {
        return FiniteGroup(std::move(names), std::move(table));
    } catch (const Error& e) {
        bad_scenario(where, e.what());
    }
}

inline Json group_json(const FiniteGroup& g) {
    Json j;
    j["elements"] = g.names();
    j["table"] = g.table();
    return j;
}

inline std::vector<std::size_t> read_index_map(const Json& j, const std::string& where) {
    if (!j.is_array()) bad_scenario(where, "expected an array of element indices");
    std::vector<std::size_t> out;
    for (const auto& v : j) {
        const long x = get_int(v, where);
        if (x < 0) bad_scenario(where, "negative index");
        out.push_back(static_cast<std::size_t>(x));
    }
    return out;
}

inline ExtensionSpec read_extension(const Json& j, std::shared_ptr<const GroundField> field, const std::string& where,
                                    bool top) {
    if (top)
        allow_keys(j, where, {"kind", "name", "field", "f", "rho", "group", "generators", "checks"},
                   {"name", "field", "f", "rho", "group", "generators"});
    else
        allow_keys(j, where, {"name", "f", "rho", "group", "generators"}, {"f", "rho", "group", "generators"});
    ExtensionSpec spec;
    spec.name = j.contains("name") ? get_string(j["name"], where + ".name") : where;
    spec.field = field;
    spec.f = read_polynomial(j["f"], *field, where + ".f");
    const Json& rho = j["rho"];
    allow_keys(rho, where + ".rho", {"seed", "series", "precision"});
    if (rho.contains("seed") == rho.contains("series"))
        bad_scenario(where + ".rho", "give exactly one of 'seed' and 'series'");
    if (rho.contains("precision")) {
        const long p = get_int(rho["precision"], where + ".rho.precision");
        if (p < 1 || p > 4096) bad_scenario(where + ".rho.precision", "out of range");
        spec.rho_precision = static_cast<int>(p);
    }
    if (rho.contains("seed")) spec.rho_seed = read_ground(rho["seed"], *field, where + ".rho.seed");
    if (rho.contains("series")) {
        auto v = read_expression(rho["series"], *field, where + ".rho.series");
        if (auto s = std::get_if<TwistedSeries>(&v))
            spec.rho_series = *s;
        else
            bad_scenario(where + ".rho.series", "expected a series such as '1 + t/2 + O(t^3)'");
    }
    spec.group = read_group(j["group"], where + ".group");
    if (!j["generators"].is_array()) bad_scenario(where + ".generators", "expected an array");
    for (std::size_t k = 0; k < j["generators"].size(); ++k) {
        const std::string w = where + ".generators[" + std::to_string(k) + "]";
        const Json& g = j["generators"][k];
        allow_keys(g, w, {"name", "image", "element"}, {"image", "element"});
        GaloisGenerator gen;
        gen.element = get_string(g["element"], w + ".element");
        gen.name = g.contains("name") ? get_string(g["name"], w + ".name") : gen.element;
        gen.image = read_polynomial(g["image"], *field, w + ".image");
        spec.generators.push_back(std::move(gen));
    }
    return spec;
}

inline Json extension_body(const ExtensionSpec& spec) {
    Json j;
    j["name"] = spec.name;
    j["f"] = polynomial_json(spec.f);
    Json rho;
    if (spec.rho_series)
        rho["series"] = to_string(*spec.rho_series);
    else if (spec.rho_seed)
        rho["seed"] = to_string(*spec.rho_seed);
    rho["precision"] = spec.rho_precision;
    j["rho"] = rho;
    j["group"] = group_json(spec.group);
    j["generators"] = Json::array();
    for (const auto& g : spec.generators) {
        Json gj;
        gj["name"] = g.name;
        gj["element"] = g.element;
        gj["image"] = polynomial_json(g.image);
        j["generators"].push_back(gj);
    }
    return j;
}

inline std::vector<std::string> read_checks(const Json& j) {
    if (!j.is_array()) bad_scenario("checks", "expected an array of names");
    std::vector<std::string> out;
    for (const auto& c : j) {
        auto name = get_string(c, "checks");
        const auto& known = check_groups();
        if (std::find(known.begin(), known.end(), name) == known.end()) bad_scenario("checks", "unknown check '" + name + "'");
        out.push_back(name);
    }
    return out;
}

/// 1-based line and column of a byte offset.
inline std::pair<std::size_t, std::size_t> position_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

/// Parses and schema-checks a scenario document.
inline ScenarioFile load_scenario(const std::string& text) {
    using namespace detail;
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = position_of(text, e.byte);
        throw SyntaxError("malformed scenario file", line, col);
    }
    if (!doc.is_object()) bad_scenario("scenario", "expected an object");
    const std::string kind = doc.contains("kind") ? get_string(doc["kind"], "kind") : "extension";
    ScenarioFile out;
    if (doc.contains("checks")) out.checks = read_checks(doc["checks"]);
    if (!doc.contains("field")) bad_scenario("scenario", "missing key 'field'");
    auto field = read_field(doc["field"]);
    if (kind == "extension") {
        out.extension = read_extension(doc, field, "scenario", true);
        return out;
    }
    if (kind != "tower") bad_scenario("kind", "expected extension or tower");
    allow_keys(doc, "scenario", {"kind", "name", "field", "levels", "embeddings", "epis", "eps", "checks"},
               {"name", "field", "levels", "eps"});
    TowerSpec t;
    t.name = get_string(doc["name"], "name");
    if (!doc["levels"].is_array() || doc["levels"].empty()) bad_scenario("levels", "expected a nonempty array");
    for (std::size_t n = 0; n < doc["levels"].size(); ++n)
        t.levels.push_back(read_extension(doc["levels"][n], field, "levels[" + std::to_string(n) + "]", false));
    if (doc.contains("embeddings")) {
        if (!doc["embeddings"].is_array()) bad_scenario("embeddings", "expected an array");
        for (std::size_t n = 0; n < doc["embeddings"].size(); ++n) {
            const Json& e = doc["embeddings"][n];
            if (e.is_null())
                t.embeddings.emplace_back();
            else
                t.embeddings.push_back(read_polynomial(e, *field, "embeddings[" + std::to_string(n) + "]"));
        }
    }
    if (doc.contains("epis")) {
        if (!doc["epis"].is_array()) bad_scenario("epis", "expected an array");
        for (std::size_t n = 0; n < doc["epis"].size(); ++n)
            t.epis.push_back(read_index_map(doc["epis"][n], "epis[" + std::to_string(n) + "]"));
    }
    if (!doc["eps"].is_array()) bad_scenario("eps", "expected an array");
    for (std::size_t n = 0; n < doc["eps"].size(); ++n)
        t.eps.push_back(read_index_map(doc["eps"][n], "eps[" + std::to_string(n) + "]"));
    out.tower = std::move(t);
    return out;
}

inline ScenarioFile read_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read scenario file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_scenario(ss.str());
}

inline Json export_extension(const ExtensionSpec& spec) {
    Json j;
    j["kind"] = "extension";
    j["field"] = detail::field_json(spec.field);
    const Json body = detail::extension_body(spec);
    for (const auto& item : body.items()) j[item.key()] = item.value();
    return j;
}

inline Json export_tower(const TowerSpec& spec) {
    Json j;
    j["kind"] = "tower";
    j["name"] = spec.name;
    j["field"] = detail::field_json(spec.levels.at(0).field);
    j["levels"] = Json::array();
    for (const auto& l : spec.levels) j["levels"].push_back(detail::extension_body(l));
    j["embeddings"] = Json::array();
    for (const auto& e : spec.embeddings) j["embeddings"].push_back(e ? detail::polynomial_json(*e) : Json());
    j["epis"] = spec.epis;
    j["eps"] = spec.eps;
    return j;
}

}  // namespace orefield

#endif  // OREFIELD_SCENARIO_HPP

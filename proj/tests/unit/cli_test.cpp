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

// Expression parser, scenario loader and the orefield binary.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <orefield.hpp>

namespace orefield {
namespace {

namespace fs = std::filesystem;

template <class F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::InvalidArgument;
}

ExprContext qi_ctx() { return {fields::gaussian_conjugation().get(), nullptr, 16}; }

std::string eval_qi(const std::string& s) { return canonicalize(s, qi_ctx()); }

// ---------------------------------------------------------------- parser

TEST(ExprTest, TwistedProduct) {
    EXPECT_EQ(eval_qi("t*i"), "-[i]*t");
    EXPECT_EQ(eval_qi("t*i + i*t"), "0");
    EXPECT_EQ(eval_qi("t*[i]"), eval_qi("-[i]*t"));
}

TEST(ExprTest, GroundForms) {
    EXPECT_EQ(eval_qi("[1 + i]"), "[1 + i]");
    EXPECT_EQ(eval_qi("[1,1]"), "[1 + i]");
    EXPECT_EQ(eval_qi("[1 - 2*i]*t"), "[1 - 2*i]*t");
    EXPECT_EQ(eval_qi("[1/2]"), "[1/2]");
}

TEST(ExprTest, Inverses) {
    EXPECT_EQ(eval_qi("(1-t)^-1"), eval_qi("(1-t)^(-1)"));
    EXPECT_EQ(eval_qi("(t+i)^-1 * (t+i)"), "[1]");
    EXPECT_EQ(eval_qi("(t+i) / (t+i)"), "[1]");
    EXPECT_EQ(code_of([] { eval_qi("0^-1"); }), Errc::DivisionByZero);
}

TEST(ExprTest, SigmaAndSeries) {
    EXPECT_EQ(eval_qi("sigma(i)"), eval_qi("-i"));
    EXPECT_EQ(eval_qi("sigma(i, 2)"), eval_qi("i"));
    auto s = eval_qi("(1 - t)^-1 + O(t^4)");
    EXPECT_EQ(s, eval_qi("1 + t + t^2 + t^3 + O(t^4)"));
    EXPECT_EQ(eval_qi("t^-1 * t + O(t^3)"), eval_qi("1 + O(t^3)"));
}

TEST(ExprTest, SyntaxErrorPositions) {
    auto column = [](const std::string& s) -> std::string {
        try {
            parse_expr(s);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::SyntaxError);
            return e.what();
        }
        return "no error";
    };
    EXPECT_NE(column("t*(").find("column 3"), std::string::npos);
    EXPECT_NE(column("t + + ").find("column"), std::string::npos);
    EXPECT_NE(column("[1 + i").find("column"), std::string::npos);
    EXPECT_EQ(code_of([] { eval_qi("t + q"); }), Errc::SyntaxError);
}

TEST(ExprTest, NeedsScenarioForX) {
    EXPECT_EQ(code_of([] { eval_qi("x + 1"); }), Errc::SyntaxError);
    auto sc = ExtensionScenario::build_or_throw(catalog::extension_spec("qi-quadratic"));
    ExprContext ctx{fields::gaussian_conjugation().get(), sc.get(), 16};
    EXPECT_EQ(canonicalize("x * x^-1", ctx), canonicalize("1", ctx));
}

// Printed forms parse back to the same value.
TEST(ExprTest, RoundTripFractions) {
    for (auto field : {fields::gaussian_conjugation(), fields::hamilton_rational(), fields::rationals()}) {
        Rng rng(11);
        ExprContext ctx{field.get(), nullptr, 16};
        for (int k = 0; k < 60; ++k) {
            auto x = random_fraction(rng, *field, 3);
            const auto text = to_string(x);
            auto back = evaluate(text, ctx);
            ASSERT_TRUE(std::holds_alternative<SkewFraction>(back)) << text;
            EXPECT_TRUE(std::get<SkewFraction>(back) == x) << text;
            EXPECT_EQ(to_string(back), text);
        }
    }
}

TEST(ExprTest, RoundTripSeries) {
    const auto& field = *fields::gaussian_conjugation();
    Rng rng(12);
    ExprContext ctx{&field, nullptr, 16};
    for (int k = 0; k < 30; ++k) {
        auto s = ls_embed(random_nonzero_fraction(rng, field, 2), 12);
        const auto text = to_string(s);
        EXPECT_EQ(canonicalize(text, ctx), text);
    }
}

TEST(ExprTest, RoundTripCatalogElements) {
    for (const auto& name : catalog::extension_names()) {
        auto sc = ExtensionScenario::build_or_throw(catalog::extension_spec(name));
        ExprContext ctx{&sc->field(), sc.get(), 16};
        Rng rng(13);
        for (int k = 0; k < 5; ++k) {
            auto a = suites::detail::random_tensor(rng, *sc, 2, false);
            const auto text = to_string(a);
            auto back = evaluate(text, ctx);
            // a scalar prints as a plain fraction
            auto elem = std::holds_alternative<SkewFraction>(back) ? sc->scalar(std::get<SkewFraction>(back))
                                                                   : std::get<TensorElement>(back);
            EXPECT_TRUE(elem == a) << text;
            EXPECT_EQ(to_string(back), text);
        }
    }
}

// ---------------------------------------------------------------- scenarios

TEST(ScenarioTest, ExportRoundTrip) {
    for (const auto& name : catalog::extension_names()) {
        const auto text = export_extension(catalog::extension_spec(name)).dump(2);
        auto f = load_scenario(text);
        ASSERT_TRUE(f.extension.has_value());
        EXPECT_EQ(export_extension(*f.extension).dump(2), text);
    }
    for (const auto& name : catalog::tower_names()) {
        const auto text = export_tower(catalog::tower_spec(name)).dump(2);
        auto f = load_scenario(text);
        ASSERT_TRUE(f.tower.has_value());
        EXPECT_EQ(export_tower(*f.tower).dump(2), text);
    }
}

TEST(ScenarioTest, Rejections) {
    EXPECT_EQ(code_of([] { load_scenario(R"({"kind": "extension", "field": "Qi", "bogus": 1})"); }),
              Errc::InvalidScenario);
    EXPECT_EQ(code_of([] { load_scenario(R"({"kind": "ring"})"); }), Errc::InvalidScenario);
    EXPECT_EQ(code_of([] { load_scenario("{\n  \"kind\": \n}"); }), Errc::SyntaxError);
    try {
        load_scenario("{\n  \"kind\": \n}");
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    auto doc = export_extension(catalog::extension_spec("qi-quadratic"));
    doc["checks"] = Json::array({"ring", "astrology"});
    EXPECT_EQ(code_of([&] { load_scenario(doc.dump()); }), Errc::InvalidScenario);
    doc["checks"] = Json::array({"ring"});
    EXPECT_EQ(load_scenario(doc.dump()).checks, std::vector<std::string>{"ring"});
}

// ---------------------------------------------------------------- binary

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    auto dir = fs::temp_directory_path() / ("orefield-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

Run run(const std::vector<std::string>& args) {
    static int counter = 0;
    const auto dir = scratch();
    const auto out = dir / ("out" + std::to_string(counter));
    const auto err = dir / ("err" + std::to_string(counter++));
    std::string cmd = quote(OREFIELD_CLI_PATH);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " >" + quote(out.string()) + " 2>" + quote(err.string());
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string scenario(const std::string& name) { return std::string(OREFIELD_SCENARIO_DIR) + "/" + name + ".json"; }

TEST(CliTest, Eval) {
    auto r = run({"eval", "t*i"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-[i]*t\n");
    r = run({"eval", "[1,1]*t", "--field", "Qi"});
    EXPECT_EQ(r.out, "[1 + i]*t\n");
    r = run({"eval", "t*i", "--format", "json"});
    auto doc = Json::parse(r.out);
    EXPECT_EQ(doc["value"], "-[i]*t");
}

TEST(CliTest, SyntaxErrorExitCode) {
    auto r = run({"eval", "t*("});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("column 3"), std::string::npos) << r.err;
    r = run({"eval", "t*(", "--format", "json"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(Json::parse(r.out)["error"], "SyntaxError");
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliTest, Divmod) {
    auto r = run({"divmod", "t^2 + [i]", "t - [i]", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = Json::parse(r.out);
    EXPECT_EQ(doc["quotient"], "-[i] + t");
    EXPECT_EQ(doc["remainder"], "[1 + i]");
    EXPECT_EQ(doc["identity"], true);
    r = run({"divmod", "t^2 + [i]", "0"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("DivisionByZero"), std::string::npos);
}

TEST(CliTest, InvertAndCentre) {
    auto r = run({"invert", "t + [i]"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("([i] + t)^-1"), std::string::npos) << r.out;
    r = run({"center", "--field", "Qi", "--max-deg", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[1]\nt^2\nt^4\nt^6\nt^8\n");
}

TEST(CliTest, ExtendReportsBadRho) {
    auto r = run({"extend", "--scenario", scenario("hq-quadratic-bad-rho"), "--format", "json"});
    EXPECT_EQ(r.code, 3);
    auto doc = Json::parse(r.out);
    EXPECT_FALSE(doc["passed"].get<bool>());
    bool seen = false;
    for (const auto& c : doc["checks"]) {
        ASSERT_TRUE(c.contains("check-name") && c.contains("status") && c.contains("details") && c.contains("paper-ref"));
        if (c["check-name"] == "rho-root") {
            seen = true;
            EXPECT_EQ(c["status"], "fail");
        }
    }
    EXPECT_TRUE(seen);
}

TEST(CliTest, ScenarioFilesValidate) {
    for (const auto& name : catalog::extension_names()) {
        auto r = run({"extend", "--scenario", scenario(name)});
        EXPECT_EQ(r.code, 0) << name << "\n" << r.out << r.err;
    }
    auto r = run({"tower", "--catalog", "T1"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(CliTest, ExportMatchesShippedFiles) {
    for (const auto& name : {"hq-quadratic", "qi-quadratic", "hq-biquadratic", "shanks-cubic", "T1", "T2", "T3"}) {
        auto r = run({"export", "--catalog", name});
        ASSERT_EQ(r.code, 0);
        EXPECT_EQ(r.out, slurp(scenario(name))) << name;
        const auto file = scratch() / (std::string(name) + ".json");
        std::ofstream(file) << r.out;
        EXPECT_EQ(run({"export", "--scenario", file.string()}).code, 2);  // export needs --catalog
    }
}

TEST(CliTest, InvalidScenarioFile) {
    const auto file = scratch() / "bogus.json";
    std::ofstream(file) << R"({"kind": "extension", "field": "Qi", "bogus": 1})";
    auto r = run({"extend", "--scenario", file.string()});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("bogus"), std::string::npos);
    EXPECT_EQ(run({"extend", "--scenario", (scratch() / "missing.json").string()}).code, 3);
    EXPECT_EQ(run({"extend", "--catalog", "nonesuch"}).code, 3);
}

TEST(CliTest, VerifyIsDeterministic) {
    const std::vector<std::string> args{"verify", "--catalog", "qi-quadratic", "--seed", "3", "--trials", "10",
                                        "--format", "json"};
    auto a = run(args);
    auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.out << a.err;
    EXPECT_EQ(a.out, b.out);
    auto doc = Json::parse(a.out);
    EXPECT_EQ(doc["command"], "verify");
    EXPECT_TRUE(doc["passed"].get<bool>());
    auto c = run({"verify", "--catalog", "qi-quadratic", "--seed", "4", "--trials", "10", "--format", "json"});
    EXPECT_EQ(c.code, 0);
}

}  // namespace
}  // namespace orefield

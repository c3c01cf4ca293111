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

#include <gtest/gtest.h>

#include <orefield/catalog.hpp>
#include <orefield/extend.hpp>
#include <orefield/random.hpp>
#include <orefield/suites.hpp>

namespace orefield {
namespace {

template <class F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::InvalidArgument;
}

std::shared_ptr<const ExtensionScenario> hq_quadratic() {
    static const auto sc = ExtensionScenario::build_or_throw(catalog::extension_spec("hq-quadratic"));
    return sc;
}

const Check* find_check(const std::vector<Check>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

TEST(ExtendTest, CatalogScenariosValidate) {
    for (const auto& name : catalog::extension_names()) {
        auto built = ExtensionScenario::build(catalog::extension_spec(name));
        EXPECT_TRUE(built.ok()) << name;
        for (const auto& c : built.checks) EXPECT_EQ(c.status, Status::Pass) << name << ": " << c.name << " " << c.details;
    }
}

TEST(ExtendTest, QuaternionQuadraticDefiningPolynomial) {
    auto sc = hq_quadratic();
    const auto& field = sc->field();
    auto one = BaseElement::from_rational(field, 1);
    auto zero = BaseElement::from_rational(field, 0);
    EXPECT_EQ(sc->f(), base_polynomial(field, {-(one + BaseElement::T(field)), zero, one}));
    EXPECT_EQ(sc->degree(), 2U);
    EXPECT_EQ(sc->group().order(), 2U);
}

TEST(ExtendTest, ProductOfConjugateLinearFactors) {
    auto sc = hq_quadratic();
    const auto& field = sc->field();
    auto j = SkewFraction::constant(field.named_elements().at("j"));
    auto x = sc->x();
    auto lhs = (x + sc->scalar(j)) * (x - sc->scalar(j));
    auto t = SkewFraction::t(field);
    auto two = SkewFraction::constant(field.from_rational(2));
    EXPECT_EQ(lhs, sc->scalar(t + two));
    EXPECT_TRUE(lhs.coords()[1].is_zero());
}

TEST(ExtendTest, XSquaredReducesModF) {
    auto sc = hq_quadratic();
    const auto& field = sc->field();
    auto x = sc->x();
    EXPECT_EQ(x * x, sc->scalar(SkewFraction::one(field) + SkewFraction::t(field)));
    Rng rng(11);
    for (int k = 0; k < 10; ++k) {
        auto a = sc->element({random_fraction(rng, field, 2), random_fraction(rng, field, 2)});
        EXPECT_EQ(a * sc->one(), a);
        EXPECT_EQ(sc->one() * a, a);
    }
}

TEST(ExtendTest, InverseOfX) {
    auto sc = hq_quadratic();
    const auto& field = sc->field();
    auto inv = sc->x().inverse();
    auto one_plus_t = SkewFraction::one(field) + SkewFraction::t(field);
    EXPECT_TRUE(inv.coords()[0].is_zero());
    EXPECT_EQ(inv.coords()[1], one_plus_t.inverse());
    EXPECT_TRUE((sc->x() * inv).is_one());
}

TEST(ExtendTest, InverseOfXPlusJ) {
    auto sc = hq_quadratic();
    const auto& field = sc->field();
    auto j = SkewFraction::constant(field.named_elements().at("j"));
    auto a = sc->x() + sc->scalar(j);
    auto inv = a.inverse();
    auto s = (SkewFraction::t(field) + SkewFraction::constant(field.from_rational(2))).inverse();
    auto expected = sc->scalar(s) * (sc->x() - sc->scalar(j));
    EXPECT_EQ(inv, expected);
    EXPECT_EQ(inv.coords()[0], s * (-j));
    EXPECT_EQ(inv.coords()[1], s);
}

TEST(ExtendTest, ScalarInverse) {
    auto sc = hq_quadratic();
    const auto& field = sc->field();
    Rng rng(12);
    for (int k = 0; k < 10; ++k) {
        auto h = random_nonzero_fraction(rng, field, 2);
        EXPECT_EQ(sc->scalar(h).inverse(), sc->scalar(h.inverse()));
    }
    EXPECT_EQ(code_of([&] { sc->scalar(SkewFraction::zero(field)).inverse(); }), Errc::DivisionByZero);
}

TEST(ExtendTest, RandomInversionsRoundTrip) {
    for (const auto& name : {"qi-quadratic", "shanks-cubic"}) {
        auto sc = ExtensionScenario::build_or_throw(catalog::extension_spec(name));
        Rng rng(13);
        for (int k = 0; k < 25; ++k) {
            std::vector<SkewFraction> c;
            for (std::size_t i = 0; i < sc->degree(); ++i) c.push_back(random_fraction(rng, sc->field(), 2));
            auto a = sc->element(std::move(c));
            if (a.is_zero()) continue;
            auto b = a.inverse();
            EXPECT_TRUE((a * b).is_one()) << name;
            EXPECT_TRUE((b * a).is_one()) << name;
        }
    }
}

// The product through central coordinates against plain coordinate
// multiplication folded with f.
TEST(ExtendTest, ProductMatchesDirectMultiplication) {
    for (const auto& name : catalog::extension_names()) {
        auto sc = ExtensionScenario::build_or_throw(catalog::extension_spec(name));
        Rng rng(21);
        for (int k = 0; k < 6; ++k) {
            auto a = suites::detail::random_tensor(rng, *sc, 2, false);
            auto b = suites::detail::random_tensor(rng, *sc, 2, false);
            EXPECT_EQ(a * b, multiply_direct(a, b)) << name;
        }
        auto h = sc->scalar(SkewFraction::t(sc->field()).inverse());
        EXPECT_EQ(h * sc->x(), multiply_direct(h, sc->x())) << name;
    }
}

TEST(ExtendTest, QuarticInverse) {
    auto sc = ExtensionScenario::build_or_throw(catalog::extension_spec("hq-biquadratic"));
    Rng rng(5);
    auto a = suites::detail::random_tensor(rng, *sc, 1, true);
    auto b = a.inverse();
    EXPECT_TRUE((a * b).is_one());
    EXPECT_TRUE((b * a).is_one());
}

TEST(ExtendTest, GaloisNegatesX) {
    auto sc = hq_quadratic();
    const auto& field = sc->field();
    const std::size_t g = sc->group().index("a");
    Rng rng(14);
    for (int k = 0; k < 10; ++k) {
        auto a = random_fraction(rng, field, 2);
        auto b = random_fraction(rng, field, 2);
        auto e = sc->element({a, b});
        EXPECT_EQ(e.galois_apply(g), sc->element({a, -b}));
        EXPECT_EQ(e.galois_apply(sc->group().identity()), e);
    }
    EXPECT_EQ(code_of([&] { sc->x().galois_apply(7); }), Errc::UnknownGroupElement);
}

TEST(ExtendTest, GaloisActionComposes) {
    auto sc = ExtensionScenario::build_or_throw(catalog::extension_spec("hq-biquadratic"));
    const auto& group = sc->group();
    auto xi = sc->one();
    for (std::size_t i = 0; i < sc->degree(); ++i) {
        for (std::size_t g = 0; g < group.order(); ++g)
            for (std::size_t h = 0; h < group.order(); ++h)
                EXPECT_EQ(xi.galois_apply(h).galois_apply(g), xi.galois_apply(group.multiply(g, h)));
        xi = xi * sc->x();
    }
}

TEST(ExtendTest, ShanksImagesCycle) {
    auto sc = ExtensionScenario::build_or_throw(catalog::extension_spec("shanks-cubic"));
    const auto& g = sc->images()[sc->group().index("g")];
    EXPECT_TRUE(compose_mod(sc->f(), g, sc->f()).is_zero());
    auto g2 = compose_mod(g, g, sc->f());
    auto g3 = compose_mod(g, g2, sc->f());
    EXPECT_FALSE(g2 == x_power(sc->field(), 1));
    EXPECT_EQ(g3, x_power(sc->field(), 1));
    // The image sends the seed-0 root to the seed-1 root.
    auto moved = evaluate(g, sc->rho());
    auto other = ls_newton_root(sc->f(), sc->field().one(), 40);
    EXPECT_TRUE(agree(moved, other));
}

TEST(ExtendTest, FixedSpaces) {
    auto sc = hq_quadratic();
    auto full = sc->fixed_space({0, 1});
    ASSERT_EQ(full.size(), 1U);
    EXPECT_TRUE(sc->is_scalar_vector(full[0]));
    EXPECT_EQ(sc->fixed_space({sc->group().identity()}).size(), 2U);
    EXPECT_EQ(sc->fixed_space({}).size(), 2U);

    auto bi = ExtensionScenario::build_or_throw(catalog::extension_spec("hq-biquadratic"));
    EXPECT_EQ(bi->fixed_space({bi->group().index("a")}).size(), 2U);
    EXPECT_EQ(bi->fixed_space({bi->group().index("b")}).size(), 2U);
    EXPECT_EQ(bi->fixed_space({bi->group().index("a"), bi->group().index("b")}).size(), 1U);
}

TEST(ExtendTest, TauOfBasisElements) {
    auto sc = hq_quadratic();
    EXPECT_TRUE(agree(sc->x().tau(48), sc->rho()));
    EXPECT_EQ(sc->x().tau(48).precision(), 48);
    EXPECT_TRUE(agree(sc->one().tau(48), TwistedSeries::one(sc->field(), 48)));
    EXPECT_EQ(code_of([&] { sc->x().tau(500); }), Errc::InsufficientPrecision);
}

TEST(ExtendTest, TauIsMultiplicative) {
    auto sc = hq_quadratic();
    Rng rng(15);
    for (int k = 0; k < 10; ++k) {
        std::vector<SkewFraction> ca, cb;
        for (int i = 0; i < 2; ++i) {
            ca.push_back(SkewFraction::from_polynomial(rng.polynomial(sc->field(), 3)));
            cb.push_back(SkewFraction::from_polynomial(rng.polynomial(sc->field(), 3)));
        }
        auto a = sc->element(ca), b = sc->element(cb);
        EXPECT_TRUE(agree((a * b).tau(48), a.tau(48) * b.tau(48)));
    }
}

TEST(ExtendTest, DecompositionOfITimesT) {
    auto qi = fields::gaussian_conjugation();
    auto i = qi->element({0, 1});
    std::size_t islot = 99;
    for (std::size_t j = 0; j < qi->h_basis().size(); ++j)
        if (qi->h_basis()[j] == i) islot = j;
    ASSERT_LT(islot, qi->h_basis().size());
    // z = 1 + 3 t^2 - t^6/2 lies in Q[[t^2]].
    std::vector<GroundElement> zc(20, qi->zero());
    zc[0] = qi->one();
    zc[2] = qi->from_rational(3);
    zc[6] = qi->from_rational(Rational(-1, 2));
    TwistedSeries z(*qi, 0, zc, 20);
    auto h = SkewFraction::from_polynomial(SkewPolynomial::monomial(i, 1));
    auto dec = canonical_decomposition({{h, z}}, *qi, 20);
    EXPECT_EQ(dec.n, 2U);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t j = 0; j < dec.basis_size; ++j) {
            if (k == 1 && j == islot)
                EXPECT_TRUE(agree(dec.at(k, j), z));
            else
                EXPECT_TRUE(dec.at(k, j).is_zero()) << k << "," << j;
        }
    auto [lhs, rhs] = decomposition_sides({{h, z}}, dec, *qi, 20);
    EXPECT_TRUE(agree(lhs, rhs));
}

TEST(ExtendTest, DecompositionOfInvariantConstant) {
    auto qi = fields::gaussian_conjugation();
    std::size_t unit = 99;
    for (std::size_t j = 0; j < qi->h_basis().size(); ++j)
        if (qi->h_basis()[j] == qi->one()) unit = j;
    ASSERT_LT(unit, qi->h_basis().size());
    TwistedSeries z(*qi, 0, {qi->one(), qi->zero(), qi->from_rational(2)}, 12);
    auto h = SkewFraction::constant(qi->from_rational(3));
    auto dec = canonical_decomposition({{h, z}}, *qi, 12);
    EXPECT_TRUE(agree(dec.at(0, unit), qi->from_rational(3) * z));
    EXPECT_TRUE(dec.at(1, unit).is_zero());
}

TEST(ExtendTest, CancellingTermsGiveZeroTable) {
    auto qi = fields::gaussian_conjugation();
    Rng rng(16);
    auto t2 = SkewPolynomial::t(*qi, 2);
    for (int k = 0; k < 5; ++k) {
        auto h = rng.nonzero_polynomial(*qi, 3);
        TwistedSeries w(*qi, 0, {qi->from_rational(1), qi->zero(), qi->from_rational(rng.rational())}, 24);
        std::vector<std::pair<SkewFraction, TwistedSeries>> terms{
            {SkewFraction::from_polynomial(h * t2), w},
            {SkewFraction::from_polynomial(-h), TwistedSeries::from_polynomial(t2, 24) * w}};
        auto dec = canonical_decomposition(terms, *qi, 24);
        EXPECT_TRUE(dec.all_zero());
        auto [lhs, rhs] = decomposition_sides(terms, dec, *qi, 24);
        EXPECT_TRUE(lhs.is_zero());
        EXPECT_TRUE(rhs.is_zero());
    }
}

TEST(ExtendTest, DecompositionRejectsBadInput) {
    auto qi = fields::gaussian_conjugation();
    auto i = qi->element({0, 1});
    TwistedSeries z(*qi, 0, {qi->one()}, 8);
    auto inv_t = SkewFraction::t(*qi, -1);
    EXPECT_EQ(code_of([&] { canonical_decomposition({{inv_t, z}}, *qi, 8); }), Errc::NotPolynomial);
    TwistedSeries bad(*qi, 0, {i}, 8);
    EXPECT_EQ(code_of([&] { canonical_decomposition({{SkewFraction::one(*qi), bad}}, *qi, 8); }),
              Errc::NotInvariantSeries);
    TwistedSeries odd(*qi, 1, {qi->one()}, 8);
    EXPECT_EQ(code_of([&] { canonical_decomposition({{SkewFraction::one(*qi), odd}}, *qi, 8); }),
              Errc::NotInvariantSeries);
}

TEST(ExtendTest, CorruptedRhoFailsRootCheck) {
    auto spec = catalog::extension_spec("hq-quadratic");
    const auto& field = *spec.field;
    auto rho = ls_newton_root(spec.f, *spec.rho_seed, 64);
    spec.rho_series = rho + TwistedSeries::monomial(field.one(), 5, 64);
    auto built = ExtensionScenario::build(spec);
    EXPECT_FALSE(built.ok());
    const Check* c = find_check(built.checks, "rho-root");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::Fail);
    EXPECT_NE(c->details.find("t^5"), std::string::npos) << c->details;
    EXPECT_EQ(code_of([&] { ExtensionScenario::build_or_throw(spec); }), Errc::ValidationFailed);
}

TEST(ExtendTest, ReducibleFFailsIrreducibility) {
    auto field = fields::rationals();
    auto one = BaseElement::from_rational(*field, 1);
    auto zero = BaseElement::from_rational(*field, 0);
    auto T = BaseElement::T(*field);
    ExtensionSpec spec;
    spec.name = "square";
    spec.field = field;
    // x^2 - (1 + T)^2 splits.
    spec.f = base_polynomial(*field, {-((one + T) * (one + T)), zero, one});
    spec.rho_seed = field->one();
    spec.group = FiniteGroup::cyclic(2, "g");
    spec.generators.push_back({"g", base_polynomial(*field, {zero, -one}), "g"});
    auto built = ExtensionScenario::build(spec);
    EXPECT_FALSE(built.ok());
    const Check* c = find_check(built.checks, "f-irreducible");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::Fail);
}

TEST(ExtendTest, WrongGeneratorImageFails) {
    auto spec = catalog::extension_spec("hq-quadratic");
    const auto& field = *spec.field;
    spec.generators[0].image = base_polynomial(field, {BaseElement::from_rational(field, 0), BaseElement::from_rational(field, 2)});
    auto built = ExtensionScenario::build(spec);
    const Check* c = find_check(built.checks, "generator-roots");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::Fail);
    EXPECT_FALSE(built.ok());
}

TEST(ExtendTest, WrongGroupOrderFails) {
    auto spec = catalog::extension_spec("hq-quadratic");
    spec.group = FiniteGroup::cyclic(3, "a");
    auto built = ExtensionScenario::build(spec);
    const Check* c = find_check(built.checks, "group-order");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::Fail);
}

TEST(ExtendTest, MixedScenariosRejected) {
    auto a = hq_quadratic();
    auto b = ExtensionScenario::build_or_throw(catalog::extension_spec("hq-quadratic"));
    EXPECT_EQ(code_of([&] { a->x() * b->x(); }), Errc::MixedScenarios);
    EXPECT_EQ(code_of([&] { a->x() + b->x(); }), Errc::MixedScenarios);
}

TEST(ExtendTest, MatchRootsFindsNegation) {
    auto field = fields::rationals();
    auto one = BaseElement::from_rational(*field, 1);
    auto zero = BaseElement::from_rational(*field, 0);
    auto f = base_polynomial(*field, {-(one + BaseElement::T(*field)), zero, one});
    auto p = match_roots(f, field->one(), f, field->from_rational(-1));
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(*p, base_polynomial(*field, {zero, -one}));
}

TEST(ExtendTest, SuiteOnQuadraticScenario) {
    auto sc = ExtensionScenario::build_or_throw(catalog::extension_spec("qi-quadratic"));
    auto checks = suites::extension(*sc, "qi-quadratic", 3, 30, 5, 5, 48);
    for (const auto& c : checks) EXPECT_EQ(c.status, Status::Pass) << c.name << ": " << c.details;
}

}  // namespace
}  // namespace orefield

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

#include <map>

#include <orefield/catalog.hpp>
#include <orefield/irreducible.hpp>
#include <orefield/tower.hpp>

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

std::vector<Integer> ints(std::initializer_list<long> c) {
    std::vector<Integer> out;
    for (long v : c) out.emplace_back(v);
    return out;
}

std::shared_ptr<const TowerScenario> tower(const std::string& name) {
    static std::map<std::string, std::shared_ptr<const TowerScenario>> cache;
    auto& slot = cache[name];
    if (!slot) slot = TowerScenario::build(catalog::tower_spec(name));
    return slot;
}

TEST(IrreducibleTest, SmallCases) {
    EXPECT_TRUE(is_irreducible_over_q(ints({-2, 0, 1})));
    EXPECT_FALSE(is_irreducible_over_q(ints({-4, 0, 1})));
    EXPECT_TRUE(is_irreducible_over_q(ints({1, 0, 0, 0, 1})));
    // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
    EXPECT_FALSE(is_irreducible_over_q(ints({4, 0, 0, 0, 1})));
    EXPECT_TRUE(is_irreducible_over_q(ints({1, 0, -10, 0, 1})));
    EXPECT_TRUE(is_irreducible_over_q(ints({1, 0, 0, 1, 0, 0, 1})));
    // (x^2 + 1)(x^3 + x + 1)
    EXPECT_FALSE(is_irreducible_over_q(ints({1, 1, 2, 1, 0, 1})));
    EXPECT_FALSE(is_irreducible_over_q(ints({0, 1, 1})));
    EXPECT_FALSE(is_irreducible_over_q(ints({1, 2, 1})));
    EXPECT_TRUE(is_irreducible_over_q(ints({3, 6})));
    EXPECT_TRUE(is_irreducible_over_q(ints({-1, -1, 0, 1})));
}

TEST(IrreducibleTest, DegreeEight) {
    // Minimal polynomial of sqrt2 + sqrt3 + sqrt5.
    EXPECT_TRUE(is_irreducible_over_q(ints({576, 0, -960, 0, 352, 0, -40, 0, 1})));
    // (x^4 - 10x^2 + 1)(x^4 + 1)
    EXPECT_FALSE(is_irreducible_over_q(ints({1, 0, -10, 0, 2, 0, -10, 0, 1})));
    // x^8 - 16 = (x^4 - 4)(x^4 + 4)
    EXPECT_FALSE(is_irreducible_over_q(ints({-16, 0, 0, 0, 0, 0, 0, 0, 1})));
}

TEST(IrreducibleTest, NonMonicAndContent) {
    // 6x^2 + 5x + 1 = (2x + 1)(3x + 1)
    EXPECT_FALSE(is_irreducible_over_q(ints({1, 5, 6})));
    EXPECT_TRUE(is_irreducible_over_q(ints({2, 0, 4})));
    EXPECT_TRUE(is_irreducible_over_q(ints({-3, 0, 0, 4})));
}

TEST(IrreducibleTest, Limits) {
    EXPECT_EQ(code_of([] { is_irreducible_over_q(ints({1, 0, 0, 0, 0, 0, 0, 0, 0, 1})); }), Errc::CapExceeded);
    EXPECT_EQ(code_of([] { is_irreducible_over_q(ints({5})); }), Errc::InvalidArgument);
}

TEST(TowerTest, CatalogTowersBuild) {
    for (const auto& name : catalog::tower_names()) {
        auto t = tower(name);
        for (const auto& c : t->validation_checks()) EXPECT_EQ(c.status, Status::Pass) << name << ": " << c.name;
    }
}

TEST(TowerTest, MultiquadraticLedger) {
    auto t = tower("T1");
    auto rows = t->degree_ledger();
    ASSERT_EQ(rows.size(), 2U);
    for (std::size_t n = 0; n < 2; ++n) {
        EXPECT_EQ(rows[n].level, n + 1);
        EXPECT_EQ(rows[n].dimension, std::size_t{2} << n);
        EXPECT_EQ(rows[n].group_order, std::size_t{2} << n);
        EXPECT_TRUE(rows[n].degree_matches);
        EXPECT_TRUE(rows[n].fixed_space_trivial);
    }
}

TEST(TowerTest, CompatibilityHolds) {
    for (const auto& name : catalog::tower_names()) {
        auto t = tower(name);
        for (const auto& c : t->check_compatibility()) EXPECT_EQ(c.status, Status::Pass) << name << ": " << c.name;
    }
    auto t1 = tower("T1");
    EXPECT_EQ(t1->check_compatibility().size(), 4U);
}

TEST(TowerTest, RestrictionFollowsEpi) {
    auto t = tower("T1");
    for (std::size_t g = 0; g < 4; ++g) {
        auto r = t->restrict_element(1, g);
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(*r, t->spec().epis[0][g]);
    }
}

TEST(TowerTest, SwappedEpsilonIsLocated) {
    auto t = tower("T1");
    // Level 2 elements 1 and 2 restrict differently, so swapping them breaks both.
    auto eps = swap_eps(t->spec(), 1, 1, 2);
    std::vector<std::string> failed;
    for (const auto& c : t->check_compatibility(&eps))
        if (!c.passed()) failed.push_back(c.name);
    ASSERT_EQ(failed.size(), 2U);
    EXPECT_NE(failed[0].find("n=1"), std::string::npos);
    // Swapping elements that restrict alike goes unnoticed.
    auto same = swap_eps(t->spec(), 1, 0, 2);
    for (const auto& c : t->check_compatibility(&same)) EXPECT_EQ(c.status, Status::Pass) << c.name;
}

TEST(TowerTest, FunctorialityOnDepthThree) {
    auto t = tower("T2");
    EXPECT_EQ(t->depth(), 3U);
    auto checks = t->check_functoriality();
    EXPECT_EQ(checks.size(), 8U);
    for (const auto& c : checks) EXPECT_EQ(c.status, Status::Pass) << c.name;
    auto rows = t->degree_ledger();
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_EQ(rows[2].dimension, 8U);
    EXPECT_TRUE(rows[2].fixed_space_trivial);
}

TEST(TowerTest, SingleLevelIsVacuous) {
    auto t = tower("T3");
    EXPECT_TRUE(t->check_compatibility().empty());
    EXPECT_TRUE(t->check_functoriality().empty());
    auto rows = t->degree_ledger();
    ASSERT_EQ(rows.size(), 1U);
    EXPECT_EQ(rows[0].dimension, 3U);
    EXPECT_TRUE(rows[0].degree_matches);
    EXPECT_TRUE(rows[0].fixed_space_trivial);
}

TEST(TowerTest, MissingEmbedding) {
    auto spec = catalog::tower_spec("T1");
    spec.embeddings[0].reset();
    EXPECT_EQ(code_of([&] { TowerScenario::build(spec); }), Errc::EmbeddingMissing);
    spec.embeddings.clear();
    EXPECT_EQ(code_of([&] { TowerScenario::build(spec); }), Errc::EmbeddingMissing);
}

TEST(TowerTest, WrongEmbeddingRejected) {
    auto spec = catalog::tower_spec("T1");
    const auto& field = *spec.levels[1].field;
    spec.embeddings[0] = base_polynomial(field, {BaseElement::from_rational(field, 0), BaseElement::from_rational(field, 1)});
    EXPECT_EQ(code_of([&] { TowerScenario::build(spec); }), Errc::ValidationFailed);
}

TEST(TowerTest, InvalidLevelRejected) {
    auto spec = catalog::tower_spec("T1");
    const auto& field = *spec.levels[1].field;
    spec.levels[1].generators[0].image =
        base_polynomial(field, {BaseElement::from_rational(field, 0), BaseElement::from_rational(field, 2)});
    EXPECT_EQ(code_of([&] { TowerScenario::build(spec); }), Errc::ValidationFailed);
}

TEST(TowerTest, BadGroupSystemRejected) {
    auto spec = catalog::tower_spec("T1");
    spec.epis[0] = {0, 0, 0, 0};
    EXPECT_EQ(code_of([&] { TowerScenario::build(spec); }), Errc::InvalidScenario);
    spec = catalog::tower_spec("T1");
    spec.eps[1].pop_back();
    EXPECT_EQ(code_of([&] { TowerScenario::build(spec); }), Errc::InvalidScenario);
    TowerSpec empty;
    EXPECT_EQ(code_of([&] { TowerScenario::build(empty); }), Errc::InvalidScenario);
}

}  // namespace
}  // namespace orefield

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

#include <orefield/random.hpp>
#include <orefield/skewfrac.hpp>

namespace orefield {
namespace {

class GaussianFracTest : public ::testing::Test {
   protected:
    std::shared_ptr<const GroundField> field = fields::gaussian_conjugation();
    GroundElement c(long re, long im) const { return field->element({Rational(re), Rational(im)}); }
    SkewPolynomial t() const { return SkewPolynomial::t(*field); }
    SkewPolynomial k(long re, long im) const { return SkewPolynomial::constant(c(re, im)); }
    SkewFraction fr(const SkewPolynomial& p) const { return SkewFraction::from_polynomial(p); }
};

TEST(SkewFracTest, CommutativeReduction) {
    auto q = fields::rationals();
    auto t = SkewPolynomial::t(*q);
    auto one = SkewPolynomial::constant(q->one());
    auto x = SkewFraction::make(t * t - one, t - one);
    EXPECT_TRUE(x.den().is_one());
    EXPECT_EQ(x.num(), t + one);
}

TEST_F(GaussianFracTest, ReductionRemovesCommonLeftFactor) {
    auto g = t() - k(0, 1);
    auto x = SkewFraction::make(g * t(), g);
    EXPECT_TRUE(x.den().is_one());
    EXPECT_EQ(x.num(), t());
}

TEST_F(GaussianFracTest, ZeroNumerator) {
    auto x = SkewFraction::make(SkewPolynomial(*field), t() + k(3, 1));
    EXPECT_TRUE(x.is_zero());
    EXPECT_TRUE(x.den().is_one());
    EXPECT_THROW(SkewFraction::make(t(), SkewPolynomial(*field)), Error);
}

TEST_F(GaussianFracTest, InverseRoundTrip) {
    auto x = SkewFraction::make(t() + k(0, 1), t() - k(0, 1));
    EXPECT_TRUE((x * x.inverse()).is_one());
    EXPECT_TRUE((x.inverse() * x).is_one());
}

TEST(SkewFracTest, SumOfReciprocals) {
    auto q = fields::rationals();
    auto inv_t = SkewFraction::t(*q, -1);
    auto sum = inv_t + inv_t;
    EXPECT_EQ(sum.den(), SkewPolynomial::t(*q));
    EXPECT_EQ(sum.num(), SkewPolynomial::constant(q->from_rational(2)));
}

TEST_F(GaussianFracTest, TwistedProductsDiffer) {
    auto i = SkewFraction::constant(c(0, 1));
    auto tt = fr(t());
    EXPECT_FALSE(i * tt == tt * i);
    EXPECT_TRUE(tt * i == -(i * tt));
}

TEST_F(GaussianFracTest, EqualityAgainstUnreducedPairs) {
    Rng rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        auto num = rng.polynomial(*field, 3, 3);
        auto den = rng.nonzero_polynomial(*field, 3, 3);
        auto g = rng.nonzero_polynomial(*field, 2, 3);
        auto x = SkewFraction::make(num, den);
        auto y = SkewFraction::make(g * num, g * den);
        ASSERT_TRUE(x == y);
        ASSERT_TRUE(x.same_form(y));
        ASSERT_FALSE(x == x + SkewFraction::one(*field));
    }
}

TEST_F(GaussianFracTest, CentralityProbe) {
    Rng rng(4);
    EXPECT_TRUE(fr_is_central(fr(t() * t()), 20, rng));
    EXPECT_FALSE(fr_is_central(fr(t()), 20, rng));
    EXPECT_FALSE(fr_is_central(SkewFraction::constant(c(0, 1)), 20, rng));
    auto central = SkewFraction::make(t() * t() * k(3, 0) + k(1, 0), t() * t() * t() * t() - k(2, 0));
    EXPECT_TRUE(fr_is_central(central, 20, rng));
}

TEST(SkewFracTest, InvariantFractionsAreCentral) {
    Rng rng(31);
    for (const auto& f : {fields::gaussian_conjugation(), fields::hamilton_rational()}) {
        const auto n = static_cast<std::size_t>(f->order());
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<GroundElement> nc, dc;
            for (int m = 0; m <= 2; ++m) {
                nc.push_back(f->from_rational(rng.rational(4)));
                dc.push_back(f->from_rational(rng.rational(4)));
                for (std::size_t s = 1; s < n; ++s) {
                    nc.push_back(f->zero());
                    dc.push_back(f->zero());
                }
            }
            dc.push_back(f->one());
            auto x = SkewFraction::make(SkewPolynomial(*f, nc), SkewPolynomial(*f, dc));
            ASSERT_TRUE(fr_is_central(x, 5, rng));
        }
    }
}

TEST_F(GaussianFracTest, CenterBasisIsEvenPowers) {
    auto basis = fr_center_basis(*field, 4);
    ASSERT_EQ(basis.size(), 3u);
    EXPECT_EQ(basis[0], SkewPolynomial::t(*field, 0));
    EXPECT_EQ(basis[1], SkewPolynomial::t(*field, 2));
    EXPECT_EQ(basis[2], SkewPolynomial::t(*field, 4));
    EXPECT_THROW(fr_center_basis(*field, 9), Error);
}

TEST(SkewFracTest, CenterBasisCommutativeAndQuaternion) {
    for (const auto& f : {fields::rationals(), fields::hamilton_rational()}) {
        auto basis = fr_center_basis(*f, 2);
        ASSERT_EQ(basis.size(), 3u);
        for (int m = 0; m <= 2; ++m) EXPECT_EQ(basis[m], SkewPolynomial::t(*f, static_cast<std::size_t>(m)));
    }
}

TEST(SkewFracTest, FieldAxioms) {
    for (const auto& f : {fields::gaussian_conjugation(), fields::hamilton_rational()}) {
        Rng rng(77);
        for (int trial = 0; trial < 150; ++trial) {
            auto x = random_fraction(rng, *f, 2), y = random_fraction(rng, *f, 2), z = random_fraction(rng, *f, 2);
            ASSERT_TRUE((x * y) * z == x * (y * z));
            ASSERT_TRUE((x + y) + z == x + (y + z));
            ASSERT_TRUE(x * (y + z) == x * y + x * z);
            ASSERT_TRUE((x + y) * z == x * z + y * z);
            ASSERT_TRUE(x + y == y + x);
            if (!x.is_zero()) {
                ASSERT_TRUE((x * x.inverse()).is_one());
            }
        }
    }
}

TEST(SkewFracTest, EqualityIsCongruence) {
    auto f = fields::gaussian_conjugation();
    Rng rng(78);
    for (int trial = 0; trial < 100; ++trial) {
        auto num = rng.polynomial(*f, 2, 3);
        auto den = rng.nonzero_polynomial(*f, 2, 3);
        auto g = rng.nonzero_polynomial(*f, 2, 3);
        auto x = SkewFraction::make(num, den);
        auto y = SkewFraction::make(g * num, g * den);
        auto z = random_fraction(rng, *f, 2);
        ASSERT_TRUE(x + z == y + z);
        ASSERT_TRUE(x * z == y * z);
        ASSERT_TRUE(z * x == z * y);
    }
}

TEST(SkewFracTest, SigmaIsAnAutomorphism) {
    auto f = fields::gaussian_conjugation();
    Rng rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = random_fraction(rng, *f, 2), y = random_fraction(rng, *f, 2);
        ASSERT_TRUE((x * y).sigma(1) == x.sigma(1) * y.sigma(1));
        ASSERT_TRUE((x + y).sigma(1) == x.sigma(1) + y.sigma(1));
        ASSERT_TRUE(x.sigma(2) == x);
    }
}

}  // namespace
}  // namespace orefield

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

#include <orefield/linalg.hpp>
#include <orefield/random.hpp>
#include <orefield/skewpoly.hpp>

namespace orefield {
namespace {

class GaussianPolyTest : public ::testing::Test {
   protected:
    std::shared_ptr<const GroundField> field = fields::gaussian_conjugation();
    GroundElement c(long re, long im) const { return field->element({Rational(re), Rational(im)}); }
    SkewPolynomial p(std::vector<GroundElement> cs) const { return SkewPolynomial(*field, std::move(cs)); }
    SkewPolynomial t() const { return SkewPolynomial::t(*field); }
    SkewPolynomial k(long re, long im) const { return SkewPolynomial::constant(c(re, im)); }
};

TEST_F(GaussianPolyTest, TwistedProductOfTAndI) {
    EXPECT_EQ(t() * k(0, 1), p({c(0, 0), c(0, -1)}));
    EXPECT_EQ(to_string(t() * k(0, 1)), "-[i]*t");
}

TEST_F(GaussianPolyTest, SquareOfTMinusI) {
    auto f = t() - k(0, 1);
    EXPECT_EQ(f * f, p({c(-1, 0), c(0, 0), c(1, 0)}));
}

TEST(SkewPolyTest, CommutativeProduct) {
    auto q = fields::rationals();
    auto one = SkewPolynomial::constant(q->one());
    auto t = SkewPolynomial::t(*q);
    EXPECT_EQ((one + t) * (one - t), one - t * t);
}

TEST_F(GaussianPolyTest, WorkedRightDivision) {
    auto f = t() * t() + k(0, 1);
    auto g = t() - k(0, 1);
    auto d = divmod_right(f, g);
    EXPECT_EQ(d.quotient, t() - k(0, 1));
    EXPECT_EQ(d.remainder, k(1, 1));
    EXPECT_EQ(d.quotient * g + d.remainder, f);
}

TEST_F(GaussianPolyTest, DivisionEdgeCases) {
    auto f = t() * t() + k(2, 1);
    auto d = divmod_right(f, f);
    EXPECT_TRUE(d.quotient.is_one());
    EXPECT_TRUE(d.remainder.is_zero());
    auto g = t() * t() * t();
    d = divmod_right(f, g);
    EXPECT_TRUE(d.quotient.is_zero());
    EXPECT_EQ(d.remainder, f);
    try {
        divmod_right(f, SkewPolynomial(*field));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DivisionByZero);
    }
}

TEST_F(GaussianPolyTest, GcldOfCommonLeftFactor) {
    auto common = t() - k(0, 1);
    auto f = common * (t() + k(1, 0));
    auto g = common * t();
    auto d = gcld(f, g);
    EXPECT_EQ(d, common);
    EXPECT_TRUE(divmod_left(f, d).remainder.is_zero());
    EXPECT_TRUE(divmod_left(g, d).remainder.is_zero());
    // No common left divisor of degree 2: f and g are not left multiples of one quadratic.
    EXPECT_FALSE(divmod_left(g, f).remainder.is_zero());
}

TEST_F(GaussianPolyTest, GcldDegenerateInputs) {
    auto f = k(0, 2) * t() + k(3, 0);
    auto d = gcld(f, SkewPolynomial(*field));
    EXPECT_TRUE(d.leading().is_one());
    EXPECT_TRUE(divmod_left(f, d).remainder.is_zero());
    EXPECT_EQ(d.degree(), 1);
    EXPECT_TRUE(gcld(k(0, 3), k(2, 5)).is_one());
}

TEST_F(GaussianPolyTest, OreWitnessOfTAndI) {
    auto a = t();
    auto b = k(0, 1);
    auto w = ore_witness(a, b);
    EXPECT_EQ(a * w.second, b * w.first);
    EXPECT_FALSE(w.second.is_zero());
    // The other normalisation of the same witness.
    EXPECT_EQ(a * k(0, 1), b * (-t()));
    auto zero = ore_witness(SkewPolynomial(*field), b);
    EXPECT_TRUE(zero.first.is_zero());
    EXPECT_TRUE(zero.second.is_one());
}

TEST(SkewPolyTest, OreWitnessCommutativeCase) {
    auto q = fields::rationals();
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = rng.polynomial(*q, 4);
        auto b = rng.nonzero_polynomial(*q, 4);
        auto w = ore_witness(a, b);
        EXPECT_EQ(a * w.second, b * w.first);
    }
}

std::vector<std::shared_ptr<const GroundField>> ring_fields() {
    return {fields::gaussian_conjugation(), fields::hamilton_rational()};
}

TEST(SkewPolyTest, RingAxioms) {
    for (const auto& f : ring_fields()) {
        Rng rng(2024);
        for (int trial = 0; trial < 1000; ++trial) {
            auto a = rng.polynomial(*f, 3), b = rng.polynomial(*f, 3), c = rng.polynomial(*f, 3);
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ((a + b) * c, a * c + b * c);
            if (!a.is_zero() && !b.is_zero()) {
                ASSERT_EQ((a * b).degree(), a.degree() + b.degree());
            }
        }
    }
}

TEST(SkewPolyTest, TwistRule) {
    for (const auto& f : ring_fields()) {
        Rng rng(17);
        auto t = SkewPolynomial::t(*f);
        for (int trial = 0; trial < 100; ++trial) {
            auto a = rng.element(*f);
            ASSERT_EQ(t * SkewPolynomial::constant(a), SkewPolynomial::constant(a.sigma(1)) * t);
        }
    }
}

TEST(SkewPolyTest, DivisionIdentityAndUniqueness) {
    for (const auto& f : ring_fields()) {
        Rng rng(7);
        for (int trial = 0; trial < 300; ++trial) {
            auto a = rng.polynomial(*f, 8);
            auto b = rng.nonzero_polynomial(*f, 5);
            auto d = divmod_right(a, b);
            ASSERT_EQ(d.quotient * b + d.remainder, a);
            ASSERT_LT(d.remainder.degree(), b.degree());
            auto again = divmod_right(d.quotient * b + d.remainder, b);
            ASSERT_EQ(again.quotient, d.quotient);
            ASSERT_EQ(again.remainder, d.remainder);
            auto bump = SkewPolynomial::constant(rng.nonzero_element(*f));
            auto r2 = a - (d.quotient + bump) * b;
            ASSERT_GE(r2.degree(), b.degree());
            auto l = divmod_left(a, b);
            ASSERT_EQ(b * l.quotient + l.remainder, a);
            ASSERT_LT(l.remainder.degree(), b.degree());
        }
    }
}

TEST(SkewPolyTest, OreWitnessIdentity) {
    for (const auto& f : ring_fields()) {
        Rng rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            auto a = rng.polynomial(*f, 3);
            auto b = rng.nonzero_polynomial(*f, 3);
            auto w = ore_witness(a, b);
            ASSERT_FALSE(w.second.is_zero());
            ASSERT_LE(w.second.degree(), b.degree());
            ASSERT_LE(w.first.degree(), std::max(a.degree(), 0));
            ASSERT_EQ(a * w.second, b * w.first);
        }
    }
}

TEST(SkewPolyTest, CommonMultiples) {
    for (const auto& f : ring_fields()) {
        Rng rng(12);
        for (int trial = 0; trial < 200; ++trial) {
            auto p = rng.nonzero_polynomial(*f, 3);
            auto q = rng.nonzero_polynomial(*f, 3);
            auto l = left_common_multiple(p, q);
            ASSERT_EQ(l.first * p, l.second * q);
            ASSERT_LE(l.first.degree(), q.degree());
            auto r = right_common_multiple(p, q);
            ASSERT_EQ(p * r.first, q * r.second);
            ASSERT_LE(r.first.degree(), q.degree());
        }
    }
}

// The extended Euclid route must agree with a direct linear solve for the
// minimal-degree left multiple c p = d q.
TEST(SkewPolyTest, LeftCommonMultipleAgreesWithLinearAlgebra) {
    auto f = fields::gaussian_conjugation();
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = rng.nonzero_polynomial(*f, 3);
        auto q = rng.nonzero_polynomial(*f, 3);
        auto lcm = left_common_multiple(p, q);
        // Unknown c of degree s and d of degree s + deg p - deg q, equations in x A = 0 form.
        int found = -1;
        for (int s = std::max(0, q.degree() - p.degree()); s <= q.degree() && found < 0; ++s) {
            const int sd = s + p.degree() - q.degree();
            const std::size_t cols = static_cast<std::size_t>(s + p.degree() + 1);
            Matrix<GroundElement> a;
            for (int i = 0; i <= s; ++i) {
                auto row = SkewPolynomial::t(*f, static_cast<std::size_t>(i)) * p;
                std::vector<GroundElement> v;
                for (std::size_t m = 0; m < cols; ++m) v.push_back(row.coeff(m));
                a.push_back(v);
            }
            for (int i = 0; i <= sd; ++i) {
                auto row = -(SkewPolynomial::t(*f, static_cast<std::size_t>(i)) * q);
                std::vector<GroundElement> v;
                for (std::size_t m = 0; m < cols; ++m) v.push_back(row.coeff(m));
                a.push_back(v);
            }
            if (!left_kernel(a, cols, f->zero(), f->one()).empty()) found = s;
        }
        ASSERT_EQ(lcm.first.degree(), found);
    }
}

TEST(SkewPolyTest, CentralElements) {
    auto f = fields::gaussian_conjugation();
    Rng rng(21);
    auto t2 = SkewPolynomial::t(*f, 2);
    auto five = SkewPolynomial::constant(f->from_rational(5));
    EXPECT_TRUE(is_central_polynomial(t2 + five));
    EXPECT_FALSE(is_central_polynomial(SkewPolynomial::t(*f)));
    for (int trial = 0; trial < 1000; ++trial) {
        auto g = rng.polynomial(*f, 4);
        ASSERT_EQ(t2 * g, g * t2);
        ASSERT_EQ(five * g, g * five);
    }
}

}  // namespace
}  // namespace orefield

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

#ifndef OREFIELD_SKEWFRAC_HPP
#define OREFIELD_SKEWFRAC_HPP

// The fraction field H(t, sigma). Elements are left fractions den^-1 num
// with gcld(den, num) = 1 and den monic; that form is unique.

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ground.hpp"
#include "linalg.hpp"
#include "random.hpp"
#include "skewpoly.hpp"

namespace orefield {

inline constexpr int kCenterDegreeCap = 8;

class SkewFraction {
   public:
    SkewFraction() = default;

    /// den^-1 num in reduced form.
    static SkewFraction make(const SkewPolynomial& num, const SkewPolynomial& den) {
        if (den.is_zero()) throw Error(Errc::DivisionByZero, "fraction with zero denominator");
        if (num.field_ptr() != den.field_ptr()) throw Error(Errc::MixedFields, "fraction over different fields");
        const GroundField& field = den.field();
        if (num.is_zero()) return SkewFraction(num, SkewPolynomial::constant(field.one()));
        SkewPolynomial n = num, d = den;
        if (d.degree() > 0 && num.degree() > 0) {
            auto g = gcld(d, n);
            if (g.degree() > 0) {
                d = divmod_left(d, g).quotient;
                n = divmod_left(n, g).quotient;
            }
        }
        return normalised(n, d);
    }
    static SkewFraction from_polynomial(const SkewPolynomial& p) {
        return SkewFraction(p, SkewPolynomial::constant(p.field().one()));
    }
    static SkewFraction constant(const GroundElement& c) { return from_polynomial(SkewPolynomial::constant(c)); }
    static SkewFraction zero(const GroundField& field) { return constant(field.zero()); }
    static SkewFraction one(const GroundField& field) { return constant(field.one()); }
    static SkewFraction t(const GroundField& field, int power = 1) {
        if (power >= 0) return from_polynomial(SkewPolynomial::t(field, static_cast<std::size_t>(power)));
        return SkewFraction(SkewPolynomial::constant(field.one()),
                            SkewPolynomial::t(field, static_cast<std::size_t>(-power)));
    }

    const SkewPolynomial& num() const { return num_; }
    const SkewPolynomial& den() const { return den_; }
    const GroundField& field() const { return den_.field(); }
    const GroundField* field_ptr() const { return den_.field_ptr(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    SkewFraction inverse() const {
        if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero fraction");
        return normalised(den_, num_);
    }
    SkewFraction sigma(int power) const { return SkewFraction(num_.sigma(power), den_.sigma(power)); }

    friend SkewFraction operator+(const SkewFraction& x, const SkewFraction& y) {
        require_same(x, y);
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        if (x.den_ == y.den_) return make(x.num_ + y.num_, x.den_);
        // c bx = d by, then x + y = (c bx)^-1 (c ax + d ay).
        auto m = left_common_multiple(x.den_, y.den_);
        return make(m.first * x.num_ + m.second * y.num_, m.first * x.den_);
    }
    friend SkewFraction operator-(const SkewFraction& x) { return SkewFraction(-x.num_, x.den_); }
    friend SkewFraction operator-(const SkewFraction& x, const SkewFraction& y) { return x + (-y); }

    friend SkewFraction operator*(const SkewFraction& x, const SkewFraction& y) {
        require_same(x, y);
        if (x.is_zero() || y.is_zero()) return zero(x.field());
        if (y.den_.degree() == 0) return make(x.num_ * y.num_, x.den_);
        // u ax = v by, so ax by^-1 = u^-1 v and x y = (u bx)^-1 (v ay).
        auto m = left_common_multiple(x.num_, y.den_);
        return make(m.second * y.num_, m.first * x.den_);
    }
    friend SkewFraction operator/(const SkewFraction& x, const SkewFraction& y) { return x * y.inverse(); }

    /// Ore cross-multiplication: c bx = d by, then compare c ax with d ay.
    friend bool fr_eq(const SkewFraction& x, const SkewFraction& y) {
        require_same(x, y);
        if (x.den_ == y.den_) return x.num_ == y.num_;
        auto m = left_common_multiple(x.den_, y.den_);
        return m.first * x.num_ == m.second * y.num_;
    }
    friend bool operator==(const SkewFraction& x, const SkewFraction& y) { return fr_eq(x, y); }

    /// Componentwise comparison of canonical forms.
    bool same_form(const SkewFraction& y) const { return num_ == y.num_ && den_ == y.den_; }

   private:
    SkewFraction(SkewPolynomial num, SkewPolynomial den) : num_(std::move(num)), den_(std::move(den)) {}

    static SkewFraction normalised(const SkewPolynomial& n, const SkewPolynomial& d) {
        if (d.leading().is_one()) return SkewFraction(n, d);
        GroundElement u = d.leading().inverse();
        return SkewFraction(u * n, u * d);
    }
    static void require_same(const SkewFraction& x, const SkewFraction& y) {
        if (x.field_ptr() != y.field_ptr() || x.field_ptr() == nullptr)
            throw Error(Errc::MixedFields, "fractions over different fields");
    }

    SkewPolynomial num_;
    SkewPolynomial den_;
};

inline SkewFraction operator*(const GroundElement& c, const SkewFraction& x) {
    return SkewFraction::constant(c) * x;
}

inline std::string to_string(const SkewFraction& x) {
    if (x.den().is_one()) return to_string(x.num());
    return "(" + to_string(x.den()) + ")^-1*(" + to_string(x.num()) + ")";
}

/// Random fraction with numerator and denominator of degree at most max_deg.
inline SkewFraction random_fraction(Rng& rng, const GroundField& field, int max_deg, int bound = 3) {
    auto num = rng.polynomial(field, max_deg, bound);
    auto den = rng.nonzero_polynomial(field, max_deg, bound);
    return SkewFraction::make(num, den);
}
inline SkewFraction random_nonzero_fraction(Rng& rng, const GroundField& field, int max_deg, int bound = 3) {
    auto num = rng.nonzero_polynomial(field, max_deg, bound);
    auto den = rng.nonzero_polynomial(field, max_deg, bound);
    return SkewFraction::make(num, den);
}

/// x commutes with t and with a basis of H over k^<sigma> (the exact
/// criterion), and with `trials` random fractions.
inline bool fr_is_central(const SkewFraction& x, int trials, Rng& rng) {
    const auto& field = x.field();
    auto t = SkewFraction::t(field);
    if (!(x * t == t * x)) return false;
    for (const auto& e : field.h_basis()) {
        auto ef = SkewFraction::constant(e);
        if (!(x * ef == ef * x)) return false;
    }
    for (int i = 0; i < trials; ++i) {
        auto y = random_fraction(rng, field, 2);
        if (!(x * y == y * x)) return false;
    }
    return true;
}

/// Q-basis of the polynomials of degree <= max_deg commuting with t and H.
inline std::vector<SkewPolynomial> fr_center_basis(const GroundField& field, int max_deg,
                                                   int cap = kCenterDegreeCap) {
    if (max_deg > cap) throw Error(Errc::CapExceeded, "max degree " + std::to_string(max_deg) + " exceeds cap " +
                                                          std::to_string(cap));
    if (max_deg < 0) throw Error(Errc::InvalidArgument, "negative max degree");
    const std::size_t dim = field.dimension();
    const std::size_t terms = static_cast<std::size_t>(max_deg) + 1;
    const std::size_t cols = terms * dim;
    Matrix<Rational> system;
    auto unit = [&](std::size_t b) { return field.standard_basis()[b]; };
    for (std::size_t m = 0; m < terms; ++m) {
        // sigma(f_m) = f_m, from f t = t f.
        for (std::size_t row = 0; row < dim; ++row) {
            std::vector<Rational> eq(cols, Rational(0));
            for (std::size_t b = 0; b < dim; ++b)
                eq[m * dim + b] = unit(b).sigma(1).coords()[row] - unit(b).coords()[row];
            system.push_back(std::move(eq));
        }
        // f_m sigma^m(e) = e f_m for every basis element e, from f e = e f.
        for (const auto& e : field.standard_basis()) {
            auto twisted = e.sigma(static_cast<int>(m));
            for (std::size_t row = 0; row < dim; ++row) {
                std::vector<Rational> eq(cols, Rational(0));
                for (std::size_t b = 0; b < dim; ++b)
                    eq[m * dim + b] = (unit(b) * twisted - e * unit(b)).coords()[row];
                system.push_back(std::move(eq));
            }
        }
    }
    auto kernel = right_kernel(system, cols, Rational(0), Rational(1));
    std::vector<SkewPolynomial> out;
    for (const auto& z : kernel) {
        std::vector<GroundElement> coeffs;
        for (std::size_t m = 0; m < terms; ++m)
            coeffs.push_back(field.element(std::vector<Rational>(z.begin() + static_cast<long>(m * dim),
                                                                 z.begin() + static_cast<long>((m + 1) * dim))));
        out.emplace_back(field, std::move(coeffs));
    }
    return out;
}

}  // namespace orefield

#endif  // OREFIELD_SKEWFRAC_HPP

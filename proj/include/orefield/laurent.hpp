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

#ifndef OREFIELD_LAURENT_HPP
#define OREFIELD_LAURENT_HPP

// Twisted Laurent series H((t, sigma)) known modulo t^N.

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "basefield.hpp"
#include "error.hpp"
#include "ground.hpp"
#include "skewfrac.hpp"
#include "skewpoly.hpp"

namespace orefield {

inline constexpr int kDefaultPrecision = 64;

class TwistedSeries {
   public:
    TwistedSeries() = default;
    /// Coefficients of t^valuation, ..., t^(precision-1).
    TwistedSeries(const GroundField& field, int valuation, std::vector<GroundElement> coeffs, int precision)
        : field_(&field), val_(valuation), prec_(precision), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) > prec_ - val_) coeffs_.resize(static_cast<std::size_t>(std::max(0, prec_ - val_)), field.zero());
        normalise();
    }
    static TwistedSeries zero(const GroundField& field, int precision) { return TwistedSeries(field, precision, {}, precision); }
    static TwistedSeries one(const GroundField& field, int precision) { return constant(field.one(), precision); }
    static TwistedSeries constant(const GroundElement& c, int precision) {
        return TwistedSeries(c.field(), 0, {c}, precision);
    }
    static TwistedSeries from_polynomial(const SkewPolynomial& p, int precision) {
        const auto& field = p.field();
        std::vector<GroundElement> c;
        for (int i = 0; i < precision && i <= p.degree(); ++i) c.push_back(p.coeffs()[static_cast<std::size_t>(i)]);
        return TwistedSeries(field, 0, std::move(c), precision);
    }
    static TwistedSeries monomial(const GroundElement& c, int exponent, int precision) {
        return TwistedSeries(c.field(), exponent, {c}, precision);
    }

    const GroundField& field() const {
        if (field_ == nullptr) throw Error(Errc::InvalidArgument, "series without a field");
        return *field_;
    }
    const GroundField* field_ptr() const { return field_; }
    /// Valuation; equal to the precision for a series that is zero to precision.
    int valuation() const { return val_; }
    int precision() const { return prec_; }
    bool is_zero() const { return coeffs_.empty(); }
    GroundElement coeff(int exponent) const {
        if (exponent >= prec_) throw Error(Errc::InsufficientPrecision, "coefficient beyond precision");
        if (exponent < val_ || coeffs_.empty()) return field().zero();
        return coeffs_[static_cast<std::size_t>(exponent - val_)];
    }
    const std::vector<GroundElement>& coeffs() const { return coeffs_; }

    TwistedSeries truncate(int precision) const {
        if (precision > prec_)
            throw Error(Errc::InsufficientPrecision, "cannot raise precision " + std::to_string(prec_) + " to " +
                                                         std::to_string(precision));
        return TwistedSeries(field(), val_, coeffs_, precision);
    }
    TwistedSeries sigma(int power) const {
        std::vector<GroundElement> c;
        for (const auto& a : coeffs_) c.push_back(a.sigma(power));
        return TwistedSeries(field(), val_, std::move(c), prec_);
    }

    friend TwistedSeries operator+(const TwistedSeries& f, const TwistedSeries& g) {
        require_same(f, g);
        const int prec = std::min(f.prec_, g.prec_);
        const int val = std::min(f.val_, g.val_);
        if (val >= prec) return zero(*f.field_, prec);
        std::vector<GroundElement> c(static_cast<std::size_t>(prec - val), f.field_->zero());
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            const int e = f.val_ + static_cast<int>(i);
            if (e < prec) c[static_cast<std::size_t>(e - val)] = f.coeffs_[i];
        }
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
            const int e = g.val_ + static_cast<int>(i);
            if (e < prec) c[static_cast<std::size_t>(e - val)] = c[static_cast<std::size_t>(e - val)] + g.coeffs_[i];
        }
        return TwistedSeries(*f.field_, val, std::move(c), prec);
    }
    friend TwistedSeries operator-(const TwistedSeries& f) {
        std::vector<GroundElement> c;
        for (const auto& a : f.coeffs_) c.push_back(-a);
        return TwistedSeries(f.field(), f.val_, std::move(c), f.prec_);
    }
    friend TwistedSeries operator-(const TwistedSeries& f, const TwistedSeries& g) { return f + (-g); }

    /// Coefficient of t^m is sum f_i sigma^i(g_j), i + j = m; known below
    /// min(N_f + val_g, N_g + val_f).
    friend TwistedSeries operator*(const TwistedSeries& f, const TwistedSeries& g) {
        require_same(f, g);
        const int prec = std::min(f.prec_ + g.val_, g.prec_ + f.val_);
        const int val = f.val_ + g.val_;
        if (f.is_zero() || g.is_zero() || val >= prec) return zero(*f.field_, prec);
        const GroundField& field = *f.field_;
        const std::size_t len = static_cast<std::size_t>(prec - val);
        std::vector<GroundElement> c(len, field.zero());
        const int n = field.order();
        std::vector<std::vector<GroundElement>> twisted;
        if (n > 1) {
            for (int p = 0; p < n; ++p) {
                std::vector<GroundElement> row;
                for (std::size_t j = 0; j < std::min(len, g.coeffs_.size()); ++j) row.push_back(g.coeffs_[j].sigma(p));
                twisted.push_back(std::move(row));
            }
        }
        for (std::size_t i = 0; i < std::min(len, f.coeffs_.size()); ++i) {
            if (f.coeffs_[i].is_zero()) continue;
            const int e = f.val_ + static_cast<int>(i);
            const auto& row = n > 1 ? twisted[static_cast<std::size_t>(((e % n) + n) % n)] : g.coeffs_;
            for (std::size_t j = 0; i + j < len && j < row.size(); ++j)
                if (!row[j].is_zero()) c[i + j] = c[i + j] + f.coeffs_[i] * row[j];
        }
        return TwistedSeries(field, val, std::move(c), prec);
    }

    friend TwistedSeries operator*(const GroundElement& a, const TwistedSeries& f) {
        std::vector<GroundElement> c;
        for (const auto& x : f.coeffs_) c.push_back(a * x);
        return TwistedSeries(f.field(), f.val_, std::move(c), f.prec_);
    }

    /// Two-sided inverse: valuation -v, precision N - 2v.
    TwistedSeries inverse() const {
        if (is_zero()) throw Error(Errc::ZeroSeries, "inverse of a series that is zero to precision " + std::to_string(prec_));
        const GroundField& field = *field_;
        const int v = val_;
        const int prec = prec_ - 2 * v;
        const std::size_t len = static_cast<std::size_t>(prec_ - v);
        const GroundElement lead_inv = coeffs_[0].inverse();
        std::vector<GroundElement> g;
        g.reserve(len);
        g.push_back(lead_inv.sigma(-v));
        for (std::size_t m = 1; m < len; ++m) {
            GroundElement acc = field.zero();
            // g index k stands for exponent k - v; f index i for exponent i + v.
            for (std::size_t i = 1; i <= m && i < coeffs_.size(); ++i) {
                if (coeffs_[i].is_zero()) continue;
                acc = acc + coeffs_[i] * g[m - i].sigma(static_cast<int>(i) + v);
            }
            g.push_back((-(lead_inv * acc)).sigma(-v));
        }
        return TwistedSeries(field, -v, std::move(g), prec);
    }

    /// Agreement up to the smaller precision.
    friend bool agree(const TwistedSeries& f, const TwistedSeries& g) { return (f - g).is_zero(); }
    /// Same precision and same coefficients.
    friend bool operator==(const TwistedSeries& f, const TwistedSeries& g) {
        return f.field_ == g.field_ && f.prec_ == g.prec_ && f.val_ == g.val_ && f.coeffs_ == g.coeffs_;
    }

   private:
    static void require_same(const TwistedSeries& f, const TwistedSeries& g) {
        if (f.field_ != g.field_ || f.field_ == nullptr) throw Error(Errc::MixedFields, "series over different fields");
    }
    void normalise() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            val_ = prec_;
            return;
        }
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            val_ += static_cast<int>(lead);
        }
        coeffs_.resize(static_cast<std::size_t>(prec_ - val_), field_->zero());
    }

    const GroundField* field_ = nullptr;
    int val_ = 0;
    int prec_ = 0;
    std::vector<GroundElement> coeffs_;
};

/// den^-1 num expanded modulo t^precision, solving den s = num one
/// coefficient at a time.
inline TwistedSeries ls_embed(const SkewFraction& x, int precision) {
    const auto& field = x.field();
    if (x.is_zero()) return TwistedSeries::zero(field, precision);
    const auto& den = x.den().coeffs();
    const auto& num = x.num().coeffs();
    int v = 0;
    while (den[static_cast<std::size_t>(v)].is_zero()) ++v;
    int vn = 0;
    while (num[static_cast<std::size_t>(vn)].is_zero()) ++vn;
    const int w = vn - v;
    if (w >= precision) return TwistedSeries::zero(field, precision);
    const std::size_t len = static_cast<std::size_t>(precision - w);
    const GroundElement lead_inv = den[static_cast<std::size_t>(v)].inverse();
    std::vector<GroundElement> s;
    s.reserve(len);
    for (std::size_t m = 0; m < len; ++m) {
        const std::size_t e = static_cast<std::size_t>(vn) + m;
        GroundElement acc = e < num.size() ? num[e] : field.zero();
        for (std::size_t i = 1; i <= m && static_cast<std::size_t>(v) + i < den.size(); ++i) {
            const auto& d = den[static_cast<std::size_t>(v) + i];
            if (d.is_zero()) continue;
            acc = acc - d * s[m - i].sigma(v + static_cast<int>(i));
        }
        s.push_back((lead_inv * acc).sigma(-v));
    }
    return TwistedSeries(field, w, std::move(s), precision);
}

inline TwistedSeries ls_embed(const BaseElement& a, int precision) { return ls_embed(to_fraction(a), precision); }

/// "t^v*(c0 + c1*t + ... + O(t^M))" with M = N - v; the prefix is left out when v = 0.
inline std::string to_string(const TwistedSeries& f) {
    const int v = f.valuation();
    const int rel = f.precision() - (f.is_zero() ? 0 : v);
    std::string body;
    bool first = true;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        body += detail::term_string(f.coeffs()[i], i, first);
        first = false;
    }
    std::string big = "O(t^" + std::to_string(rel) + ")";
    body += first ? big : " + " + big;
    if (f.is_zero() || v == 0) return body;
    // on the right, so the coefficients are not twisted by t^v
    return "(" + body + ")*t" + (v == 1 ? std::string() : "^" + std::to_string(v));
}

namespace detail {

/// Truncated commutative power series in T over k^<sigma>.
using CSeries = std::vector<GroundElement>;

inline CSeries cs_mul(const CSeries& a, const CSeries& b, std::size_t len, const GroundElement& zero) {
    CSeries c(len, zero);
    for (std::size_t i = 0; i < std::min(len, a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j)
            if (!b[j].is_zero()) c[i + j] = c[i + j] + a[i] * b[j];
    }
    return c;
}

inline CSeries cs_inv(const CSeries& a, std::size_t len, const GroundElement& zero) {
    CSeries g(len, zero);
    const GroundElement inv = a[0].inverse();
    g[0] = inv;
    for (std::size_t m = 1; m < len; ++m) {
        GroundElement acc = zero;
        for (std::size_t i = 1; i <= m && i < a.size(); ++i)
            if (!a[i].is_zero()) acc = acc + a[i] * g[m - i];
        g[m] = -(inv * acc);
    }
    return g;
}

inline CSeries cs_eval(const std::vector<TPoly>& poly, const CSeries& x, std::size_t len, const GroundElement& zero) {
    CSeries acc(len, zero);
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = cs_mul(acc, x, len, zero);
        for (std::size_t k = 0; k < std::min(len, poly[i].coeffs().size()); ++k) acc[k] = acc[k] + poly[i].coeffs()[k];
    }
    return acc;
}

}  // namespace detail

/// Coefficients of D f in k^<sigma>[T], with D the least common denominator,
/// divided by the largest power of T they share.
inline std::vector<TPoly> clear_denominators(const BasePolynomial& f) {
    if (f.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial");
    TPoly lcm = f.coeffs()[0].den();
    for (const auto& c : f.coeffs()) lcm = divmod(lcm * c.den(), gcd(lcm, c.den())).quotient;
    std::vector<TPoly> out;
    for (const auto& c : f.coeffs()) out.push_back(divmod(lcm, c.den()).quotient * c.num());
    std::size_t shift = std::numeric_limits<std::size_t>::max();
    for (const auto& p : out) {
        if (p.is_zero()) continue;
        std::size_t k = 0;
        while (p.coeffs()[k].is_zero()) ++k;
        shift = std::min(shift, k);
    }
    if (shift > 0) {
        for (auto& p : out) {
            if (p.is_zero()) continue;
            std::vector<GroundElement> c(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end());
            p = TPoly(p.zero_value(), std::move(c));
        }
    }
    return out;
}

/// Series root of f in k^<sigma>[[t^n]] with rho = seed mod t, by Newton
/// iteration doubling the precision in T each step.
inline TwistedSeries ls_newton_root(const BasePolynomial& f, const GroundElement& seed, int precision) {
    const GroundField& field = seed.field();
    if (!field.is_invariant_central(seed)) throw Error(Errc::NotInBaseField, "seed is not in k^<sigma>");
    const auto n = static_cast<std::size_t>(field.order());
    const auto big = clear_denominators(f);
    const GroundElement zero = field.zero();
    std::vector<TPoly> dbig;
    for (std::size_t i = 1; i < big.size(); ++i) dbig.push_back(TPoly(zero, {field.from_rational(static_cast<long>(i))}) * big[i]);
    GroundElement r = zero, dr = zero;
    for (std::size_t i = big.size(); i-- > 0;) r = r * seed + big[i].coeff(0);
    for (std::size_t i = dbig.size(); i-- > 0;) dr = dr * seed + dbig[i].coeff(0);
    if (!r.is_zero()) throw Error(Errc::NoResidualRoot, to_string(seed) + " is not a root of the residual polynomial");
    if (dr.is_zero()) throw Error(Errc::NotSimpleRoot, to_string(seed) + " is a multiple residual root");
    const std::size_t target = (static_cast<std::size_t>(std::max(precision, 1)) + n - 1) / n;
    detail::CSeries rho{seed};
    std::size_t have = 1;
    while (have < target) {
        have = std::min(2 * have, target);
        rho.resize(have, zero);
        auto value = detail::cs_eval(big, rho, have, zero);
        auto slope = detail::cs_eval(dbig, rho, have, zero);
        auto step = detail::cs_mul(value, detail::cs_inv(slope, have, zero), have, zero);
        for (std::size_t k = 0; k < have; ++k) rho[k] = rho[k] - step[k];
    }
    std::vector<GroundElement> coeffs(target * n, zero);
    for (std::size_t k = 0; k < rho.size() && k < target; ++k) coeffs[k * n] = rho[k];
    return TwistedSeries(field, 0, std::move(coeffs), static_cast<int>(target * n)).truncate(precision);
}

/// sum_i c_i rho^i for a polynomial with coefficients in k^<sigma>[T]
/// (T = t^n); rho should have nonnegative valuation.
inline TwistedSeries evaluate_cleared(const std::vector<TPoly>& poly, const TwistedSeries& rho) {
    const auto& field = rho.field();
    const int prec = rho.precision();
    TwistedSeries acc = TwistedSeries::zero(field, prec);
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = acc * rho;
        acc = acc + TwistedSeries::from_polynomial(detail::spread(poly[i], field), std::max(prec, acc.precision()));
    }
    return acc;
}

/// f(rho) for f over K; precision drops by the pole orders of the coefficients.
inline TwistedSeries evaluate(const BasePolynomial& f, const TwistedSeries& rho) {
    const auto& field = rho.field();
    const int prec = rho.precision();
    TwistedSeries acc = TwistedSeries::zero(field, prec);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * rho;
        acc = acc + ls_embed(f.coeffs()[i], prec);
    }
    return acc;
}

}  // namespace orefield

#endif  // OREFIELD_LAURENT_HPP

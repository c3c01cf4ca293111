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

#ifndef OREFIELD_SKEWPOLY_HPP
#define OREFIELD_SKEWPOLY_HPP

// The twisted polynomial ring H[t, sigma], in which t a = sigma(a) t.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ground.hpp"
#include "linalg.hpp"

namespace orefield {

class SkewPolynomial {
   public:
    SkewPolynomial() = default;
    explicit SkewPolynomial(const GroundField& field) : field_(&field) {}
    SkewPolynomial(const GroundField& field, std::vector<GroundElement> coeffs)
        : field_(&field), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (c.field_ptr() != field_) throw Error(Errc::MixedFields, "coefficient from another field");
        trim();
    }

    static SkewPolynomial constant(const GroundElement& c) { return SkewPolynomial(c.field(), {c}); }
    static SkewPolynomial monomial(const GroundElement& c, std::size_t k) {
        std::vector<GroundElement> v(k + 1, c.field().zero());
        v[k] = c;
        return SkewPolynomial(c.field(), std::move(v));
    }
    static SkewPolynomial t(const GroundField& field, std::size_t k = 1) { return monomial(field.one(), k); }

    const GroundField& field() const {
        if (field_ == nullptr) throw Error(Errc::InvalidArgument, "polynomial without a field");
        return *field_;
    }
    const GroundField* field_ptr() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    const std::vector<GroundElement>& coeffs() const { return coeffs_; }
    GroundElement coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field().zero(); }
    const GroundElement& leading() const {
        if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "leading coefficient of zero");
        return coeffs_.back();
    }

    /// Coefficientwise sigma^power; an automorphism of H[t, sigma] fixing t.
    SkewPolynomial sigma(int power) const {
        std::vector<GroundElement> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.sigma(power));
        return SkewPolynomial(field(), std::move(out));
    }

    friend SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g) {
        require_same(f, g);
        const auto& big = f.coeffs_.size() >= g.coeffs_.size() ? f : g;
        const auto& small = f.coeffs_.size() >= g.coeffs_.size() ? g : f;
        auto out = big.coeffs_;
        for (std::size_t i = 0; i < small.coeffs_.size(); ++i) out[i] = out[i] + small.coeffs_[i];
        return SkewPolynomial(*f.field_, std::move(out));
    }
    friend SkewPolynomial operator-(const SkewPolynomial& f) {
        std::vector<GroundElement> out;
        for (const auto& c : f.coeffs_) out.push_back(-c);
        return SkewPolynomial(f.field(), std::move(out));
    }
    friend SkewPolynomial operator-(const SkewPolynomial& f, const SkewPolynomial& g) { return f + (-g); }

    /// Coefficient of t^m is sum_{i+j=m} f_i sigma^i(g_j).
    friend SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g) {
        require_same(f, g);
        if (f.is_zero() || g.is_zero()) return SkewPolynomial(*f.field_);
        const GroundField& field = *f.field_;
        const int n = field.order();
        std::vector<std::vector<GroundElement>> twisted(static_cast<std::size_t>(std::min<int>(n, f.degree() + 1)));
        for (std::size_t p = 0; p < twisted.size(); ++p)
            for (const auto& c : g.coeffs_) twisted[p].push_back(c.sigma(static_cast<int>(p)));
        std::vector<GroundElement> out(f.coeffs_.size() + g.coeffs_.size() - 1, field.zero());
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (f.coeffs_[i].is_zero()) continue;
            const auto& tg = twisted[i % static_cast<std::size_t>(n)];
            for (std::size_t j = 0; j < tg.size(); ++j)
                if (!tg[j].is_zero()) out[i + j] = out[i + j] + f.coeffs_[i] * tg[j];
        }
        return SkewPolynomial(field, std::move(out));
    }

    /// Left scalar: c f.
    friend SkewPolynomial operator*(const GroundElement& c, const SkewPolynomial& f) {
        std::vector<GroundElement> out;
        for (const auto& a : f.coeffs_) out.push_back(c * a);
        return SkewPolynomial(f.field(), std::move(out));
    }
    /// Right scalar: f c = sum f_i sigma^i(c) t^i.
    friend SkewPolynomial operator*(const SkewPolynomial& f, const GroundElement& c) {
        std::vector<GroundElement> out;
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
            out.push_back(f.coeffs_[i] * c.sigma(static_cast<int>(i)));
        return SkewPolynomial(f.field(), std::move(out));
    }

    friend bool operator==(const SkewPolynomial& f, const SkewPolynomial& g) {
        return f.field_ == g.field_ && f.coeffs_ == g.coeffs_;
    }

   private:
    static void require_same(const SkewPolynomial& f, const SkewPolynomial& g) {
        if (f.field_ != g.field_ || f.field_ == nullptr)
            throw Error(Errc::MixedFields, "polynomials over different fields");
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    const GroundField* field_ = nullptr;
    std::vector<GroundElement> coeffs_;
};

/// Polynomial in k^<sigma>[t^n]: central in H[t, sigma].
inline bool is_central_polynomial(const SkewPolynomial& p) {
    if (p.is_zero()) return true;
    const auto& field = p.field();
    const auto n = static_cast<std::size_t>(field.order());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (i % n != 0 || !field.is_invariant_central(c)) return false;
    }
    return true;
}

struct Division {
    SkewPolynomial quotient;
    SkewPolynomial remainder;
};

/// f = q g + r with deg r < deg g.
inline Division divmod_right(const SkewPolynomial& f, const SkewPolynomial& g) {
    if (g.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
    if (f.field_ptr() != g.field_ptr()) throw Error(Errc::MixedFields, "polynomials over different fields");
    const GroundField& field = g.field();
    SkewPolynomial r = f;
    std::vector<GroundElement> q(static_cast<std::size_t>(std::max(0, f.degree() - g.degree() + 1)), field.zero());
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const int s = r.degree() - g.degree();
        GroundElement c = r.leading() * g.leading().sigma(s).inverse();
        q[static_cast<std::size_t>(s)] = c;
        r = r - SkewPolynomial::monomial(c, static_cast<std::size_t>(s)) * g;
    }
    return {SkewPolynomial(field, std::move(q)), r};
}

/// f = g q + r with deg r < deg g.
inline Division divmod_left(const SkewPolynomial& f, const SkewPolynomial& g) {
    if (g.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
    if (f.field_ptr() != g.field_ptr()) throw Error(Errc::MixedFields, "polynomials over different fields");
    const GroundField& field = g.field();
    SkewPolynomial r = f;
    std::vector<GroundElement> q(static_cast<std::size_t>(std::max(0, f.degree() - g.degree() + 1)), field.zero());
    const GroundElement lead_inv = g.leading().inverse();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const int s = r.degree() - g.degree();
        GroundElement c = (lead_inv * r.leading()).sigma(-g.degree());
        q[static_cast<std::size_t>(s)] = c;
        r = r - g * SkewPolynomial::monomial(c, static_cast<std::size_t>(s));
    }
    return {SkewPolynomial(field, std::move(q)), r};
}

/// d c with leading coefficient one.
inline SkewPolynomial monic_right(const SkewPolynomial& d) {
    if (d.is_zero()) return d;
    return d * d.leading().inverse().sigma(-d.degree());
}

/// c d with leading coefficient one.
inline SkewPolynomial monic_left(const SkewPolynomial& d) {
    if (d.is_zero()) return d;
    return d.leading().inverse() * d;
}

/// Greatest common left divisor, monic. Uses the Euclidean loop of left
/// division f = g q + r, which preserves common left divisors.
inline SkewPolynomial gcld(SkewPolynomial f, SkewPolynomial g) {
    if (f.is_zero() && g.is_zero()) throw Error(Errc::InvalidArgument, "gcld of two zero polynomials");
    while (!g.is_zero()) {
        auto r = divmod_left(f, g).remainder;
        f = std::move(g);
        g = std::move(r);
    }
    return monic_right(f);
}

/// Greatest common right divisor, monic.
inline SkewPolynomial gcrd(SkewPolynomial f, SkewPolynomial g) {
    if (f.is_zero() && g.is_zero()) throw Error(Errc::InvalidArgument, "gcrd of two zero polynomials");
    while (!g.is_zero()) {
        auto r = divmod_right(f, g).remainder;
        f = std::move(g);
        g = std::move(r);
    }
    return monic_left(f);
}

struct PolyPair {
    SkewPolynomial first;
    SkewPolynomial second;
};

/// Right Ore witness: (a1, b1) with b1 != 0 monic and a b1 = b a1, so that
/// b^-1 a = a1 b1^-1. The coefficients are unknowns of a linear system over
/// H; substituting z_j = sigma^-j(y_j) and twisting equation m by sigma^-m
/// makes the system right-linear. a b1 is a common right multiple of a and
/// b, so deg b1 <= deg b suffices; degrees are searched upward and the
/// witness has minimal degree.
inline PolyPair ore_witness(const SkewPolynomial& a, const SkewPolynomial& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "Ore witness with zero denominator");
    if (a.field_ptr() != b.field_ptr()) throw Error(Errc::MixedFields, "polynomials over different fields");
    const GroundField& field = b.field();
    if (a.is_zero()) return {SkewPolynomial(field), SkewPolynomial::constant(field.one())};
    const int da = a.degree();
    const int db = b.degree();
    for (int s = std::max(0, db - da); s <= db; ++s) {
        const int sa1 = da + s - db;
        const std::size_t nb1 = static_cast<std::size_t>(s + 1);
        const std::size_t na1 = static_cast<std::size_t>(sa1 + 1);
        const std::size_t rows = static_cast<std::size_t>(da + s + 1);
        Matrix<GroundElement> m(rows, std::vector<GroundElement>(nb1 + na1, field.zero()));
        for (std::size_t eq = 0; eq < rows; ++eq) {
            const int twist = -static_cast<int>(eq);
            for (std::size_t j = 0; j < nb1; ++j) {
                if (eq < j || eq - j > static_cast<std::size_t>(da)) continue;
                m[eq][j] = a.coeff(eq - j).sigma(twist);
            }
            for (std::size_t j = 0; j < na1; ++j) {
                if (eq < j || eq - j > static_cast<std::size_t>(db)) continue;
                m[eq][nb1 + j] = -b.coeff(eq - j).sigma(twist);
            }
        }
        auto kernel = right_kernel(m, nb1 + na1, field.zero(), field.one());
        if (kernel.empty()) continue;
        const auto& z = kernel.front();
        std::vector<GroundElement> b1, a1;
        for (std::size_t j = 0; j < nb1; ++j) b1.push_back(z[j].sigma(static_cast<int>(j)));
        for (std::size_t j = 0; j < na1; ++j) a1.push_back(z[nb1 + j].sigma(static_cast<int>(j)));
        SkewPolynomial pb1(field, std::move(b1)), pa1(field, std::move(a1));
        if (pb1.is_zero()) continue;
        GroundElement unit = pb1.leading().inverse().sigma(-pb1.degree());
        return {pa1 * unit, pb1 * unit};
    }
    throw Error(Errc::InvalidArgument, "no Ore witness found within the degree bound");
}

/// Left common multiple: (c, d), both nonzero, with c p = d q of minimal
/// degree. Extended Euclid on right division keeps the invariant
/// u p + v q = r, and the final row (u, v) annihilates (p, q).
inline PolyPair left_common_multiple(const SkewPolynomial& p, const SkewPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw Error(Errc::DivisionByZero, "common multiple with zero");
    if (p.field_ptr() != q.field_ptr()) throw Error(Errc::MixedFields, "polynomials over different fields");
    const GroundField& field = p.field();
    SkewPolynomial r0 = p, r1 = q;
    SkewPolynomial u0 = SkewPolynomial::constant(field.one()), v0(field);
    SkewPolynomial u1(field), v1 = SkewPolynomial::constant(field.one());
    while (!r1.is_zero()) {
        auto div = divmod_right(r0, r1);
        SkewPolynomial u2 = u0 - div.quotient * u1;
        SkewPolynomial v2 = v0 - div.quotient * v1;
        r0 = std::move(r1);
        r1 = std::move(div.remainder);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    GroundElement unit = u1.leading().inverse();
    return {unit * u1, unit * (-v1)};
}

/// Right common multiple: (c, d), both nonzero, with p c = q d.
inline PolyPair right_common_multiple(const SkewPolynomial& p, const SkewPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw Error(Errc::DivisionByZero, "common multiple with zero");
    if (p.field_ptr() != q.field_ptr()) throw Error(Errc::MixedFields, "polynomials over different fields");
    const GroundField& field = p.field();
    SkewPolynomial r0 = p, r1 = q;
    SkewPolynomial u0 = SkewPolynomial::constant(field.one()), v0(field);
    SkewPolynomial u1(field), v1 = SkewPolynomial::constant(field.one());
    while (!r1.is_zero()) {
        auto div = divmod_left(r0, r1);
        SkewPolynomial u2 = u0 - u1 * div.quotient;
        SkewPolynomial v2 = v0 - v1 * div.quotient;
        r0 = std::move(r1);
        r1 = std::move(div.remainder);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    GroundElement unit = u1.leading().inverse().sigma(-u1.degree());
    return {u1 * unit, (-v1) * unit};
}

namespace detail {

inline std::string term_string(const GroundElement& c, std::size_t k, bool first) {
    bool negative = false;
    for (const auto& x : c.coords())
        if (sgn(x) != 0) {
            negative = sgn(x) < 0;
            break;
        }
    GroundElement mag = negative ? -c : c;
    std::string body;
    std::string tpow = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mag.is_one() && k > 0)
        body = tpow;
    else
        body = to_string(mag) + (k > 0 ? "*" + tpow : "");
    if (first) return (negative ? "-" : "") + body;
    return (negative ? " - " : " + ") + body;
}

}  // namespace detail

/// Ascending terms "c*t^k" with bracketed coefficients; a coefficient equal
/// to one is omitted and a sign is pulled out of the first nonzero coordinate.
inline std::string to_string(const SkewPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        if (f.coeffs()[k].is_zero()) continue;
        s += detail::term_string(f.coeffs()[k], k, first);
        first = false;
    }
    return s;
}

}  // namespace orefield

#endif  // OREFIELD_SKEWPOLY_HPP

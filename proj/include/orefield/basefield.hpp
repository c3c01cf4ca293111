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

#ifndef OREFIELD_BASEFIELD_HPP
#define OREFIELD_BASEFIELD_HPP

// The central subfield K = k^<sigma>(T), T = t^n, of H(t, sigma), and
// polynomials in x over K. Everything here is commutative.

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ground.hpp"
#include "skewfrac.hpp"
#include "skewpoly.hpp"

namespace orefield {

/// Dense univariate polynomial over a commutative coefficient type C with a
/// zero prototype carried alongside (C may need a field handle).
template <class C>
class UPoly {
   public:
    UPoly() = default;
    explicit UPoly(C zero) : zero_(std::move(zero)) {}
    UPoly(C zero, std::vector<C> coeffs) : zero_(std::move(zero)), coeffs_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const C& c, std::size_t k, const C& zero) {
        std::vector<C> v(k + 1, zero);
        v[k] = c;
        return UPoly(zero, std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& zero_value() const { return zero_; }
    C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_; }
    const C& leading() const {
        if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "leading coefficient of zero");
        return coeffs_.back();
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<C> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
        return UPoly(a.zero_, std::move(out));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<C> out;
        for (const auto& c : a.coeffs_) out.push_back(-c);
        return UPoly(a.zero_, std::move(out));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.zero_);
        std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                if (!b.coeffs_[j].is_zero()) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return UPoly(a.zero_, std::move(out));
    }
    friend UPoly operator*(const C& c, const UPoly& a) {
        std::vector<C> out;
        for (const auto& x : a.coeffs_) out.push_back(c * x);
        return UPoly(a.zero_, std::move(out));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    UPoly derivative() const {
        std::vector<C> out;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
        return UPoly(zero_, std::move(out));
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    C zero_;
    std::vector<C> coeffs_;
};

template <class C>
struct UDivision {
    UPoly<C> quotient;
    UPoly<C> remainder;
};

template <class C>
UDivision<C> divmod(const UPoly<C>& f, const UPoly<C>& g) {
    if (g.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
    const C& zero = g.zero_value();
    if (f.degree() < g.degree()) return {UPoly<C>(zero), f};
    std::vector<C> r = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    std::vector<C> q(r.size() - dg, zero);
    const bool monic = g.leading().is_one();
    const C lead_inv = monic ? g.leading() : g.leading().inverse();
    for (std::size_t k = r.size(); k-- > dg;) {
        if (r[k].is_zero()) continue;
        C c = monic ? r[k] : r[k] * lead_inv;
        const std::size_t s = k - dg;
        for (std::size_t j = 0; j < dg; ++j)
            if (!gc[j].is_zero()) r[s + j] = r[s + j] - c * gc[j];
        q[s] = std::move(c);
    }
    r.resize(dg, zero);
    return {UPoly<C>(zero, std::move(q)), UPoly<C>(zero, std::move(r))};
}

template <class C>
UPoly<C> make_monic(const UPoly<C>& p) {
    if (p.is_zero()) return p;
    return p.leading().inverse() * p;
}

template <class C>
UPoly<C> gcd(UPoly<C> a, UPoly<C> b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    b = make_monic(b);
    while (!b.is_zero()) {
        auto r = make_monic(divmod(a, b).remainder);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Polynomial in T with coefficients in k^<sigma>.
using TPoly = UPoly<GroundElement>;

/// Element of K = k^<sigma>(T): num / den, coprime, den monic.
class BaseElement {
   public:
    BaseElement() = default;
    BaseElement(const TPoly& num, const TPoly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator in base field");
        reduce();
    }
    static BaseElement constant(const GroundElement& c) {
        auto zero = c.field().zero();
        return BaseElement(TPoly(zero, {c}), TPoly(zero, {c.field().one()}));
    }
    static BaseElement from_rational(const GroundField& field, const Rational& q) {
        return constant(field.from_rational(q));
    }
    static BaseElement T(const GroundField& field, int power = 1) {
        auto zero = field.zero();
        auto one = field.one();
        if (power >= 0) return BaseElement(TPoly::monomial(one, static_cast<std::size_t>(power), zero), TPoly(zero, {one}));
        return BaseElement(TPoly(zero, {one}), TPoly::monomial(one, static_cast<std::size_t>(-power), zero));
    }

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }
    const GroundField& field() const { return den_.leading().field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.leading().is_one(); }

    BaseElement inverse() const {
        if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in base field");
        return BaseElement(den_, num_);
    }

    // Henrici: only gcds of the pieces that can share factors.
    friend BaseElement operator+(const BaseElement& a, const BaseElement& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.degree() == 0 && b.den_.degree() == 0) return reduced(a.num_ + b.num_, a.den_);
        if (a.den_ == b.den_) return BaseElement(a.num_ + b.num_, a.den_);
        auto g = gcd(a.den_, b.den_);
        if (g.degree() == 0) return reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        auto bd = divmod(b.den_, g).quotient;
        auto ad = divmod(a.den_, g).quotient;
        auto num = a.num_ * bd + b.num_ * ad;
        if (num.is_zero()) return from_rational(a.field(), 0);
        auto g2 = gcd(num, g);
        if (g2.degree() > 0) {
            num = divmod(num, g2).quotient;
            g = divmod(g, g2).quotient;
        }
        return reduced(num, ad * bd * g);
    }
    friend BaseElement operator-(const BaseElement& a) {
        BaseElement out = a;
        out.num_ = -a.num_;
        return out;
    }
    friend BaseElement operator-(const BaseElement& a, const BaseElement& b) { return a + (-b); }
    friend BaseElement operator*(const BaseElement& a, const BaseElement& b) {
        if (a.is_zero()) return a;
        if (b.is_zero()) return b;
        auto an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
        cancel(an, bd);
        cancel(bn, ad);
        return reduced(an * bn, ad * bd);
    }
    friend BaseElement operator*(const Rational& q, const BaseElement& a) {
        return BaseElement::from_rational(a.field(), q) * a;
    }
    friend BaseElement operator/(const BaseElement& a, const BaseElement& b) { return a * b.inverse(); }
    friend bool operator==(const BaseElement& a, const BaseElement& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

   private:
    struct Raw {};
    BaseElement(Raw, TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    /// num / den already coprime; only the leading coefficient of den is fixed.
    static BaseElement reduced(const TPoly& num, const TPoly& den) {
        BaseElement out(Raw{}, num, den);
        if (out.num_.is_zero()) {
            out.den_ = TPoly(den.zero_value(), {den.leading().field().one()});
        } else if (!out.den_.leading().is_one()) {
            auto u = out.den_.leading().inverse();
            out.num_ = u * out.num_;
            out.den_ = u * out.den_;
        }
        return out;
    }

    static void cancel(TPoly& n, TPoly& d) {
        if (n.degree() <= 0 || d.degree() <= 0) return;
        auto g = gcd(n, d);
        if (g.degree() > 0) {
            n = divmod(n, g).quotient;
            d = divmod(d, g).quotient;
        }
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = TPoly(den_.zero_value(), {den_.leading().field().one()});
            return;
        }
        if (den_.degree() > 0 && num_.degree() > 0) {
            auto g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).quotient;
                den_ = divmod(den_, g).quotient;
            }
        }
        if (!den_.leading().is_one()) {
            auto u = den_.leading().inverse();
            num_ = u * num_;
            den_ = u * den_;
        }
    }

    TPoly num_;
    TPoly den_;
};

namespace detail {

inline SkewPolynomial spread(const TPoly& p, const GroundField& field) {
    const auto n = static_cast<std::size_t>(field.order());
    std::vector<GroundElement> out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        for (std::size_t s = 0; s < (i == 0 ? 0 : n - 1); ++s) out.push_back(field.zero());
        out.push_back(p.coeffs()[i]);
    }
    return SkewPolynomial(field, std::move(out));
}

inline TPoly gather(const SkewPolynomial& p) {
    const auto& field = p.field();
    const auto n = static_cast<std::size_t>(field.order());
    if (!is_central_polynomial(p)) throw Error(Errc::NotInBaseField, to_string(p) + " is not in k^<sigma>(t^n)");
    std::vector<GroundElement> out;
    for (std::size_t i = 0; i < p.coeffs().size(); i += n) out.push_back(p.coeffs()[i]);
    return TPoly(field.zero(), std::move(out));
}

}  // namespace detail

/// T -> t^n.
inline SkewFraction to_fraction(const BaseElement& a) {
    const auto& field = a.field();
    return SkewFraction::make(detail::spread(a.num(), field), detail::spread(a.den(), field));
}

inline BaseElement to_base(const SkewFraction& x) {
    return BaseElement(detail::gather(x.num()), detail::gather(x.den()));
}

inline bool in_base_field(const SkewFraction& x) {
    return is_central_polynomial(x.num()) && is_central_polynomial(x.den());
}

/// Polynomial in x over K.
using BasePolynomial = UPoly<BaseElement>;

inline BasePolynomial base_polynomial(const GroundField& field, std::vector<BaseElement> coeffs) {
    return BasePolynomial(BaseElement::from_rational(field, 0), std::move(coeffs));
}

inline BasePolynomial x_power(const GroundField& field, std::size_t k) {
    auto zero = BaseElement::from_rational(field, 0);
    return BasePolynomial::monomial(BaseElement::from_rational(field, 1), k, zero);
}

/// p mod f.
inline BasePolynomial reduce_mod(const BasePolynomial& p, const BasePolynomial& f) {
    if (p.degree() < f.degree()) return p;
    return divmod(p, f).remainder;
}

/// p(q(x)) mod f.
inline BasePolynomial compose_mod(const BasePolynomial& p, const BasePolynomial& q, const BasePolynomial& f) {
    BasePolynomial acc(p.zero_value());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = reduce_mod(acc * q, f);
        acc = acc + BasePolynomial(p.zero_value(), {p.coeffs()[i]});
    }
    return acc;
}

/// Row i holds the coefficients of q^i mod f, padded to deg f.
inline std::vector<std::vector<BaseElement>> power_matrix(const BasePolynomial& q, const BasePolynomial& f,
                                                          std::size_t rows) {
    const auto d = static_cast<std::size_t>(f.degree());
    std::vector<std::vector<BaseElement>> m;
    BasePolynomial pw(q.zero_value(), {BaseElement::from_rational(q.zero_value().field(), 1)});
    const auto qr = reduce_mod(q, f);
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<BaseElement> row;
        for (std::size_t j = 0; j < d; ++j) row.push_back(pw.coeff(j));
        m.push_back(std::move(row));
        if (i + 1 < rows) pw = reduce_mod(pw * qr, f);
    }
    return m;
}

/// p(q) mod f from the power matrix of q: sum_i p_i * row_i.
inline BasePolynomial apply_power_matrix(const BasePolynomial& p, const std::vector<std::vector<BaseElement>>& m) {
    if (p.degree() >= static_cast<int>(m.size()))
        throw Error(Errc::InvalidArgument, "polynomial degree exceeds the power matrix");
    const auto& zero = p.zero_value();
    std::vector<BaseElement> out(m.empty() ? 0 : m[0].size(), zero);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (!m[i][j].is_zero()) out[j] = out[j] + c * m[i][j];
    }
    return BasePolynomial(zero, std::move(out));
}

/// p is the zero polynomial modulo f.
inline bool vanishes_mod(const BasePolynomial& p, const BasePolynomial& f) { return reduce_mod(p, f).is_zero(); }

/// Rendered in t (T = t^n substituted back) so the text parses as a fraction.
inline std::string to_string(const BaseElement& a) { return to_string(to_fraction(a)); }

inline std::string to_string(const BasePolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const auto& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        std::string xp = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        std::string term;
        if (c.is_one() && k > 0)
            term = xp;
        else
            term = "(" + to_string(c) + ")" + (k > 0 ? "*" + xp : "");
        s += (first ? "" : " + ") + term;
        first = false;
    }
    return s;
}

}  // namespace orefield

#endif  // OREFIELD_BASEFIELD_HPP

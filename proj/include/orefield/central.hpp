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

#ifndef OREFIELD_CENTRAL_HPP
#define OREFIELD_CENTRAL_HPP

// H(t, sigma) as a vector space over its centre K = k^<sigma>(t^n), with
// basis e_j t^m (e_j a basis of H over k^<sigma>, 0 <= m < n). Linear
// algebra over K, or over a commutative extension L = K[x]/(f), is much
// cheaper than elimination with skew fractions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "basefield.hpp"
#include "error.hpp"
#include "ground.hpp"
#include "linalg.hpp"
#include "skewfrac.hpp"
#include "skewpoly.hpp"

namespace orefield {

/// Element of L = K[x]/(f) for irreducible f.
class LElement {
   public:
    LElement(const BasePolynomial* f, BasePolynomial p) : f_(f), p_(reduce_mod(p, *f)) {}

    const BasePolynomial& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    /// Extended Euclid: s p + u f = c with c constant.
    LElement inverse() const {
        if (p_.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in K[x]/(f)");
        const auto zero = p_.zero_value();
        BasePolynomial r0 = *f_, r1 = p_;
        BasePolynomial s0(zero), s1(zero, {BaseElement::from_rational(zero.field(), 1)});
        while (!r1.is_zero()) {
            auto d = divmod(r0, r1);
            r0 = std::exchange(r1, std::move(d.remainder));
            auto next = s0 - d.quotient * s1;
            s0 = std::exchange(s1, std::move(next));
        }
        if (r0.degree() != 0) throw Error(Errc::SingularElement, "f is not irreducible: zero divisor in K[x]/(f)");
        return LElement(f_, r0.leading().inverse() * s0);
    }

    friend LElement operator+(const LElement& a, const LElement& b) { return {a.f_, a.p_ + b.p_}; }
    friend LElement operator-(const LElement& a, const LElement& b) { return {a.f_, a.p_ - b.p_}; }
    friend LElement operator*(const LElement& a, const LElement& b) { return {a.f_, a.p_ * b.p_}; }

   private:
    const BasePolynomial* f_;
    BasePolynomial p_;
};

/// Solves A z = c over K by fraction-free (Bareiss) elimination in k^<sigma>[T].
/// Entries stay bounded by minors of A; plain elimination over K or L swells.
inline std::optional<std::vector<BaseElement>> solve_centre(const Matrix<BaseElement>& a,
                                                             const std::vector<BaseElement>& c) {
    const std::size_t n = a.size();
    if (n == 0) return std::vector<BaseElement>{};
    const auto& field = c[0].field();
    const TPoly one(field.zero(), {field.one()});
    Matrix<TPoly> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        TPoly l = one;
        auto lcm_with = [&](const BaseElement& e) {
            if (!e.is_zero()) l = l * divmod(e.den(), gcd(l, e.den())).quotient;
        };
        for (const auto& e : a[i]) lcm_with(e);
        lcm_with(c[i]);
        for (std::size_t j = 0; j <= n; ++j) {
            const auto& e = j < n ? a[i][j] : c[i];
            m[i].push_back(e.is_zero() ? TPoly(field.zero()) : e.num() * divmod(l, e.den()).quotient);
        }
    }
    TPoly prev = one;
    for (std::size_t k = 0; k < n; ++k) {
        // lowest degree pivot keeps the products small
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero() && (p == n || m[i][k].degree() < m[p][k].degree())) p = i;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                auto v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = prev.degree() == 0 && prev.leading().is_one() ? std::move(v) : divmod(v, prev).quotient;
            }
            m[i][k] = TPoly(field.zero());
        }
        prev = m[k][k];
    }
    // y = det * z stays polynomial; divide once at the end.
    const TPoly& det = m[n - 1][n - 1];
    std::vector<TPoly> y(n, TPoly(field.zero()));
    for (std::size_t k = n; k-- > 0;) {
        TPoly acc = det * m[k][n];
        for (std::size_t j = k + 1; j < n; ++j)
            if (!m[k][j].is_zero() && !y[j].is_zero()) acc = acc - m[k][j] * y[j];
        y[k] = divmod(acc, m[k][k]).quotient;
    }
    std::vector<BaseElement> z;
    for (auto& v : y) z.emplace_back(v, det);
    return z;
}

class CentralForm {
   public:
    explicit CentralForm(const GroundField& field)
        : field_(&field), h_(field.h_basis().size()), n_(static_cast<std::size_t>(field.order())) {
        const std::size_t size = h_ * n_;
        table_.assign(size, std::vector<std::vector<Term>>(size));
        for (std::size_t b = 0; b < size; ++b)
            for (std::size_t c = 0; c < size; ++c) {
                // e_j t^m e_l t^p = e_j sigma^m(e_l) t^(m+p)
                const std::size_t j = b % h_, m = b / h_, l = c % h_, p = c / h_;
                auto prod = field.h_basis()[j] * field.h_basis()[l].sigma(static_cast<int>(m));
                auto lambda = field.h_coordinates(prod);
                const std::size_t s = m + p;
                for (std::size_t r = 0; r < h_; ++r) {
                    if (lambda[r].is_zero()) continue;
                    auto gamma = BaseElement::constant(lambda[r]);
                    if (s >= n_) gamma = gamma * BaseElement::T(field);
                    table_[b][c].push_back({(s % n_) * h_ + r, std::move(gamma)});
                }
            }
    }

    std::size_t size() const { return h_ * n_; }
    /// Index of the basis element 1.
    std::size_t unit() const { return 0; }

    std::vector<BaseElement> polynomial_coords(const SkewPolynomial& p) const {
        const GroundField& field = *field_;
        std::vector<std::vector<GroundElement>> acc(size());
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            if (p.coeffs()[k].is_zero()) continue;
            auto lambda = field.h_coordinates(p.coeffs()[k]);
            const std::size_t m = k % n_, q = k / n_;
            for (std::size_t j = 0; j < h_; ++j) {
                if (lambda[j].is_zero()) continue;
                auto& slot = acc[m * h_ + j];
                if (slot.size() <= q) slot.resize(q + 1, field.zero());
                slot[q] = slot[q] + lambda[j];
            }
        }
        std::vector<BaseElement> out;
        const TPoly one(field.zero(), {field.one()});
        for (auto& a : acc) out.emplace_back(TPoly(field.zero(), std::move(a)), one);
        return out;
    }

    /// K-coordinates of den^-1 num, from den * u = num.
    std::vector<BaseElement> coords(const SkewFraction& x) const {
        auto num = polynomial_coords(x.num());
        if (x.den().degree() == 0) {
            const auto c = BaseElement::constant(x.den().coeffs()[0].inverse());
            for (auto& u : num) u = c * u;
            return num;
        }
        auto den = polynomial_coords(x.den());
        auto z = solve_centre(left_matrix(den), num);
        if (!z) throw Error(Errc::SingularElement, "denominator is not invertible over the centre");
        return *z;
    }

    /// sum_b e_j t^m u_b over a common central denominator.
    SkewFraction element(const std::vector<BaseElement>& u) const {
        const GroundField& field = *field_;
        TPoly den(field.zero(), {field.one()});
        for (const auto& c : u)
            if (!c.is_zero()) den = den * divmod(c.den(), gcd(den, c.den())).quotient;
        std::vector<GroundElement> num;
        for (std::size_t b = 0; b < size(); ++b) {
            if (u[b].is_zero()) continue;
            auto scaled = u[b].num() * divmod(den, u[b].den()).quotient;
            const auto& e = field.h_basis()[b % h_];
            const std::size_t m = b / h_;
            for (std::size_t k = 0; k < scaled.coeffs().size(); ++k) {
                const std::size_t pos = k * n_ + m;
                if (num.size() <= pos) num.resize(pos + 1, field.zero());
                num[pos] = num[pos] + scaled.coeffs()[k] * e;
            }
        }
        return SkewFraction::make(SkewPolynomial(field, std::move(num)), detail::spread(den, field));
    }

    /// Product of sum_b e_b lambda_b and sum_c e_c mu_c, coefficients in K[x]/(f).
    std::vector<BasePolynomial> multiply(const std::vector<BasePolynomial>& lambda, const std::vector<BasePolynomial>& mu,
                                         const BasePolynomial& f) const {
        std::vector<BasePolynomial> out(size(), BasePolynomial(zero()));
        for (std::size_t b = 0; b < size(); ++b) {
            if (lambda[b].is_zero()) continue;
            for (std::size_t c = 0; c < size(); ++c) {
                if (mu[c].is_zero()) continue;
                const auto lm = reduce_mod(lambda[b] * mu[c], f);
                for (const auto& term : table_[b][c]) out[term.index] = out[term.index] + term.gamma * lm;
            }
        }
        return out;
    }

    /// Column c holds the coordinates of u * (basis element c).
    Matrix<BaseElement> left_matrix(const std::vector<BaseElement>& u) const {
        Matrix<BaseElement> m(size(), std::vector<BaseElement>(size(), zero()));
        for (std::size_t b = 0; b < size(); ++b) {
            if (u[b].is_zero()) continue;
            for (std::size_t c = 0; c < size(); ++c)
                for (const auto& term : table_[b][c]) m[term.index][c] = m[term.index][c] + term.gamma * u[b];
        }
        return m;
    }

    /// Same, with entries sum_b gamma^d_bc lambda_b in L for lambda in L^N.
    Matrix<LElement> left_matrix(const std::vector<BasePolynomial>& lambda, const BasePolynomial& f) const {
        const auto zp = BasePolynomial(zero());
        Matrix<LElement> m(size(), std::vector<LElement>(size(), LElement(&f, zp)));
        for (std::size_t b = 0; b < size(); ++b) {
            if (lambda[b].is_zero()) continue;
            for (std::size_t c = 0; c < size(); ++c)
                for (const auto& term : table_[b][c])
                    m[term.index][c] = m[term.index][c] + LElement(&f, term.gamma * lambda[b]);
        }
        return m;
    }

   private:
    struct Term {
        std::size_t index;
        BaseElement gamma;
    };

    BaseElement zero() const { return BaseElement::from_rational(*field_, 0); }
    BaseElement one() const { return BaseElement::from_rational(*field_, 1); }

    const GroundField* field_;
    std::size_t h_;
    std::size_t n_;
    /// table_[b][c]: basis product b * c as a combination over K.
    std::vector<std::vector<std::vector<Term>>> table_;
};

}  // namespace orefield

#endif  // OREFIELD_CENTRAL_HPP

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

#ifndef OREFIELD_CATALOG_HPP
#define OREFIELD_CATALOG_HPP

// Built-in towers and extension scenarios.
//
//   T1  rational Hamilton quaternions, sigma = Id: Q(T)(sqrt(1+T)) inside
//       Q(T)(sqrt(1+T), sqrt(1+T^2)); groups Z/2 and (Z/2)^2.
//   T2  Q(i) with conjugation, T = t^2: three levels adjoining
//       sqrt(1+T), sqrt(1+T^2), sqrt(1+2T).
//   T3  Q, sigma = Id: the cyclic cubic s x^3 - x^2 + (1-3s) x + s.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "basefield.hpp"
#include "error.hpp"
#include "extend.hpp"
#include "ground.hpp"
#include "group.hpp"
#include "linalg.hpp"
#include "tower.hpp"

namespace orefield::catalog {

/// P(x + w y) P(x - w y) with y^2 = r: the polynomial whose roots are
/// theta +- w sqrt(r) for the roots theta of P.
inline BasePolynomial adjoin_radical(const BasePolynomial& p, const BaseElement& r, const BaseElement& w) {
    const auto zero = p.zero_value();
    BasePolynomial a(zero), b(zero);
    const BasePolynomial x = BasePolynomial::monomial(BaseElement::from_rational(r.field(), 1), 1, zero);
    const BasePolynomial wp(zero, {w});
    const BasePolynomial wrp(zero, {w * r});
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        // (a + y b)(x + w y) = (a x + w r b) + y (b x + w a)
        BasePolynomial na = a * x + wrp * b;
        BasePolynomial nb = b * x + wp * a;
        a = na + BasePolynomial(zero, {p.coeffs()[i]});
        b = nb;
    }
    return a * a - BasePolynomial(zero, {r}) * (b * b);
}

/// Minimal polynomial of sum_k 2^k sqrt(r_k).
inline BasePolynomial multiquadratic_polynomial(const GroundField& field, const std::vector<BaseElement>& radicands) {
    BasePolynomial p = x_power(field, 1);
    Rational w = 1;
    for (const auto& r : radicands) {
        p = adjoin_radical(p, r, BaseElement::from_rational(field, w));
        w *= 2;
    }
    return p;
}

/// Residual value of sum_k 2^k (+-1) with the sign of bit k of flips negative.
inline GroundElement multiquadratic_seed(const GroundField& field, std::size_t count, std::size_t flips) {
    Rational v = 0, w = 1;
    for (std::size_t k = 0; k < count; ++k) {
        v += ((flips >> k) & 1U) ? -w : w;
        w *= 2;
    }
    return field.from_rational(v);
}

/// (Z/2)^m with generators named a, b, c, ...; bit k of an index flips sqrt(r_k).
inline FiniteGroup elementary_abelian(std::size_t m) {
    FiniteGroup g = FiniteGroup::cyclic(1);
    for (std::size_t k = 0; k < m; ++k) {
        auto c = FiniteGroup::cyclic(2, std::string(1, static_cast<char>('a' + k)));
        g = k == 0 ? c : FiniteGroup::product(g, c);
    }
    return g;
}

/// Coordinates of theta^0, ..., theta^(d-1) in the radical basis
/// y_S = prod_{k in S} sqrt(r_k), theta = sum_k 2^k sqrt(r_k).
inline Matrix<BaseElement> theta_powers(const GroundField& field, const std::vector<BaseElement>& radicands) {
    const std::size_t m = radicands.size();
    const std::size_t d = std::size_t{1} << m;
    const auto zero = BaseElement::from_rational(field, 0);
    auto mul = [&](const std::vector<BaseElement>& u, const std::vector<BaseElement>& v) {
        std::vector<BaseElement> out(d, zero);
        for (std::size_t s = 0; s < d; ++s) {
            if (u[s].is_zero()) continue;
            for (std::size_t t = 0; t < d; ++t) {
                if (v[t].is_zero()) continue;
                BaseElement c = u[s] * v[t];
                for (std::size_t k = 0; k < m; ++k)
                    if ((s & t) >> k & 1U) c = c * radicands[k];
                out[s ^ t] = out[s ^ t] + c;
            }
        }
        return out;
    };
    std::vector<BaseElement> theta(d, zero);
    Rational w = 1;
    for (std::size_t k = 0; k < m; ++k, w *= 2) theta[std::size_t{1} << k] = BaseElement::from_rational(field, w);
    Matrix<BaseElement> rows;
    std::vector<BaseElement> pw(d, zero);
    pw[0] = BaseElement::from_rational(field, 1);
    for (std::size_t i = 0; i < d; ++i) {
        rows.push_back(pw);
        pw = mul(pw, theta);
    }
    return rows;
}

/// P with P(theta) equal to the element with radical-basis coordinates target.
inline BasePolynomial express_in_theta(const GroundField& field, const Matrix<BaseElement>& powers,
                                       const std::vector<BaseElement>& target) {
    const auto zero = BaseElement::from_rational(field, 0);
    const auto one = BaseElement::from_rational(field, 1);
    auto sol = solve_left(powers, powers.size(), target, zero, one);
    if (!sol) throw Error(Errc::ValidationFailed, "theta is not a primitive element");
    return base_polynomial(field, *sol);
}

/// Coordinates of sum_k 2^k (+-1) sqrt(r_k), sign flipped on the bits of flips,
/// for the first `used` radicals.
inline std::vector<BaseElement> signed_theta(const GroundField& field, std::size_t m, std::size_t used,
                                             std::size_t flips) {
    const auto zero = BaseElement::from_rational(field, 0);
    std::vector<BaseElement> v(std::size_t{1} << m, zero);
    Rational w = 1;
    for (std::size_t k = 0; k < used; ++k, w *= 2)
        v[std::size_t{1} << k] = BaseElement::from_rational(field, ((flips >> k) & 1U) ? -w : w);
    return v;
}

inline ExtensionSpec multiquadratic_spec(const std::string& name, std::shared_ptr<const GroundField> field,
                                         const std::vector<BaseElement>& radicands, int precision = 96) {
    ExtensionSpec spec;
    spec.name = name;
    spec.field = field;
    spec.f = multiquadratic_polynomial(*field, radicands);
    const std::size_t m = radicands.size();
    spec.rho_seed = multiquadratic_seed(*field, m, 0);
    spec.rho_precision = precision;
    spec.group = elementary_abelian(m);
    const auto powers = theta_powers(*field, radicands);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t element = std::size_t{1} << k;
        auto image = express_in_theta(*field, powers, signed_theta(*field, m, m, element));
        spec.generators.push_back({spec.group.name(element), image, spec.group.name(element)});
    }
    return spec;
}

/// Monic form of s x^3 - x^2 + (1-3s) x + s over Q(s), s = T.
inline BasePolynomial shanks_polynomial(const GroundField& field) {
    auto one = BaseElement::from_rational(field, 1);
    auto s = BaseElement::T(field);
    auto inv_s = s.inverse();
    return base_polynomial(field, {one, (one - BaseElement::from_rational(field, 3) * s) * inv_s, -inv_s, one});
}

inline ExtensionSpec shanks_spec(int precision = 96) {
    auto field = fields::rationals();
    ExtensionSpec spec;
    spec.name = "shanks-cubic";
    spec.field = field;
    spec.f = shanks_polynomial(*field);
    spec.rho_seed = field->zero();
    spec.rho_precision = precision;
    spec.group = FiniteGroup::cyclic(3, "g");
    auto image = match_roots(spec.f, field->zero(), spec.f, field->one());
    if (!image) throw Error(Errc::ValidationFailed, "no Galois image found for the cubic");
    spec.generators.push_back({"g", *image, "g"});
    return spec;
}

/// 1 + T, 1 + T^2, then 1 + 2T: independent non-squares with square constant term.
inline std::vector<BaseElement> radicands(const GroundField& field, std::size_t count) {
    std::vector<BaseElement> out;
    auto one = BaseElement::from_rational(field, 1);
    for (std::size_t k = 1; k <= count; ++k) {
        if (k <= 2)
            out.push_back(one + BaseElement::T(field, static_cast<int>(k)));
        else
            out.push_back(one + BaseElement::from_rational(field, static_cast<long>(k) - 1) * BaseElement::T(field));
    }
    return out;
}

inline std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

/// Levels (Z/2)^1 ... (Z/2)^depth with s_n forgetting the last coordinate.
inline TowerSpec multiquadratic_tower(const std::string& name, std::shared_ptr<const GroundField> field,
                                      std::size_t depth) {
    TowerSpec spec;
    spec.name = name;
    const auto rads = radicands(*field, depth);
    for (std::size_t n = 1; n <= depth; ++n) {
        std::vector<BaseElement> r(rads.begin(), rads.begin() + static_cast<long>(n));
        spec.levels.push_back(multiquadratic_spec(name + "/level-" + std::to_string(n), field, r));
        spec.eps.push_back(identity_map(std::size_t{1} << n));
        if (n > 1) {
            // theta_(n-1) = sum_{k < n-1} 2^k sqrt(r_k) inside level n.
            spec.embeddings.push_back(express_in_theta(*field, theta_powers(*field, r), signed_theta(*field, n, n - 1, 0)));
            std::vector<std::size_t> epi;
            const std::size_t mask = (std::size_t{1} << (n - 1)) - 1;
            for (std::size_t g = 0; g < (std::size_t{1} << n); ++g) epi.push_back(g & mask);
            spec.epis.push_back(std::move(epi));
        }
    }
    return spec;
}

inline TowerSpec tower_spec(const std::string& name) {
    if (name == "T1") return multiquadratic_tower("T1", fields::hamilton_rational(), 2);
    if (name == "T2") return multiquadratic_tower("T2", fields::gaussian_conjugation(), 3);
    if (name == "T3") {
        TowerSpec spec;
        spec.name = "T3";
        spec.levels.push_back(shanks_spec());
        spec.eps.push_back(identity_map(3));
        return spec;
    }
    throw Error(Errc::UnknownCatalogEntry, "no catalog tower named '" + name + "'");
}

inline std::vector<std::string> tower_names() { return {"T1", "T2", "T3"}; }

/// The first level of each tower as a stand-alone scenario.
inline ExtensionSpec extension_spec(const std::string& name) {
    if (name == "hq-quadratic")
        return multiquadratic_spec(name, fields::hamilton_rational(), radicands(*fields::hamilton_rational(), 1));
    if (name == "qi-quadratic")
        return multiquadratic_spec(name, fields::gaussian_conjugation(), radicands(*fields::gaussian_conjugation(), 1));
    if (name == "hq-biquadratic")
        return multiquadratic_spec(name, fields::hamilton_rational(), radicands(*fields::hamilton_rational(), 2));
    if (name == "shanks-cubic") return shanks_spec();
    throw Error(Errc::UnknownCatalogEntry, "no catalog scenario named '" + name + "'");
}

inline std::vector<std::string> extension_names() { return {"hq-quadratic", "qi-quadratic", "hq-biquadratic", "shanks-cubic"}; }

}  // namespace orefield::catalog

#endif  // OREFIELD_CATALOG_HPP

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

#ifndef OREFIELD_SUITES_HPP
#define OREFIELD_SUITES_HPP

// Seeded property suites. Each returns named checks; the same seed always
// gives the same checks with the same details.

#include <cstdint>
#include <string>
#include <vector>

#include "extend.hpp"
#include "laurent.hpp"
#include "random.hpp"
#include "report.hpp"
#include "skewfrac.hpp"
#include "skewpoly.hpp"
#include "tower.hpp"

namespace orefield::suites {

namespace detail {

// Counts failures and keeps the first counterexample.
struct Tally {
    std::string name{};
    std::string reference{};
    int trials = 0;
    int failures = 0;
    std::string first{};

    void record(bool ok, const std::string& what) {
        ++trials;
        if (!ok && failures++ == 0) first = what;
    }
    Check check() const {
        if (failures == 0) return make_check(name, true, std::to_string(trials) + " trials", reference);
        return make_check(name, false,
                          std::to_string(failures) + " of " + std::to_string(trials) + " failed; first: " + first,
                          reference);
    }
};

inline std::string prefix(const std::string& label, const std::string& what) {
    return label.empty() ? what : label + "/" + what;
}

}  // namespace detail

/// Associativity, distributivity and the twist rule t a = sigma(a) t.
inline std::vector<Check> ring_laws(const GroundField& field, const std::string& label, std::uint64_t seed,
                                   int triples = 1000, int twists = 100, int max_deg = 4) {
    Rng rng(seed);
    detail::Tally assoc{detail::prefix(label, "ring/associativity"), "(fg)h = f(gh) in H[t,sigma]"};
    detail::Tally dist{detail::prefix(label, "ring/distributivity"), "f(g+h) = fg+fh and (f+g)h = fh+gh"};
    detail::Tally twist{detail::prefix(label, "ring/twist-rule"), "t a = sigma(a) t"};
    for (int k = 0; k < triples; ++k) {
        auto f = rng.polynomial(field, max_deg), g = rng.polynomial(field, max_deg), h = rng.polynomial(field, max_deg);
        assoc.record((f * g) * h == f * (g * h), "f = " + to_string(f) + ", g = " + to_string(g) + ", h = " + to_string(h));
        dist.record(f * (g + h) == f * g + f * h && (f + g) * h == f * h + g * h,
                    "f = " + to_string(f) + ", g = " + to_string(g) + ", h = " + to_string(h));
    }
    const auto t = SkewPolynomial::t(field);
    for (int k = 0; k < twists; ++k) {
        auto a = rng.element(field);
        twist.record(t * SkewPolynomial::constant(a) == SkewPolynomial::constant(a.sigma(1)) * t, "a = " + to_string(a));
    }
    return {assoc.check(), dist.check(), twist.check()};
}

/// f = q g + r with deg r < deg g, on both sides; changing q by any nonzero
/// polynomial breaks the degree bound.
inline std::vector<Check> division(const GroundField& field, const std::string& label, std::uint64_t seed,
                                   int pairs = 1000, int max_deg = 8) {
    Rng rng(seed);
    detail::Tally ident{detail::prefix(label, "division/identity"), "f = q g + r, deg r < deg g"};
    detail::Tally left{detail::prefix(label, "division/left-identity"), "f = g q + r, deg r < deg g"};
    detail::Tally unique{detail::prefix(label, "division/uniqueness"), "quotient and remainder are unique"};
    for (int k = 0; k < pairs; ++k) {
        auto f = rng.polynomial(field, max_deg);
        auto g = rng.nonzero_polynomial(field, max_deg);
        const std::string what = "f = " + to_string(f) + ", g = " + to_string(g);
        auto d = divmod_right(f, g);
        ident.record(d.quotient * g + d.remainder == f && d.remainder.degree() < g.degree(), what);
        auto e = divmod_left(f, g);
        left.record(g * e.quotient + e.remainder == f && e.remainder.degree() < g.degree(), what);
        auto delta = rng.nonzero_polynomial(field, 2);
        unique.record((f - (d.quotient + delta) * g).degree() >= g.degree(), what + ", delta = " + to_string(delta));
    }
    return {ident.check(), left.check(), unique.check()};
}

/// The worked instance t^2 + i = (t - i)(t - i) + (1 + i) in Q(i)[t, conj].
inline Check worked_division(const GroundField& qi, const std::string& label) {
    auto i = qi.element({Rational(0), Rational(1)});
    auto t = SkewPolynomial::t(qi);
    auto ci = SkewPolynomial::constant(i);
    auto f = t * t + ci;
    auto g = t - ci;
    auto d = divmod_right(f, g);
    const bool ok = d.quotient == t - ci && d.remainder == SkewPolynomial::constant(qi.one() + i);
    return make_check(detail::prefix(label, "division/worked-instance"), ok,
                      "q = " + to_string(d.quotient) + ", r = " + to_string(d.remainder),
                      "t^2 + i = (t - i)(t - i) + (1 + i)");
}

/// Field axioms, fr-eq coherence and Ore witnesses on random fraction pairs.
inline std::vector<Check> fractions(const GroundField& field, const std::string& label, std::uint64_t seed,
                                   int pairs = 500, int max_deg = 2) {
    Rng rng(seed);
    detail::Tally axioms{detail::prefix(label, "fractions/field-axioms"),
                         "H(t,sigma) is a skew field: ring laws and two-sided inverses"};
    detail::Tally coherent{detail::prefix(label, "fractions/eq-coherence"),
                           "fr-eq is independent of the representative"};
    detail::Tally witness{detail::prefix(label, "fractions/ore-witness"), "a b1 = b a1 with b1 != 0"};
    const auto one = SkewFraction::one(field);
    for (int k = 0; k < pairs; ++k) {
        auto x = random_nonzero_fraction(rng, field, max_deg);
        auto y = random_fraction(rng, field, max_deg);
        auto z = random_fraction(rng, field, 1);
        const std::string what = "x = " + to_string(x) + ", y = " + to_string(y) + ", z = " + to_string(z);
        const bool ok = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
                        (y + z) * x == y * x + z * x && x * x.inverse() == one && x.inverse() * x == one &&
                        x + y == y + x && (x - x).is_zero();
        axioms.record(ok, what);
        // (c den)^-1 (c num) is the same element for any nonzero c.
        auto c = rng.nonzero_polynomial(field, 2);
        auto other = SkewFraction::make(c * x.num(), c * x.den());
        coherent.record(fr_eq(x, other) && other.same_form(x) && fr_eq(x, y) == fr_eq(y, x), what);
        auto a = rng.nonzero_polynomial(field, 3);
        auto b = rng.nonzero_polynomial(field, 3);
        auto w = ore_witness(a, b);
        witness.record(!w.second.is_zero() && a * w.second == b * w.first,
                       "a = " + to_string(a) + ", b = " + to_string(b));
    }
    return {axioms.check(), coherent.check(), witness.check()};
}

/// Central polynomials up to max_deg against the expected list.
inline Check centre(const GroundField& field, const std::string& label, int max_deg,
                    const std::vector<SkewPolynomial>& expected) {
    auto basis = fr_center_basis(field, max_deg);
    bool ok = basis.size() == expected.size();
    for (std::size_t k = 0; ok && k < basis.size(); ++k) ok = basis[k] == expected[k];
    std::string listed;
    for (const auto& b : basis) listed += (listed.empty() ? "" : ", ") + to_string(b);
    return make_check(detail::prefix(label, "centre/basis"), ok, "{" + listed + "}",
                      "central polynomials of degree <= " + std::to_string(max_deg));
}

/// Field-independent form of the centre check: every basis polynomial
/// commutes with t and H, degrees are multiples of the order of sigma, and
/// there are (max_deg / n + 1) of them per invariant basis element.
inline Check centre_structure(const GroundField& field, const std::string& label, int max_deg) {
    auto basis = fr_center_basis(field, max_deg);
    Rng rng(0);
    std::string bad;
    for (const auto& b : basis) {
        const bool central = fr_is_central(SkewFraction::from_polynomial(b), 0, rng);
        if (!central || b.degree() % field.order() != 0) bad = to_string(b);
    }
    const std::size_t expected =
        (static_cast<std::size_t>(max_deg / field.order()) + 1) * field.invariant_basis().size();
    const bool ok = bad.empty() && basis.size() == expected;
    std::string details = std::to_string(basis.size()) + " basis polynomials, expected " + std::to_string(expected);
    if (!bad.empty()) details += "; not central: " + bad;
    return make_check(detail::prefix(label, "centre/structure"), ok, details,
                      "centre of H(t,sigma) is k^<sigma>(t^n)");
}

/// ls-embed is a ring homomorphism and injective to the stated precision.
inline std::vector<Check> laurent(const GroundField& field, const std::string& label, std::uint64_t seed,
                                  int count = 500, int precision = 64, int max_deg = 2) {
    Rng rng(seed);
    detail::Tally hom{detail::prefix(label, "laurent/homomorphism"),
                      "embed(x y) = embed(x) embed(y), embed(x + y) = embed(x) + embed(y)"};
    detail::Tally inj{detail::prefix(label, "laurent/injectivity"), "x != 0 implies embed(x) != 0 mod t^N"};
    detail::Tally inv{detail::prefix(label, "laurent/inverse"), "embed(x^-1) = embed(x)^-1"};
    for (int k = 0; k < count; ++k) {
        auto x = random_nonzero_fraction(rng, field, max_deg);
        auto y = random_fraction(rng, field, max_deg);
        const std::string what = "x = " + to_string(x) + ", y = " + to_string(y);
        auto ex = ls_embed(x, precision);
        auto ey = ls_embed(y, precision);
        hom.record(agree(ls_embed(x * y, precision), ex * ey) && agree(ls_embed(x + y, precision), ex + ey), what);
        inj.record(!ex.is_zero() && (fr_eq(x, y) || !agree(ex, ey)), what);
        inv.record(agree(ls_embed(x.inverse(), precision), ex.inverse()), what);
    }
    return {hom.check(), inj.check(), inv.check()};
}

namespace detail {

inline TensorElement random_tensor(Rng& rng, const ExtensionScenario& sc, int max_deg, bool nonzero) {
    for (;;) {
        std::vector<SkewFraction> c;
        for (std::size_t i = 0; i < sc.degree(); ++i)
            c.push_back(SkewFraction::from_polynomial(rng.polynomial(sc.field(), max_deg, 3)));
        auto e = sc.element(std::move(c));
        if (!nonzero || !e.is_zero()) return e;
    }
}

/// Series in k^<sigma>[[t^n]] with small random coefficients.
inline TwistedSeries random_invariant_series(Rng& rng, const GroundField& field, int precision, int terms) {
    const int n = field.order();
    std::vector<GroundElement> c(static_cast<std::size_t>(precision), field.zero());
    for (int k = 0; k < terms && k * n < precision; ++k) {
        GroundElement v = field.zero();
        for (const auto& b : field.invariant_basis()) v = v + rng.rational(4) * b;
        c[static_cast<std::size_t>(k * n)] = v;
    }
    return TwistedSeries(field, 0, std::move(c), precision);
}

}  // namespace detail

/// Division-ring certificate, Galois action, fixed space, tau and the
/// canonical decomposition for one validated scenario.
inline std::vector<Check> extension(const ExtensionScenario& sc, const std::string& label, std::uint64_t seed,
                                    int inversions = 200, int products = 20, int decompositions = 20,
                                    int precision = 48, int inverse_degree = 4) {
    Rng rng(seed);
    const auto& field = sc.field();
    const auto& group = sc.group();
    std::vector<Check> out;

    detail::Tally inv{detail::prefix(label, "ext/inverse"), "M is a division ring: a b = b a = 1"};
    for (int k = 0; k < inversions; ++k) {
        auto a = detail::random_tensor(rng, sc, inverse_degree, true);
        bool ok = false;
        try {
            auto b = a.inverse();
            ok = (a * b).is_one() && (b * a).is_one();
        } catch (const Error&) {
            ok = false;
        }
        inv.record(ok, "a = " + to_string(a));
    }
    out.push_back(inv.check());

    // Psi(b) Psi(a) = Psi(ba) on the basis x^i and on random elements.
    detail::Tally table{detail::prefix(label, "ext/psi-table"), "Psi(g) o Psi(h) = Psi(gh) for all g, h"};
    std::vector<TensorElement> probes;
    auto xi = sc.one();
    for (std::size_t i = 0; i < sc.degree(); ++i) {
        probes.push_back(xi);
        xi = xi * sc.x();
    }
    probes.push_back(detail::random_tensor(rng, sc, 2, true));
    for (std::size_t g = 0; g < group.order(); ++g)
        for (std::size_t h = 0; h < group.order(); ++h)
            for (const auto& p : probes)
                table.record(p.galois_apply(h).galois_apply(g) == p.galois_apply(group.multiply(g, h)),
                             "g = " + group.name(g) + ", h = " + group.name(h));
    out.push_back(table.check());

    // Psi(g) is a ring automorphism fixing H(t,sigma).
    detail::Tally autom{detail::prefix(label, "ext/psi-automorphism"), "Psi(g)(a b) = Psi(g)(a) Psi(g)(b)"};
    for (std::size_t g = 0; g < group.order(); ++g) {
        auto a = detail::random_tensor(rng, sc, 2, false);
        auto b = detail::random_tensor(rng, sc, 2, false);
        autom.record((a * b).galois_apply(g) == a.galois_apply(g) * b.galois_apply(g), "g = " + group.name(g));
    }
    out.push_back(autom.check());

    std::vector<std::size_t> all(group.order());
    for (std::size_t g = 0; g < all.size(); ++g) all[g] = g;
    auto fixed = sc.fixed_space(all);
    out.push_back(make_check(detail::prefix(label, "ext/fixed-space"), fixed.size() == 1 && sc.is_scalar_vector(fixed[0]),
                             "dimension " + std::to_string(fixed.size()), "M^G = H(t,sigma)"));

    detail::Tally tau{detail::prefix(label, "ext/tau-multiplicative"),
                      "tau(a b) = tau(a) tau(b) mod t^" + std::to_string(precision)};
    for (int k = 0; k < products; ++k) {
        auto a = detail::random_tensor(rng, sc, 3, false);
        auto b = detail::random_tensor(rng, sc, 3, false);
        auto lhs = (a * b).tau(precision);
        auto rhs = a.tau(precision) * b.tau(precision);
        tau.record(lhs.precision() >= precision && rhs.precision() >= precision && agree(lhs, rhs),
                   "a = " + to_string(a) + ", b = " + to_string(b));
    }
    out.push_back(tau.check());

    // Terms whose tau-images cancel, using t^n (x) z = 1 (x) t^n z.
    detail::Tally zero{detail::prefix(label, "ext/decomposition-zero"),
                       "tau(sum h (x) z) = 0 forces every z_kj = 0 mod t^" + std::to_string(precision)};
    detail::Tally sides{detail::prefix(label, "ext/decomposition-identity"),
                        "sum h_m (x) z_m = sum (e_j t^k) (x) z_kj under tau"};
    const auto tn = SkewPolynomial::t(field, static_cast<std::size_t>(field.order()));
    const auto tn_series = TwistedSeries::from_polynomial(tn, precision);
    for (int k = 0; k < decompositions; ++k) {
        auto h = rng.nonzero_polynomial(field, 3, 3);
        auto g = rng.nonzero_polynomial(field, 3, 3);
        auto z = detail::random_invariant_series(rng, field, precision, 6);
        auto w = detail::random_invariant_series(rng, field, precision, 6);
        std::vector<std::pair<SkewFraction, TwistedSeries>> terms{
            {SkewFraction::from_polynomial(h), z},
            {SkewFraction::from_polynomial(g * tn), w},
            {SkewFraction::from_polynomial(g), -(tn_series * w).truncate(precision)},
            {SkewFraction::from_polynomial(-h), z},
        };
        auto dec = canonical_decomposition(terms, field, precision);
        auto [lhs, rhs] = decomposition_sides(terms, dec, field, precision);
        zero.record(lhs.is_zero() && dec.all_zero(), "h = " + to_string(h) + ", g = " + to_string(g));
        std::vector<std::pair<SkewFraction, TwistedSeries>> live{{SkewFraction::from_polynomial(h), z},
                                                                 {SkewFraction::from_polynomial(g), w}};
        auto dec2 = canonical_decomposition(live, field, precision);
        auto [l2, r2] = decomposition_sides(live, dec2, field, precision);
        sides.record(agree(l2, r2) && !dec2.all_zero(), "h = " + to_string(h) + ", g = " + to_string(g));
    }
    out.push_back(zero.check());
    out.push_back(sides.check());
    return out;
}

/// Degree ledger, compatibility, functoriality and the corrupted-eps control.
inline std::vector<Check> tower(const TowerScenario& ts) {
    std::vector<Check> out;
    for (const auto& row : ts.degree_ledger()) {
        const bool ok = row.degree_matches && row.fixed_space_trivial;
        out.push_back(make_check("tower/ledger/level-" + std::to_string(row.level), ok,
                                 "d = " + std::to_string(row.dimension) + ", |G| = " + std::to_string(row.group_order) +
                                     ", fixed space " + (row.fixed_space_trivial ? "trivial" : "not trivial"),
                                 "[M_n : H] = |G_n| and M_n^(G_n) = H"));
    }
    for (auto c : ts.check_compatibility()) {
        c.name = "tower/" + c.name;
        out.push_back(std::move(c));
    }
    for (auto c : ts.check_functoriality()) {
        c.name = "tower/" + c.name;
        out.push_back(std::move(c));
    }
    const std::string control = "tower/negative-control/corrupted-eps";
    if (ts.depth() < 2) {
        out.push_back({control, Status::Skipped, "single level: no restriction relation to corrupt",
                       "a wrong eps must be detected"});
        return out;
    }
    // Swap eps of the identity and the first generator on the top level.
    const std::size_t top = ts.depth() - 1;
    const auto& g = ts.level(top).group();
    auto corrupted = swap_eps(ts.spec(), top, g.identity(), g.identity() == 0 ? 1 : 0);
    std::string located;
    for (const auto& c : ts.check_compatibility(&corrupted))
        if (!c.passed()) located += (located.empty() ? "" : ", ") + c.name;
    out.push_back(make_check(control, !located.empty(),
                             located.empty() ? "corruption went unnoticed" : "detected at " + located,
                             "a wrong eps must be detected"));
    return out;
}

}  // namespace orefield::suites

#endif  // OREFIELD_SUITES_HPP

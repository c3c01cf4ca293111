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

#ifndef OREFIELD_EXTEND_HPP
#define OREFIELD_EXTEND_HPP

// M = H(t, sigma) (x) L for L = K[x]/(f), K = k^<sigma>(t^n), with L embedded
// in k^<sigma>((t^n)) through a series root rho. Elements of M are
// coordinate vectors over H(t, sigma) in the basis 1, x, ..., x^(d-1);
// x is central.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "basefield.hpp"
#include "central.hpp"
#include "error.hpp"
#include "ground.hpp"
#include "group.hpp"
#include "irreducible.hpp"
#include "laurent.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "skewfrac.hpp"

namespace orefield {

struct GaloisGenerator {
    std::string name;
    /// Image of x as a polynomial of degree < d over K.
    BasePolynomial image;
    /// Group element the generator stands for.
    std::string element;
};

struct ExtensionSpec {
    std::string name;
    std::shared_ptr<const GroundField> field;
    BasePolynomial f;
    std::optional<GroundElement> rho_seed;
    std::optional<TwistedSeries> rho_series;
    int rho_precision = 96;
    std::vector<GaloisGenerator> generators;
    FiniteGroup group;
};

namespace detail {

/// Integer coefficient lists of D f at T = c, for k^<sigma> = Q.
inline std::optional<std::vector<Integer>> specialise(const std::vector<TPoly>& cleared, const Rational& c) {
    std::vector<Rational> vals;
    for (const auto& p : cleared) {
        Rational acc = 0;
        for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * c + p.coeffs()[k].coords()[0];
        vals.push_back(acc);
    }
    if (sgn(vals.back()) == 0) return std::nullopt;
    Integer l = 1;
    for (const auto& v : vals) l = lcm(l, Integer(v.get_den()));
    std::vector<Integer> out;
    for (const auto& v : vals) out.push_back(Integer(v * Rational(l)));
    return out;
}

}  // namespace detail

/// Irreducibility of f over K certified by an irreducible specialisation
/// T = c over Q (Gauss's lemma: a factorisation over K survives any
/// specialisation that keeps the leading coefficient). Only available when
/// k^<sigma> = Q.
inline Check certify_irreducible(const BasePolynomial& f, const GroundField& field) {
    const std::string ref = "f irreducible over k^<sigma>(t^n)";
    if (f.degree() <= 1) return make_check("f-irreducible", true, "degree " + std::to_string(f.degree()), ref);
    if (field.invariant_basis().size() != 1)
        return {"f-irreducible", Status::Skipped, "specialisation test needs k^<sigma> = Q", ref};
    const auto cleared = clear_denominators(f);
    bool capped = false;
    for (int c : {2, 3, 5, 7, -2, -3, 11, 13, 4, 6}) {
        auto p = detail::specialise(cleared, Rational(c));
        if (!p || p->size() != static_cast<std::size_t>(f.degree()) + 1) continue;
        try {
            if (is_irreducible_over_q(*p))
                return make_check("f-irreducible", true, "irreducible specialisation at T=" + std::to_string(c), ref);
        } catch (const Error& e) {
            if (e.code() != Errc::CapExceeded) throw;
            capped = true;
        }
    }
    if (capped) return {"f-irreducible", Status::Skipped, "specialisations exceeded the search budget", ref};
    return make_check("f-irreducible", false, "every tried specialisation is reducible", ref);
}

class ExtensionScenario;

class TensorElement {
   public:
    TensorElement() = default;
    TensorElement(const ExtensionScenario& sc, std::vector<SkewFraction> coords);

    const ExtensionScenario& scenario() const { return *sc_; }
    const std::vector<SkewFraction>& coords() const { return coords_; }
    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_one() const;

    TensorElement inverse() const;
    TensorElement galois_apply(std::size_t g) const;
    TwistedSeries tau(int precision) const;

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator-(const TensorElement& a);
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) { return a + (-b); }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend TensorElement multiply_direct(const TensorElement& a, const TensorElement& b);
    friend bool operator==(const TensorElement& a, const TensorElement& b);

   private:
    const ExtensionScenario* sc_ = nullptr;
    std::vector<SkewFraction> coords_;
};

class ExtensionScenario {
   public:
    struct Built {
        std::shared_ptr<const ExtensionScenario> scenario;
        std::vector<Check> checks;
        bool ok() const {
            for (const auto& c : checks)
                if (!c.passed()) return false;
            return scenario != nullptr;
        }
    };

    /// Runs every structural check; the scenario is returned only when all pass.
    static Built build(const ExtensionSpec& spec) {
        Built out;
        std::shared_ptr<ExtensionScenario> sc(new ExtensionScenario());
        sc->spec_ = spec;
        const GroundField& field = *spec.field;
        sc->form_ = std::make_shared<const CentralForm>(field);
        auto& checks = out.checks;
        const auto& f = spec.f;
        const int d = f.degree();
        if (d < 1) throw Error(Errc::InvalidScenario, "f must have positive degree");
        sc->d_ = static_cast<std::size_t>(d);
        checks.push_back(make_check("f-monic", f.leading().is_one(), "deg f = " + std::to_string(d),
                                    "f monic of degree d over k^<sigma>(t^n)"));
        if (!f.leading().is_one()) return out;
        checks.push_back(certify_irreducible(f, field));

        // rho
        TwistedSeries rho;
        if (spec.rho_series) {
            rho = *spec.rho_series;
        } else if (spec.rho_seed) {
            rho = ls_newton_root(f, *spec.rho_seed, spec.rho_precision);
        } else {
            throw Error(Errc::InvalidScenario, "scenario needs a rho seed or series");
        }
        sc->rho_ = rho;
        sc->rho_powers_.push_back(TwistedSeries::one(field, rho.precision()));
        for (std::size_t i = 1; i < sc->d_; ++i) sc->rho_powers_.push_back(sc->rho_powers_.back() * rho);
        bool invariant = rho.valuation() >= 0 || rho.is_zero();
        for (std::size_t i = 0; i < rho.coeffs().size() && invariant; ++i) {
            const auto& c = rho.coeffs()[i];
            if (c.is_zero()) continue;
            const int e = rho.valuation() + static_cast<int>(i);
            invariant = e % field.order() == 0 && field.is_invariant_central(c);
        }
        checks.push_back(make_check("rho-invariant", invariant, "precision " + std::to_string(rho.precision()),
                                    "rho lies in k^<sigma>[[t^n]]"));
        if (!invariant) return out;
        auto residual = evaluate_cleared(clear_denominators(f), rho);
        checks.push_back(make_check(
            "rho-root", residual.is_zero(),
            residual.is_zero() ? "f(rho) = 0 mod t^" + std::to_string(residual.precision())
                               : "f(rho) != 0: first nonzero term at t^" + std::to_string(residual.valuation()),
            "rho is a root of f in k^<sigma>((t^n))"));

        // x^k reduced, k < 2d - 1
        {
            auto xk = x_power(field, 0);
            auto x = x_power(field, 1);
            for (int k = 0; k < 2 * d - 1; ++k) {
                std::vector<BaseElement> row;
                for (int j = 0; j < d; ++j) row.push_back(xk.coeff(static_cast<std::size_t>(j)));
                std::vector<SkewFraction> frow;
                for (const auto& e : row) frow.push_back(to_fraction(e));
                sc->power_.push_back(std::move(frow));
                xk = reduce_mod(xk * x, f);
            }
        }

        // Group and generators
        const auto& group = spec.group;
        checks.push_back(make_check("group-order", group.order() == sc->d_,
                                    "|G| = " + std::to_string(group.order()) + ", d = " + std::to_string(d),
                                    "[L : K] = |G|"));
        bool roots_ok = true;
        std::string roots_detail;
        std::vector<std::size_t> gen_elements;
        for (const auto& g : spec.generators) {
            if (g.image.degree() >= d) throw Error(Errc::InvalidScenario, "generator image must have degree < d");
            gen_elements.push_back(group.index(g.element));
            bool ok = compose_mod(f, g.image, f).is_zero();
            roots_ok = roots_ok && ok;
            if (!ok) roots_detail += (roots_detail.empty() ? "" : ", ") + g.name;
        }
        checks.push_back(make_check("generator-roots", roots_ok,
                                    roots_ok ? std::to_string(spec.generators.size()) + " images are roots of f"
                                             : "f(g(x)) != 0 mod f for " + roots_detail,
                                    "each generator maps x to a root of f"));
        if (!roots_ok || group.order() != sc->d_) return out;

        // P_g for every element, following generator words: P_{a s} = P_s(P_a(x)),
        // evaluated through the power matrix of P_a.
        const std::size_t order = group.order();
        std::vector<std::optional<BasePolynomial>> images(order);
        std::vector<std::vector<std::vector<BaseElement>>> mats(order);
        images[group.identity()] = x_power(field, 1);
        bool consistent = true;
        std::vector<std::size_t> queue{group.identity()};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            const std::size_t a = queue[q];
            mats[a] = power_matrix(*images[a], f, sc->d_);
            for (std::size_t s = 0; s < spec.generators.size(); ++s) {
                const std::size_t b = group.multiply(a, gen_elements[s]);
                auto p = apply_power_matrix(spec.generators[s].image, mats[a]);
                if (!images[b]) {
                    images[b] = p;
                    queue.push_back(b);
                } else if (!(*images[b] == p)) {
                    consistent = false;
                }
            }
        }
        const bool generates = queue.size() == order;
        checks.push_back(make_check("group-generated", generates,
                                    std::to_string(queue.size()) + " of " + std::to_string(order) + " elements reached",
                                    "the generators generate G"));
        if (!generates) return out;
        for (std::size_t a = 0; a < order; ++a) sc->images_.push_back(*images[a]);
        // Full table: row vector of P_b times M_a is P_b(P_a(x)).
        for (std::size_t a = 0; a < order && consistent; ++a)
            for (std::size_t b = 0; b < order && consistent; ++b)
                consistent = apply_power_matrix(sc->images_[b], mats[a]) == sc->images_[group.multiply(a, b)];
        checks.push_back(make_check("psi-homomorphism", consistent,
                                    std::to_string(order * order) + " products checked",
                                    "g -> Psi(g) is a group homomorphism"));
        std::set<std::string> distinct;
        for (const auto& p : sc->images_) distinct.insert(to_string(p));
        const bool faithful = distinct.size() == order;
        checks.push_back(make_check("psi-faithful", faithful,
                                    std::to_string(distinct.size()) + " distinct automorphisms",
                                    "Psi is injective, so |Gal(M/H(t,sigma))| >= |G|"));
        if (!consistent || !faithful) return out;

        for (std::size_t a = 0; a < order; ++a) {
            std::vector<std::vector<SkewFraction>> fm;
            for (const auto& row : mats[a]) {
                std::vector<SkewFraction> fr;
                for (const auto& e : row) fr.push_back(to_fraction(e));
                fm.push_back(std::move(fr));
            }
            sc->matrices_.push_back(std::move(mats[a]));
            sc->fmatrices_.push_back(std::move(fm));
        }
        std::vector<std::size_t> all(order);
        for (std::size_t a = 0; a < order; ++a) all[a] = a;
        auto fixed = sc->fixed_space(all);
        const bool fixed_ok = fixed.size() == 1 && sc->is_scalar_vector(fixed[0]);
        checks.push_back(make_check("fixed-space", fixed_ok, "dimension " + std::to_string(fixed.size()),
                                    "the invariants of M under Psi(G) are H(t,sigma)"));
        if (std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); })) out.scenario = sc;
        return out;
    }

    static std::shared_ptr<const ExtensionScenario> build_or_throw(const ExtensionSpec& spec) {
        auto built = build(spec);
        if (!built.ok()) {
            std::string msg = "scenario '" + spec.name + "' failed validation:";
            for (const auto& c : built.checks)
                if (!c.passed()) msg += " " + c.name + " (" + c.details + ")";
            throw Error(Errc::ValidationFailed, msg);
        }
        return built.scenario;
    }

    const ExtensionSpec& spec() const { return spec_; }
    const std::string& name() const { return spec_.name; }
    const GroundField& field() const { return *spec_.field; }
    std::size_t degree() const { return d_; }
    const BasePolynomial& f() const { return spec_.f; }
    const TwistedSeries& rho() const { return rho_; }
    const FiniteGroup& group() const { return spec_.group; }
    /// P_g(x) for every group element.
    const std::vector<BasePolynomial>& images() const { return images_; }
    const std::vector<std::vector<BaseElement>>& matrix(std::size_t g) const { return matrices_.at(g); }
    const std::vector<std::vector<SkewFraction>>& fraction_matrix(std::size_t g) const { return fmatrices_.at(g); }
    const std::vector<std::vector<SkewFraction>>& power_table() const { return power_; }
    const CentralForm& central_form() const { return *form_; }

    TensorElement element(std::vector<SkewFraction> coords) const { return TensorElement(*this, std::move(coords)); }
    TensorElement scalar(const SkewFraction& h) const {
        std::vector<SkewFraction> c(d_, SkewFraction::zero(field()));
        c[0] = h;
        return element(std::move(c));
    }
    TensorElement one() const { return scalar(SkewFraction::one(field())); }
    TensorElement x() const { return from_base_polynomial(x_power(field(), 1)); }
    /// Element of L given as a polynomial in x over K.
    TensorElement from_base_polynomial(const BasePolynomial& p) const {
        auto r = reduce_mod(p, spec_.f);
        std::vector<SkewFraction> c;
        for (std::size_t j = 0; j < d_; ++j) c.push_back(to_fraction(r.coeff(j)));
        return element(std::move(c));
    }

    /// K-basis of the vectors fixed by the given group elements. The
    /// matrices have central entries, so this is commutative linear algebra.
    std::vector<std::vector<BaseElement>> fixed_space(const std::vector<std::size_t>& elements) const {
        const auto zero = BaseElement::from_rational(field(), 0);
        const auto one = BaseElement::from_rational(field(), 1);
        Matrix<BaseElement> a(d_);
        for (auto g : elements) {
            const auto& m = matrix(g);
            for (std::size_t i = 0; i < d_; ++i)
                for (std::size_t j = 0; j < d_; ++j) a[i].push_back(i == j ? m[i][j] - one : m[i][j]);
        }
        if (elements.empty())
            for (std::size_t i = 0; i < d_; ++i) a[i].push_back(zero);
        auto basis = left_kernel(a, a[0].size(), zero, one);
        // Reduced echelon form of the basis for a canonical answer.
        if (basis.empty()) return basis;
        auto e = row_reduce(basis, d_, zero, one, false);
        std::vector<std::vector<BaseElement>> out(e.reduced.begin(), e.reduced.begin() + static_cast<long>(e.rank()));
        return out;
    }

    bool is_scalar_vector(const std::vector<BaseElement>& v) const {
        if (v.empty() || v[0].is_zero()) return false;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (!v[i].is_zero()) return false;
        return true;
    }

    /// Powers rho^0 .. rho^(d-1) at the scenario precision.
    const std::vector<TwistedSeries>& rho_powers() const {
        return rho_powers_;
    }

   private:
    ExtensionScenario() = default;

    ExtensionSpec spec_;
    std::size_t d_ = 0;
    TwistedSeries rho_;
    std::vector<std::vector<SkewFraction>> power_;
    std::vector<BasePolynomial> images_;
    std::vector<std::vector<std::vector<BaseElement>>> matrices_;
    std::vector<std::vector<std::vector<SkewFraction>>> fmatrices_;
    std::vector<TwistedSeries> rho_powers_;
    std::shared_ptr<const CentralForm> form_;
};

inline TensorElement::TensorElement(const ExtensionScenario& sc, std::vector<SkewFraction> coords)
    : sc_(&sc), coords_(std::move(coords)) {
    if (coords_.size() != sc.degree())
        throw Error(Errc::InvalidArgument, "expected " + std::to_string(sc.degree()) + " coordinates");
    for (const auto& c : coords_)
        if (c.field_ptr() != &sc.field()) throw Error(Errc::MixedFields, "coordinate over another field");
}

namespace detail {
inline void require_same_scenario(const TensorElement& a, const TensorElement& b) {
    if (&a.scenario() != &b.scenario()) throw Error(Errc::MixedScenarios, "elements of different scenarios");
}
}  // namespace detail

namespace detail {

/// a = sum_b e_b lambda_b with lambda_b in L = K[x]/(f).
inline std::vector<BasePolynomial> central_coords(const TensorElement& a) {
    const auto& sc = a.scenario();
    const auto& form = sc.central_form();
    const std::size_t d = sc.degree();
    const auto zero = BaseElement::from_rational(sc.field(), 0);
    std::vector<std::vector<BaseElement>> lambda(form.size(), std::vector<BaseElement>(d, zero));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coords()[i].is_zero()) continue;
        auto u = form.coords(a.coords()[i]);
        for (std::size_t b = 0; b < form.size(); ++b) lambda[b][i] = std::move(u[b]);
    }
    std::vector<BasePolynomial> out;
    for (auto& l : lambda) out.push_back(base_polynomial(sc.field(), std::move(l)));
    return out;
}

inline TensorElement from_central(const ExtensionScenario& sc, const std::vector<BasePolynomial>& lambda) {
    const auto zero = BaseElement::from_rational(sc.field(), 0);
    std::vector<SkewFraction> out;
    for (std::size_t i = 0; i < sc.degree(); ++i) {
        std::vector<BaseElement> w;
        for (const auto& l : lambda) w.push_back(l.coeff(i));
        out.push_back(sc.central_form().element(w));
    }
    return sc.element(std::move(out));
}

}  // namespace detail

inline bool TensorElement::is_one() const {
    if (!coords_[0].is_one()) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

inline TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    detail::require_same_scenario(a, b);
    std::vector<SkewFraction> c;
    for (std::size_t i = 0; i < a.coords_.size(); ++i) c.push_back(a.coords_[i] + b.coords_[i]);
    return TensorElement(*a.sc_, std::move(c));
}

inline TensorElement operator-(const TensorElement& a) {
    std::vector<SkewFraction> c;
    for (const auto& x : a.coords_) c.push_back(-x);
    return TensorElement(*a.sc_, std::move(c));
}

/// x is central: multiply coordinates, then fold x^k (k >= d) back with f.
/// Kept as the reference product; operator* goes through the centre.
inline TensorElement multiply_direct(const TensorElement& a, const TensorElement& b) {
    detail::require_same_scenario(a, b);
    const auto& sc = *a.sc_;
    const std::size_t d = sc.degree();
    const auto& field = sc.field();
    std::vector<SkewFraction> prod(2 * d - 1, SkewFraction::zero(field));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (std::size_t l = 0; l < d; ++l)
            if (!b.coords_[l].is_zero()) prod[i + l] = prod[i + l] + a.coords_[i] * b.coords_[l];
    }
    std::vector<SkewFraction> c(prod.begin(), prod.begin() + static_cast<long>(d));
    const auto& table = sc.power_table();
    for (std::size_t k = d; k < 2 * d - 1; ++k) {
        if (prod[k].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!table[k][j].is_zero()) c[j] = c[j] + prod[k] * table[k][j];
    }
    return TensorElement(sc, std::move(c));
}

/// With a = sum_b e_b lambda_b and b = sum_c e_c mu_c (lambda, mu in L), the
/// product is sum e_b e_c lambda_b mu_c; only commutative arithmetic over K.
inline TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    detail::require_same_scenario(a, b);
    const auto& sc = *a.sc_;
    if (a.is_zero() || b.is_zero()) return TensorElement(sc, std::vector<SkewFraction>(sc.degree(), SkewFraction::zero(sc.field())));
    const auto la = detail::central_coords(a);
    const auto lb = detail::central_coords(b);
    auto out = sc.central_form().multiply(la, lb, sc.f());
    return detail::from_central(sc, out);
}

inline bool operator==(const TensorElement& a, const TensorElement& b) {
    detail::require_same_scenario(a, b);
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
        if (!(a.coords_[i] == b.coords_[i])) return false;
    return true;
}

/// Writing a = sum_b e_b lambda_b over the basis e_b of H(t,sigma) over K,
/// with lambda_b in L = K[x]/(f), left multiplication by a is K-linear on
/// the basis e_c x^j; a^-1 solves a y = 1 there.
inline TensorElement TensorElement::inverse() const {
    const auto& sc = *sc_;
    const std::size_t d = sc.degree();
    const auto& field = sc.field();
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    const CentralForm& form = sc.central_form();
    const std::size_t size = form.size();
    const auto zero = BaseElement::from_rational(field, 0);
    const auto lp = detail::central_coords(*this);
    // Left multiplication by a as a K-linear map on the basis e_c x^j.
    const auto& f = sc.f();
    const auto lm = form.left_matrix(lp, f);
    const std::size_t big = size * d;
    Matrix<BaseElement> a(big, std::vector<BaseElement>(big, zero));
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            if (lm[r][c].is_zero()) continue;
            auto col = lm[r][c].poly();
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t i = 0; i < d; ++i) a[r * d + i][c * d + j] = col.coeff(i);
                if (j + 1 < d) col = reduce_mod(col * x_power(field, 1), f);
            }
        }
    std::vector<BaseElement> target(big, zero);
    target[form.unit() * d] = BaseElement::from_rational(field, 1);
    auto nu = solve_centre(a, target);
    if (!nu) throw Error(Errc::SingularElement, "left multiplication is not invertible");
    std::vector<BasePolynomial> lambda;
    for (std::size_t c = 0; c < size; ++c)
        lambda.push_back(base_polynomial(field, std::vector<BaseElement>(nu->begin() + static_cast<long>(c * d),
                                                                           nu->begin() + static_cast<long>(c * d + d))));
    return detail::from_central(sc, lambda);
}

/// Psi(g): coordinates times M_g; H(t, sigma) scalars untouched.
inline TensorElement TensorElement::galois_apply(std::size_t g) const {
    const auto& sc = *sc_;
    if (g >= sc.group().order()) throw Error(Errc::UnknownGroupElement, "group element index out of range");
    const auto& m = sc.fraction_matrix(g);
    const std::size_t d = sc.degree();
    std::vector<SkewFraction> c(d, SkewFraction::zero(sc.field()));
    for (std::size_t i = 0; i < d; ++i) {
        if (coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!m[i][j].is_zero()) c[j] = c[j] + coords_[i] * m[i][j];
    }
    return TensorElement(sc, std::move(c));
}

/// sum embed(a_i) rho^i.
inline TwistedSeries TensorElement::tau(int precision) const {
    const auto& sc = *sc_;
    const int have = sc.rho().precision();
    if (precision > have)
        throw Error(Errc::InsufficientPrecision, "requested precision " + std::to_string(precision) +
                                                     " exceeds rho precision " + std::to_string(have));
    const auto& powers = sc.rho_powers();
    TwistedSeries acc = TwistedSeries::zero(sc.field(), have);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        acc = acc + ls_embed(coords_[i], have) * powers[i];
    }
    if (acc.precision() < precision)
        throw Error(Errc::InsufficientPrecision, "poles of the coordinates leave precision " +
                                                     std::to_string(acc.precision()));
    return acc.truncate(precision);
}

inline std::string to_string(const TensorElement& a) {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (a.coords()[i].is_zero()) continue;
        std::string xp = i == 0 ? "" : (i == 1 ? "*x" : "*x^" + std::to_string(i));
        const auto c = to_string(a.coords()[i]);
        s += (first ? "" : " + ") + (i == 0 ? c : "(" + c + ")") + xp;
        first = false;
    }
    return first ? "0" : s;
}

/// Table of z_{k,j} with sum_m h_m (x) z_m = sum_{k,j} (e_j t^k) (x) z_{k,j}.
struct Decomposition {
    std::size_t n = 1;
    std::size_t basis_size = 0;
    /// entries[k * basis_size + j] = z_{k,j}
    std::vector<TwistedSeries> entries;

    const TwistedSeries& at(std::size_t k, std::size_t j) const { return entries.at(k * basis_size + j); }
    bool all_zero() const {
        for (const auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }
};

inline bool is_invariant_series(const TwistedSeries& z) {
    const auto& field = z.field();
    if (z.is_zero()) return true;
    if (z.valuation() < 0) return false;
    for (std::size_t i = 0; i < z.coeffs().size(); ++i) {
        const auto& c = z.coeffs()[i];
        if (c.is_zero()) continue;
        if ((z.valuation() + static_cast<int>(i)) % field.order() != 0) return false;
        if (!field.is_invariant_central(c)) return false;
    }
    return true;
}

/// Writes h_m = sum_q sum_j lambda_{qn+k,j} e_j t^(qn+k), so that
/// z_{k,j} = sum_m (sum_q lambda_{qn+k,j} T^q) z_m.
inline Decomposition canonical_decomposition(const std::vector<std::pair<SkewFraction, TwistedSeries>>& terms,
                                             const GroundField& field, int precision) {
    Decomposition out;
    out.n = static_cast<std::size_t>(field.order());
    out.basis_size = field.h_basis().size();
    for (std::size_t i = 0; i < out.n * out.basis_size; ++i) out.entries.push_back(TwistedSeries::zero(field, precision));
    for (const auto& [h, z] : terms) {
        if (!h.is_polynomial()) throw Error(Errc::NotPolynomial, to_string(h) + " is not a polynomial");
        if (!is_invariant_series(z)) throw Error(Errc::NotInvariantSeries, "series is not in k^<sigma>[[t^n]]");
        const auto& p = h.num();
        for (std::size_t k = 0; k < out.n; ++k) {
            for (std::size_t j = 0; j < out.basis_size; ++j) {
                std::vector<GroundElement> poly;
                for (std::size_t e = k; e < p.coeffs().size(); e += out.n) {
                    auto lambda = field.h_coordinates(p.coeffs()[e]);
                    while (poly.size() < e - k) poly.push_back(field.zero());
                    poly.push_back(lambda[j]);
                }
                SkewPolynomial ptn(field, std::move(poly));
                if (ptn.is_zero()) continue;
                auto& slot = out.entries[k * out.basis_size + j];
                slot = slot + TwistedSeries::from_polynomial(ptn, precision) * z;
            }
        }
    }
    for (auto& e : out.entries)
        if (e.precision() > precision) e = e.truncate(precision);
    return out;
}

/// tau of both sides of the decomposition identity.
inline std::pair<TwistedSeries, TwistedSeries> decomposition_sides(
    const std::vector<std::pair<SkewFraction, TwistedSeries>>& terms, const Decomposition& dec,
    const GroundField& field, int precision) {
    TwistedSeries lhs = TwistedSeries::zero(field, precision);
    for (const auto& [h, z] : terms) lhs = lhs + ls_embed(h, precision) * z;
    TwistedSeries rhs = TwistedSeries::zero(field, precision);
    for (std::size_t k = 0; k < dec.n; ++k)
        for (std::size_t j = 0; j < dec.basis_size; ++j) {
            const auto& z = dec.at(k, j);
            if (z.is_zero()) continue;
            auto ejtk = TwistedSeries::monomial(field.h_basis()[j], static_cast<int>(k), precision);
            rhs = rhs + ejtk * z;
        }
    return {lhs, rhs};
}

/// P of degree < deg f_src over K with P(rho_src) = rho_dst, found by a
/// Pade-type linear solve Q rho_dst = sum P_i rho_src^i over k^<sigma> on
/// truncated series and then verified exactly: f_dst(P(x)) = 0 mod f_src.
inline std::optional<BasePolynomial> match_roots(const BasePolynomial& f_src, const GroundElement& seed_src,
                                                 const BasePolynomial& f_dst, const GroundElement& seed_dst,
                                                 int max_degree = 12) {
    const GroundField& field = seed_src.field();
    const auto n = static_cast<std::size_t>(field.order());
    const std::size_t d = static_cast<std::size_t>(f_src.degree());
    const GroundElement zero = field.zero();
    const GroundElement one = field.one();
    for (int D = 0; D <= max_degree; ++D) {
        const std::size_t deg = static_cast<std::size_t>(D) + 1;
        const std::size_t unknowns = deg * (d + 1);
        const std::size_t eqs = unknowns + 8;
        const int prec = static_cast<int>(eqs * n);
        auto src = ls_newton_root(f_src, seed_src, prec);
        auto dst = ls_newton_root(f_dst, seed_dst, prec);
        std::vector<TwistedSeries> powers{TwistedSeries::one(field, prec)};
        for (std::size_t i = 1; i < d; ++i) powers.push_back(powers.back() * src);
        // columns: P_i coefficient q at i*deg + q, then Q coefficient q at d*deg + q.
        Matrix<GroundElement> a(eqs, std::vector<GroundElement>(unknowns, zero));
        for (std::size_t m = 0; m < eqs; ++m) {
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t q = 0; q < deg && q <= m; ++q)
                    a[m][i * deg + q] = powers[i].coeff(static_cast<int>((m - q) * n));
            for (std::size_t q = 0; q < deg && q <= m; ++q) a[m][d * deg + q] = -dst.coeff(static_cast<int>((m - q) * n));
        }
        auto kernel = right_kernel(a, unknowns, zero, one);
        for (const auto& z : kernel) {
            std::vector<GroundElement> qc(z.begin() + static_cast<long>(d * deg), z.end());
            TPoly qpoly(zero, qc);
            if (qpoly.is_zero()) continue;
            std::vector<BaseElement> coeffs;
            for (std::size_t i = 0; i < d; ++i) {
                std::vector<GroundElement> pc(z.begin() + static_cast<long>(i * deg),
                                              z.begin() + static_cast<long>((i + 1) * deg));
                coeffs.emplace_back(TPoly(zero, pc), qpoly);
            }
            auto p = base_polynomial(field, std::move(coeffs));
            if (compose_mod(f_dst, p, f_src).is_zero()) return p;
        }
    }
    return std::nullopt;
}

}  // namespace orefield

#endif  // OREFIELD_EXTEND_HPP

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

#ifndef OREFIELD_TOWER_HPP
#define OREFIELD_TOWER_HPP

// Finite towers M_1 c M_2 c ... of scalar extensions realising a system of
// finite groups (G_n, s_n), with restriction compatibility checks.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "basefield.hpp"
#include "error.hpp"
#include "extend.hpp"
#include "group.hpp"
#include "report.hpp"

namespace orefield {

struct TowerSpec {
    std::string name;
    std::vector<ExtensionSpec> levels;
    /// embeddings[n-1]: generator of level n-1 as a polynomial in the generator of level n.
    std::vector<std::optional<BasePolynomial>> embeddings;
    /// epis[n-1]: s_n as a map from level-n group elements to level-(n-1) elements.
    std::vector<std::vector<std::size_t>> epis;
    /// eps[n]: epsilon_n from G_n to the Galois group of level n (element indices).
    std::vector<std::vector<std::size_t>> eps;
};

struct LedgerRow {
    std::size_t level = 0;
    std::size_t dimension = 0;
    std::size_t group_order = 0;
    bool degree_matches = false;
    bool fixed_space_trivial = false;
};

class TowerScenario {
   public:
    static std::shared_ptr<const TowerScenario> build(const TowerSpec& spec) {
        std::shared_ptr<TowerScenario> t(new TowerScenario());
        t->spec_ = spec;
        if (spec.levels.empty()) throw Error(Errc::InvalidScenario, "tower without levels");
        for (const auto& level : spec.levels) {
            auto built = ExtensionScenario::build(level);
            for (auto c : built.checks) {
                c.name = "level-" + std::to_string(t->levels_.size() + 1) + "/" + c.name;
                t->checks_.push_back(std::move(c));
            }
            if (!built.ok()) {
                std::string msg = "tower '" + spec.name + "' level " + std::to_string(t->levels_.size() + 1) + " failed validation:";
                for (const auto& c : built.checks)
                    if (!c.passed()) msg += " " + c.name + " (" + c.details + ")";
                throw Error(Errc::ValidationFailed, msg);
            }
            t->levels_.push_back(built.scenario);
        }
        const std::size_t depth = t->levels_.size();
        if (spec.embeddings.size() + 1 < depth)
            throw Error(Errc::EmbeddingMissing, "tower needs an embedding for every level after the first");
        for (std::size_t n = 1; n < depth; ++n)
            if (!spec.embeddings[n - 1])
                throw Error(Errc::EmbeddingMissing, "no embedding of level " + std::to_string(n) + " into level " +
                                                        std::to_string(n + 1));
        GroupSystem system;
        for (const auto& l : t->levels_) system.levels.push_back(l->group());
        system.epis = spec.epis;
        system.validate();
        if (spec.eps.size() != depth) throw Error(Errc::InvalidScenario, "tower needs one epsilon map per level");
        for (std::size_t n = 0; n < depth; ++n)
            if (spec.eps[n].size() != t->levels_[n]->group().order())
                throw Error(Errc::InvalidScenario, "epsilon map of level " + std::to_string(n + 1) + " has wrong size");
        for (std::size_t n = 1; n < depth; ++n) {
            const auto& e = *spec.embeddings[n - 1];
            const auto& lower = *t->levels_[n - 1];
            const auto& upper = *t->levels_[n];
            auto me = power_matrix(e, upper.f(), lower.degree() + 1);
            const bool ok = apply_power_matrix(lower.f(), me).is_zero();
            t->checks_.push_back(make_check("embedding-" + std::to_string(n) + "-" + std::to_string(n + 1), ok,
                                            ok ? "f_n(E(x)) = 0 mod f_(n+1)" : "embedding polynomial is not a root",
                                            "L_n is a subfield of L_(n+1)"));
            if (!ok)
                throw Error(Errc::ValidationFailed, "embedding of level " + std::to_string(n) + " into level " +
                                                        std::to_string(n + 1) + " is not a root of f_n");
            me.pop_back();
            // Psi(g) of the lower level, written inside the upper level.
            std::vector<BasePolynomial> embedded;
            for (const auto& p : lower.images()) embedded.push_back(apply_power_matrix(p, me));
            t->embedded_images_.push_back(std::move(embedded));
        }
        return t;
    }

    const std::string& name() const { return spec_.name; }
    const TowerSpec& spec() const { return spec_; }
    std::size_t depth() const { return levels_.size(); }
    const ExtensionScenario& level(std::size_t n) const { return *levels_.at(n); }
    const std::vector<std::shared_ptr<const ExtensionScenario>>& levels() const { return levels_; }
    const std::vector<Check>& validation_checks() const { return checks_; }
    /// Embedding of level n-1 into level n (n >= 1, zero-based levels).
    const BasePolynomial& embedding(std::size_t n) const { return *spec_.embeddings.at(n - 1); }

    /// Level-(n-1) element h' with Psi(h) restricted to L_(n-1) equal to Psi(h'), if any.
    std::optional<std::size_t> restrict_element(std::size_t n, std::size_t h) const {
        auto moved = apply_power_matrix(embedding(n), level(n).matrix(h));
        const auto& embedded = embedded_images_.at(n - 1);
        for (std::size_t g = 0; g < embedded.size(); ++g)
            if (embedded[g] == moved) return g;
        return std::nullopt;
    }

    /// For every n and g in G_(n+1): res(Psi(eps_(n+1)(g))) = Psi(eps_n(s_(n+1)(g))).
    std::vector<Check> check_compatibility(const std::vector<std::vector<std::size_t>>* eps_override = nullptr) const {
        const auto& eps = eps_override ? *eps_override : spec_.eps;
        std::vector<Check> out;
        for (std::size_t n = 1; n < depth(); ++n) {
            const auto& upper = level(n);
            const auto& e = embedding(n);
            for (std::size_t g = 0; g < upper.group().order(); ++g) {
                const std::size_t h = eps[n].at(g);
                const std::size_t target = eps[n - 1].at(spec_.epis[n - 1].at(g));
                const bool ok = apply_power_matrix(e, upper.matrix(h)) == embedded_images_[n - 1].at(target);
                out.push_back(make_check("compat/n=" + std::to_string(n) + "/g=" + upper.group().name(g), ok,
                                         ok ? "" : "restriction of eps(" + upper.group().name(g) + ") != eps(s(" +
                                                       upper.group().name(g) + "))",
                                         "eps_n o s_(n+1) = res o eps_(n+1)"));
            }
        }
        return out;
    }

    /// res(n+2 -> n) = res(n+1 -> n) o res(n+2 -> n+1) on every element.
    std::vector<Check> check_functoriality() const {
        std::vector<Check> out;
        for (std::size_t n = 2; n < depth(); ++n) {
            const auto& top = level(n);
            const auto& bottom = level(n - 2);
            auto composite = compose_mod(embedding(n - 1), embedding(n), top.f());
            const auto mc = power_matrix(composite, top.f(), bottom.degree());
            std::vector<BasePolynomial> embedded;
            for (const auto& p : bottom.images()) embedded.push_back(apply_power_matrix(p, mc));
            for (std::size_t g = 0; g < top.group().order(); ++g) {
                auto moved = apply_power_matrix(composite, top.matrix(g));
                std::optional<std::size_t> direct;
                for (std::size_t b = 0; b < embedded.size() && !direct; ++b)
                    if (embedded[b] == moved) direct = b;
                auto mid = restrict_element(n, g);
                std::optional<std::size_t> two_step;
                if (mid) two_step = restrict_element(n - 1, *mid);
                const bool ok = direct && two_step && *direct == *two_step;
                out.push_back(make_check("functoriality/n=" + std::to_string(n - 1) + "/g=" + top.group().name(g), ok,
                                         ok ? "" : "restrictions do not compose",
                                         "res(n+2->n) = res(n+1->n) o res(n+2->n+1)"));
            }
        }
        return out;
    }

    std::vector<LedgerRow> degree_ledger() const {
        std::vector<LedgerRow> rows;
        for (std::size_t n = 0; n < depth(); ++n) {
            const auto& l = level(n);
            LedgerRow r;
            r.level = n + 1;
            r.dimension = l.degree();
            r.group_order = l.group().order();
            r.degree_matches = r.dimension == r.group_order;
            std::vector<std::size_t> all(l.group().order());
            for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
            auto fixed = l.fixed_space(all);
            r.fixed_space_trivial = fixed.size() == 1 && l.is_scalar_vector(fixed[0]);
            rows.push_back(r);
        }
        return rows;
    }

   private:
    TowerScenario() = default;

    TowerSpec spec_;
    std::vector<std::shared_ptr<const ExtensionScenario>> levels_;
    std::vector<Check> checks_;
    std::vector<std::vector<BasePolynomial>> embedded_images_;
};

/// eps with the images of two elements of one level exchanged.
inline std::vector<std::vector<std::size_t>> swap_eps(const TowerSpec& spec, std::size_t level, std::size_t a,
                                                      std::size_t b) {
    auto eps = spec.eps;
    std::swap(eps.at(level).at(a), eps.at(level).at(b));
    return eps;
}

}  // namespace orefield

#endif  // OREFIELD_TOWER_HPP

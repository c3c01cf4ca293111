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

#ifndef OREFIELD_GROUP_HPP
#define OREFIELD_GROUP_HPP

// Small finite groups given by multiplication tables, and projective
// systems of them.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace orefield {

class FiniteGroup {
   public:
    FiniteGroup() = default;
    /// table[a][b] = index of a*b; validated on construction.
    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table)
        : names_(std::move(names)), table_(std::move(table)) {
        validate();
    }

    static FiniteGroup cyclic(std::size_t n, const std::string& prefix = "g") {
        std::vector<std::string> names;
        std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a) {
            names.push_back(a == 0 ? "e" : (a == 1 ? prefix : prefix + "^" + std::to_string(a)));
            for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
        }
        return FiniteGroup(std::move(names), std::move(table));
    }

    /// Direct product; element (a, b) has index a + |G| b.
    static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h) {
        const std::size_t n = g.order(), m = h.order();
        std::vector<std::string> names(n * m);
        std::vector<std::vector<std::size_t>> table(n * m, std::vector<std::size_t>(n * m));
        for (std::size_t a = 0; a < n * m; ++a) {
            const std::size_t a1 = a % n, a2 = a / n;
            if (a1 == 0 && a2 == 0)
                names[a] = "e";
            else if (a2 == 0)
                names[a] = g.name(a1);
            else if (a1 == 0)
                names[a] = h.name(a2);
            else
                names[a] = g.name(a1) + h.name(a2);
            for (std::size_t b = 0; b < n * m; ++b)
                table[a][b] = g.multiply(a1, b % n) + n * h.multiply(a2, b / n);
        }
        return FiniteGroup(std::move(names), std::move(table));
    }

    std::size_t order() const { return names_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
    std::size_t inverse(std::size_t a) const { return inverses_.at(a); }
    const std::string& name(std::size_t a) const { return names_.at(a); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    std::size_t index(const std::string& name) const {
        for (std::size_t a = 0; a < names_.size(); ++a)
            if (names_[a] == name) return a;
        throw Error(Errc::UnknownGroupElement, "no group element named '" + name + "'");
    }
    bool is_abelian() const {
        for (std::size_t a = 0; a < order(); ++a)
            for (std::size_t b = 0; b < order(); ++b)
                if (table_[a][b] != table_[b][a]) return false;
        return true;
    }
    /// Subgroup generated by the given elements.
    std::vector<std::size_t> generated(const std::vector<std::size_t>& gens) const {
        std::vector<bool> seen(order(), false);
        std::vector<std::size_t> out{identity_};
        seen[identity_] = true;
        for (std::size_t k = 0; k < out.size(); ++k)
            for (auto g : gens) {
                auto h = table_[out[k]][g];
                if (!seen[h]) {
                    seen[h] = true;
                    out.push_back(h);
                }
            }
        return out;
    }

   private:
    void validate() {
        const std::size_t n = names_.size();
        if (n == 0) throw Error(Errc::InvalidScenario, "empty group");
        if (table_.size() != n) throw Error(Errc::InvalidScenario, "group table has wrong size");
        std::map<std::string, int> seen_names;
        for (const auto& s : names_)
            if (seen_names[s]++) throw Error(Errc::InvalidScenario, "duplicate group element name '" + s + "'");
        for (const auto& row : table_) {
            if (row.size() != n) throw Error(Errc::InvalidScenario, "group table has wrong size");
            for (auto v : row)
                if (v >= n) throw Error(Errc::InvalidScenario, "group table entry out of range");
        }
        identity_ = n;
        for (std::size_t e = 0; e < n && identity_ == n; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
            if (ok) identity_ = e;
        }
        if (identity_ == n) throw Error(Errc::InvalidScenario, "group table has no identity");
        inverses_.assign(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (table_[a][b] == identity_ && table_[b][a] == identity_) inverses_[a] = b;
        for (auto v : inverses_)
            if (v == n) throw Error(Errc::InvalidScenario, "group table element without inverse");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw Error(Errc::InvalidScenario, "group table is not associative");
    }

    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverses_;
};

inline bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<std::size_t>& map) {
    if (map.size() != g.order()) return false;
    for (auto v : map)
        if (v >= h.order()) return false;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (map[g.multiply(a, b)] != h.multiply(map[a], map[b])) return false;
    return true;
}

inline bool is_surjective(const FiniteGroup& h, const std::vector<std::size_t>& map) {
    std::vector<bool> hit(h.order(), false);
    for (auto v : map)
        if (v < h.order()) hit[v] = true;
    for (bool b : hit)
        if (!b) return false;
    return true;
}

/// Groups G_0, G_1, ... with surjections s_n : G_n -> G_{n-1} (epis[n-1]).
struct GroupSystem {
    std::vector<FiniteGroup> levels;
    std::vector<std::vector<std::size_t>> epis;

    void validate() const {
        if (epis.size() + 1 != levels.size() && !(levels.empty() && epis.empty()))
            throw Error(Errc::InvalidScenario, "group system needs one map per level after the first");
        for (std::size_t k = 0; k < epis.size(); ++k) {
            if (!is_homomorphism(levels[k + 1], levels[k], epis[k]))
                throw Error(Errc::InvalidScenario, "connecting map " + std::to_string(k + 1) + " is not a homomorphism");
            if (!is_surjective(levels[k], epis[k]))
                throw Error(Errc::InvalidScenario, "connecting map " + std::to_string(k + 1) + " is not surjective");
        }
    }
};

}  // namespace orefield

#endif  // OREFIELD_GROUP_HPP

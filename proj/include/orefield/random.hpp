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

#ifndef OREFIELD_RANDOM_HPP
#define OREFIELD_RANDOM_HPP

// Seeded sampling of test data. std::mt19937_64 is fully specified by the
// standard; the bounded draws below are done by hand because the library
// distributions are not portable across implementations.

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "ground.hpp"
#include "rational.hpp"
#include "skewpoly.hpp"

namespace orefield {

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi] by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t v;
        do v = engine_();
        while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }
    bool coin(int one_in = 2) { return uniform(0, one_in - 1) == 0; }

    /// Small rational p/q with |p| <= bound, 1 <= q <= bound.
    Rational rational(int bound = 5) {
        Rational r(static_cast<long>(uniform(-bound, bound)), static_cast<unsigned long>(uniform(1, bound)));
        r.canonicalize();
        return r;
    }

    GroundElement element(const GroundField& field, int bound = 5, bool allow_sparse = true) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < field.dimension(); ++i)
            c.push_back(allow_sparse && coin(3) ? Rational(0) : rational(bound));
        return field.element(std::move(c));
    }
    GroundElement nonzero_element(const GroundField& field, int bound = 5) {
        for (;;) {
            auto e = element(field, bound);
            if (!e.is_zero()) return e;
        }
    }

    /// Polynomial of degree at most max_deg (possibly zero).
    SkewPolynomial polynomial(const GroundField& field, int max_deg, int bound = 5) {
        const auto deg = uniform(-1, max_deg);
        std::vector<GroundElement> c;
        for (std::int64_t i = 0; i <= deg; ++i) c.push_back(element(field, bound));
        return SkewPolynomial(field, std::move(c));
    }
    SkewPolynomial nonzero_polynomial(const GroundField& field, int max_deg, int bound = 5) {
        for (;;) {
            auto p = polynomial(field, max_deg, bound);
            if (!p.is_zero()) return p;
        }
    }
    /// Polynomial of exactly the given degree.
    SkewPolynomial polynomial_of_degree(const GroundField& field, int deg, int bound = 5) {
        std::vector<GroundElement> c;
        for (int i = 0; i < deg; ++i) c.push_back(element(field, bound));
        c.push_back(nonzero_element(field, bound));
        return SkewPolynomial(field, std::move(c));
    }

    std::mt19937_64& engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
};

}  // namespace orefield

#endif  // OREFIELD_RANDOM_HPP

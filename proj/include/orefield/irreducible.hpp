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

#ifndef OREFIELD_IRREDUCIBLE_HPP
#define OREFIELD_IRREDUCIBLE_HPP

// Irreducibility of small integer polynomials over Q, Zassenhaus style:
// factor modulo a prime larger than twice the coefficient bound of any
// factor, then try every product of modular factors as a true divisor.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "rational.hpp"

namespace orefield {

inline constexpr std::size_t kIrreducibilityDegreeCap = 8;

namespace detail {

// Dense polynomials over Z/p, ascending, no trailing zeros.
using ModPoly = std::vector<Integer>;

class ModArith {
public:
    explicit ModArith(Integer p) : p_(std::move(p)) {}
    const Integer& prime() const { return p_; }

    Integer reduce(const Integer& a) const {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
        return r;
    }
    Integer inverse(const Integer& a) const {
        Integer r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0)
            throw Error(Errc::DivisionByZero, "no inverse modulo p");
        return r;
    }
    void trim(ModPoly& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    ModPoly sub(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()), Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = reduce(r[i] - b[i]);
        trim(r);
        return r;
    }
    ModPoly mul(const ModPoly& a, const ModPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ModPoly r(a.size() + b.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        for (auto& c : r) c = reduce(c);
        trim(r);
        return r;
    }
    std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
        const std::size_t db = b.size() - 1;
        const Integer inv = inverse(b.back());
        if (a.size() < b.size()) return {{}, a};
        ModPoly q(a.size() - db, Integer(0));
        for (std::size_t k = a.size(); k-- > db;) {
            if (a[k] == 0) continue;
            Integer c = reduce(a[k] * inv);
            q[k - db] = c;
            for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = reduce(a[k - db + j] - c * b[j]);
        }
        a.resize(db);
        trim(a);
        trim(q);
        return {q, a};
    }
    ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
    ModPoly monic(ModPoly a) const {
        const Integer inv = inverse(a.back());
        for (auto& c : a) c = reduce(c * inv);
        return a;
    }
    ModPoly gcd(ModPoly a, ModPoly b) const {
        while (!b.empty()) {
            auto r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.empty() ? a : monic(a);
    }
    ModPoly powmod(ModPoly base, Integer e, const ModPoly& m) const {
        ModPoly acc{Integer(1)};
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = rem(mul(acc, base), m);
            base = rem(mul(base, base), m);
            e >>= 1;
        }
        return acc;
    }

private:
    Integer p_;
};

// Equal-degree splitting of a monic squarefree product of degree-d factors.
inline void split_equal_degree(const ModArith& F, const ModPoly& g, std::size_t d, gmp_randclass& rng,
                               std::vector<ModPoly>& out) {
    const std::size_t n = g.size() - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    Integer q;
    mpz_pow_ui(q.get_mpz_t(), F.prime().get_mpz_t(), d);
    const Integer e = (q - 1) / 2;
    while (true) {
        ModPoly a(n);
        for (auto& c : a) c = rng.get_z_range(F.prime());
        F.trim(a);
        if (a.size() < 2) continue;
        auto b = F.sub(F.powmod(a, e, g), ModPoly{Integer(1)});
        auto c = F.gcd(g, b);
        if (c.size() > 1 && c.size() < g.size()) {
            split_equal_degree(F, c, d, rng, out);
            split_equal_degree(F, F.divmod(g, c).first, d, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of a monic squarefree f modulo an odd prime.
inline std::vector<ModPoly> factor_mod(const ModArith& F, ModPoly f) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20260417UL);
    std::vector<ModPoly> out;
    const ModPoly x{Integer(0), Integer(1)};
    ModPoly h = x;
    for (std::size_t d = 1; 2 * d < f.size(); ++d) {
        h = F.powmod(h, F.prime(), f);
        auto g = F.gcd(f, F.sub(h, x));
        if (g.size() > 1) {
            split_equal_degree(F, g, d, rng, out);
            f = F.divmod(f, g).first;
            h = F.rem(h, f);
        }
    }
    if (f.size() > 1) out.push_back(F.monic(f));
    return out;
}

inline std::vector<Integer> derivative(const std::vector<Integer>& p) {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    return d;
}

inline bool is_squarefree_over_q(const std::vector<Integer>& p) {
    std::vector<Rational> a(p.begin(), p.end()), b;
    for (const auto& c : derivative(p)) b.emplace_back(c);
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
    };
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            Rational c = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    return a.size() == 1;
}

// True when q divides p over Z.
inline bool divides_over_z(const std::vector<Integer>& q, std::vector<Integer> p) {
    const std::size_t dq = q.size() - 1;
    while (p.size() > dq) {
        const Integer& top = p.back();
        if (top != 0) {
            if (top % q.back() != 0) return false;
            Integer c = top / q.back();
            const std::size_t shift = p.size() - 1 - dq;
            for (std::size_t k = 0; k <= dq; ++k) p[shift + k] -= c * q[k];
        }
        p.pop_back();
    }
    for (const auto& r : p)
        if (r != 0) return false;
    return true;
}

inline Integer content(const std::vector<Integer>& p) {
    Integer g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

}  // namespace detail

/// Irreducibility over Q of a nonconstant integer polynomial (ascending coefficients).
inline bool is_irreducible_over_q(std::vector<Integer> p, std::size_t degree_cap = kIrreducibilityDegreeCap) {
    using namespace detail;
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.size() < 2) throw Error(Errc::InvalidArgument, "irreducibility of a constant polynomial");
    const std::size_t deg = p.size() - 1;
    if (deg > degree_cap)
        throw Error(Errc::CapExceeded, "irreducibility test limited to degree " + std::to_string(degree_cap));
    if (deg == 1) return true;
    if (p[0] == 0) return false;
    const Integer cont = content(p);
    for (auto& c : p) c /= cont;
    if (!is_squarefree_over_q(p)) return false;

    // Any factor's coefficients are at most 2^deg * |p|_2; scaled by lc they
    // must still be recoverable from symmetric residues.
    Integer norm2 = 0;
    for (const auto& c : p) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    const Integer lc = abs(p.back());
    Integer bound = 2 * lc * ((root + 1) << static_cast<mp_bitcnt_t>(deg)) + 1;

    Integer prime = bound;
    std::vector<ModPoly> factors;
    while (true) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        ModArith F(prime);
        ModPoly f;
        for (const auto& c : p) f.push_back(F.reduce(c));
        F.trim(f);
        if (f.size() != p.size()) continue;
        ModPoly df;
        for (const auto& c : derivative(f)) df.push_back(F.reduce(c));
        F.trim(df);
        if (F.gcd(f, df).size() != 1) continue;
        factors = factor_mod(F, F.monic(f));
        break;
    }
    const std::size_t r = factors.size();
    if (r == 1) return true;

    ModArith F(prime);
    const Integer half = prime / 2;
    // Masks containing factor 0 cover every split up to complement.
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << r); mask += 2) {
        ModPoly g{F.reduce(p.back())};
        for (std::size_t i = 0; i < r; ++i)
            if ((mask >> i) & 1U) g = F.mul(g, factors[i]);
        for (auto& c : g)
            if (c > half) c -= prime;
        const Integer gc = content(g);
        for (auto& c : g) c /= gc;
        if (divides_over_z(g, p)) return false;
    }
    return true;
}

}  // namespace orefield

#endif  // OREFIELD_IRREDUCIBLE_HPP

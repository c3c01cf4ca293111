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

#ifndef OREFIELD_GROUND_HPP
#define OREFIELD_GROUND_HPP

// Concrete ground skew fields H with a distinguished automorphism sigma of
// finite order:
//   - Q itself,
//   - a number field K = Q[a]/(p) with sigma given by the image of a,
//   - a quaternion algebra (alpha, beta) over such a K, with sigma acting
//     on the four K-coordinates of the basis 1, i, j, k = ij.
// Elements are exact coordinate vectors over Q.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "irreducible.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace orefield {

inline constexpr int kSigmaOrderCap = 24;

enum class FieldKind { Rationals, NumberField, Quaternions };

/// Input description of a ground field. For Quaternions the number field
/// data describes the centre; an empty modulus means the centre is Q.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    std::vector<Integer> modulus;
    std::vector<Rational> sigma_image;
    Rational alpha = -1;
    Rational beta = -1;
    std::string generator = "a";
};

class GroundField;

class GroundElement {
   public:
    GroundElement() = default;
    GroundElement(const GroundField* field, std::vector<Rational> coords)
        : field_(field), coords_(std::move(coords)) {}

    const GroundField& field() const {
        if (field_ == nullptr) throw Error(Errc::InvalidArgument, "ground element without a field");
        return *field_;
    }
    const GroundField* field_ptr() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (sgn(c) != 0) return false;
        return true;
    }
    bool is_one() const;
    GroundElement inverse() const;
    GroundElement sigma(int power = 1) const;

    friend GroundElement operator+(const GroundElement& a, const GroundElement& b);
    friend GroundElement operator-(const GroundElement& a, const GroundElement& b);
    friend GroundElement operator-(const GroundElement& a);
    friend GroundElement operator*(const GroundElement& a, const GroundElement& b);
    friend GroundElement operator*(const Rational& q, const GroundElement& a);
    friend bool operator==(const GroundElement& a, const GroundElement& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }

   private:
    const GroundField* field_ = nullptr;
    std::vector<Rational> coords_;
};

class GroundField {
   public:
    /// Validates the descriptor and precomputes sigma powers, the invariant
    /// subfield and a basis of H over it.
    static std::shared_ptr<const GroundField> make(const FieldDescriptor& desc) {
        std::shared_ptr<GroundField> f(new GroundField(desc));
        f->initialise();
        return f;
    }

    FieldKind kind() const { return desc_.kind; }
    const FieldDescriptor& descriptor() const { return desc_; }
    std::size_t centre_degree() const { return m_; }
    std::size_t dimension() const { return dim_; }
    int order() const { return order_; }
    const std::string& generator_name() const { return desc_.generator; }

    /// Q-basis of the invariant subfield of the centre.
    const std::vector<GroundElement>& invariant_basis() const { return invariant_basis_; }
    /// Basis (e_j) of H over the invariant subfield.
    const std::vector<GroundElement>& h_basis() const { return h_basis_; }
    /// Standard Q-basis of H (coordinate unit vectors).
    const std::vector<GroundElement>& standard_basis() const { return standard_basis_; }

    GroundElement zero() const { return GroundElement(this, std::vector<Rational>(dim_, Rational(0))); }
    GroundElement one() const { return from_rational(1); }
    GroundElement from_rational(const Rational& q) const {
        std::vector<Rational> c(dim_, Rational(0));
        c[0] = q;
        return GroundElement(this, std::move(c));
    }
    GroundElement element(std::vector<Rational> coords) const {
        if (coords.size() != dim_)
            throw Error(Errc::InvalidArgument, "expected " + std::to_string(dim_) + " coordinates, got " +
                                                   std::to_string(coords.size()));
        return GroundElement(this, std::move(coords));
    }
    /// Named generators usable in expressions: the number field generator
    /// and, for quaternions, i, j and k.
    std::map<std::string, GroundElement> named_elements() const {
        std::map<std::string, GroundElement> out;
        if (m_ > 1) {
            std::vector<Rational> c(dim_, Rational(0));
            c[1] = 1;
            out.emplace(desc_.generator, GroundElement(this, std::move(c)));
        }
        if (desc_.kind == FieldKind::Quaternions) {
            const char* names[] = {"i", "j", "k"};
            for (std::size_t b = 1; b < 4; ++b) {
                std::vector<Rational> c(dim_, Rational(0));
                c[b * m_] = 1;
                out.emplace(names[b - 1], GroundElement(this, std::move(c)));
            }
        }
        return out;
    }

    std::string description() const {
        std::string s;
        switch (desc_.kind) {
            case FieldKind::Rationals: s = "Q"; break;
            case FieldKind::NumberField: s = "Q(" + desc_.generator + ")"; break;
            case FieldKind::Quaternions:
                s = "(" + to_string(desc_.alpha) + "," + to_string(desc_.beta) + ")-quaternions over " +
                    (m_ == 1 ? std::string("Q") : "Q(" + desc_.generator + ")");
                break;
        }
        return s + ", sigma of order " + std::to_string(order_);
    }

    // Coordinate-level arithmetic used by GroundElement.

    std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        if (desc_.kind != FieldKind::Quaternions) return centre_mul(a.data(), b.data());
        const Rational& al = desc_.alpha;
        const Rational& be = desc_.beta;
        auto blk = [&](const std::vector<Rational>& v, std::size_t k) { return v.data() + k * m_; };
        auto p = [&](std::size_t x, std::size_t y) { return centre_mul(blk(a, x), blk(b, y)); };
        std::vector<Rational> out(dim_, Rational(0));
        auto acc = [&](std::size_t block, const std::vector<Rational>& v, const Rational& s) {
            if (sgn(s) == 0) return;
            for (std::size_t i = 0; i < m_; ++i) out[block * m_ + i] += s * v[i];
        };
        acc(0, p(0, 0), 1);
        acc(0, p(1, 1), al);
        acc(0, p(2, 2), be);
        acc(0, p(3, 3), -al * be);
        acc(1, p(0, 1), 1);
        acc(1, p(1, 0), 1);
        acc(1, p(2, 3), -be);
        acc(1, p(3, 2), be);
        acc(2, p(0, 2), 1);
        acc(2, p(2, 0), 1);
        acc(2, p(1, 3), al);
        acc(2, p(3, 1), -al);
        acc(3, p(0, 3), 1);
        acc(3, p(3, 0), 1);
        acc(3, p(1, 2), 1);
        acc(3, p(2, 1), -1);
        return out;
    }

    std::vector<Rational> invert(const std::vector<Rational>& a) const {
        if (desc_.kind != FieldKind::Quaternions) return centre_inverse(a.data());
        // q^-1 = conj(q) / N(q), N(q) = a0^2 - alpha a1^2 - beta a2^2 + alpha beta a3^2 in K.
        auto blk = [&](std::size_t k) { return a.data() + k * m_; };
        std::vector<Rational> norm(m_, Rational(0));
        const Rational scales[4] = {1, -desc_.alpha, -desc_.beta, desc_.alpha * desc_.beta};
        for (std::size_t k = 0; k < 4; ++k) {
            auto sq = centre_mul(blk(k), blk(k));
            for (std::size_t i = 0; i < m_; ++i) norm[i] += scales[k] * sq[i];
        }
        bool zero = true;
        for (const auto& c : norm) zero = zero && sgn(c) == 0;
        if (zero) throw Error(Errc::DivisionByZero, "quaternion of reduced norm zero");
        auto ninv = centre_inverse(norm.data());
        std::vector<Rational> out(dim_);
        for (std::size_t k = 0; k < 4; ++k) {
            auto part = centre_mul(blk(k), ninv.data());
            for (std::size_t i = 0; i < m_; ++i) out[k * m_ + i] = (k == 0) ? part[i] : Rational(-part[i]);
        }
        return out;
    }

    std::vector<Rational> apply_sigma(const std::vector<Rational>& a, int power) const {
        int p = ((power % order_) + order_) % order_;
        if (p == 0) return a;
        const auto& s = sigma_powers_[static_cast<std::size_t>(p)];
        std::vector<Rational> out(dim_, Rational(0));
        for (std::size_t blk = 0; blk < dim_ / m_; ++blk)
            for (std::size_t col = 0; col < m_; ++col) {
                const Rational& c = a[blk * m_ + col];
                if (sgn(c) == 0) continue;
                for (std::size_t row = 0; row < m_; ++row) out[blk * m_ + row] += s[row][col] * c;
            }
        return out;
    }

    /// True iff a commutes with every element of the basis (e_j).
    bool is_central(const GroundElement& a) const {
        for (const auto& e : h_basis_)
            if (!(a * e == e * a)) return false;
        return true;
    }

    /// Membership in the invariant subfield; a must lie in the centre.
    bool in_invariant_subfield(const GroundElement& a) const {
        if (!is_central(a)) throw Error(Errc::NotCentral, "element does not commute with H");
        return a.sigma(1) == a;
    }

    /// Central and sigma-fixed, without raising.
    bool is_invariant_central(const GroundElement& a) const {
        if (desc_.kind == FieldKind::Quaternions)
            for (std::size_t i = m_; i < dim_; ++i)
                if (sgn(a.coords()[i]) != 0) return false;
        return a.sigma(1) == a;
    }

    /// Coordinates (lambda_j) in the invariant subfield with a = sum lambda_j e_j.
    std::vector<GroundElement> h_coordinates(const GroundElement& a) const {
        std::vector<Rational> mu(dim_, Rational(0));
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c)
                if (sgn(h_solver_[r][c]) != 0) mu[r] += h_solver_[r][c] * a.coords()[c];
        const std::size_t inv_dim = invariant_basis_.size();
        std::vector<GroundElement> out;
        for (std::size_t j = 0; j < h_basis_.size(); ++j) {
            GroundElement lambda = zero();
            for (std::size_t b = 0; b < inv_dim; ++b) lambda = lambda + mu[j * inv_dim + b] * invariant_basis_[b];
            out.push_back(std::move(lambda));
        }
        return out;
    }

   private:
    explicit GroundField(FieldDescriptor desc) : desc_(std::move(desc)) {}

    void initialise() {
        if (desc_.kind == FieldKind::Rationals) {
            desc_.modulus = {Integer(0), Integer(1)};
            desc_.sigma_image = {Rational(0)};
        }
        if (desc_.kind == FieldKind::Quaternions && desc_.modulus.empty()) {
            desc_.modulus = {Integer(0), Integer(1)};
            desc_.sigma_image = {Rational(0)};
        }
        auto& mod = desc_.modulus;
        while (!mod.empty() && mod.back() == 0) mod.pop_back();
        if (mod.size() < 2) throw Error(Errc::InvalidArgument, "defining polynomial must be nonconstant");
        if (mod.back() != 1) throw Error(Errc::InvalidArgument, "defining polynomial must be monic");
        m_ = mod.size() - 1;
        if (m_ > 1 && !is_irreducible_over_q(mod))
            throw Error(Errc::ReduciblePolynomial, "defining polynomial is reducible over Q");
        dim_ = desc_.kind == FieldKind::Quaternions ? 4 * m_ : m_;
        if (desc_.kind == FieldKind::Quaternions && (sgn(desc_.alpha) == 0 || sgn(desc_.beta) == 0))
            throw Error(Errc::InvalidArgument, "quaternion constants must be nonzero");

        // theta^k for k < 2m-1 in the power basis.
        reduction_.assign(2 * m_ - 1, std::vector<Rational>(m_, Rational(0)));
        for (std::size_t k = 0; k < m_; ++k) reduction_[k][k] = 1;
        for (std::size_t k = m_; k + 1 < 2 * m_; ++k) {
            // theta * theta^{k-1}
            const auto& prev = reduction_[k - 1];
            std::vector<Rational> next(m_, Rational(0));
            for (std::size_t i = 0; i + 1 < m_; ++i) next[i + 1] = prev[i];
            const Rational top = prev[m_ - 1];
            for (std::size_t i = 0; i < m_; ++i) next[i] -= top * Rational(mod[i]);
            reduction_[k] = std::move(next);
        }

        // sigma on the centre.
        auto image = desc_.sigma_image;
        if (image.empty()) {
            image.assign(m_, Rational(0));
            if (m_ > 1) image[1] = 1;
        }
        if (image.size() != m_)
            throw Error(Errc::NotAnAutomorphism, "sigma image needs " + std::to_string(m_) + " coordinates");
        if (m_ == 1) image = {Rational(0)};
        // p(image) must vanish in K.
        std::vector<Rational> acc(m_, Rational(0));
        for (std::size_t i = mod.size(); i-- > 0;) {
            acc = centre_mul(acc.data(), image.data());
            acc[0] += Rational(mod[i]);
        }
        if (m_ > 1)
            for (const auto& c : acc)
                if (sgn(c) != 0)
                    throw Error(Errc::NotAnAutomorphism, "sigma image is not a root of the defining polynomial");

        Matrix<Rational> s1(m_, std::vector<Rational>(m_, Rational(0)));
        std::vector<Rational> power(m_, Rational(0));
        power[0] = 1;
        for (std::size_t col = 0; col < m_; ++col) {
            for (std::size_t row = 0; row < m_; ++row) s1[row][col] = power[row];
            power = centre_mul(power.data(), image.data());
        }
        Matrix<Rational> ident(m_, std::vector<Rational>(m_, Rational(0)));
        for (std::size_t i = 0; i < m_; ++i) ident[i][i] = 1;
        sigma_powers_ = {ident};
        Matrix<Rational> current = s1;
        while (current != ident) {
            sigma_powers_.push_back(current);
            if (static_cast<int>(sigma_powers_.size()) > kSigmaOrderCap)
                throw Error(Errc::InfiniteOrder, "sigma order exceeds " + std::to_string(kSigmaOrderCap));
            current = mat_mul(s1, current);
        }
        order_ = static_cast<int>(sigma_powers_.size());

        for (std::size_t i = 0; i < dim_; ++i) {
            std::vector<Rational> c(dim_, Rational(0));
            c[i] = 1;
            standard_basis_.emplace_back(this, std::move(c));
        }

        // Invariant subfield of the centre: kernel of sigma - Id on K.
        Matrix<Rational> fix = s1;
        for (std::size_t i = 0; i < m_; ++i) fix[i][i] -= 1;
        for (const auto& v : right_kernel(fix, m_, Rational(0), Rational(1))) {
            std::vector<Rational> c(dim_, Rational(0));
            for (std::size_t i = 0; i < m_; ++i) c[i] = v[i];
            invariant_basis_.emplace_back(this, std::move(c));
        }

        // Greedy basis of H over the invariant subfield: keep a standard basis
        // vector when it enlarges the span of {b e : b invariant, e kept}.
        const std::size_t target = dim_ / invariant_basis_.size();
        Matrix<Rational> span_rows;
        for (const auto& e : standard_basis_) {
            Matrix<Rational> trial = span_rows;
            for (const auto& b : invariant_basis_) trial.push_back((b * e).coords());
            auto rank = row_reduce(trial, dim_, Rational(0), Rational(1), false).rank();
            if (rank == trial.size()) {
                span_rows = std::move(trial);
                h_basis_.push_back(e);
            }
            if (h_basis_.size() == target) break;
        }
        if (h_basis_.size() != target) throw Error(Errc::InvalidArgument, "failed to build a basis of H");

        // Column (j, b) holds the coordinates of b e_j; invert to read off lambda_j.
        Matrix<Rational> cols(dim_, std::vector<Rational>(dim_, Rational(0)));
        for (std::size_t j = 0; j < h_basis_.size(); ++j)
            for (std::size_t b = 0; b < invariant_basis_.size(); ++b) {
                auto v = (invariant_basis_[b] * h_basis_[j]).coords();
                for (std::size_t r = 0; r < dim_; ++r) cols[r][j * invariant_basis_.size() + b] = v[r];
            }
        Matrix<Rational> aug = cols;
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) aug[r].push_back(Rational(r == c ? 1 : 0));
        auto e = row_reduce(std::move(aug), dim_, Rational(0), Rational(1), false);
        h_solver_.assign(dim_, std::vector<Rational>(dim_));
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) h_solver_[r][c] = e.reduced[r][dim_ + c];
    }

    Matrix<Rational> mat_mul(const Matrix<Rational>& a, const Matrix<Rational>& b) const {
        Matrix<Rational> out(m_, std::vector<Rational>(m_, Rational(0)));
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t k = 0; k < m_; ++k)
                if (sgn(a[i][k]) != 0)
                    for (std::size_t j = 0; j < m_; ++j) out[i][j] += a[i][k] * b[k][j];
        return out;
    }

    std::vector<Rational> centre_mul(const Rational* a, const Rational* b) const {
        if (m_ == 1) return {a[0] * b[0]};
        std::vector<Rational> prod(2 * m_ - 1, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (std::size_t j = 0; j < m_; ++j)
                if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
        }
        std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m_));
        for (std::size_t k = m_; k < prod.size(); ++k) {
            if (sgn(prod[k]) == 0) continue;
            for (std::size_t i = 0; i < m_; ++i) out[i] += prod[k] * reduction_[k][i];
        }
        return out;
    }

    std::vector<Rational> centre_inverse(const Rational* a) const {
        bool zero = true;
        for (std::size_t i = 0; i < m_; ++i) zero = zero && sgn(a[i]) == 0;
        if (zero) throw Error(Errc::DivisionByZero, "inverse of zero");
        if (m_ == 1) return {Rational(1) / a[0]};
        // Column j of the multiplication matrix is a * theta^j.
        Matrix<Rational> mult(m_, std::vector<Rational>(m_, Rational(0)));
        for (std::size_t j = 0; j < m_; ++j) {
            std::vector<Rational> e(m_, Rational(0));
            e[j] = 1;
            auto col = centre_mul(a, e.data());
            for (std::size_t i = 0; i < m_; ++i) mult[i][j] = col[i];
        }
        std::vector<Rational> rhs(m_, Rational(0));
        rhs[0] = 1;
        auto sol = solve_right(mult, m_, rhs, Rational(0), Rational(1));
        if (!sol) throw Error(Errc::DivisionByZero, "element is not invertible");
        return *sol;
    }

    FieldDescriptor desc_;
    std::size_t m_ = 1;
    std::size_t dim_ = 1;
    int order_ = 1;
    std::vector<std::vector<Rational>> reduction_;
    std::vector<Matrix<Rational>> sigma_powers_;
    std::vector<GroundElement> standard_basis_;
    std::vector<GroundElement> invariant_basis_;
    std::vector<GroundElement> h_basis_;
    Matrix<Rational> h_solver_;
};

namespace detail {
inline bool rational_scalar(const std::vector<Rational>& c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (sgn(c[i]) != 0) return false;
    return true;
}
}  // namespace detail

inline void require_same_field(const GroundElement& a, const GroundElement& b) {
    if (a.field_ptr() != b.field_ptr() || a.field_ptr() == nullptr)
        throw Error(Errc::MixedFields, "ground elements from different fields");
}

inline bool GroundElement::is_one() const {
    field();
    return !coords_.empty() && coords_[0] == 1 && detail::rational_scalar(coords_);
}

inline GroundElement GroundElement::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (detail::rational_scalar(coords_)) return field().from_rational(1 / coords_[0]);
    return GroundElement(field_, field().invert(coords_));
}

inline GroundElement GroundElement::sigma(int power) const {
    return GroundElement(field_, field().apply_sigma(coords_, power));
}

inline GroundElement operator+(const GroundElement& a, const GroundElement& b) {
    require_same_field(a, b);
    auto c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return GroundElement(a.field_, std::move(c));
}

inline GroundElement operator-(const GroundElement& a, const GroundElement& b) {
    require_same_field(a, b);
    auto c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return GroundElement(a.field_, std::move(c));
}

inline GroundElement operator-(const GroundElement& a) {
    auto c = a.coords_;
    for (auto& x : c) x = -x;
    return GroundElement(a.field_, std::move(c));
}

inline GroundElement operator*(const GroundElement& a, const GroundElement& b) {
    require_same_field(a, b);
    // Rationals are central; this skips the structure constants.
    if (detail::rational_scalar(a.coords_)) return a.coords_[0] * b;
    if (detail::rational_scalar(b.coords_)) return b.coords_[0] * a;
    return GroundElement(a.field_, a.field().multiply(a.coords_, b.coords_));
}

inline GroundElement operator*(const Rational& q, const GroundElement& a) {
    auto c = a.coords_;
    for (auto& x : c) x *= q;
    return GroundElement(a.field_, std::move(c));
}

/// Name of the k-th standard basis vector: a power of the centre generator
/// times a quaternion unit; "1" for the identity.
inline std::string basis_name(const GroundField& field, std::size_t k) {
    const std::size_t m = field.centre_degree();
    const std::size_t e = k % m;
    const std::size_t b = k / m;
    std::string name;
    if (e == 1) name = field.generator_name();
    if (e > 1) name = field.generator_name() + "^" + std::to_string(e);
    if (b > 0) {
        const char* units[] = {"", "i", "j", "k"};
        name += (name.empty() ? "" : "*") + std::string(units[b]);
    }
    return name.empty() ? "1" : name;
}

/// Bracketed combination of basis names, e.g. "[3/4]" or "[1 - 2*i]".
inline std::string to_string(const GroundElement& a) {
    const auto& c = a.coords();
    bool scalar = true;
    for (std::size_t k = 1; k < c.size(); ++k)
        if (sgn(c[k]) != 0) scalar = false;
    if (scalar) return "[" + to_string(c.empty() ? Rational(0) : c[0]) + "]";
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        const bool negative = sgn(c[k]) < 0;
        const Rational mag = abs(c[k]);
        std::string term;
        if (k == 0)
            term = to_string(mag);
        else
            term = (mag == 1 ? "" : to_string(mag) + "*") + basis_name(a.field(), k);
        if (s.empty())
            s = (negative ? "-" : "") + term;
        else
            s += (negative ? " - " : " + ") + term;
    }
    return "[" + s + "]";
}

namespace fields {

/// The fields below are built once and shared.
inline std::shared_ptr<const GroundField> rationals() {
    static const auto field = GroundField::make({});
    return field;
}

/// Q(i) with complex conjugation.
inline std::shared_ptr<const GroundField> gaussian_conjugation() {
    static const auto field = [] {
        FieldDescriptor d;
        d.kind = FieldKind::NumberField;
        d.modulus = {Integer(1), Integer(0), Integer(1)};
        d.sigma_image = {Rational(0), Rational(-1)};
        d.generator = "i";
        return GroundField::make(d);
    }();
    return field;
}

/// Rational Hamilton quaternions (-1,-1) over Q with sigma = Id.
inline std::shared_ptr<const GroundField> hamilton_rational() {
    static const auto field = [] {
        FieldDescriptor d;
        d.kind = FieldKind::Quaternions;
        return GroundField::make(d);
    }();
    return field;
}

}  // namespace fields

}  // namespace orefield

#endif  // OREFIELD_GROUND_HPP

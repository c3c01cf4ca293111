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

#ifndef OREFIELD_LINALG_HPP
#define OREFIELD_LINALG_HPP

// Gaussian elimination over a (possibly noncommutative) division ring.
//
// Row operations are always left multiplications, so the solution set of
// A z = c is preserved. Left systems x A = c are solved through the tracked
// transform T with T A = E in reduced row echelon form. Pivoting takes the
// first nonzero entry of each column.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace orefield {

template <class T>
struct ScalarOps {
    static bool is_zero(const T& a) { return a.is_zero(); }
    static T inverse(const T& a) { return a.inverse(); }
};

template <>
struct ScalarOps<Rational> {
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational inverse(const Rational& a) { return Rational(1) / a; }
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
struct Echelon {
    Matrix<T> reduced;
    Matrix<T> transform;
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const { return pivot_columns.size(); }
};

template <class T>
Echelon<T> row_reduce(Matrix<T> a, std::size_t cols, const T& zero, const T& one, bool track) {
    using Ops = ScalarOps<T>;
    const std::size_t rows = a.size();
    Echelon<T> out;
    if (track) {
        out.transform.assign(rows, std::vector<T>(rows, zero));
        for (std::size_t i = 0; i < rows; ++i) out.transform[i][i] = one;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && Ops::is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (track) std::swap(out.transform[p], out.transform[r]);
        T inv = Ops::inverse(a[r][c]);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = inv * a[r][j];
        if (track)
            for (auto& e : out.transform[r]) e = inv * e;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || Ops::is_zero(a[i][c])) continue;
            T factor = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!Ops::is_zero(a[r][j])) a[i][j] = a[i][j] - factor * a[r][j];
            if (track)
                for (std::size_t j = 0; j < rows; ++j)
                    if (!Ops::is_zero(out.transform[r][j]))
                        out.transform[i][j] = out.transform[i][j] - factor * out.transform[r][j];
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

/// Basis of {z : A z = 0}; one vector per free column, with that entry equal to one.
template <class T>
std::vector<std::vector<T>> right_kernel(const Matrix<T>& a, std::size_t cols, const T& zero, const T& one) {
    auto e = row_reduce(a, cols, zero, one, false);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> z(cols, zero);
        z[f] = one;
        for (std::size_t r = 0; r < e.rank(); ++r) z[e.pivot_columns[r]] = zero - e.reduced[r][f];
        basis.push_back(std::move(z));
    }
    return basis;
}

/// Basis of {x : x A = 0}.
template <class T>
std::vector<std::vector<T>> left_kernel(const Matrix<T>& a, std::size_t cols, const T& zero, const T& one) {
    auto e = row_reduce(a, cols, zero, one, true);
    std::vector<std::vector<T>> basis;
    for (std::size_t r = e.rank(); r < a.size(); ++r) basis.push_back(e.transform[r]);
    return basis;
}

template <class T>
std::optional<std::vector<T>> solve_right(const Matrix<T>& a, std::size_t cols, const std::vector<T>& c,
                                          const T& zero, const T& one) {
    Matrix<T> aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(c[i]);
    auto e = row_reduce(std::move(aug), cols + 1, zero, one, false);
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == cols) return std::nullopt;
    std::vector<T> z(cols, zero);
    for (std::size_t r = 0; r < e.rank(); ++r) z[e.pivot_columns[r]] = e.reduced[r][cols];
    return z;
}

template <class T>
std::optional<std::vector<T>> solve_left(const Matrix<T>& a, std::size_t cols, const std::vector<T>& c,
                                         const T& zero, const T& one) {
    using Ops = ScalarOps<T>;
    const std::size_t rows = a.size();
    auto e = row_reduce(a, cols, zero, one, true);
    std::vector<T> w(rows, zero);
    for (std::size_t r = 0; r < e.rank(); ++r) w[r] = c[e.pivot_columns[r]];
    for (std::size_t j = 0; j < cols; ++j) {
        T acc = zero;
        for (std::size_t r = 0; r < e.rank(); ++r)
            if (!Ops::is_zero(e.reduced[r][j])) acc = acc + w[r] * e.reduced[r][j];
        if (!Ops::is_zero(acc - c[j])) return std::nullopt;
    }
    std::vector<T> x(rows, zero);
    for (std::size_t r = 0; r < e.rank(); ++r)
        for (std::size_t k = 0; k < rows; ++k)
            if (!Ops::is_zero(e.transform[r][k])) x[k] = x[k] + w[r] * e.transform[r][k];
    return x;
}

}  // namespace orefield

#endif  // OREFIELD_LINALG_HPP

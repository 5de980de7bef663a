/* Copyright 2026 The orr Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Small exact linear algebra: rational row reduction, integer Smith normal
// form and solving over Z/ell^M.

#ifndef ORR_LINALG_HPP
#define ORR_LINALG_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace orr {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> zero_matrix(std::size_t rows, std::size_t cols) {
    return Matrix<T>(rows, std::vector<T>(cols, T(0)));
}

template <class T>
std::size_t column_count(const Matrix<T>& A) {
    return A.empty() ? 0 : A[0].size();
}

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(Matrix<Rational>& A) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = A.size(), cols = column_count(A);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        const Rational inv = 1 / A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            const Rational f = A[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (A[r][j] != 0) A[i][j] -= f * A[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix<Rational> A) { return rref(A).size(); }

// Basis of {x : A x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(Matrix<Rational> A, std::size_t cols) {
    auto pivots = rref(A);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some solution of A x = b, or nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix<Rational>& A, const std::vector<Rational>& b,
                                                  std::size_t cols) {
    Matrix<Rational> aug = A;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    if (aug.empty()) return std::vector<Rational>(cols, 0);
    auto pivots = rref(aug);
    std::vector<Rational> x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

// Scales a rational vector to a primitive integer vector with positive leading entry.
inline std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& x : v) l = Integer(lcm(l, Integer(x.get_den())));
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& x : v) {
        out.push_back(Integer(x.get_num() * (l / x.get_den())));
        g = Integer(gcd(g, out.back()));
    }
    if (g == 0) return out;
    for (auto& x : out) x /= g;
    for (const auto& x : out)
        if (x != 0) {
            if (x < 0)
                for (auto& y : out) y = -y;
            break;
        }
    return out;
}

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix (all positive).
inline std::vector<Integer> smith_invariants(Matrix<Integer> A) {
    std::vector<Integer> diag;
    const std::size_t rows = A.size(), cols = column_count(A);
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot of least absolute value in the trailing block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (A[i][j] != 0 && (pr == rows || abs(A[i][j]) < abs(A[pr][pc]))) {
                    pr = i;
                    pc = j;
                    if (abs(A[pr][pc]) == 1) goto found;
                }
    found:
        if (pr == rows) break;
        std::swap(A[t], A[pr]);
        for (auto& row : A) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            const Integer p = A[t][t];
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (A[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), p.get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    if (A[t][j] != 0) A[i][j] -= q * A[t][j];
                if (A[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (A[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), p.get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    if (A[i][t] != 0) A[i][j] -= q * A[i][t];
                if (A[t][j] != 0) clean = false;
            }
            if (!clean) {
                // Move the smallest leftover in row/column t to the pivot.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (A[i][t] != 0 && abs(A[i][t]) < abs(A[bi][bj])) bi = i, bj = t;
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (A[t][j] != 0 && abs(A[t][j]) < abs(A[bi][bj])) bi = t, bj = j;
                std::swap(A[t], A[bi]);
                for (auto& row : A) std::swap(row[t], row[bj]);
                continue;
            }
            // Divisibility condition for the trailing block.
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (A[i][j] != 0 && !mpz_divisible_p(A[i][j].get_mpz_t(), p.get_mpz_t())) {
                        for (std::size_t c = t; c < cols; ++c) A[t][c] += A[i][c];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(A[t][t]));
        ++t;
    }
    return diag;
}

// Some solution of A x = b over Z/ell^M, assuming the rows of A are
// independent modulo ell (so every pivot can be chosen to be a unit).
inline std::optional<std::vector<Integer>> solve_mod_prime_power(Matrix<Integer> A, std::vector<Integer> b,
                                                                 std::size_t cols, const Integer& ell,
                                                                 const Integer& modulus) {
    const std::size_t rows = A.size();
    for (auto& row : A)
        for (auto& x : row) x = mod_floor(x, modulus);
    for (auto& x : b) x = mod_floor(x, modulus);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && mpz_divisible_p(A[p][c].get_mpz_t(), ell.get_mpz_t())) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        const Integer inv = mod_inverse(A[r][c], modulus);
        for (std::size_t j = c; j < cols; ++j) A[r][j] = mod_floor(A[r][j] * inv, modulus);
        b[r] = mod_floor(b[r] * inv, modulus);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            const Integer f = A[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (A[r][j] != 0) A[i][j] = mod_floor(A[i][j] - f * A[r][j], modulus);
            b[i] = mod_floor(b[i] - f * b[r], modulus);
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Integer> x(cols, 0);
    for (auto [row, c] : pivots) x[c] = b[row];
    return x;
}

}  // namespace orr

#endif

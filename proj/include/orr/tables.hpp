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
// Rank tables for N_k, D_k and H_3 of free nilpotent groups, and the two
// generating-function identities behind them.

#ifndef ORR_TABLES_HPP
#define ORR_TABLES_HPP

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "integer.hpp"
#include "lyndon.hpp"

namespace orr {

// Cell of the H_3 table: ranks D_k, ..., D_{2k-2} joined by "⊕".
inline std::string h3_cell(int n, int k) {
    std::string s;
    for (int i = k; i <= 2 * k - 2; ++i) {
        if (i > k) s += "⊕";
        s += to_string(d_rank(n, i));
    }
    return s;
}

// Tab-separated grid: header "n\k", then one row per n.
inline std::string grid_tsv(int n_lo, int n_hi, int k_lo, int k_hi,
                            const std::function<std::string(int, int)>& cell) {
    std::ostringstream out;
    out << "n\\k";
    for (int k = k_lo; k <= k_hi; ++k) out << '\t' << k;
    out << '\n';
    for (int n = n_lo; n <= n_hi; ++n) {
        out << n;
        for (int k = k_lo; k <= k_hi; ++k) out << '\t' << cell(n, k);
        out << '\n';
    }
    return out.str();
}

inline std::string witt_table_tsv(int n_lo, int n_hi, int k_lo, int k_hi) {
    return grid_tsv(n_lo, n_hi, k_lo, k_hi, [](int n, int k) { return to_string(witt_rank(n, k)); });
}

inline std::string d_table_tsv(int n_lo, int n_hi, int k_lo, int k_hi) {
    return grid_tsv(n_lo, n_hi, k_lo, k_hi, [](int n, int k) { return to_string(d_rank(n, k)); });
}

inline std::string h3_table_tsv(int n_lo, int n_hi, int k_lo, int k_hi) {
    return grid_tsv(n_lo, n_hi, k_lo, k_hi, h3_cell);
}

// Truncated power series in z with integer coefficients, index = degree.
using PowerSeries = std::vector<Integer>;

// prod_{k>=1} (1 - z^k)^{-e_k} through `degree`; e[k] for k = 1..degree.
inline PowerSeries euler_product(const std::function<Integer(int)>& e, int degree) {
    PowerSeries out(degree + 1, 0);
    out[0] = 1;
    for (int k = 1; k <= degree; ++k) {
        const Integer ek = e(k);
        if (ek == 0) continue;
        // (1 - z^k)^{-e} = sum_j binom(e + j - 1, j) z^{kj}
        PowerSeries factor(degree + 1, 0);
        for (int j = 0; j * k <= degree; ++j) factor[j * k] = binomial(ek + j - 1, j);
        PowerSeries next(degree + 1, 0);
        for (int a = 0; a <= degree; ++a) {
            if (out[a] == 0) continue;
            for (int b = 0; a + b <= degree; b += k) next[a + b] += out[a] * factor[b];
        }
        out.swap(next);
    }
    return out;
}

// (1 - z)^p (1 - n z)^{-q} through `degree`.
inline PowerSeries rational_series(int n, int p, int q, int degree) {
    PowerSeries a(degree + 1, 0), out(degree + 1, 0);
    for (int j = 0; j <= degree && j <= p; ++j) a[j] = (j % 2 ? -1 : 1) * binomial(p, j);
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j)
            if (a[i] != 0) out[i + j] += a[i] * binomial(Integer(q + j - 1), j) * ipow(Integer(n), j);
    return out;
}

struct SeriesCheck {
    bool pass = true;
    std::optional<int> first_mismatch;  // degree of the first differing coefficient
    Integer lhs, rhs;                   // the coefficients there
};

inline SeriesCheck compare_series(const PowerSeries& a, const PowerSeries& b) {
    SeriesCheck r;
    for (std::size_t d = 0; d < a.size() && d < b.size(); ++d)
        if (a[d] != b[d]) {
            r.pass = false;
            r.first_mismatch = static_cast<int>(d);
            r.lhs = a[d];
            r.rhs = b[d];
            break;
        }
    return r;
}

// prod (1 - z^k)^{-N_k} = 1 / (1 - n z).
inline SeriesCheck check_cyclotomic(int n, int degree) {
    return compare_series(euler_product([n](int k) { return witt_rank(n, k); }, degree),
                          rational_series(n, 0, 1, degree));
}

// prod (1 - z^k)^{-D_k} = (1 - z)^n / (1 - n z)^{n - 1}.
inline SeriesCheck check_d_generating(int n, int degree) {
    return compare_series(euler_product([n](int k) { return d_rank(n, k); }, degree),
                          rational_series(n, n, n - 1, degree));
}

}  // namespace orr

#endif

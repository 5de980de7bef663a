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
// Massey products on H^1 of the free group, evaluated through Magnus
// coefficients, and the defining systems built from them.

#ifndef ORR_MASSEY_HPP
#define ORR_MASSEY_HPP

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "lyndon.hpp"
#include "magnus.hpp"
#include "words.hpp"

namespace orr {

// A 1-cochain on F_n of the form g -> scale * mu(index; g).
struct MagnusCochain {
    MultiIndex index;
    Integer scale = 1;
    Rational operator()(const Word& g) const {
        return Rational(scale) * coefficient(g, index, CoefficientRing::integers());
    }
};

// Coboundary of a 1-cochain with trivial coefficients:
// (df)(g1, g2) = f(g2) - f(g1 g2) + f(g1).
inline Rational coboundary(const std::function<Rational(const Word&)>& f, const Word& g1, const Word& g2) {
    return f(g2) - f(g1 * g2) + f(g1);
}

// Cup product of 1-cochains: (u v)(g1, g2) = (-1)^{1*1} u(g1) v(g2).
inline Rational cup(const std::function<Rational(const Word&)>& u, const std::function<Rational(const Word&)>& v,
                    const Word& g1, const Word& g2) {
    return -u(g1) * v(g2);
}

// Entries a_{rs} = -mu((i_r ... i_{s-1}); -) for 1 <= r < s <= m + 1,
// (r, s) != (1, m + 1); stored 1-based.
class DefiningSystem {
public:
    explicit DefiningSystem(MultiIndex I) : I_(std::move(I)) {
        const int m = static_cast<int>(I_.size());
        if (m < 2) throw std::invalid_argument("a defining system needs |I| >= 2");
        for (int r = 1; r <= m; ++r)
            for (int s = r + 1; s <= m + 1; ++s) {
                if (r == 1 && s == m + 1) continue;
                entries_[{r, s}] = MagnusCochain{MultiIndex(I_.begin() + (r - 1), I_.begin() + (s - 1)), -1};
            }
    }

    const MultiIndex& index() const { return I_; }
    int length() const { return static_cast<int>(I_.size()); }
    const MagnusCochain& entry(int r, int s) const { return entries_.at({r, s}); }
    MagnusCochain& entry(int r, int s) { return entries_.at({r, s}); }
    const std::map<std::pair<int, int>, MagnusCochain>& entries() const { return entries_; }

private:
    MultiIndex I_;
    std::map<std::pair<int, int>, MagnusCochain> entries_;
};

struct DefiningSystemCheck {
    bool ok = true;
    std::string witness;  // first failing identity, when !ok
};

// Checks on random pairs (g1, g2), for every entry with s > r + 1:
//  (a) d(mu_rs) = sum_t mu_rt cup mu_ts  with mu = -a, signed cup product;
//  (b) the matrix form a(g1) + a(g2) - a(g1 g2) = sum_t a_rt(g1) a_ts(g2).
inline DefiningSystemCheck defining_system_check(const DefiningSystem& A, int samples, std::mt19937_64& rng,
                                                 int n) {
    std::uniform_int_distribution<int> gen(1, n), ex(-2, 2), len(0, 5);
    auto random_word = [&] {
        std::vector<Syllable> raw;
        for (int j = len(rng); j > 0; --j) raw.push_back({gen(rng), ex(rng)});
        return Word::from_syllables(n, raw);
    };
    for (int trial = 0; trial < samples; ++trial) {
        Word g1 = random_word(), g2 = random_word();
        for (const auto& [rs, a] : A.entries()) {
            auto [r, s] = rs;
            if (s == r + 1) continue;
            auto mu = [&](int p, int q) {
                const MagnusCochain& e = A.entry(p, q);
                return std::function<Rational(const Word&)>([e](const Word& g) -> Rational { return -e(g); });
            };
            Rational lhs = coboundary(mu(r, s), g1, g2), rhs = 0;
            Rational lhs_b = a(g1) + a(g2) - a(g1 * g2), rhs_b = 0;
            for (int t = r + 1; t < s; ++t) {
                rhs += cup(mu(r, t), mu(t, s), g1, g2);
                rhs_b += A.entry(r, t)(g1) * A.entry(t, s)(g2);
            }
            if (lhs != rhs || lhs_b != rhs_b) {
                return {false, "entry (" + std::to_string(r) + "," + std::to_string(s) + ") fails at g1 = " +
                                   format(g1) + ", g2 = " + format(g2)};
            }
        }
    }
    return {};
}

// <a_1, ..., a_k>(f) for the Magnus defining system of I: (-1)^{k+1} mu(I; f).
// Requires f in Gamma_k.
inline Rational massey_evaluate(const MultiIndex& I, const Word& f, const CoefficientRing& ring) {
    const int k = static_cast<int>(I.size());
    if (k < 2) throw std::invalid_argument("Massey products need |I| >= 2");
    auto depth = lcs_depth(f, k - 1, CoefficientRing::integers());
    if (depth.value < k) throw std::domain_error("relation is not in Gamma_" + std::to_string(k));
    Rational mu = coefficient(f, I, ring);
    return ring.normalize(k % 2 ? mu : Rational(-mu));
}

// Values a_pq(x_i) of a defining system on the generators.
using GeneratorValues = std::map<std::pair<int, int>, std::vector<Rational>>;

// The general evaluation on a relator f in [F, F]:
//   sum_r (-1)^{r+1} sum_{c_1+...+c_r = m} sum_{i_1..i_r}
//     a_{1,1+c_1}(x_{i_1}) ... a_{m+1-c_r,m+1}(x_{i_r}) mu((i_1..i_r); f).
// Terms needing a_{1,m+1} have r = 1 and vanish because mu((i); f) = 0.
inline Rational general_massey_evaluate(int m, int n, const GeneratorValues& a, const Word& f) {
    const auto Z = CoefficientRing::integers();
    for (int i = 1; i <= n; ++i)
        if (coefficient(f, {i}, Z) != 0) throw std::domain_error("relator is not in [F, F]");
    Rational total = 0;
    // Enumerate compositions of m with r >= 2 parts.
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            const int r = static_cast<int>(parts.size());
            if (r < 2) return;
            std::vector<std::pair<int, int>> spans;
            int start = 1;
            for (int c : parts) {
                spans.emplace_back(start, start + c);
                start += c;
            }
            Rational sum = 0;
            for (const auto& I : all_indices(n, r)) {
                Rational prod = 1;
                for (int j = 0; j < r && prod != 0; ++j) prod *= a.at(spans[j])[I[j] - 1];
                if (prod != 0) sum += prod * coefficient(f, I, Z);
            }
            total += (r % 2 ? 1 : -1) * sum;
            return;
        }
        for (int c = 1; c <= left; ++c) {
            parts.push_back(c);
            rec(left - c);
            parts.pop_back();
        }
    };
    rec(m);
    return total;
}

// Generator values of the Magnus defining system of I: a_pq(x_i) = -mu((i_p..i_{q-1}); x_i).
inline GeneratorValues magnus_generator_values(const MultiIndex& I, int n) {
    DefiningSystem A(I);
    GeneratorValues out;
    for (const auto& [pq, e] : A.entries()) {
        std::vector<Rational> v;
        for (int i = 1; i <= n; ++i) v.push_back(e(Word::generator(n, i)));
        out[pq] = v;
    }
    return out;
}

// Entry (I, J) = massey_evaluate(I, word realizing e(J)) for I, J in LW_k.
inline Matrix<Integer> dual_basis_matrix(int n, int k) {
    auto L = enumerate_lyndon(n, k);
    const auto Z = CoefficientRing::integers();
    Matrix<Integer> M = zero_matrix<Integer>(L.size(), L.size());
    for (std::size_t j = 0; j < L.size(); ++j) {
        Word f = bracket_word(L[j], n);
        for (std::size_t i = 0; i < L.size(); ++i) M[i][j] = massey_evaluate(L[i].letters(), f, Z).get_num();
    }
    return M;
}

}  // namespace orr

#endif

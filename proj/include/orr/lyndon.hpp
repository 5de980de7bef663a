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
// Lyndon words, standard factorization and the ranks of the free Lie algebra.

#ifndef ORR_LYNDON_HPP
#define ORR_LYNDON_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "magnus.hpp"
#include "words.hpp"

namespace orr {

inline bool is_lyndon(const MultiIndex& w) {
    if (w.empty()) return false;
    // Strictly smaller than every proper suffix.
    for (std::size_t s = 1; s < w.size(); ++s)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + s, w.end())) return false;
    return true;
}

// A multi-index certified to be a Lyndon word.
class LyndonWord {
public:
    explicit LyndonWord(MultiIndex letters) : w_(std::move(letters)) {
        if (!is_lyndon(w_)) throw std::invalid_argument("'" + index_string(w_) + "' is not a Lyndon word");
    }
    const MultiIndex& letters() const { return w_; }
    int weight() const { return static_cast<int>(w_.size()); }
    std::string str(int n = 9) const { return index_string(w_, n); }
    bool operator==(const LyndonWord& o) const { return w_ == o.w_; }
    bool operator!=(const LyndonWord& o) const { return w_ != o.w_; }
    // Lexicographic; use BasisOrder for the weight-major basis order.
    bool operator<(const LyndonWord& o) const { return w_ < o.w_; }

private:
    MultiIndex w_;
};

// Total order on the Hall basis: weight first, then lexicographic.
struct BasisOrder {
    bool operator()(const LyndonWord& a, const LyndonWord& b) const {
        return GradedLex{}(a.letters(), b.letters());
    }
};

// Lyndon words of length exactly k over {1..n} in lexicographic order (Duval).
inline std::vector<LyndonWord> enumerate_lyndon(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("enumerate_lyndon needs n >= 1, k >= 1");
    std::vector<LyndonWord> out;
    MultiIndex w{1};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == k) out.emplace_back(w);
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == n) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

// All Lyndon words of weight 1..max_weight in basis order.
inline std::vector<LyndonWord> hall_basis(int n, int max_weight) {
    std::vector<LyndonWord> out;
    for (int k = 1; k <= max_weight; ++k)
        for (auto& w : enumerate_lyndon(n, k)) out.push_back(std::move(w));
    return out;
}

// (I1, I2) with I2 the longest proper Lyndon suffix; requires |I| >= 2.
inline std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& I) {
    const auto& w = I.letters();
    if (w.size() < 2) throw std::invalid_argument("standard factorization needs weight >= 2");
    for (std::size_t s = 1; s < w.size(); ++s) {
        MultiIndex suffix(w.begin() + s, w.end());
        if (is_lyndon(suffix)) return {LyndonWord(MultiIndex(w.begin(), w.begin() + s)), LyndonWord(suffix)};
    }
    throw std::logic_error("Lyndon word without Lyndon suffix");
}

inline int mobius(int d) {
    int mu = 1;
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            mu = -mu;
        }
    return d > 1 ? -mu : mu;
}

// Necklace (Witt) count N_k = (1/k) sum_{d | k} mobius(d) n^{k/d}.
inline Integer witt_rank(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("witt_rank needs n >= 1, k >= 1");
    Integer s = 0;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += mobius(d) * ipow(n, k / d);
    return s / k;
}

// Rank of the kernel of H (x) L_k -> L_{k+1}: n N_k - N_{k+1}.
inline Integer d_rank(int n, int k) { return n * witt_rank(n, k) - witt_rank(n, k + 1); }

// Group element whose lower-central class is e(I): x_i for letters, and the
// commutator [a, b] = a b a^-1 b^-1 along the standard factorization.
inline Word bracket_word(const LyndonWord& I, int n) {
    if (I.weight() == 1) return Word::generator(n, I.letters()[0]);
    auto [a, b] = standard_factorization(I);
    return commutator(bracket_word(a, n), bracket_word(b, n));
}

}  // namespace orr

#endif

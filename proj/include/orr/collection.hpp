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
// Normal forms in the free nilpotent quotient F / Gamma_k: every element is a
// product of powers of basis commutators, ordered by weight and then lex.

#ifndef ORR_COLLECTION_HPP
#define ORR_COLLECTION_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "lyndon.hpp"
#include "magnus.hpp"
#include "words.hpp"

namespace orr {

struct NormalForm {
    int n;
    int k;
    CoefficientRing ring;
    std::vector<std::pair<LyndonWord, Integer>> factors;  // basis order, nonzero exponents

    Integer exponent(const LyndonWord& I) const {
        for (const auto& [J, a] : factors)
            if (J == I) return a;
        return 0;
    }
    bool operator==(const NormalForm& o) const {
        return n == o.n && k == o.k && ring == o.ring && factors == o.factors;
    }
    std::string str() const {
        if (factors.empty()) return "1";
        std::string s;
        for (const auto& [I, a] : factors) {
            if (!s.empty()) s += " ";
            s += "e(" + I.str(n) + ")";
            if (a != 1) s += "^" + a.get_str();
        }
        return s;
    }
};

// The product of the factors as an honest word.
inline Word realize(const NormalForm& nf) {
    Word w(nf.n);
    for (const auto& [I, a] : nf.factors) w = w * power(bracket_word(I, nf.n), a);
    return w;
}

// Collects w modulo Gamma_k. Exponents are computed over Z; over Z/ell^M
// they are then reduced, which is the image of the pro-ell normal form.
inline NormalForm normal_form(const Word& w, int k, const CoefficientRing& ring) {
    if (k < 2) throw std::invalid_argument("normal_form needs k >= 2");
    if (ring.kind() == RingKind::Rationals) throw std::invalid_argument("normal_form needs ring Z or Z/ell^M");
    const int n = w.rank();
    const auto Z = CoefficientRing::integers();
    NormalForm nf{n, k, ring, {}};
    Word r = w;
    for (int j = 1; j < k; ++j) {
        auto S = expand(r, j, Z);
        if (series_depth(S).value < j) throw std::logic_error("collection left a lower-degree residue");
        auto layer = detail::decompose_homogeneous(homogeneous_part(S, j), j, Z);
        Word prefix(n);
        for (const auto& [I, a] : layer.coefficients()) {
            nf.factors.emplace_back(I, a.get_num());
            prefix = prefix * power(bracket_word(I, n), a.get_num());
        }
        r = invert(prefix) * r;
    }
    if (ring.is_modular()) {
        std::vector<std::pair<LyndonWord, Integer>> kept;
        for (auto& [I, a] : nf.factors) {
            Integer red = mod_floor(a, ring.modulus());
            if (red != 0) kept.emplace_back(I, red);
        }
        nf.factors = std::move(kept);
    }
    return nf;
}

// Normal form of the group commutator b^-1 a^-1 b a of two basis elements
// a < b (basis order), both of weight < k.
inline NormalForm commutator_word(const LyndonWord& a, const LyndonWord& b, int k, int n,
                                  const CoefficientRing& ring) {
    if (!BasisOrder{}(a, b)) throw std::invalid_argument("commutator_word needs a < b in basis order");
    if (a.weight() >= k || b.weight() >= k) throw std::invalid_argument("commutator_word needs weights < k");
    Word wa = bracket_word(a, n), wb = bracket_word(b, n);
    return normal_form(invert(wb) * invert(wa) * wb * wa, k, ring);
}

}  // namespace orr

#endif

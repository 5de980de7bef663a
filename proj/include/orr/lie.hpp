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
// The free Lie algebra inside the tensor algebra, written in the Lyndon basis
// e(I) (brackets along the standard factorization).

#ifndef ORR_LIE_HPP
#define ORR_LIE_HPP

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "lyndon.hpp"
#include "magnus.hpp"
#include "ring.hpp"

namespace orr {

// Element of the tensor algebra on X_1..X_n: a finite sum of words.
class TensorElement {
public:
    explicit TensorElement(int n = 1) : n_(n) {}
    static TensorElement letter(int n, int i) {
        TensorElement t(n);
        t.terms_[{i}] = 1;
        return t;
    }

    int rank() const { return n_; }
    const SeriesTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const MultiIndex& I) const {
        auto it = terms_.find(I);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add(const MultiIndex& I, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(I, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    void add(const TensorElement& o, const Rational& scale = 1) {
        for (const auto& [I, c] : o.terms_) add(I, c * scale);
    }
    TensorElement reduced(const CoefficientRing& ring) const {
        TensorElement out(n_);
        for (const auto& [I, c] : terms_) out.add(I, ring.normalize(c));
        return out;
    }
    bool operator==(const TensorElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        TensorElement out(a.n_);
        for (const auto& [I, x] : a.terms_)
            for (const auto& [J, y] : b.terms_) {
                MultiIndex IJ = I;
                IJ.insert(IJ.end(), J.begin(), J.end());
                out.add(IJ, x * y);
            }
        return out;
    }

private:
    int n_;
    SeriesTerms terms_;
};

inline TensorElement tensor_commutator(const TensorElement& a, const TensorElement& b) {
    TensorElement out = a * b;
    out.add(b * a, -1);
    return out;
}

inline TensorElement homogeneous_part(const MagnusSeries& S, int d) {
    TensorElement t(S.rank());
    for (const auto& [I, c] : S.degree_part(d)) t.add(I, c);
    return t;
}

namespace detail {

// Process-wide memo for e(I) as tensors; entries are immutable once inserted.
class LyndonTensorCache {
public:
    static LyndonTensorCache& instance() {
        static LyndonTensorCache cache;
        return cache;
    }
    TensorElement get(const LyndonWord& I, int n) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find({n, I.letters()});
            if (it != memo_.end()) return it->second;
        }
        TensorElement t(n);
        if (I.weight() == 1) {
            t = TensorElement::letter(n, I.letters()[0]);
        } else {
            auto [a, b] = standard_factorization(I);
            t = tensor_commutator(get(a, n), get(b, n));
        }
        std::lock_guard<std::mutex> lock(mu_);
        return memo_.emplace(std::make_pair(n, I.letters()), t).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, MultiIndex>, TensorElement> memo_;
};

}  // namespace detail

// e(I) expanded in the tensor algebra.
inline TensorElement lyndon_bracket_tensor(const LyndonWord& I, int n) {
    return detail::LyndonTensorCache::instance().get(I, n);
}

// Matrix of word coefficients: entry (I, J) is the coefficient of the word I
// in e(J), for I, J in LW_k (lexicographic order).
inline Matrix<Integer> pairing_matrix(int n, int k) {
    auto L = enumerate_lyndon(n, k);
    Matrix<Integer> P = zero_matrix<Integer>(L.size(), L.size());
    for (std::size_t j = 0; j < L.size(); ++j) {
        auto t = lyndon_bracket_tensor(L[j], n);
        for (std::size_t i = 0; i < L.size(); ++i) P[i][j] = t.coefficient(L[i].letters()).get_num();
    }
    return P;
}

// True when every e(J), |J| = k, has J as its lexicographically least word,
// with coefficient 1. Then peeling off least words decomposes Lie elements.
inline bool certify_unitriangular(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, bool> known;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = known.find({n, k});
        if (it != known.end()) return it->second;
    }
    bool ok = true;
    for (const auto& J : enumerate_lyndon(n, k)) {
        auto t = lyndon_bracket_tensor(J, n);
        if (t.is_zero() || t.terms().begin()->first != J.letters() || t.terms().begin()->second != 1) {
            ok = false;
            break;
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    known[{n, k}] = ok;
    return ok;
}

// Element of the free Lie algebra, as coordinates in the Lyndon basis.
class LieElement {
public:
    explicit LieElement(int n = 1) : n_(n) {}
    static LieElement basis(int n, const LyndonWord& I) {
        LieElement e(n);
        e.add(I, 1);
        return e;
    }

    int rank() const { return n_; }
    const std::map<LyndonWord, Rational, BasisOrder>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Rational coefficient(const LyndonWord& I) const {
        auto it = c_.find(I);
        return it == c_.end() ? Rational(0) : it->second;
    }
    void add(const LyndonWord& I, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = c_.try_emplace(I, 0);
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
    void add(const LieElement& o, const Rational& scale = 1) {
        for (const auto& [I, c] : o.c_) add(I, c * scale);
    }
    LieElement reduced(const CoefficientRing& ring) const {
        LieElement out(n_);
        for (const auto& [I, c] : c_) out.add(I, ring.normalize(c));
        return out;
    }
    bool operator==(const LieElement& o) const { return n_ == o.n_ && c_ == o.c_; }

    TensorElement to_tensor() const {
        TensorElement t(n_);
        for (const auto& [I, c] : c_) t.add(lyndon_bracket_tensor(I, n_), c);
        return t;
    }

private:
    int n_;
    std::map<LyndonWord, Rational, BasisOrder> c_;
};

namespace detail {

inline LieElement decompose_homogeneous(const TensorElement& t, int d, const CoefficientRing& ring) {
    const int n = t.rank();
    LieElement out(n);
    if (t.is_zero()) return out;
    if (certify_unitriangular(n, d)) {
        TensorElement residual = t;
        // Least remaining word must be Lyndon; peel off its basis element.
        while (!residual.is_zero()) {
            const auto& [W, c] = *residual.terms().begin();
            if (!is_lyndon(W)) break;
            LyndonWord J(W);
            Rational coef = c;
            out.add(J, coef);
            residual.add(lyndon_bracket_tensor(J, n), -coef);
            residual = residual.reduced(ring);
        }
        if (!residual.is_zero()) throw std::domain_error("tensor is not a Lie element");
        return out.reduced(ring);
    }
    // General route: solve against the expanded basis over Q.
    auto L = enumerate_lyndon(n, d);
    std::map<MultiIndex, std::size_t> row_of;
    std::vector<TensorElement> cols;
    for (const auto& J : L) {
        cols.push_back(lyndon_bracket_tensor(J, n));
        for (const auto& [W, c] : cols.back().terms()) row_of.emplace(W, row_of.size());
    }
    for (const auto& [W, c] : t.terms())
        if (!row_of.count(W)) throw std::domain_error("tensor is not a Lie element");
    Matrix<Rational> A = zero_matrix<Rational>(row_of.size(), L.size());
    for (std::size_t j = 0; j < L.size(); ++j)
        for (const auto& [W, c] : cols[j].terms()) A[row_of[W]][j] = c;
    std::vector<Rational> b(row_of.size(), 0);
    for (const auto& [W, c] : t.terms()) b[row_of[W]] = c;
    auto x = solve(A, b, L.size());
    if (!x) throw std::domain_error("tensor is not a Lie element");
    out = LieElement(n);
    for (std::size_t j = 0; j < L.size(); ++j) out.add(L[j], (*x)[j]);
    return out.reduced(ring);
}

}  // namespace detail

// Coordinates of a Lie element given in the tensor algebra. Throws
// std::domain_error when t is not in the span of the e(I).
inline LieElement decompose(const TensorElement& t, const CoefficientRing& ring = CoefficientRing::rationals()) {
    std::map<int, TensorElement> by_degree;
    for (const auto& [I, c] : t.terms()) {
        auto [it, fresh] = by_degree.try_emplace(static_cast<int>(I.size()), t.rank());
        it->second.add(I, c);
    }
    LieElement out(t.rank());
    for (const auto& [d, part] : by_degree) {
        if (d == 0) throw std::domain_error("tensor has a constant term");
        out.add(detail::decompose_homogeneous(part, d, ring));
    }
    return out;
}

inline LieElement bracket(const LieElement& a, const LieElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in bracket");
    return decompose(tensor_commutator(a.to_tensor(), b.to_tensor()));
}

// Element of H (x) L_k: coefficient of X_i (x) e(J).
using HLElement = std::map<std::pair<int, LyndonWord>, Rational>;

// Sum_i [X_i, u_i] for an element of H (x) L_k.
inline TensorElement contract_bracket(const HLElement& v, int n) {
    TensorElement t(n);
    for (const auto& [key, c] : v)
        t.add(tensor_commutator(TensorElement::letter(n, key.first), lyndon_bracket_tensor(key.second, n)), c);
    return t;
}

namespace detail {

inline std::vector<int> content(const MultiIndex& I, int n) {
    std::vector<int> c(n, 0);
    for (int i : I) ++c[i - 1];
    return c;
}

}  // namespace detail

// Basis of the kernel of H (x) L_k -> L_{k+1}, X_i (x) u -> [X_i, u], over Q.
// The bracket preserves letter content, so the map is solved blockwise.
inline std::vector<HLElement> dk_kernel_basis(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("dk_kernel_basis needs n >= 1, k >= 1");
    std::map<std::vector<int>, std::vector<std::pair<int, LyndonWord>>> blocks;
    for (const auto& J : enumerate_lyndon(n, k))
        for (int i = 1; i <= n; ++i) {
            auto c = detail::content(J.letters(), n);
            ++c[i - 1];
            blocks[c].emplace_back(i, J);
        }
    std::vector<HLElement> basis;
    for (const auto& [content, cols] : blocks) {
        std::vector<LieElement> images;
        std::map<LyndonWord, std::size_t> row_of;
        for (const auto& [i, J] : cols) {
            images.push_back(bracket(LieElement::basis(n, LyndonWord({i})), LieElement::basis(n, J)));
            for (const auto& [W, c] : images.back().coefficients()) row_of.emplace(W, row_of.size());
        }
        Matrix<Rational> A = zero_matrix<Rational>(row_of.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [W, c] : images[j].coefficients()) A[row_of[W]][j] = c;
        for (const auto& v : nullspace(A, cols.size())) {
            auto prim = primitive_integer_vector(v);
            HLElement e;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (prim[j] != 0) e[cols[j]] = Rational(prim[j]);
            basis.push_back(std::move(e));
        }
    }
    return basis;
}

// Class of w in Gamma_k / Gamma_{k+1} in the basis e(I), |I| = k. Requires
// w in Gamma_k as seen by its expansion over `ring`.
inline LieElement group_graded_decompose(const Word& w, int k, const CoefficientRing& ring) {
    auto S = expand(w, k, ring);
    auto depth = series_depth(S);
    if (depth.value < k) throw std::domain_error("word is not in Gamma_" + std::to_string(k));
    return detail::decompose_homogeneous(homogeneous_part(S, k), k, ring);
}

// Bracket table of the basis of L / L_{>= max_weight + 1}; brackets of total
// weight above max_weight are truncated to zero. Built once, then read-only.
class StructureConstants {
public:
    using Sparse = std::vector<std::pair<std::size_t, Integer>>;

    StructureConstants(int n, int max_weight) : n_(n), max_weight_(max_weight) {
        basis_ = hall_basis(n, max_weight);
        for (std::size_t a = 0; a < basis_.size(); ++a) index_.emplace(basis_[a].letters(), a);
        table_.assign(basis_.size(), std::vector<Sparse>(basis_.size()));
        for (std::size_t a = 0; a < basis_.size(); ++a)
            for (std::size_t b = a + 1; b < basis_.size(); ++b) {
                if (basis_[a].weight() + basis_[b].weight() > max_weight) continue;
                auto e = orr::bracket(LieElement::basis(n, basis_[a]), LieElement::basis(n, basis_[b]));
                Sparse s;
                for (const auto& [W, c] : e.coefficients()) {
                    if (c.get_den() != 1) throw std::logic_error("non-integral structure constant");
                    s.emplace_back(index_.at(W.letters()), c.get_num());
                }
                table_[a][b] = s;
                for (auto& [idx, c] : s) c = -c;
                table_[b][a] = std::move(s);
            }
    }

    int rank() const { return n_; }
    int max_weight() const { return max_weight_; }
    const std::vector<LyndonWord>& basis() const { return basis_; }
    std::size_t index_of(const LyndonWord& w) const { return index_.at(w.letters()); }
    const Sparse& bracket(std::size_t a, std::size_t b) const { return table_[a][b]; }

private:
    int n_;
    int max_weight_;
    std::vector<LyndonWord> basis_;
    std::map<MultiIndex, std::size_t> index_;
    std::vector<std::vector<Sparse>> table_;
};

}  // namespace orr

#endif

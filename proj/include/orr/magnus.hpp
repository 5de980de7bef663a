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
// Truncated Magnus expansion x_i -> 1 + X_i into noncommutative power series.

#ifndef ORR_MAGNUS_HPP
#define ORR_MAGNUS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "integer.hpp"
#include "ring.hpp"
#include "words.hpp"

namespace orr {

// Sequence of 1-based generator indices; the empty index is the constant term.
using MultiIndex = std::vector<int>;

// Shorter first, then lexicographic.
struct GradedLex {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// "112" for n <= 9, "1,1,12" otherwise.
inline std::string index_string(const MultiIndex& I, int n = 9) {
    std::string s;
    for (std::size_t j = 0; j < I.size(); ++j) {
        if (n > 9 && j) s += ',';
        s += std::to_string(I[j]);
    }
    return s;
}

inline MultiIndex parse_index(const std::string& s, int n) {
    MultiIndex I;
    if (s.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= s.size()) {
            auto comma = s.find(',', start);
            if (comma == std::string::npos) comma = s.size();
            I.push_back(std::stoi(s.substr(start, comma - start)));
            start = comma + 1;
        }
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad multi-index '" + s + "'");
            I.push_back(c - '0');
        }
    }
    for (int i : I)
        if (i < 1 || i > n) throw std::invalid_argument("multi-index entry out of range in '" + s + "'");
    return I;
}

using SeriesTerms = std::map<MultiIndex, Rational, GradedLex>;

class MagnusSeries {
public:
    MagnusSeries(int n, int K, CoefficientRing ring) : n_(n), K_(K), ring_(std::move(ring)) {
        if (n < 1) throw std::invalid_argument("rank must be >= 1");
        if (K < 0) throw std::invalid_argument("truncation degree must be >= 0");
    }
    static MagnusSeries one(int n, int K, const CoefficientRing& ring) {
        MagnusSeries s(n, K, ring);
        s.terms_[{}] = 1;
        return s;
    }

    int rank() const { return n_; }
    int truncation() const { return K_; }
    const CoefficientRing& ring() const { return ring_; }
    const SeriesTerms& terms() const { return terms_; }

    Rational coefficient(const MultiIndex& I) const {
        auto it = terms_.find(I);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Adds c to the coefficient of I; indices beyond K are dropped.
    void add(const MultiIndex& I, const Rational& c) {
        if (static_cast<int>(I.size()) > K_) return;
        auto [it, fresh] = terms_.try_emplace(I, 0);
        it->second = ring_.normalize(it->second + c);
        if (it->second == 0) terms_.erase(it);
    }

    // Homogeneous degree-d part.
    SeriesTerms degree_part(int d) const {
        SeriesTerms out;
        for (const auto& [I, c] : terms_)
            if (static_cast<int>(I.size()) == d) out.emplace(I, c);
        return out;
    }

    bool operator==(const MagnusSeries& o) const {
        return n_ == o.n_ && K_ == o.K_ && ring_ == o.ring_ && terms_ == o.terms_;
    }

private:
    int n_;
    int K_;
    CoefficientRing ring_;
    SeriesTerms terms_;
};

namespace detail {

inline void check_compatible(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.rank() != b.rank() || a.truncation() != b.truncation() || !(a.ring() == b.ring()))
        throw std::invalid_argument("series have different rank, truncation or ring");
}

inline std::size_t encode(const MultiIndex& I, int n) {
    std::size_t code = 0;
    for (int i : I) code = code * n + static_cast<std::size_t>(i - 1);
    return code;
}

inline MultiIndex decode(std::size_t code, int d, int n) {
    MultiIndex I(d);
    for (int j = d - 1; j >= 0; --j) {
        I[j] = static_cast<int>(code % n) + 1;
        code /= n;
    }
    return I;
}

// Multiplies S by sum_j c_j X_i^j (a series in one variable).
inline MagnusSeries multiply_univariate(const MagnusSeries& S, int i, const std::vector<Integer>& c) {
    MagnusSeries out(S.rank(), S.truncation(), S.ring());
    const int K = S.truncation();
    SeriesTerms acc;
    for (const auto& [I, s] : S.terms()) {
        MultiIndex J = I;
        for (int j = 0; j + static_cast<int>(I.size()) <= K; ++j) {
            if (j) J.push_back(i);
            if (j < static_cast<int>(c.size()) && c[j] != 0) acc[J] += s * c[j];
        }
    }
    for (auto& [I, v] : acc) out.add(I, v);
    return out;
}

}  // namespace detail

namespace detail {

// Truncated product with accumulators of type T (Integer when the ring is
// Z or Z/ell^M, Rational over Q).
template <class T, class Convert>
MagnusSeries multiply_blocks(const MagnusSeries& a, const MagnusSeries& b, Convert convert) {
    const int n = a.rank(), K = a.truncation();
    std::vector<std::vector<std::pair<std::size_t, T>>> A(K + 1), B(K + 1);
    for (const auto& [I, c] : a.terms()) A[I.size()].emplace_back(encode(I, n), convert(c));
    for (const auto& [I, c] : b.terms()) B[I.size()].emplace_back(encode(I, n), convert(c));
    MagnusSeries out(n, K, a.ring());
    std::size_t block = 1;
    for (int d = 0; d <= K; ++d, block *= n) {
        const bool dense = block <= (std::size_t(1) << 20);
        std::vector<T> acc(dense ? block : 0);
        std::unordered_map<std::size_t, T> sparse;
        std::size_t shift = 1;
        for (int db = 0; db <= d; ++db, shift *= n) {
            const int da = d - db;
            for (const auto& [ia, ca] : A[da])
                for (const auto& [ib, cb] : B[db]) {
                    std::size_t code = ia * shift + ib;
                    if (dense)
                        acc[code] += ca * cb;
                    else
                        sparse[code] += ca * cb;
                }
        }
        if (dense) {
            for (std::size_t code = 0; code < block; ++code)
                if (acc[code] != 0) out.add(decode(code, d, n), Rational(acc[code]));
        } else {
            for (const auto& [code, v] : sparse)
                if (v != 0) out.add(decode(code, d, n), Rational(v));
        }
    }
    return out;
}

}  // namespace detail

// Truncated product; degree blocks are multiplied through dense accumulators.
inline MagnusSeries series_multiply(const MagnusSeries& a, const MagnusSeries& b) {
    detail::check_compatible(a, b);
    if (a.ring().kind() == RingKind::Rationals)
        return detail::multiply_blocks<Rational>(a, b, [](const Rational& x) { return x; });
    return detail::multiply_blocks<Integer>(a, b, [](const Rational& x) { return Integer(x.get_num()); });
}

inline MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
    return series_multiply(a, b);
}

// Inverse of a series with constant term 1: sum_j (1 - S)^j.
inline MagnusSeries series_inverse(const MagnusSeries& S) {
    if (S.coefficient({}) != 1) throw std::domain_error("series inverse needs constant term 1");
    MagnusSeries u(S.rank(), S.truncation(), S.ring());  // u = 1 - S
    for (const auto& [I, c] : S.terms())
        if (!I.empty()) u.add(I, -c);
    MagnusSeries out = MagnusSeries::one(S.rank(), S.truncation(), S.ring());
    MagnusSeries term = out;
    for (int j = 1; j <= S.truncation(); ++j) {
        term = term * u;
        if (term.terms().empty()) break;
        for (const auto& [I, c] : term.terms()) out.add(I, c);
    }
    return out;
}

// Integer power of a series with constant term 1.
inline MagnusSeries series_power(const MagnusSeries& S, const Integer& e) {
    MagnusSeries base = e < 0 ? series_inverse(S) : S;
    Integer k = abs(e);
    MagnusSeries out = MagnusSeries::one(S.rank(), S.truncation(), S.ring());
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) out = out * base;
        k /= 2;
        if (k > 0) base = base * base;
    }
    return out;
}

// Coefficients binom(c, j), j = 0..K, of (1 + X)^c.
inline std::vector<Integer> binomial_row(const Integer& c, int K) {
    std::vector<Integer> row(K + 1);
    for (int j = 0; j <= K; ++j) row[j] = binomial(c, j);
    return row;
}

inline MagnusSeries expand(const Word& w, int K, const CoefficientRing& ring) {
    const int n = w.rank();
    // Dense integer blocks per degree; word expansions are integral.
    std::vector<std::size_t> size(K + 1, 1);
    for (int d = 1; d <= K; ++d) size[d] = size[d - 1] * n;
    std::size_t total = 0;
    for (int d = 0; d <= K; ++d) total += size[d];
    if (total > (std::size_t(1) << 22)) {
        MagnusSeries S = MagnusSeries::one(n, K, ring);
        for (const auto& s : w.syllables()) S = detail::multiply_univariate(S, s.gen, binomial_row(s.exp, K));
        return S;
    }
    std::vector<std::vector<Integer>> B(K + 1);
    for (int d = 0; d <= K; ++d) B[d].assign(size[d], 0);
    B[0][0] = 1;
    int top = 0;  // highest degree holding a nonzero entry
    for (const auto& s : w.syllables()) {
        auto b = binomial_row(s.exp, K);
        if (ring.is_modular())
            for (auto& x : b) x = mod_floor(x, ring.modulus());
        // Appending X_i^t to a degree-(d - t) index: code * n^t + (i-1)(1 + n + ... + n^{t-1}).
        for (int d = K; d >= 1; --d) {
            std::size_t run = 0;
            for (int t = 1; t <= d; ++t) {
                run = run * n + static_cast<std::size_t>(s.gen - 1);
                if (b[t] == 0 || d - t > top) continue;
                const auto& src = B[d - t];
                auto& dst = B[d];
                for (std::size_t code = 0; code < src.size(); ++code)
                    if (src[code] != 0) dst[code * size[t] + run] += src[code] * b[t];
            }
        }
        // (1 + X)^e is a polynomial of degree e for e > 0, a full series otherwise.
        top = (s.exp < 0 || s.exp >= K) ? K : std::min(K, top + static_cast<int>(s.exp.get_si()));
        if (ring.is_modular())
            for (int d = 1; d <= top; ++d)
                for (auto& x : B[d])
                    if (x != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), ring.modulus().get_mpz_t());
    }
    MagnusSeries S(n, K, ring);
    for (int d = 0; d <= K; ++d)
        for (std::size_t code = 0; code < size[d]; ++code)
            if (B[d][code] != 0) S.add(detail::decode(code, d, n), Rational(B[d][code]));
    return S;
}

// Expansion of x_i^c. With `precision` = M', c is read as a residue modulo
// ell^M' and the result is only meaningful when M' >= M + v_ell(K!).
inline MagnusSeries power_expand(int n, int i, const Integer& c, std::optional<int> precision, int K,
                                 const CoefficientRing& ring) {
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
    Integer rep = c;
    if (precision) {
        if (!ring.is_modular())
            throw std::invalid_argument("an ell-adic exponent needs a Z/ell^M coefficient ring");
        unsigned long ell = ring.ell().get_ui();
        int need = ring.precision() + static_cast<int>(factorial_valuation(K, ell));
        if (*precision < need)
            throw std::domain_error("exponent known modulo " + ring.ell().get_str() + "^" +
                                    std::to_string(*precision) + " but degree " + std::to_string(K) +
                                    " needs precision " + std::to_string(need));
        rep = mod_floor(c, ipow(ring.ell(), *precision));
    }
    return detail::multiply_univariate(MagnusSeries::one(n, K, ring), i, binomial_row(rep, K));
}

// Single coefficient mu(I; w) by dynamic programming over prefixes of I,
// independent of the full expansion.
inline Rational coefficient(const Word& w, const MultiIndex& I, const CoefficientRing& ring) {
    const int k = static_cast<int>(I.size());
    for (int i : I)
        if (i < 1 || i > w.rank()) throw std::invalid_argument("multi-index entry out of range");
    std::vector<Integer> c(k + 1, 0), next(k + 1);
    c[0] = 1;
    for (const auto& s : w.syllables()) {
        std::vector<Integer> b;  // binom(exp, t) computed lazily
        for (int p = 0; p <= k; ++p) {
            next[p] = c[p];
            for (int t = 1; t <= p && I[p - t] == s.gen; ++t) {
                while (static_cast<int>(b.size()) <= t) b.push_back(binomial(s.exp, b.size()));
                next[p] += c[p - t] * b[t];
            }
        }
        c.swap(next);
        if (ring.is_modular())
            for (auto& v : c) v = mod_floor(v, ring.modulus());
    }
    return ring.normalize(Rational(c[k]));
}

// Depth in the lower central series as seen by degrees <= K: the largest k with
// mu(I; w) = 0 for all 1 <= |I| < k. `at_least` marks the capped answer K + 1.
struct Depth {
    int value;
    bool at_least;
    bool operator==(const Depth& o) const { return value == o.value && at_least == o.at_least; }
    std::string str() const { return (at_least ? ">=" : "") + std::to_string(value); }
};

inline Depth series_depth(const MagnusSeries& S) {
    int best = S.truncation() + 1;
    for (const auto& [I, c] : S.terms())
        if (!I.empty()) {
            best = std::min(best, static_cast<int>(I.size()));
            break;  // graded order: the first nonconstant term has minimal degree
        }
    return {best, best == S.truncation() + 1};
}

inline Depth lcs_depth(const Word& w, int K, const CoefficientRing& ring) {
    return series_depth(expand(w, K, ring));
}

// All multi-indices of length d over {1..n}, lexicographic.
inline std::vector<MultiIndex> all_indices(int n, int d) {
    std::vector<MultiIndex> out;
    MultiIndex I(d, 1);
    while (true) {
        out.push_back(I);
        int j = d - 1;
        while (j >= 0 && I[j] == n) I[j--] = 1;
        if (j < 0) break;
        ++I[j];
    }
    return out;
}

}  // namespace orr

#endif

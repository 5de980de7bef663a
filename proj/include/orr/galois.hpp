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
// Automorphisms x_i -> y_i^-1 x_i^chi y_i of the pro-ell completion of F_n,
// simulated through Magnus expansions over Z/ell^M, and the Milnor-invariant
// criteria for their Johnson depth and for the vanishing of the tau and theta
// cocycles.

#ifndef ORR_GALOIS_HPP
#define ORR_GALOIS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "collection.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "lyndon.hpp"
#include "magnus.hpp"
#include "words.hpp"

namespace orr {

class GaloisAutomorphism {
public:
    // chi is read modulo ell^guard with guard = M + v_ell(K!); the y_i are
    // normalized so that y_i has zero x_i-exponent sum (this does not change
    // the automorphism).
    GaloisAutomorphism(int n, int K, const Integer& ell, int M, const Integer& chi, std::vector<Word> y)
        : n_(n), K_(K), ring_(CoefficientRing::mod_prime_power(ell, M)), y_(std::move(y)) {
        if (n < 1) throw std::invalid_argument("rank must be >= 1");
        if (K < 1) throw std::invalid_argument("truncation degree must be >= 1");
        if (static_cast<int>(y_.size()) != n) throw std::invalid_argument("need exactly n words y_i");
        guard_ = M + static_cast<int>(factorial_valuation(K, ell.get_ui()));
        chi_ = mod_floor(chi, ipow(ell, guard_));
        if (mpz_divisible_p(chi_.get_mpz_t(), ell.get_mpz_t()))
            throw std::invalid_argument("chi must be a unit modulo ell");
        for (int i = 0; i < n; ++i) {
            if (y_[i].rank() != n) throw std::invalid_argument("y_i has the wrong rank");
            Integer c = exponent_sum(y_[i], i + 1);
            if (c != 0) y_[i] = Word::generator(n, i + 1, -c) * y_[i];
        }
    }

    int rank() const { return n_; }
    int truncation() const { return K_; }
    const CoefficientRing& ring() const { return ring_; }
    const Integer& ell() const { return ring_.ell(); }
    int precision() const { return ring_.precision(); }
    int guard() const { return guard_; }
    const Integer& chi() const { return chi_; }
    const std::vector<Word>& y() const { return y_; }
    bool chi_is_one_mod_ell_M() const { return mod_floor(chi_ - 1, ring_.modulus()) == 0; }

    static GaloisAutomorphism identity(int n, int K, const Integer& ell, int M) {
        return GaloisAutomorphism(n, K, ell, M, 1, std::vector<Word>(n, Word(n)));
    }

private:
    int n_;
    int K_;
    CoefficientRing ring_;
    int guard_ = 0;
    Integer chi_;
    std::vector<Word> y_;
};

inline void check_same_setting(const GaloisAutomorphism& a, const GaloisAutomorphism& b) {
    if (a.rank() != b.rank() || a.truncation() != b.truncation() || !(a.ring() == b.ring()))
        throw std::invalid_argument("automorphisms live over different settings");
}

// Expansion of sigma(x_i) = y_i^-1 x_i^chi y_i.
inline MagnusSeries image_of_generator(const GaloisAutomorphism& s, int i) {
    const Word& y = s.y()[i - 1];
    auto P = power_expand(s.rank(), i, s.chi(), s.guard(), s.truncation(), s.ring());
    return expand(invert(y), s.truncation(), s.ring()) * P * expand(y, s.truncation(), s.ring());
}

// Expansion of sigma(w), truncated at K over Z/ell^M.
inline MagnusSeries apply(const GaloisAutomorphism& s, const Word& w) {
    if (w.rank() != s.rank()) throw std::invalid_argument("word has the wrong rank");
    std::vector<std::optional<MagnusSeries>> images(s.rank() + 1);
    MagnusSeries out = MagnusSeries::one(s.rank(), s.truncation(), s.ring());
    for (const auto& syl : w.syllables()) {
        if (!images[syl.gen]) images[syl.gen] = image_of_generator(s, syl.gen);
        out = out * series_power(*images[syl.gen], syl.exp);
    }
    return out;
}

// sigma(w) as a word, using the integer representative of chi.
inline Word apply_word(const GaloisAutomorphism& s, const Word& w) {
    Word out(s.rank());
    for (const auto& syl : w.syllables()) {
        const Word& y = s.y()[syl.gen - 1];
        out = out * invert(y) * Word::generator(s.rank(), syl.gen, s.chi() * syl.exp) * y;
    }
    return out;
}

// x_0 = (x_n ... x_1)^-1.
inline Word x0_word(int n) {
    Word p(n);
    for (int i = n; i >= 1; --i) p = p * Word::generator(n, i);
    return invert(p);
}

// (s1 s2)(x) = s1(s2(x)): chi = chi1 chi2 and y_i = y_i(s1) s1(y_i(s2)).
inline GaloisAutomorphism compose(const GaloisAutomorphism& s1, const GaloisAutomorphism& s2) {
    check_same_setting(s1, s2);
    std::vector<Word> y;
    for (int i = 0; i < s1.rank(); ++i) y.push_back(s1.y()[i] * apply_word(s1, s2.y()[i]));
    return GaloisAutomorphism(s1.rank(), s1.truncation(), s1.ell(), s1.precision(), s1.chi() * s2.chi(), y);
}

// Largest k <= cap with chi = 1 and every y_i in Gamma_k (modulo ell^M, seen in
// degrees <= min(cap, K)); 0 when chi != 1.
inline Depth johnson_depth(const GaloisAutomorphism& s, std::optional<int> cap = std::nullopt) {
    const int c = cap.value_or(s.truncation());
    if (c < 1) throw std::invalid_argument("cap must be >= 1");
    if (!s.chi_is_one_mod_ell_M()) return {0, false};
    const int D = std::min(c, s.truncation());
    int best = D + 1;
    for (const auto& y : s.y()) best = std::min(best, series_depth(expand(y, D, s.ring())).value);
    return {best, best == D + 1};
}

// Inverse of an automorphism with chi = 1, by repeated doubling of the depth
// of s o t until it exceeds K.
inline GaloisAutomorphism inverse(const GaloisAutomorphism& s) {
    if (s.chi() != 1) throw std::domain_error("inverse is implemented for chi = 1");
    auto flip = [](const GaloisAutomorphism& a) {
        std::vector<Word> y;
        for (const auto& w : a.y()) y.push_back(invert(w));
        return GaloisAutomorphism(a.rank(), a.truncation(), a.ell(), a.precision(), 1, y);
    };
    GaloisAutomorphism t = flip(s);
    for (int round = 0; round < 64; ++round) {
        GaloisAutomorphism rho = compose(s, t);
        if (johnson_depth(rho).at_least) return t;
        t = compose(t, flip(rho));
    }
    throw std::logic_error("inverse did not converge");
}

// mu(sigma; (i_1 ... i_k i)) = mu((i_1 ... i_k); y_i) modulo ell^M.
inline Rational milnor_invariant(const GaloisAutomorphism& s, const MultiIndex& J) {
    if (J.size() < 2) throw std::invalid_argument("Milnor invariants have length >= 2");
    if (static_cast<int>(J.size()) - 1 > s.truncation())
        throw std::invalid_argument("Milnor invariant of length " + std::to_string(J.size()) +
                                    " needs K >= " + std::to_string(J.size() - 1));
    for (int i : J)
        if (i < 1 || i > s.rank()) throw std::invalid_argument("index entry out of range");
    MultiIndex I(J.begin(), J.end() - 1);
    return coefficient(s.y()[J.back() - 1], I, s.ring());
}

struct InvariantWitness {
    MultiIndex index;  // the full (i_1 ... i_k i)
    Rational value;
};

// Nonvanishing Milnor invariant of minimal length <= max_length, least in
// lexicographic order; nullopt when all of them vanish.
inline std::optional<InvariantWitness> first_nonvanishing_invariant(const GaloisAutomorphism& s, int max_length) {
    if (max_length - 1 > s.truncation())
        throw std::invalid_argument("invariants of length " + std::to_string(max_length) + " need K >= " +
                                    std::to_string(max_length - 1));
    const int D = max_length - 1;
    std::vector<MagnusSeries> Y;
    for (const auto& y : s.y()) Y.push_back(expand(y, std::max(D, 0), s.ring()));
    for (int d = 1; d <= D; ++d) {
        std::optional<InvariantWitness> best;
        for (int i = 1; i <= s.rank(); ++i)
            for (const auto& [I, c] : Y[i - 1].degree_part(d)) {
                MultiIndex J = I;
                J.push_back(i);
                if (!best || J < best->index) best = InvariantWitness{J, c};
                break;  // terms are ordered: the first of each series is its least
            }
        if (best) return best;
    }
    return std::nullopt;
}

// theta_k(sigma) is defined iff sigma lies in G[k].
inline bool theta_defined(const GaloisAutomorphism& s, int k) {
    if (k < 1 || k > s.truncation() + 1) throw std::invalid_argument("k out of range 1..K+1");
    return johnson_depth(s, k).value >= k;
}

struct TauResult {
    bool vanishes;
    std::optional<InvariantWitness> witness;
};

// tau_k(sigma) = 0 iff every Milnor invariant of length <= 2k - 1 vanishes.
inline TauResult tau_vanishes(const GaloisAutomorphism& s, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (2 * k - 2 > s.truncation())
        throw std::invalid_argument("tau_" + std::to_string(k) + " needs K >= " + std::to_string(2 * k - 2));
    if (johnson_depth(s, k).value < k)
        throw std::domain_error("tau_" + std::to_string(k) + " is only defined on G[" + std::to_string(k) + "]");
    auto w = first_nonvanishing_invariant(s, 2 * k - 1);
    return {!w.has_value(), w};
}

struct TowerLevel {
    int j;            // obstruction to lifting through F / Gamma_{j+1}
    int restriction;  // restricted to G[restriction]
    bool vacuous;     // j < l: vanishes automatically on G[l]
    bool passes;
    std::optional<InvariantWitness> witness;
};

struct TowerReport {
    int m, l;
    std::vector<TowerLevel> levels;
    bool verdict;         // every level passes
    bool theta_vanishes;  // sigma in G[2m], computed from the Johnson depth
    bool agrees() const { return verdict == theta_vanishes; }
};

// Ladder delta_{m,l}, ..., delta_{l,l}, delta_{l+1,l+1}, ..., delta_{2m-1,2m-1}.
// Level j passes iff all Milnor invariants of length <= j + 1 vanish.
inline TowerReport obstruction_tower(const GaloisAutomorphism& s, int m, int l) {
    if (m < 1 || l < m || l > s.truncation())
        throw std::invalid_argument("obstruction tower needs 1 <= m <= l <= K");
    if (2 * m - 1 > s.truncation())
        throw std::invalid_argument("obstruction tower for m = " + std::to_string(m) + " needs K >= " +
                                    std::to_string(2 * m - 1));
    if (johnson_depth(s, l).value < l)
        throw std::domain_error("automorphism is not in G[" + std::to_string(l) + "]");
    TowerReport r{m, l, {}, true, false};
    const int top = std::max(l, 2 * m - 1);
    for (int j = m; j <= top; ++j) {
        TowerLevel lv{j, j <= l ? l : j, j < l, true, std::nullopt};
        if (j + 1 - 1 <= s.truncation()) lv.witness = first_nonvanishing_invariant(s, j + 1);
        lv.passes = !lv.witness.has_value();
        if (lv.vacuous && !lv.passes) throw std::logic_error("vacuous obstruction level failed");
        r.verdict = r.verdict && lv.passes;
        r.levels.push_back(lv);
    }
    r.theta_vanishes = johnson_depth(s, 2 * m).value >= 2 * m;
    return r;
}

// Defect of the relation sigma(x_n ... x_1) = (x_n ... x_1)^chi: least degree
// where the two expansions differ, nullopt if they agree through K.
inline std::optional<int> x0_defect_degree(const GaloisAutomorphism& s) {
    Word P = invert(x0_word(s.rank()));
    auto lhs = apply(s, P);
    auto rhs = series_power(expand(P, s.truncation(), s.ring()), s.chi());
    MagnusSeries diff = lhs;
    for (const auto& [I, c] : rhs.terms()) diff.add(I, -c);
    if (diff.terms().empty()) return std::nullopt;
    return static_cast<int>(diff.terms().begin()->first.size());
}

struct N2Report {
    int k;
    std::vector<std::pair<MultiIndex, Rational>> invariants;
    bool vanishes;      // all listed invariants vanish
    bool tau_agrees;    // matches tau_vanishes(sigma, k)
};

// For two generators: tau_2 always vanishes; tau_3 is detected by
// mu(1221); tau_4 by mu(111221), mu(121221), mu(122221).
inline N2Report n2_report(const GaloisAutomorphism& s, int k) {
    if (s.rank() != 2) throw std::invalid_argument("n2_report needs n = 2");
    if (k < 2 || k > 4) throw std::invalid_argument("n2_report covers k = 2, 3, 4");
    std::vector<MultiIndex> listed;
    if (k == 3) listed = {{1, 2, 2, 1}};
    if (k == 4) listed = {{1, 1, 1, 2, 2, 1}, {1, 2, 1, 2, 2, 1}, {1, 2, 2, 2, 2, 1}};
    for (const auto& J : listed)
        if (static_cast<int>(J.size()) - 1 > s.truncation())
            throw std::invalid_argument("n2_report for k = " + std::to_string(k) + " needs K >= 5");
    auto tau = tau_vanishes(s, k);
    N2Report r{k, {}, true, true};
    for (const auto& J : listed) {
        Rational v = milnor_invariant(s, J);
        r.invariants.emplace_back(J, v);
        if (v != 0) r.vanishes = false;
    }
    r.tau_agrees = (r.vanishes == tau.vanishes);
    return r;
}

// Right-hand side (1 - ell^{2k})^-1 chi_{2k+1} / (2k)! of the closed form for
// mu(sigma; (1 2^{2k} 1)), given the residue chi_{2k+1}; needs ell > 2k.
inline Rational ihara_closed_form(int k, const Integer& ell, int M, const Integer& chi_value) {
    Integer mod = ipow(ell, M);
    Integer f = factorial(2 * k);
    if (mpz_divisible_p(f.get_mpz_t(), ell.get_mpz_t()))
        throw std::domain_error("(2k)! is not a unit modulo ell");
    Integer denom = mod_floor((1 - ipow(ell, 2 * k)) * f, mod);
    return Rational(mod_floor(chi_value * mod_inverse(denom, mod), mod));
}

namespace detail {

// Solves sum_i [X_i, u_i] = target (target in L_{j+1}) modulo ell^M with
// u_i in L_j; blockwise over letter content.
inline std::vector<LieElement> solve_bracket_equation(int n, int j, const LieElement& target,
                                                      const CoefficientRing& ring) {
    std::map<std::vector<int>, std::vector<std::pair<int, LyndonWord>>> cols;
    for (const auto& J : enumerate_lyndon(n, j))
        for (int i = 1; i <= n; ++i) {
            auto c = content(J.letters(), n);
            ++c[i - 1];
            cols[c].emplace_back(i, J);
        }
    std::map<std::vector<int>, std::vector<LyndonWord>> rows;
    for (const auto& W : enumerate_lyndon(n, j + 1)) rows[content(W.letters(), n)].push_back(W);
    std::vector<LieElement> u(n, LieElement(n));
    for (const auto& [c, rws] : rows) {
        const auto& cl = cols.at(c);
        std::map<LyndonWord, std::size_t> row_of;
        for (std::size_t r = 0; r < rws.size(); ++r) row_of.emplace(rws[r], r);
        Matrix<Integer> A = zero_matrix<Integer>(rws.size(), cl.size());
        for (std::size_t q = 0; q < cl.size(); ++q) {
            auto e = bracket(LieElement::basis(n, LyndonWord({cl[q].first})), LieElement::basis(n, cl[q].second));
            for (const auto& [W, v] : e.coefficients()) A[row_of.at(W)][q] = v.get_num();
        }
        std::vector<Integer> b(rws.size());
        for (std::size_t r = 0; r < rws.size(); ++r) b[r] = target.coefficient(rws[r]).get_num();
        auto x = solve_mod_prime_power(A, b, cl.size(), ring.ell(), ring.modulus());
        if (!x) throw std::logic_error("bracket equation has no solution modulo ell^M");
        for (std::size_t q = 0; q < cl.size(); ++q) u[cl[q].first - 1].add(cl[q].second, Rational((*x)[q]));
    }
    return u;
}

// Word whose class in Gamma_w / Gamma_{w+1} is c e(J): the commutator word of
// J with the innermost letter raised to the power c (brackets are linear in
// each slot on leading terms), so the length does not grow with c.
inline Word scaled_bracket_word(const LyndonWord& J, int n, const Integer& c) {
    if (J.weight() == 1) return Word::generator(n, J.letters()[0], c);
    auto [a, b] = standard_factorization(J);
    return commutator(scaled_bracket_word(a, n, c), bracket_word(b, n));
}

// Word with lower-central class e; coefficients taken as least absolute residues.
inline Word realize_lie(const LieElement& e, int n, const Integer& modulus) {
    Word w(n);
    for (const auto& [J, c] : e.coefficients()) {
        Integer a = mod_floor(c.get_num(), modulus);
        if (2 * a > modulus) a -= modulus;
        w = w * scaled_bracket_word(J, n, a);
    }
    return w;
}

}  // namespace detail

// Builds an automorphism with chi = 1, y_i in Gamma_d, satisfying
// sigma(x_n ... x_1) = x_n ... x_1 through degree K. In each degree j the
// class (u_1, ..., u_n) of y in Gamma_j / Gamma_{j+1} is a particular solution
// of the relation plus sum_t c_t v_t, where v_t runs over dk_kernel_basis(n, j)
// and c = kernel_coefficients[j] (missing entries are zero).
inline GaloisAutomorphism synthesize_x0_compatible(int n, int K, const Integer& ell, int M, int d,
                                                   const std::map<int, std::vector<Integer>>& kernel_coefficients) {
    if (d < 2) throw std::invalid_argument("synthesis starts in degree >= 2");
    GaloisAutomorphism s = GaloisAutomorphism::identity(n, K, ell, M);
    const Word P = invert(x0_word(n));
    const auto PS_inv = series_inverse(expand(P, K, s.ring()));
    for (int j = d; j < K; ++j) {
        auto defect = apply(s, P) * PS_inv;
        for (const auto& [I, c] : defect.terms())
            if (!I.empty() && static_cast<int>(I.size()) <= j)
                throw std::logic_error("relation defect below the expected degree");
        LieElement delta = decompose(homogeneous_part(defect, j + 1), s.ring());
        LieElement neg(n);
        neg.add(delta, -1);
        auto u = detail::solve_bracket_equation(n, j, neg.reduced(s.ring()), s.ring());
        auto it = kernel_coefficients.find(j);
        if (it != kernel_coefficients.end()) {
            auto basis = dk_kernel_basis(n, j);
            if (it->second.size() > basis.size())
                throw std::invalid_argument("too many kernel coefficients in degree " + std::to_string(j));
            for (std::size_t t = 0; t < it->second.size(); ++t)
                for (const auto& [key, v] : basis[t]) u[key.first - 1].add(key.second, v * it->second[t]);
        }
        std::vector<Word> y = s.y();
        for (int i = 0; i < n; ++i) y[i] = y[i] * detail::realize_lie(u[i].reduced(s.ring()), n, s.ring().modulus());
        s = GaloisAutomorphism(n, K, ell, M, 1, y);
    }
    return s;
}

}  // namespace orr

#endif

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
// Chevalley-Eilenberg (Koszul) complex of the truncated free Lie algebra
// L / L_{>=k} with integer coefficients, graded by weight.

#ifndef ORR_KOSZUL_HPP
#define ORR_KOSZUL_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lie.hpp"
#include "linalg.hpp"
#include "lyndon.hpp"

namespace orr {

// Sorted basis indices g_1 < ... < g_m of a wedge monomial.
using Wedge = std::vector<std::size_t>;

struct HomologyGroup {
    Integer rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
    bool operator==(const HomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    std::string str() const {
        std::string s = "Z^" + rank.get_str();
        for (const auto& t : torsion) s += " + Z/" + t.get_str();
        return s;
    }
};

struct HomologyResult {
    int n, k, degree;
    std::map<int, HomologyGroup> by_weight;  // only weights with a nonzero chain group
    HomologyGroup at(int w) const {
        auto it = by_weight.find(w);
        return it == by_weight.end() ? HomologyGroup{} : it->second;
    }
    Integer total_rank() const {
        Integer r = 0;
        for (const auto& [w, h] : by_weight) r += h.rank;
        return r;
    }
};

class KoszulComplex {
public:
    KoszulComplex(int n, int k) : n_(n), k_(k), sc_(n, k - 1) {
        if (n < 1 || k < 2) throw std::invalid_argument("Koszul complex needs n >= 1 and k >= 2");
        for (const auto& b : sc_.basis()) weight_.push_back(b.weight());
    }

    int rank() const { return n_; }
    int level() const { return k_; }
    const StructureConstants& structure() const { return sc_; }
    int weight_of(std::size_t g) const { return weight_[g]; }
    std::size_t generators() const { return weight_.size(); }

    // Wedge monomials of degree m and total weight w, lexicographic.
    std::vector<Wedge> basis(int m, int w) const {
        std::vector<Wedge> out;
        if (m < 0 || w < 0) return out;
        Wedge cur;
        enumerate(m, w, 0, cur, out);
        return out;
    }

    // Number of wedge monomials of degree m and weight w, without listing them.
    Integer count(int m, int w) const {
        if (m < 0 || w < 0) return 0;
        // poly[j][v]: j-subsets of weight v among the generators seen so far.
        std::vector<std::vector<Integer>> poly(m + 1, std::vector<Integer>(w + 1, 0));
        poly[0][0] = 1;
        for (int g : weight_)
            for (int j = m; j >= 1; --j)
                for (int v = w; v >= g; --v) poly[j][v] += poly[j - 1][v - g];
        return poly[m][w];
    }

    // d(g_1 ^ ... ^ g_m) = sum_{i<j} (-1)^{i+j+1} [g_i, g_j] ^ (rest), brackets
    // truncated at weight k. Result as a sparse column over basis(m - 1, w).
    std::map<Wedge, Integer> boundary_of(const Wedge& g) const {
        std::map<Wedge, Integer> out;
        const std::size_t m = g.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto& br = sc_.bracket(g[i], g[j]);
                if (br.empty()) continue;
                // 1-based exponent i + j + 1 with i, j shifted by one each.
                const int sign = ((i + j + 3) % 2) ? -1 : 1;
                Wedge rest;
                for (std::size_t t = 0; t < m; ++t)
                    if (t != i && t != j) rest.push_back(g[t]);
                for (const auto& [h, c] : br) {
                    auto pos = std::lower_bound(rest.begin(), rest.end(), h);
                    if (pos != rest.end() && *pos == h) continue;
                    const int move = ((pos - rest.begin()) % 2) ? -1 : 1;
                    Wedge target = rest;
                    target.insert(target.begin() + (pos - rest.begin()), h);
                    auto& slot = out[target];
                    slot += sign * move * c;
                    if (slot == 0) out.erase(target);
                }
            }
        return out;
    }

    // Matrix of d_m : C_m^(w) -> C_{m-1}^(w) between the given bases.
    Matrix<Integer> boundary(const std::vector<Wedge>& rows, const std::vector<Wedge>& cols) const {
        std::map<Wedge, std::size_t> row_of;
        for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
        Matrix<Integer> D = zero_matrix<Integer>(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [t, v] : boundary_of(cols[c])) D[row_of.at(t)][c] = v;
        return D;
    }

    // Letter content of a wedge monomial; the differential preserves it.
    std::vector<int> content(const Wedge& g) const {
        std::vector<int> c(n_, 0);
        for (auto x : g)
            for (int i : sc_.basis()[x].letters()) ++c[i - 1];
        return c;
    }

    // basis(m, w) split into content classes.
    std::map<std::vector<int>, std::vector<Wedge>> blocks(int m, int w) const {
        std::map<std::vector<int>, std::vector<Wedge>> out;
        for (auto& g : basis(m, w)) out[content(g)].push_back(std::move(g));
        return out;
    }

private:
    void enumerate(int m, int w, std::size_t from, Wedge& cur, std::vector<Wedge>& out) const {
        if (m == 0) {
            if (w == 0) out.push_back(cur);
            return;
        }
        for (std::size_t g = from; g < weight_.size(); ++g) {
            // Weights are nondecreasing along the basis order.
            if (weight_[g] * m > w) break;
            cur.push_back(g);
            enumerate(m - 1, w - weight_[g], g + 1, cur, out);
            cur.pop_back();
        }
    }

    int n_;
    int k_;
    StructureConstants sc_;
    std::vector<int> weight_;
};

// All weights that can carry chains of degree m.
inline std::pair<int, int> weight_range(const KoszulComplex& C, int m) {
    return {m, m * (C.level() - 1)};
}

// Largest number of columns of any weight block of d_{m} for m <= m_max.
inline Integer largest_block(const KoszulComplex& C, int m_max) {
    Integer best = 0;
    for (int m = 1; m <= m_max; ++m) {
        auto [lo, hi] = weight_range(C, m);
        for (int w = lo; w <= hi; ++w) best = std::max(best, C.count(m, w));
    }
    return best;
}

// H_i of the complex in one weight, blockwise over letter content.
inline HomologyGroup homology_at(const KoszulComplex& C, int i, int w) {
    HomologyGroup h;
    auto upper = C.blocks(i + 1, w), middle = C.blocks(i, w), lower = C.blocks(i - 1, w);
    for (const auto& [content, mid] : middle) {
        Integer rank_in = 0, rank_out = 0;
        if (lower.count(content))
            rank_out = static_cast<long>(smith_invariants(C.boundary(lower.at(content), mid)).size());
        if (upper.count(content)) {
            auto inv = smith_invariants(C.boundary(mid, upper.at(content)));
            rank_in = static_cast<long>(inv.size());
            for (const auto& d : inv)
                if (d > 1) h.torsion.push_back(d);
        }
        h.rank += Integer(static_cast<long>(mid.size())) - rank_in - rank_out;
    }
    std::sort(h.torsion.begin(), h.torsion.end());
    return h;
}

inline HomologyResult homology(int n, int k, int i) {
    if (i < 0) throw std::invalid_argument("homological degree must be >= 0");
    KoszulComplex C(n, k);
    HomologyResult r{n, k, i, {}};
    if (i == 0) {
        r.by_weight[0] = HomologyGroup{1, {}};
        return r;
    }
    auto [lo, hi] = weight_range(C, i);
    for (int w = lo; w <= hi; ++w)
        if (C.count(i, w) > 0) r.by_weight[w] = homology_at(C, i, w);
    return r;
}

// Weights at which H_3 of L / L_{>=k} is expected to live, with ranks D_{w-1}.
inline std::map<int, Integer> predicted_h3(int n, int k) {
    std::map<int, Integer> out;
    for (int w = k + 1; w <= 2 * k - 1; ++w) out[w] = d_rank(n, w - 1);
    return out;
}

struct ReductionResult {
    int source_rank = 0;   // dim_Q of H_i^(w) for L / L_{>= k_from}
    int target_rank = 0;   // dim_Q of H_i^(w) for L / L_{>= k_to}
    int induced_rank = 0;  // rank of the induced map
    Matrix<Rational> matrix;  // target_rank x source_rank, in chosen homology bases
    bool is_isomorphism() const { return source_rank == target_rank && induced_rank == source_rank; }
    bool is_zero() const { return induced_rank == 0; }
};

namespace detail {

inline Matrix<Rational> to_rational(const Matrix<Integer>& A) {
    Matrix<Rational> R(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (const auto& x : A[i]) R[i].push_back(Rational(x));
    return R;
}

inline std::vector<std::vector<Rational>> columns(const Matrix<Integer>& A) {
    std::vector<std::vector<Rational>> cols(column_count(A), std::vector<Rational>(A.size()));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j) cols[j][i] = A[i][j];
    return cols;
}

inline Matrix<Rational> from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
    Matrix<Rational> A = zero_matrix<Rational>(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) A[i][j] = cols[j][i];
    return A;
}

// Cycles and a set of cycles completing the boundaries to all cycles (over Q).
struct RationalHomology {
    std::vector<Wedge> chains;
    std::vector<std::vector<Rational>> boundaries;  // spanning set
    std::vector<std::vector<Rational>> classes;     // representatives of a basis of H
};

inline RationalHomology rational_homology(const KoszulComplex& C, int /*i*/, const std::vector<Wedge>& mid,
                                          const std::vector<Wedge>* lower, const std::vector<Wedge>* upper) {
    RationalHomology h;
    h.chains = mid;
    const std::size_t dim = mid.size();
    std::vector<std::vector<Rational>> cycles;
    if (lower && !lower->empty())
        cycles = nullspace(to_rational(C.boundary(*lower, mid)), dim);
    else
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Rational> e(dim, 0);
            e[j] = 1;
            cycles.push_back(e);
        }
    if (upper && !upper->empty()) h.boundaries = columns(C.boundary(mid, *upper));
    std::vector<std::vector<Rational>> span = h.boundaries;
    std::size_t r = rank(from_columns(span, dim));
    for (const auto& z : cycles) {
        span.push_back(z);
        std::size_t r2 = rank(from_columns(span, dim));
        if (r2 > r) {
            h.classes.push_back(z);
            r = r2;
        } else {
            span.pop_back();
        }
    }
    return h;
}

}  // namespace detail

// Map on H_i^(w) induced by the projection L / L_{>=k_from} -> L / L_{>=k_to},
// computed over Q (rank of image(cycles) + boundaries minus rank of boundaries).
inline ReductionResult reduction_map(int n, int k_from, int k_to, int i, int w) {
    if (k_from < k_to) throw std::invalid_argument("reduction needs k_from >= k_to");
    KoszulComplex S(n, k_from), T(n, k_to);
    ReductionResult out;
    auto s_mid = S.blocks(i, w), s_low = S.blocks(i - 1, w), s_up = S.blocks(i + 1, w);
    auto t_mid = T.blocks(i, w), t_low = T.blocks(i - 1, w), t_up = T.blocks(i + 1, w);
    std::map<std::vector<int>, bool> contents;
    for (const auto& [c, v] : s_mid) contents[c] = true;
    for (const auto& [c, v] : t_mid) contents[c] = true;
    std::vector<std::tuple<int, int, Matrix<Rational>>> pieces;
    for (const auto& [c, unused] : contents) {
        auto get = [&](const std::map<std::vector<int>, std::vector<Wedge>>& m) -> const std::vector<Wedge>* {
            auto it = m.find(c);
            return it == m.end() ? nullptr : &it->second;
        };
        static const std::vector<Wedge> empty;
        const auto* sm = get(s_mid);
        const auto* tm = get(t_mid);
        auto hs = detail::rational_homology(S, i, sm ? *sm : empty, get(s_low), get(s_up));
        auto ht = detail::rational_homology(T, i, tm ? *tm : empty, get(t_low), get(t_up));
        const int sr = static_cast<int>(hs.classes.size()), tr = static_cast<int>(ht.classes.size());
        Matrix<Rational> M = zero_matrix<Rational>(tr, sr);
        if (sr > 0 && tr > 0) {
            // Generators of weight >= k_to die; the others keep their index.
            std::map<Wedge, std::size_t> t_index;
            for (std::size_t r = 0; r < ht.chains.size(); ++r) t_index.emplace(ht.chains[r], r);
            const std::size_t tdim = ht.chains.size();
            std::vector<std::vector<Rational>> basis = ht.boundaries;
            const std::size_t nb = basis.size();
            for (const auto& z : ht.classes) basis.push_back(z);
            Matrix<Rational> A = detail::from_columns(basis, tdim);
            for (int s = 0; s < sr; ++s) {
                std::vector<Rational> image(tdim, 0);
                for (std::size_t r = 0; r < hs.chains.size(); ++r) {
                    if (hs.classes[s][r] == 0) continue;
                    const auto& g = hs.chains[r];
                    bool dies = false;
                    for (auto x : g)
                        if (S.weight_of(x) >= k_to) dies = true;
                    if (!dies) image[t_index.at(g)] += hs.classes[s][r];
                }
                auto x = solve(A, image, basis.size());
                if (!x) throw std::logic_error("image of a cycle is not a cycle");
                for (int t = 0; t < tr; ++t) M[t][s] = (*x)[nb + t];
            }
        }
        pieces.emplace_back(sr, tr, M);
        out.source_rank += sr;
        out.target_rank += tr;
    }
    out.matrix = zero_matrix<Rational>(out.target_rank, out.source_rank);
    int so = 0, to = 0;
    for (const auto& [sr, tr, M] : pieces) {
        for (int t = 0; t < tr; ++t)
            for (int s = 0; s < sr; ++s) out.matrix[to + t][so + s] = M[t][s];
        so += sr;
        to += tr;
    }
    out.induced_rank = static_cast<int>(rank(out.matrix));
    return out;
}

}  // namespace orr

#endif

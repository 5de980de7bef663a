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
// Tree Jacobi diagrams with legs labelled by 1..n, modulo AS and IHX, and
// the map to H (x) L_k sending D to sum_v X_{l(v)} (x) L_v(D).

#ifndef ORR_JACOBI_HPP
#define ORR_JACOBI_HPP

#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "linalg.hpp"
#include "magnus.hpp"
#include "lyndon.hpp"
#include "words.hpp"

namespace orr {

// Planar binary bracket: a leaf label, or a pair [left, right].
struct BracketTree {
    int label = 0;  // > 0 for a leaf
    std::vector<BracketTree> kids;

    static BracketTree leaf(int i) { return {i, {}}; }
    static BracketTree node(BracketTree a, BracketTree b) { return {0, {std::move(a), std::move(b)}}; }
    bool is_leaf() const { return label > 0; }
    int leaves() const { return is_leaf() ? 1 : kids[0].leaves() + kids[1].leaves(); }
    std::string str() const {
        return is_leaf() ? std::to_string(label) : "[" + kids[0].str() + "," + kids[1].str() + "]";
    }
    TensorElement tensor(int n) const {
        if (is_leaf()) return TensorElement::letter(n, label);
        return tensor_commutator(kids[0].tensor(n), kids[1].tensor(n));
    }
    bool operator==(const BracketTree& o) const { return label == o.label && kids == o.kids; }
};

inline BracketTree parse_bracket_tree(const std::string& s, int n) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) { throw ParseError(msg, 1, static_cast<int>(pos) + 1); };
    auto skip = [&] {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    };
    std::function<BracketTree()> parse = [&]() -> BracketTree {
        skip();
        if (pos >= s.size()) fail("unexpected end of bracket");
        if (s[pos] == '[') {
            ++pos;
            BracketTree a = parse();
            skip();
            if (pos >= s.size() || s[pos] != ',') fail("expected ','");
            ++pos;
            BracketTree b = parse();
            skip();
            if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
            ++pos;
            return BracketTree::node(std::move(a), std::move(b));
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a label or '['");
        int label = std::stoi(s.substr(start, pos - start));
        if (label < 1 || label > n) {
            pos = start;
            fail("label out of range 1.." + std::to_string(n));
        }
        return BracketTree::leaf(label);
    };
    BracketTree t = parse();
    skip();
    if (pos != s.size()) fail("trailing characters");
    return t;
}

struct CanonicalForm {
    std::string code;  // "root|tree", minimal over roots and branch swaps
    int sign = 1;      // D = sign * (diagram of code)
    bool zero = false; // D = -D by AS
};

// A uni-trivalent tree; trivalent vertices carry a cyclic order of their
// three neighbours (read counterclockwise). Legs carry labels 1..n.
class JacobiDiagram {
public:
    JacobiDiagram(int n, std::vector<int> labels, std::vector<std::vector<int>> adjacency)
        : n_(n), label_(std::move(labels)), adj_(std::move(adjacency)) {
        validate();
    }

    // Root leg labelled root_label, attached to the tree; at each trivalent
    // vertex the cyclic order is (towards root, left, right).
    static JacobiDiagram from_rooted(int n, int root_label, const BracketTree& t) {
        std::vector<int> labels{root_label};
        std::vector<std::vector<int>> adj{{}};
        std::function<int(const BracketTree&, int)> build = [&](const BracketTree& b, int parent) {
            int id = static_cast<int>(labels.size());
            labels.push_back(b.is_leaf() ? b.label : 0);
            adj.push_back({parent});
            if (!b.is_leaf()) {
                int l = build(b.kids[0], id);
                int r = build(b.kids[1], id);
                adj[id].push_back(l);
                adj[id].push_back(r);
            }
            return id;
        };
        int top = build(t, 0);
        adj[0].push_back(top);
        return JacobiDiagram(n, labels, adj);
    }

    // "r | [[1,2],2]": root leg label, then the bracket tree.
    static JacobiDiagram parse(const std::string& text, int n) {
        auto bar = text.find('|');
        if (bar == std::string::npos) throw ParseError("expected 'root | tree'", 1, 1);
        std::string head = text.substr(0, bar);
        auto colon = head.find(':');
        if (colon != std::string::npos) head = head.substr(colon + 1);
        int root = std::stoi(head);
        if (root < 1 || root > n) throw ParseError("root label out of range", 1, 1);
        return from_rooted(n, root, parse_bracket_tree(text.substr(bar + 1), n));
    }

    int rank() const { return n_; }
    std::vector<int> legs() const {
        std::vector<int> v;
        for (std::size_t u = 0; u < label_.size(); ++u)
            if (label_[u] > 0) v.push_back(static_cast<int>(u));
        return v;
    }
    int label(int v) const { return label_[v]; }
    // Half the number of vertices; equals the number of legs minus one.
    int degree() const { return static_cast<int>(label_.size()) / 2; }

    // L_v(D) as a bracket: the tree seen from leg v.
    BracketTree rooted_at(int v) const {
        if (label_[v] <= 0) throw std::invalid_argument("rooted_at needs a leg");
        return subtree(adj_[v][0], v);
    }

    std::vector<int> content() const {
        std::vector<int> c(n_, 0);
        for (int v : legs()) ++c[label_[v] - 1];
        return c;
    }

    CanonicalForm canonical() const {
        CanonicalForm best;
        bool have = false;
        for (int v : legs()) {
            auto [code, sign, zero] = canon(adj_[v][0], v);
            if (zero) return {"", 1, true};
            std::string full = std::to_string(label_[v]) + "|" + code;
            if (!have || full < best.code) {
                best = {full, sign, false};
                have = true;
            } else if (full == best.code && sign != best.sign) {
                return {"", 1, true};
            }
        }
        return best;
    }

private:
    void validate() const {
        const std::size_t V = label_.size();
        if (adj_.size() != V || V < 2) throw std::invalid_argument("malformed diagram");
        std::size_t edges2 = 0;
        for (std::size_t u = 0; u < V; ++u) {
            const std::size_t want = label_[u] > 0 ? 1 : 3;
            if (adj_[u].size() != want) throw std::invalid_argument("vertex of wrong valence");
            if (label_[u] > n_) throw std::invalid_argument("leg label out of range");
            edges2 += want;
            for (int w : adj_[u]) {
                if (w < 0 || static_cast<std::size_t>(w) >= V) throw std::invalid_argument("bad adjacency");
                int back = 0;
                for (int x : adj_[w]) back += (x == static_cast<int>(u));
                if (back != 1) throw std::invalid_argument("adjacency is not symmetric");
            }
        }
        if (edges2 / 2 != V - 1) throw std::invalid_argument("diagram is not a tree");
    }

    // Neighbours of u after `from`, in cyclic order.
    std::pair<int, int> next_two(int u, int from) const {
        const auto& a = adj_[u];
        int k = 0;
        while (a[k] != from) ++k;
        return {a[(k + 1) % 3], a[(k + 2) % 3]};
    }

    BracketTree subtree(int u, int from) const {
        if (label_[u] > 0) return BracketTree::leaf(label_[u]);
        auto [l, r] = next_two(u, from);
        return BracketTree::node(subtree(l, u), subtree(r, u));
    }

    std::tuple<std::string, int, bool> canon(int u, int from) const {
        if (label_[u] > 0) return {std::to_string(label_[u]), 1, false};
        auto [l, r] = next_two(u, from);
        auto [cl, sl, zl] = canon(l, u);
        auto [cr, sr, zr] = canon(r, u);
        if (zl || zr || cl == cr) return {"", 1, true};
        if (cl < cr) return {"[" + cl + "," + cr + "]", sl * sr, false};
        return {"[" + cr + "," + cl + "]", -sl * sr, false};
    }

    int n_;
    std::vector<int> label_;
    std::vector<std::vector<int>> adj_;
};

inline JacobiDiagram diagram_from_code(const std::string& code, int n) {
    auto bar = code.find('|');
    return JacobiDiagram::from_rooted(n, std::stoi(code.substr(0, bar)), parse_bracket_tree(code.substr(bar + 1), n));
}

// phi(D) = sum over legs v of X_{l(v)} (x) L_v(D), in H (x) L_k.
inline HLElement phi_map(const JacobiDiagram& D) {
    HLElement out;
    const int n = D.rank();
    for (int v : D.legs()) {
        auto L = decompose(D.rooted_at(v).tensor(n));
        for (const auto& [J, c] : L.coefficients()) {
            auto& slot = out[{D.label(v), J}];
            slot += c;
            if (slot == 0) out.erase({D.label(v), J});
        }
    }
    return out;
}

namespace detail {


// All planar binary trees with `leaves` leaves (labels filled in later as 0).
inline std::vector<BracketTree> tree_shapes(int leaves) {
    static std::map<int, std::vector<BracketTree>> memo;
    auto it = memo.find(leaves);
    if (it != memo.end()) return it->second;
    std::vector<BracketTree> out;
    if (leaves == 1) {
        out.push_back(BracketTree::leaf(1));
    } else {
        for (int a = 1; a < leaves; ++a)
            for (const auto& l : tree_shapes(a))
                for (const auto& r : tree_shapes(leaves - a)) out.push_back(BracketTree::node(l, r));
    }
    return memo[leaves] = out;
}

inline BracketTree relabel(const BracketTree& shape, const std::vector<int>& labels, std::size_t& cursor) {
    if (shape.is_leaf()) return BracketTree::leaf(labels[cursor++]);
    BracketTree l = relabel(shape.kids[0], labels, cursor);
    BracketTree r = relabel(shape.kids[1], labels, cursor);
    return BracketTree::node(std::move(l), std::move(r));
}

// Jacobi identity around every internal edge of the rooted tree t.
inline void jacobi_relations(const BracketTree& t, const std::function<BracketTree(BracketTree)>& wrap,
                             std::vector<std::vector<BracketTree>>& out) {
    if (t.is_leaf()) return;
    const BracketTree& A = t.kids[0];
    const BracketTree& B = t.kids[1];
    if (!A.is_leaf()) {
        // [[a,b],c] + [[b,c],a] + [[c,a],b]
        const auto &a = A.kids[0], &b = A.kids[1], &c = B;
        out.push_back({wrap(t), wrap(BracketTree::node(BracketTree::node(b, c), a)),
                       wrap(BracketTree::node(BracketTree::node(c, a), b))});
    }
    if (!B.is_leaf()) {
        // [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
        const auto &a = A, &b = B.kids[0], &c = B.kids[1];
        out.push_back({wrap(t), wrap(BracketTree::node(b, BracketTree::node(c, a))),
                       wrap(BracketTree::node(c, BracketTree::node(a, b)))});
    }
    jacobi_relations(A, [&](BracketTree x) { return wrap(BracketTree::node(std::move(x), B)); }, out);
    jacobi_relations(B, [&](BracketTree x) { return wrap(BracketTree::node(A, std::move(x))); }, out);
}

}  // namespace detail

// One letter-content class of degree-k diagrams: the nonzero canonical codes
// and the AS/IHX relation matrix among them.
struct DiagramBlock {
    std::vector<std::string> codes;
    std::map<std::string, std::size_t> column;
    Matrix<Rational> relations;  // rows are relations
    std::vector<std::size_t> basis_columns;  // codes spanning the quotient
};

inline std::map<std::vector<int>, DiagramBlock> diagram_blocks(int n, int k,
                                                               const std::vector<int>* only_content = nullptr) {
    if (n < 1 || k < 1) throw std::invalid_argument("diagrams need n >= 1, k >= 1");
    std::map<std::vector<int>, DiagramBlock> blocks;
    std::map<std::string, JacobiDiagram> reps;
    const auto shapes = detail::tree_shapes(k);
    // Leaf labelings by counting in base n.
    for (const auto& labels0 : all_indices(n, k + 1)) {
        std::vector<int> c(n, 0);
        for (int i : labels0) ++c[i - 1];
        if (only_content && c != *only_content) continue;
        std::vector<int> labels(labels0.begin() + 1, labels0.end());
        for (const auto& shape : shapes) {
            std::size_t cursor = 0;
            auto D = JacobiDiagram::from_rooted(n, labels0[0], detail::relabel(shape, labels, cursor));
            auto cf = D.canonical();
            if (cf.zero) continue;
            auto& blk = blocks[c];
            if (!blk.column.count(cf.code)) {
                blk.column.emplace(cf.code, blk.codes.size());
                blk.codes.push_back(cf.code);
            }
        }
    }
    for (auto& [c, blk] : blocks) {
        std::set<std::vector<std::pair<std::size_t, int>>> seen;
        for (const auto& code : blk.codes) {
            auto bar = code.find('|');
            int root = std::stoi(code.substr(0, bar));
            BracketTree t = parse_bracket_tree(code.substr(bar + 1), n);
            std::vector<std::vector<BracketTree>> rels;
            detail::jacobi_relations(t, [](BracketTree x) { return x; }, rels);
            for (const auto& terms : rels) {
                std::map<std::size_t, int> row;
                for (const auto& term : terms) {
                    auto cf = JacobiDiagram::from_rooted(n, root, term).canonical();
                    if (cf.zero) continue;
                    row[blk.column.at(cf.code)] += cf.sign;
                }
                std::vector<std::pair<std::size_t, int>> key;
                for (auto [col, v] : row)
                    if (v) key.emplace_back(col, v);
                if (key.empty() || !seen.insert(key).second) continue;
                std::vector<Rational> r(blk.codes.size(), 0);
                for (auto [col, v] : key) r[col] = v;
                blk.relations.push_back(std::move(r));
            }
        }
        Matrix<Rational> R = blk.relations;
        auto pivots = rref(R);
        std::vector<bool> is_pivot(blk.codes.size(), false);
        for (auto p : pivots) is_pivot[p] = true;
        for (std::size_t j = 0; j < blk.codes.size(); ++j)
            if (!is_pivot[j]) blk.basis_columns.push_back(j);
    }
    return blocks;
}

// dim_Q of the space of degree-k tree diagrams modulo AS and IHX.
inline long ct_dimension(int n, int k) {
    long dim = 0;
    for (const auto& [c, blk] : diagram_blocks(n, k)) dim += static_cast<long>(blk.basis_columns.size());
    return dim;
}

// Caterpillar with end legs 1 and 2k+1 middle legs 2 (degree 2k+2).
inline JacobiDiagram palindromic_caterpillar(int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    BracketTree t = BracketTree::leaf(1);
    for (int j = 0; j < 2 * k + 1; ++j) t = BracketTree::node(BracketTree::leaf(2), std::move(t));
    return JacobiDiagram::from_rooted(2, 1, t);
}

// Whether D vanishes in the quotient by AS and IHX (over Q).
inline bool vanishes_in_quotient(const JacobiDiagram& D) {
    auto cf = D.canonical();
    if (cf.zero) return true;
    auto c = D.content();
    auto blocks = diagram_blocks(D.rank(), D.degree(), &c);
    auto& blk = blocks.at(c);
    Matrix<Rational> R = blk.relations;
    std::size_t r0 = rank(R);
    std::vector<Rational> v(blk.codes.size(), 0);
    v[blk.column.at(cf.code)] = 1;
    R.push_back(v);
    return rank(R) == r0;
}

struct PalindromeResult {
    bool antisymmetric;  // D = -D already by AS
    bool vanishes;       // zero in the quotient
};

inline PalindromeResult palindromic_vanishing(int k) {
    auto D = palindromic_caterpillar(k);
    return {D.canonical().zero, vanishes_in_quotient(D)};
}

}  // namespace orr

#endif

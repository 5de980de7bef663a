#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "orr/jacobi.hpp"

using namespace orr;

namespace {

// Diagram from planar coordinates: neighbours of a trivalent vertex listed
// counterclockwise by angle.
JacobiDiagram planar(int n, const std::vector<std::pair<double, double>>& at, const std::vector<int>& labels,
                     const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(at.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::size_t u = 0; u < adj.size(); ++u) {
        auto angle = [&](int w) { return std::atan2(at[w].second - at[u].second, at[w].first - at[u].first); };
        std::sort(adj[u].begin(), adj[u].end(), [&](int p, int q) { return angle(p) < angle(q); });
    }
    return JacobiDiagram(n, labels, adj);
}

HLElement tensor_of(int n, int i, const char* bracket) {
    HLElement out;
    auto e = decompose(parse_bracket_tree(bracket, n).tensor(n));
    for (const auto& [J, c] : e.coefficients()) out[{i, J}] = c;
    return out;
}

HLElement plus(HLElement a, const HLElement& b) {
    for (const auto& [key, c] : b) {
        a[key] += c;
        if (a[key] == 0) a.erase(key);
    }
    return a;
}

}  // namespace

TEST(Jacobi, PlanarOrientation) {
    // Legs v = (0,1), 2 at (0,0), 1 at (1,1), 2 at (1,0); trivalent at (0,.5), (1,.5).
    auto D = planar(2, {{0, 1}, {0, 0}, {1, 1}, {1, 0}, {0, .5}, {1, .5}}, {1, 2, 1, 2, 0, 0},
                    {{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}});
    EXPECT_EQ(D.degree(), 3);
    auto Lv = decompose(D.rooted_at(0).tensor(2));
    auto want = decompose(parse_bracket_tree("[[1,2],2]", 2).tensor(2));
    EXPECT_EQ(Lv, want);
    // Same diagram in the text format.
    auto E = JacobiDiagram::parse("v:1 | [2,[2,1]]", 2);
    EXPECT_EQ(E.canonical().code, D.canonical().code);
    EXPECT_EQ(E.canonical().sign, D.canonical().sign);
}

TEST(Jacobi, Canonicalization) {
    auto strut = JacobiDiagram::parse("1|2", 2);
    EXPECT_EQ(strut.canonical().code, "1|2");
    EXPECT_EQ(strut.canonical().sign, 1);
    // Branch swap flips the sign.
    auto a = JacobiDiagram::parse("1|[[1,2],2]", 2), b = JacobiDiagram::parse("1|[2,[1,2]]", 2);
    EXPECT_EQ(a.canonical().code, b.canonical().code);
    EXPECT_EQ(a.canonical().sign, -b.canonical().sign);
    // Idempotent.
    auto c = diagram_from_code(a.canonical().code, 2).canonical();
    EXPECT_EQ(c.code, a.canonical().code);
    EXPECT_EQ(c.sign, 1);
    // Re-rooting does not change the class.
    auto r = JacobiDiagram::parse("2|[1,[1,2]]", 2);
    EXPECT_EQ(r.canonical().code, JacobiDiagram::parse("1|[2,[1,2]]", 2).canonical().code);
    EXPECT_TRUE(JacobiDiagram::parse("1|[2,2]", 2).canonical().zero);
    EXPECT_THROW(JacobiDiagram::parse("1|[2,3]", 2), ParseError);
    EXPECT_THROW(JacobiDiagram(2, {1, 1, 0}, {{2}, {2}, {0, 1}}), std::invalid_argument);
}

TEST(Jacobi, Dimensions) {
    const std::vector<long> n2 = {0, 1, 0, 3};
    for (int k = 2; k <= 5; ++k) EXPECT_EQ(ct_dimension(2, k), n2[k - 2]);
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 5; ++k) EXPECT_EQ(Integer(ct_dimension(n, k)), d_rank(n, k)) << n << "," << k;
}

TEST(Jacobi, PhiExamples) {
    auto strut = JacobiDiagram::parse("1|2", 2);
    EXPECT_EQ(phi_map(strut), plus(tensor_of(2, 1, "2"), tensor_of(2, 2, "1")));
    auto a = JacobiDiagram::parse("1|[[1,2],2]", 2), b = JacobiDiagram::parse("1|[2,[1,2]]", 2);
    EXPECT_TRUE(plus(phi_map(a), phi_map(b)).empty());
}

TEST(Jacobi, PhiIsInjectiveIntoKernel) {
    for (auto [n, k] : {std::pair{2, 3}, {2, 5}, {3, 2}, {3, 3}, {3, 4}}) {
        for (const auto& [c, blk] : diagram_blocks(n, k)) {
            // Relations map to zero.
            for (const auto& row : blk.relations) {
                HLElement sum;
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (row[j] == 0) continue;
                    HLElement img = phi_map(diagram_from_code(blk.codes[j], n));
                    for (auto& [key, v] : img) v *= row[j];
                    sum = plus(sum, img);
                }
                EXPECT_TRUE(sum.empty()) << n << "," << k;
            }
            // Images of the basis are independent and inside the kernel of the bracket.
            std::map<std::pair<int, LyndonWord>, std::size_t> coord;
            std::vector<HLElement> images;
            for (auto j : blk.basis_columns) {
                images.push_back(phi_map(diagram_from_code(blk.codes[j], n)));
                EXPECT_TRUE(contract_bracket(images.back(), n).is_zero());
                for (const auto& [key, v] : images.back()) coord.emplace(key, coord.size());
            }
            Matrix<Rational> A = zero_matrix<Rational>(images.size(), coord.size());
            for (std::size_t r = 0; r < images.size(); ++r)
                for (const auto& [key, v] : images[r]) A[r][coord.at(key)] = v;
            EXPECT_EQ(rank(A), images.size()) << n << "," << k;
        }
    }
}

TEST(Jacobi, PalindromicCaterpillars) {
    for (int k = 0; k <= 2; ++k) {
        auto D = palindromic_caterpillar(k);
        EXPECT_EQ(D.degree(), 2 * k + 2);
        auto r = palindromic_vanishing(k);
        EXPECT_TRUE(r.antisymmetric) << k;
        EXPECT_TRUE(r.vanishes) << k;
        EXPECT_TRUE(phi_map(D).empty());
    }
    // Asymmetric control: legs 1,1,2,2 arranged as the planar diagram above.
    auto H = JacobiDiagram::parse("1|[[1,2],2]", 2);
    EXPECT_FALSE(H.canonical().zero);
    EXPECT_FALSE(vanishes_in_quotient(H));
}

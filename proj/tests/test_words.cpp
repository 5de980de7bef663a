#include <gtest/gtest.h>

#include <random>

#include "orr/words.hpp"
#include "test_support.hpp"

using namespace orr;

TEST(Words, FreeReduction) {
    Word w = Word::from_syllables(2, {{1, 2}, {1, -2}});
    EXPECT_TRUE(w.is_identity());
    Word v = Word::from_syllables(2, {{1, 1}, {2, 1}, {2, -1}, {1, 1}});
    EXPECT_EQ(format(v), "x1^2");
    EXPECT_EQ(v.syllables().size(), 1u);
}

TEST(Words, ExponentsAreArbitraryPrecision) {
    Integer big = parse_integer("123456789012345678901234567890");
    Word w = Word::generator(1, 1, big);
    EXPECT_EQ(format(w * w), "x1^246913578024691357802469135780");
    EXPECT_TRUE((w * invert(w)).is_identity());
}

TEST(Words, Commutator) {
    Word x1 = Word::generator(2, 1), x2 = Word::generator(2, 2);
    EXPECT_EQ(format(commutator(x1, x2)), "x1 x2 x1^-1 x2^-1");
    EXPECT_TRUE(commutator(x1, x1).is_identity());
}

TEST(Words, ParseAndFormat) {
    EXPECT_EQ(format(parse_word("x1^2 x2^-1", 2)), "x1^2 x2^-1");
    EXPECT_EQ(format(parse_word("[[x1,x2],x2]", 2)),
              format(commutator(commutator(Word::generator(2, 1), Word::generator(2, 2)), Word::generator(2, 2))));
    EXPECT_TRUE(parse_word("1", 3).is_identity());
    EXPECT_TRUE(parse_word("", 3).is_identity());
    EXPECT_EQ(format(parse_word("(x1 x2)^-1", 2)), "x2^-1 x1^-1");
}

TEST(Words, ParseErrorsCarryColumn) {
    try {
        parse_word("x1 x3", 2);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 5);
    }
    EXPECT_THROW(parse_word("x1^", 2), ParseError);
    EXPECT_THROW(parse_word("[x1 x2]", 2), ParseError);
    EXPECT_THROW(parse_word("x1 ?", 2), ParseError);
}

TEST(WordsProperty, GroupLaws) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Word a = gen::random_word(rng, 3, 6), b = gen::random_word(rng, 3, 6),
             c = gen::random_word(rng, 3, 6);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_TRUE((a * invert(a)).is_identity());
        EXPECT_EQ(invert(a * b), invert(b) * invert(a));
        EXPECT_EQ(parse_word(format(a), 3), a);
        EXPECT_EQ(power(a, 3), a * a * a);
        EXPECT_EQ(power(a, -2), invert(a * a));
        // No two adjacent syllables share a generator and no zero exponents.
        const auto& s = a.syllables();
        for (std::size_t j = 0; j < s.size(); ++j) {
            EXPECT_NE(s[j].exp, 0);
            if (j) {
                EXPECT_NE(s[j].gen, s[j - 1].gen);
            }
        }
    }
}

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
// Reduced words in the free group F_n, stored as runs of a single generator.

#ifndef ORR_WORDS_HPP
#define ORR_WORDS_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "integer.hpp"

namespace orr {

// Thrown for malformed textual input; line and column are 1-based.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, int line, int column)
        : std::invalid_argument(what + " (line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ")"),
          message_(what), line_(line), column_(column) {}
    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

struct Syllable {
    int gen;      // 1-based generator index
    Integer exp;  // nonzero in a reduced word
    bool operator==(const Syllable& o) const { return gen == o.gen && exp == o.exp; }
};

class Word {
public:
    Word() : n_(1) {}
    explicit Word(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("rank must be >= 1");
    }

    // Freely reduces an arbitrary syllable sequence.
    static Word from_syllables(int n, const std::vector<Syllable>& raw) {
        Word w(n);
        for (const auto& s : raw) w.push(s);
        return w;
    }
    static Word generator(int n, int i, const Integer& e = 1) {
        return from_syllables(n, {{i, e}});
    }

    int rank() const { return n_; }
    const std::vector<Syllable>& syllables() const { return syl_; }
    bool is_identity() const { return syl_.empty(); }

    // Letter count, i.e. the sum of |exponent| over syllables.
    Integer length() const {
        Integer l = 0;
        for (const auto& s : syl_) l += abs(s.exp);
        return l;
    }

    bool operator==(const Word& o) const { return n_ == o.n_ && syl_ == o.syl_; }

    // Append one syllable, cancelling against the tail.
    void push(const Syllable& s) {
        if (s.gen < 1 || s.gen > n_)
            throw std::invalid_argument("generator index " + std::to_string(s.gen) +
                                        " out of range 1.." + std::to_string(n_));
        if (s.exp == 0) return;
        if (!syl_.empty() && syl_.back().gen == s.gen) {
            syl_.back().exp += s.exp;
            if (syl_.back().exp == 0) syl_.pop_back();
        } else {
            syl_.push_back(s);
        }
    }

private:
    int n_;
    std::vector<Syllable> syl_;
};

inline Word multiply(const Word& a, const Word& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in multiply");
    Word out = a;
    for (const auto& s : b.syllables()) out.push(s);
    return out;
}

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

inline Word invert(const Word& w) {
    Word out(w.rank());
    const auto& s = w.syllables();
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push({it->gen, -it->exp});
    return out;
}

// [a, b] = a b a^-1 b^-1
inline Word commutator(const Word& a, const Word& b) {
    return a * b * invert(a) * invert(b);
}

inline Word power(const Word& w, const Integer& e) {
    Word base = e < 0 ? invert(w) : w;
    Integer k = abs(e);
    Word out(w.rank());
    // Square-and-multiply; free reduction keeps the result reduced.
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) out = out * base;
        k /= 2;
        if (k > 0) base = base * base;
    }
    return out;
}

// Image in the abelianization: total exponent of generator i.
inline Integer exponent_sum(const Word& w, int i) {
    Integer t = 0;
    for (const auto& s : w.syllables())
        if (s.gen == i) t += s.exp;
    return t;
}

inline std::string format(const Word& w) {
    if (w.is_identity()) return "1";
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        out += 'x' + std::to_string(s.gen);
        if (s.exp != 1) out += '^' + s.exp.get_str();
    }
    return out;
}

namespace detail {

// Grammar:
//   word    := factor*
//   factor  := primary ('^' integer)?
//   primary := 'x' digits | '[' word ',' word ']' | '(' word ')' | '1'
class WordParser {
public:
    WordParser(std::string_view text, int n, int line) : s_(text), n_(n), line_(line) {}

    Word parse() {
        Word w = word();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return w;
    }

private:
    std::string_view s_;
    int n_;
    int line_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
    }
    void skip() {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '*' || s_[pos_] == '.'))
            ++pos_;
    }
    bool at(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == 'x' || c == 'X' || c == '[' || c == '(' || c == '1';
    }

    Word word() {
        Word w(n_);
        while (starts_factor()) w = w * factor();
        return w;
    }

    Word factor() {
        Word p = primary();
        if (at('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string digits(s_.substr(start, pos_ - start));
            if (digits.empty() || digits == "-" || digits == "+") {
                pos_ = start;
                fail("expected integer exponent");
            }
            p = power(p, parse_integer(digits));
        }
        return p;
    }

    Word primary() {
        skip();
        char c = s_[pos_];
        if (c == 'x' || c == 'X') {
            std::size_t start = ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected generator index after 'x'");
            long i = std::stol(std::string(s_.substr(start, pos_ - start)));
            if (i < 1 || i > n_) {
                pos_ = start;
                fail("generator index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(n_));
            }
            return Word::generator(n_, static_cast<int>(i));
        }
        if (c == '1') {
            ++pos_;
            return Word(n_);
        }
        if (c == '(') {
            ++pos_;
            Word w = word();
            if (!at(')')) fail("expected ')'");
            ++pos_;
            return w;
        }
        // c == '['
        ++pos_;
        Word a = word();
        if (!at(',')) fail("expected ',' in commutator");
        ++pos_;
        Word b = word();
        if (!at(']')) fail("expected ']'");
        ++pos_;
        return commutator(a, b);
    }
};

}  // namespace detail

// Parses e.g. "x1^2 x2^-1", "[[x1,x2],x2]" or "1" (the identity).
inline Word parse_word(std::string_view text, int n, int line = 1) {
    return detail::WordParser(text, n, line).parse();
}

}  // namespace orr

#endif

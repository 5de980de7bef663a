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
// Exact integer and rational scalars (GMP) plus a few number-theory helpers.

#ifndef ORR_INTEGER_HPP
#define ORR_INTEGER_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace orr {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Integer parse_integer(const std::string& s) {
    Integer out;
    std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    if (t.empty() || out.set_str(t, 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return out;
}

inline Rational parse_rational(const std::string& s) {
    Rational out;
    if (s.empty() || out.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    out.canonicalize();
    return out;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// Generalized binomial c(c-1)...(c-j+1)/j!, valid for negative c as well.
inline Integer binomial(const Integer& c, unsigned long j) {
    Integer out;
    if (c >= 0) {
        mpz_bin_ui(out.get_mpz_t(), c.get_mpz_t(), j);
        return out;
    }
    // binom(-m, j) = (-1)^j binom(m + j - 1, j)
    Integer m = -c + Integer(j) - 1;
    mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), j);
    return (j % 2) ? Integer(-out) : out;
}

inline bool is_prime(const Integer& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

// ell-adic valuation of a nonzero integer.
inline unsigned valuation(Integer x, const Integer& ell) {
    if (x == 0) throw std::domain_error("valuation of zero");
    unsigned v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), ell.get_mpz_t())) {
        x /= ell;
        ++v;
    }
    return v;
}

// v_ell(K!) by Legendre's formula.
inline unsigned factorial_valuation(unsigned K, unsigned long ell) {
    unsigned v = 0;
    for (unsigned long q = ell; q <= K; q *= ell) v += K / q;
    return v;
}

// Least nonnegative residue.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("not invertible modulo " + m.get_str());
    return r;
}

inline Integer factorial(unsigned long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

}  // namespace orr

#endif

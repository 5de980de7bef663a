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
// Coefficient rings: Z, Q and Z/ell^M. Elements are carried as exact rationals
// and brought to canonical form by normalize().

#ifndef ORR_RING_HPP
#define ORR_RING_HPP

#include <stdexcept>
#include <string>

#include "integer.hpp"

namespace orr {

enum class RingKind { Integers, Rationals, ModPrimePower };

class CoefficientRing {
public:
    static CoefficientRing integers() { return CoefficientRing(RingKind::Integers, 0, 0); }
    static CoefficientRing rationals() { return CoefficientRing(RingKind::Rationals, 0, 0); }
    static CoefficientRing mod_prime_power(const Integer& ell, int M) {
        if (!is_prime(ell)) throw std::invalid_argument("ell = " + ell.get_str() + " is not prime");
        if (M < 1) throw std::invalid_argument("precision M must be >= 1");
        return CoefficientRing(RingKind::ModPrimePower, ell, M);
    }

    RingKind kind() const { return kind_; }
    const Integer& ell() const { return ell_; }
    int precision() const { return M_; }
    const Integer& modulus() const { return modulus_; }
    bool is_modular() const { return kind_ == RingKind::ModPrimePower; }

    // Canonical representative: integral check for Z, least residue for Z/ell^M.
    // Over Z/ell^M a rational with denominator prime to ell is reduced too.
    Rational normalize(const Rational& x) const {
        switch (kind_) {
            case RingKind::Rationals:
                return x;
            case RingKind::Integers:
                if (x.get_den() != 1)
                    throw std::domain_error("non-integral value " + to_string(x) + " over Z");
                return x;
            case RingKind::ModPrimePower: {
                Integer num = mod_floor(x.get_num(), modulus_);
                if (x.get_den() != 1) num = mod_floor(num * mod_inverse(x.get_den(), modulus_), modulus_);
                return Rational(num);
            }
        }
        return x;
    }

    bool is_zero(const Rational& x) const { return normalize(x) == 0; }

    std::string name() const {
        switch (kind_) {
            case RingKind::Integers: return "Z";
            case RingKind::Rationals: return "Q";
            case RingKind::ModPrimePower: return "Z/" + ell_.get_str() + "^" + std::to_string(M_);
        }
        return "?";
    }

    static CoefficientRing parse(const std::string& s) {
        if (s == "Z") return integers();
        if (s == "Q") return rationals();
        auto slash = s.find('/'), caret = s.find('^');
        if (s.rfind("Z/", 0) == 0 && caret != std::string::npos && caret > slash)
            return mod_prime_power(parse_integer(s.substr(2, caret - 2)),
                                   std::stoi(s.substr(caret + 1)));
        throw std::invalid_argument("unknown ring '" + s + "'");
    }

    bool operator==(const CoefficientRing& o) const {
        return kind_ == o.kind_ && ell_ == o.ell_ && M_ == o.M_;
    }

private:
    CoefficientRing(RingKind k, const Integer& ell, int M)
        : kind_(k), ell_(ell), M_(M), modulus_(k == RingKind::ModPrimePower ? ipow(ell, M) : Integer(0)) {}

    RingKind kind_;
    Integer ell_;
    int M_;
    Integer modulus_;
};

}  // namespace orr

#endif

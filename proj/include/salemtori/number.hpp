/*
   Copyright 2026 The salemtori Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SALEMTORI_NUMBER_HPP
#define SALEMTORI_NUMBER_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>

namespace salemtori {

using Int = mpz_class;
using Rational = mpq_class;

/// Closed rational interval [lo, hi].
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

/// Nonnegative r with r*r == x, if x is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& x) {
    if (x < 0) return std::nullopt;
    if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow2(long e) {
    Rational r(1);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

inline Int floor_of(const Rational& x) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

inline Int ceil_of(const Rational& x) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

/// Decimal rendering of floor(x * 10^digits) / 10^digits, always with exactly
/// `digits` fractional digits.
inline std::string floor_decimal(const Rational& x, unsigned digits) {
    const Int scale = pow_int(Int(10), digits);
    Int scaled = floor_of(x * Rational(scale));
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    Int whole, frac;
    mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
    std::string out = negative ? "-" : "";
    out += whole.get_str();
    if (digits == 0) return out;
    std::string f = frac.get_str();
    if (f.size() < digits) f.insert(0, digits - f.size(), '0');
    return out + "." + f;
}

/// Parses a plain decimal literal such as "1e-9", "0.001" or a fraction "1/1000".
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    if (text.find('/') != std::string::npos) {
        Rational r;
        if (r.set_str(text, 10) != 0) return std::nullopt;
        if (r.get_den() == 0) return std::nullopt;
        r.canonicalize();
        return r;
    }
    std::string mant = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        mant = text.substr(0, e);
        try {
            std::size_t used = 0;
            exp10 = std::stol(text.substr(e + 1), &used);
            if (used != text.size() - e - 1) return std::nullopt;
        } catch (...) {
            return std::nullopt;
        }
    }
    bool negative = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        negative = mant[0] == '-';
        mant.erase(0, 1);
    }
    std::string digits;
    bool seen_dot = false;
    for (char c : mant) {
        if (c == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_dot) --exp10;
        } else {
            return std::nullopt;
        }
    }
    if (digits.empty()) return std::nullopt;
    Rational r(Int(digits, 10));
    if (exp10 >= 0) {
        r *= Rational(pow_int(Int(10), static_cast<unsigned long>(exp10)));
    } else {
        r /= Rational(pow_int(Int(10), static_cast<unsigned long>(-exp10)));
    }
    if (negative) r = -r;
    return r;
}

}  // namespace salemtori

#endif

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

#ifndef SALEMTORI_POLY_HPP
#define SALEMTORI_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number.hpp"

namespace salemtori {

/// Dense univariate polynomial over the integers. Coefficients are stored in
/// ascending order; the zero polynomial has no coefficients and any nonzero
/// polynomial has a nonzero last entry.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { normalize(); }

    /// Builds from coefficients written highest degree first, e.g. {1, -3, 1}.
    static IntPoly descending(std::initializer_list<long> coeffs) {
        std::vector<Int> c;
        c.reserve(coeffs.size());
        for (long v : coeffs) c.emplace_back(v);
        std::reverse(c.begin(), c.end());
        return IntPoly(std::move(c));
    }
    static IntPoly descending(std::vector<Int> coeffs) {
        std::reverse(coeffs.begin(), coeffs.end());
        return IntPoly(std::move(coeffs));
    }
    static IntPoly constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }
    static IntPoly monomial(const Int& c, std::size_t k) {
        std::vector<Int> v(k + 1, Int(0));
        v[k] = c;
        return IntPoly(std::move(v));
    }
    /// The polynomial t.
    static IntPoly identity() { return monomial(Int(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const std::vector<Int>& coeffs() const noexcept { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const {
        if (c_.empty()) throw Error(Errc::zero_divisor, "leading coefficient of the zero polynomial");
        return c_.back();
    }

    IntPoly operator-() const {
        std::vector<Int> v(c_);
        for (auto& x : v) x = -x;
        return IntPoly(std::move(v));
    }
    IntPoly& operator+=(const IntPoly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Int(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Int(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
        normalize();
        return *this;
    }
    IntPoly& operator*=(const Int& s) {
        for (auto& x : c_) x *= s;
        normalize();
        return *this;
    }

    IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(v));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    /// Total order: by degree, then coefficients from the top down.
    friend bool operator<(const IntPoly& a, const IntPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

inline IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
inline IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

inline IntPoly power(const IntPoly& p, unsigned k) {
    IntPoly r = IntPoly::constant(Int(1));
    for (unsigned i = 0; i < k; ++i) r = r * p;
    return r;
}

/// Quotient and remainder of a by a monic b.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(Errc::zero_divisor, "division by the zero polynomial");
    if (!b.is_monic()) throw Error(Errc::not_monic, "divisor must be monic");
    std::vector<Int> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {IntPoly{}, a};
    std::vector<Int> quo(static_cast<std::size_t>(a.degree() - db + 1), Int(0));
    for (int i = a.degree(); i >= db; --i) {
        const Int f = rem[static_cast<std::size_t>(i)];
        if (f == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

/// q with q*b == a, or nullopt when b does not divide a. b must be monic.
inline std::optional<IntPoly> try_div_exact(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod_monic(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

inline IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    auto q = try_div_exact(a, b);
    if (!q) throw Error(Errc::not_divisible, "divisor does not divide exactly");
    return *q;
}

/// Exact division by an arbitrary nonzero divisor; nullopt unless the
/// quotient has integer coefficients and the remainder vanishes.
inline std::optional<IntPoly> try_div_exact_general(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(Errc::zero_divisor, "division by the zero polynomial");
    if (a.degree() < b.degree()) {
        if (a.is_zero()) return IntPoly{};
        return std::nullopt;
    }
    std::vector<Int> rem(a.coeffs());
    const int db = b.degree();
    const Int& lc = b.leading();
    std::vector<Int> quo(static_cast<std::size_t>(a.degree() - db + 1), Int(0));
    for (int i = a.degree(); i >= db; --i) {
        const Int& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        const Int f = top / lc;
        quo[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    for (const auto& x : rem) {
        if (x != 0) return std::nullopt;
    }
    return IntPoly(std::move(quo));
}

inline Rational evaluate(const IntPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + Rational(p.coeffs()[i]);
    return acc;
}

inline Int evaluate(const IntPoly& p, const Int& x) {
    Int acc(0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
    return acc;
}

/// Sign of p(x) without forming the full rational value: evaluates the
/// homogenized numerator num^d * p(num/den) * den^d.
inline int sign_at(const IntPoly& p, const Rational& x) {
    if (p.is_zero()) return 0;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    Int acc(0);
    Int den_pow(1);
    // Horner on the homogenized form: sum c_i num^i den^(d-i)
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * num + p.coeffs()[i] * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

inline IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Int> v(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) v[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

inline Int content(const IntPoly& p) {
    Int g(0);
    for (const auto& x : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g;
}

/// p divided by its content, with a positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return {};
    Int g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Int> v(p.coeffs());
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

/// t^deg(p) * p(1/t).
inline IntPoly reverse(const IntPoly& p) {
    if (p.is_zero()) throw Error(Errc::zero_divisor, "reverse of the zero polynomial");
    std::vector<Int> v(p.coeffs());
    std::reverse(v.begin(), v.end());
    return IntPoly(std::move(v));
}

inline bool is_reciprocal(const IntPoly& p) {
    if (p.is_zero()) return false;
    const auto& c = p.coeffs();
    return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

/// |lc(b)|^(deg a - deg b + 1) * a mod b, computed over the integers.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(Errc::zero_divisor, "pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    const int db = b.degree();
    Int lc = b.leading();
    const bool negative = lc < 0;
    if (negative) lc = -lc;
    std::vector<Int> rem(a.coeffs());
    IntPoly bb = negative ? -b : b;
    for (int i = a.degree(); i >= db; --i) {
        // rem <- lc*rem - rem[i] * t^(i-db) * bb
        const Int top = rem[static_cast<std::size_t>(i)];
        for (auto& x : rem) x *= lc;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= top * bb.coeff(static_cast<std::size_t>(j));
    }
    return IntPoly(std::move(rem));
}

/// Primitive greatest common divisor with positive leading coefficient.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return primitive_part(x);
}

inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() < 1) return primitive_part(p);
    const IntPoly g = gcd(p, derivative(p));
    auto q = try_div_exact_general(primitive_part(p), g);
    return primitive_part(*q);
}

inline bool is_squarefree(const IntPoly& p) { return gcd(p, derivative(p)).degree() < 1; }

/// Yun's decomposition of a monic polynomial into pairwise coprime monic
/// squarefree factors g_i with p = prod g_i^i. Only nonconstant g_i are returned.
inline std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p) {
    if (!p.is_monic()) throw Error(Errc::not_monic, "squarefree decomposition needs a monic polynomial");
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (p.degree() < 1) return out;
    IntPoly a = p;
    IntPoly b = derivative(a);
    IntPoly c = gcd(a, b);
    IntPoly w = *try_div_exact_general(a, c);
    IntPoly y = *try_div_exact_general(b, c);
    IntPoly z = y - derivative(w);
    unsigned i = 1;
    while (w.degree() >= 1) {
        IntPoly g = gcd(w, z);
        if (g.degree() >= 1) out.emplace_back(g, i);
        IntPoly nw = *try_div_exact_general(w, g);
        IntPoly ny = *try_div_exact_general(z, g);
        z = ny - derivative(nw);
        w = std::move(nw);
        ++i;
    }
    for (auto& [g, m] : out) {
        if (g.leading() < 0) g = -g;
    }
    return out;
}

/// p(q(t)).
inline IntPoly compose(const IntPoly& p, const IntPoly& q) {
    IntPoly acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * q + IntPoly::constant(p.coeffs()[i]);
    return acc;
}

/// Comma-separated integer coefficients, highest degree first ("1,-3,1").
inline std::string to_coeff_list(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        out += p.coeffs()[i].get_str();
        if (i != 0) out += ',';
    }
    return out;
}

/// Human-readable form in the variable `var`, e.g. "t^2 - 3*t + 1".
inline std::string to_string(const IntPoly& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Int& c = p.coeffs()[i];
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

}  // namespace salemtori

#endif

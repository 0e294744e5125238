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

#ifndef SALEMTORI_SALEM_HPP
#define SALEMTORI_SALEM_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"
#include "factor.hpp"
#include "number.hpp"
#include "poly.hpp"
#include "sturm.hpp"

namespace salemtori {

/// For reciprocal p of degree 2d, the degree-d polynomial T with
/// p(t) = t^d * T(t + 1/t).
inline IntPoly trace_transform(const IntPoly& p) {
    if (p.is_zero() || p.degree() % 2 != 0) throw Error(Errc::odd_degree, "trace transform needs even degree");
    if (!is_reciprocal(p)) throw Error(Errc::not_reciprocal, "trace transform needs a reciprocal polynomial");
    const std::size_t d = static_cast<std::size_t>(p.degree() / 2);
    // t^k + t^-k = V_k(u) with V_0 = 2, V_1 = u, V_{k+1} = u V_k - V_{k-1}
    const IntPoly u = IntPoly::identity();
    std::vector<IntPoly> v{IntPoly::constant(Int(2)), u};
    for (std::size_t k = 2; k <= d; ++k) v.push_back(u * v[k - 1] - v[k - 2]);
    IntPoly t = IntPoly::constant(p.coeff(d));
    for (std::size_t k = 1; k <= d; ++k) t += v[k] * p.coeff(d + k);
    return t;
}

/// Proof that S is a Salem polynomial, with an isolating interval for its
/// Salem root lambda > 1.
struct SalemCertificate {
    IntPoly s_poly;
    int degree = 0;
    IntPoly trace_poly;
    Interval lambda_interval;
    int roots_on_circle = 0;
};

struct NotSalem {
    enum class Reason { not_monic, not_reciprocal, bad_degree, reducible, wrong_circle_count };

    Reason reason;
    std::vector<Factor> factorization;  // filled for `reducible`
    std::string detail;
};

constexpr std::string_view to_string(NotSalem::Reason r) noexcept {
    switch (r) {
        case NotSalem::Reason::not_monic: return "not_monic";
        case NotSalem::Reason::not_reciprocal: return "not_reciprocal";
        case NotSalem::Reason::bad_degree: return "bad_degree";
        case NotSalem::Reason::reducible: return "reducible";
        case NotSalem::Reason::wrong_circle_count: return "wrong_circle_count";
    }
    return "unknown";
}

using SalemResult = std::variant<SalemCertificate, NotSalem>;

namespace detail {

/// One bisection step on a bracket [lo, hi] of the Salem root, where
/// S(lo) < 0 < S(hi).
inline void bisect_once(const IntPoly& s, Interval& iv) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (sign_at(s, mid) < 0) {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
}

}  // namespace detail

inline SalemResult is_salem(const IntPoly& p) {
    if (p.degree() < 2) return NotSalem{NotSalem::Reason::bad_degree, {}, "degree below 2"};
    if (!p.is_monic()) return NotSalem{NotSalem::Reason::not_monic, {}, "leading coefficient is not 1"};
    if (!is_reciprocal(p)) return NotSalem{NotSalem::Reason::not_reciprocal, {}, "coefficients are not palindromic"};
    if (p.degree() > 8) return NotSalem{NotSalem::Reason::bad_degree, {}, "degree above 8 is out of range"};
    auto factors = factor_bounded(p);
    if (factors.size() != 1 || factors[0].multiplicity != 1) {
        return NotSalem{NotSalem::Reason::reducible, std::move(factors), "polynomial factors"};
    }
    if (p.degree() % 2 != 0) return NotSalem{NotSalem::Reason::bad_degree, {}, "odd degree"};

    const int d = p.degree() / 2;
    IntPoly trace = trace_transform(p);
    const Rational two(2);
    const int above = count_real_roots(trace, two, Infinity::positive);
    const int below = count_real_roots(trace, Infinity::negative, -two);
    const int middle = count_real_roots(trace, -two, two);
    if (above != 1 || below != 0 || middle != d - 1) {
        return NotSalem{NotSalem::Reason::wrong_circle_count, {},
                        "trace roots: " + std::to_string(below) + " below -2, " + std::to_string(middle) +
                            " in (-2,2], " + std::to_string(above) + " above 2"};
    }

    Int bound(0);
    for (const auto& c : p.coeffs()) bound = std::max(bound, Int(abs(c)));
    Interval iv{Rational(1), Rational(bound + 1)};
    while (iv.lo <= 1 || iv.width() > Rational(1, 8)) detail::bisect_once(p, iv);

    SalemCertificate cert;
    cert.s_poly = p;
    cert.degree = p.degree();
    cert.trace_poly = std::move(trace);
    cert.lambda_interval = iv;
    cert.roots_on_circle = p.degree() - 2;
    return cert;
}

inline const SalemCertificate* as_certificate(const SalemResult& r) { return std::get_if<SalemCertificate>(&r); }

/// Certified Salem polynomial or an Error(not_salem_input).
inline SalemCertificate certify_salem(const IntPoly& p) {
    auto r = is_salem(p);
    if (auto* c = as_certificate(r)) return *c;
    const auto& n = std::get<NotSalem>(r);
    throw Error(Errc::not_salem_input, to_string(p) + " is not a Salem polynomial (" + std::string(to_string(n.reason)) + ")");
}

/// Interval of width at most eps containing lambda, by exact-sign bisection
/// from the certificate's bracket. Deterministic, so tighter requests refine
/// looser ones.
inline Interval lambda_approx(const SalemCertificate& cert, const Rational& eps) {
    if (eps <= 0) throw Error(Errc::bad_parameters, "eps must be positive");
    Interval iv = cert.lambda_interval;
    while (iv.width() > eps) detail::bisect_once(cert.s_poly, iv);
    return iv;
}

}  // namespace salemtori

#endif

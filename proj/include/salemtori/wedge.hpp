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

#ifndef SALEMTORI_WEDGE_HPP
#define SALEMTORI_WEDGE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "number.hpp"
#include "poly.hpp"

namespace salemtori {

/// Monic degree-6 polynomial whose roots are the six products r_i r_j (i < j)
/// of the roots of a monic quartic, computed through power sums:
/// the k-th power sum of the products is (s_k^2 - s_2k) / 2.
inline IntPoly exterior_square(const IntPoly& p) {
    if (p.degree() != 4) throw Error(Errc::wrong_degree, "exterior_square needs a quartic");
    if (!p.is_monic()) throw Error(Errc::not_monic, "exterior_square needs a monic quartic");
    // elementary symmetric functions of the roots
    const std::array<Int, 5> e{Int(1), -p.coeff(3), p.coeff(2), -p.coeff(1), p.coeff(0)};
    std::array<Int, 13> s{};
    s[0] = 4;
    for (int k = 1; k <= 12; ++k) {
        Int acc(0);
        for (int i = 1; i <= std::min(k, 4); ++i) {
            const Int term = (i == k) ? Int(e[static_cast<std::size_t>(i)] * k)
                                      : Int(e[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)]);
            acc += (i % 2 == 1) ? term : Int(-term);
        }
        s[static_cast<std::size_t>(k)] = acc;
    }
    std::array<Int, 7> pi{};
    for (int k = 1; k <= 6; ++k) {
        const Int& sk = s[static_cast<std::size_t>(k)];
        pi[static_cast<std::size_t>(k)] = (sk * sk - s[static_cast<std::size_t>(2 * k)]) / 2;
    }
    // Newton's identities back to elementary symmetric functions of the products
    std::array<Int, 7> big_e{};
    big_e[0] = 1;
    for (int k = 1; k <= 6; ++k) {
        Int acc(0);
        for (int i = 1; i <= k; ++i) {
            const Int term = big_e[static_cast<std::size_t>(k - i)] * pi[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : Int(-term);
        }
        big_e[static_cast<std::size_t>(k)] = acc / k;
    }
    std::vector<Int> asc(7);
    for (int k = 0; k <= 6; ++k) {
        asc[static_cast<std::size_t>(6 - k)] = (k % 2 == 0) ? big_e[static_cast<std::size_t>(k)]
                                                            : Int(-big_e[static_cast<std::size_t>(k)]);
    }
    return IntPoly(std::move(asc));
}

/// Nonnegative m, n with q(1) = -m^2 and q(-1) = n^2.
struct SquareWitness {
    Int m;
    Int n;

    friend bool operator==(const SquareWitness& a, const SquareWitness& b) { return a.m == b.m && a.n == b.n; }
};

inline std::optional<SquareWitness> square_values(const IntPoly& q) {
    if (q.degree() != 6) throw Error(Errc::wrong_degree, "square_values needs a sextic");
    if (!q.is_monic()) throw Error(Errc::not_monic, "square_values needs a monic sextic");
    const auto m = exact_sqrt(-evaluate(q, Int(1)));
    const auto n = exact_sqrt(evaluate(q, Int(-1)));
    if (!m || !n) return std::nullopt;
    return SquareWitness{*m, *n};
}

/// Quartics t^4 + c3 t^3 + c2 t^2 + c1 t + 1 that could have a given sextic
/// as exterior square. With q = t^6 + a t^5 + ..., c2 = -a and
/// (c3 - c1)^2 = m^2, (c3 + c1)^2 = n^2, so (c3, c1) ranges over
/// (j, k), (-j, -k), (k, j), (-k, -j) with j = (n + m)/2, k = (n - m)/2.
struct InversionCandidates {
    enum class Failure { none, not_square, parity_obstruction };

    IntPoly q_poly;
    Int a;
    std::optional<SquareWitness> squares;
    std::optional<Int> j;
    std::optional<Int> k;
    std::vector<IntPoly> candidates;
    std::vector<IntPoly> verified;
    Failure failure = Failure::none;
};

constexpr std::string_view to_string(InversionCandidates::Failure f) noexcept {
    switch (f) {
        case InversionCandidates::Failure::none: return "none";
        case InversionCandidates::Failure::not_square: return "not_square";
        case InversionCandidates::Failure::parity_obstruction: return "parity_obstruction";
    }
    return "unknown";
}

inline IntPoly wedge_candidate(const Int& c3, const Int& c2, const Int& c1) {
    return IntPoly(std::vector<Int>{Int(1), c1, c2, c3, Int(1)});
}

inline InversionCandidates invert_wedge(const IntPoly& q) {
    if (q.degree() != 6) throw Error(Errc::wrong_degree, "invert_wedge needs a sextic");
    if (!q.is_monic()) throw Error(Errc::not_monic, "invert_wedge needs a monic sextic");
    if (!is_reciprocal(q)) throw Error(Errc::not_reciprocal, "invert_wedge needs a reciprocal sextic");
    InversionCandidates out;
    out.q_poly = q;
    out.a = q.coeff(5);
    out.squares = square_values(q);
    if (!out.squares) {
        out.failure = InversionCandidates::Failure::not_square;
        return out;
    }
    const Int& m = out.squares->m;
    const Int& n = out.squares->n;
    if (mpz_even_p(Int(n + m).get_mpz_t()) == 0) {
        out.failure = InversionCandidates::Failure::parity_obstruction;
        return out;
    }
    const Int j = (n + m) / 2;
    const Int k = (n - m) / 2;
    out.j = j;
    out.k = k;
    const Int c2 = -out.a;
    const std::array<std::pair<Int, Int>, 4> pairs{std::pair{j, k}, std::pair{Int(-j), Int(-k)}, std::pair{k, j},
                                                   std::pair{Int(-k), Int(-j)}};
    for (const auto& [c3, c1] : pairs) {
        IntPoly cand = wedge_candidate(c3, c2, c1);
        if (std::find(out.candidates.begin(), out.candidates.end(), cand) != out.candidates.end()) continue;
        out.candidates.push_back(cand);
        if (exterior_square(cand) == q) out.verified.push_back(cand);
    }
    return out;
}

}  // namespace salemtori

#endif

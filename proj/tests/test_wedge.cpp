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

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "salemtori.hpp"

using namespace salemtori;

namespace {

IntPoly P(std::initializer_list<long> desc) { return IntPoly::descending(desc); }

IntPoly random_quartic(oracle::Rng& rng, long bound, bool unit_constant) {
    std::vector<Int> c;
    for (int i = 0; i < 4; ++i) c.emplace_back(rng.uniform(-bound, bound));
    if (unit_constant) c[0] = 1;
    c.emplace_back(1);
    return IntPoly(std::move(c));
}

bool contains(const std::vector<IntPoly>& v, const IntPoly& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

TEST(ExteriorSquare, Examples) {
    EXPECT_EQ(exterior_square(P({1, 0, 0, 1, 1})), P({1, 0, -1, -1, -1, 0, 1}));
    EXPECT_EQ(exterior_square(power(P({1, -1}), 4)), power(P({1, -1}), 6));
    EXPECT_EQ(exterior_square(P({1, -2, 4, -2, 1})), power(P({1, -1}), 2) * P({1, -2, -2, -2, 1}));
}

TEST(ExteriorSquare, FamilyClosedForm) {
    for (long a = -5; a <= 25; ++a) {
        EXPECT_EQ(exterior_square(P({1, 0, a, 1, 1})), P({1, -a, -1, 2 * a - 1, -1, -a, 1})) << a;
    }
}

TEST(ExteriorSquare, CompoundMatrixOracle) {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly p = random_quartic(rng, 10, false);
        EXPECT_EQ(exterior_square(p), oracle::compound_charpoly(p)) << to_string(p);
    }
}

TEST(ExteriorSquare, Symmetries) {
    oracle::Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly p = random_quartic(rng, 8, true);
        const IntPoly negated = compose(p, P({-1, 0}));
        EXPECT_EQ(exterior_square(negated), exterior_square(p));
        EXPECT_EQ(exterior_square(reverse(p)), reverse(exterior_square(p)));
    }
}

TEST(ExteriorSquare, Errors) {
    try {
        exterior_square(P({1, 0, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::wrong_degree);
    }
    EXPECT_THROW(exterior_square(P({2, 0, 0, 1, 1})), Error);
}

TEST(SquareValues, Examples) {
    const auto a = square_values(P({1, 0, -1, -1, -1, 0, 1}));
    ASSERT_TRUE(a);
    EXPECT_EQ(*a, (SquareWitness{Int(1), Int(1)}));
    const auto b = square_values(power(P({1, -1}), 2) * P({1, -2, -2, -2, 1}));
    ASSERT_TRUE(b);
    EXPECT_EQ(*b, (SquareWitness{Int(0), Int(4)}));
    EXPECT_FALSE(square_values(P({1, 0, 0, 0, 0, 0, 1})));
    EXPECT_THROW(square_values(P({1, 0, 1})), Error);
}

TEST(SquareValues, HoldsForReciprocalWedges) {
    // -Q(1) = (c3 - c1)^2 and Q(-1) = (c3 + c1)^2 for P = t^4 + c3 t^3 + c2 t^2 + c1 t + 1
    oracle::Rng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly p = random_quartic(rng, 9, true);
        const auto w = square_values(exterior_square(p));
        ASSERT_TRUE(w);
        EXPECT_EQ(w->m, abs(p.coeff(3) - p.coeff(1)));
        EXPECT_EQ(w->n, abs(p.coeff(3) + p.coeff(1)));
    }
}

TEST(InvertWedge, Examples) {
    const auto a = invert_wedge(P({1, 0, -1, -1, -1, 0, 1}));
    EXPECT_EQ(a.failure, InversionCandidates::Failure::none);
    EXPECT_EQ(a.verified.size(), 4U);
    for (const auto& p : {P({1, 1, 0, 0, 1}), P({1, -1, 0, 0, 1}), P({1, 0, 0, -1, 1}), P({1, 0, 0, 1, 1})}) {
        EXPECT_TRUE(contains(a.verified, p)) << to_string(p);
    }

    const auto b = invert_wedge(power(P({1, -1}), 2) * P({1, -2, -2, -2, 1}));
    ASSERT_TRUE(b.j && b.k);
    EXPECT_EQ(*b.j, 2);
    EXPECT_EQ(*b.k, 2);
    EXPECT_TRUE(contains(b.verified, P({1, -2, 4, -2, 1})));
    for (std::size_t i = 0; i < b.candidates.size(); ++i) {
        for (std::size_t k = i + 1; k < b.candidates.size(); ++k) EXPECT_NE(b.candidates[i], b.candidates[k]);
    }

    const auto c = invert_wedge(P({1, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(c.failure, InversionCandidates::Failure::not_square);
    EXPECT_TRUE(c.candidates.empty());
    EXPECT_TRUE(c.verified.empty());
}

TEST(InvertWedge, ParityAlwaysAgrees) {
    // Q(1) + Q(-1) is twice the sum of the even-index coefficients, so m and n
    // always share parity for an integer sextic.
    int squares = 0;
    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            for (long c = -3; c <= 3; ++c) {
                const IntPoly g = P({1, a, b, c, b, a, 1});
                const auto sv = square_values(g);
                if (!sv) continue;
                ++squares;
                EXPECT_EQ(Int(sv->m - sv->n) % 2, 0);
                EXPECT_NE(invert_wedge(g).failure, InversionCandidates::Failure::parity_obstruction);
            }
        }
    }
    EXPECT_GT(squares, 0);
}

TEST(InvertWedge, RecoversEveryReciprocalPreimage) {
    oracle::Rng rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly p = random_quartic(rng, 6, true);
        const IntPoly q = exterior_square(p);
        if (!is_reciprocal(q)) continue;
        const auto inv = invert_wedge(q);
        EXPECT_TRUE(contains(inv.verified, p)) << to_string(p);
        EXPECT_EQ(inv.a, q.coeff(5));
        for (const auto& v : inv.verified) EXPECT_EQ(exterior_square(v), q);
        for (const auto& v : inv.candidates) {
            EXPECT_EQ(v.coeff(2), -inv.a);
            const Int c3 = v.coeff(3), c1 = v.coeff(1);
            const bool listed = (c3 == *inv.j && c1 == *inv.k) || (c3 == -*inv.j && c1 == -*inv.k) ||
                                (c3 == *inv.k && c1 == *inv.j) || (c3 == -*inv.k && c1 == -*inv.j);
            EXPECT_TRUE(listed);
        }
    }
}

TEST(InvertWedge, Errors) {
    EXPECT_THROW(invert_wedge(P({1, 0, 0, 1, 1})), Error);
    try {
        invert_wedge(P({1, 1, 0, 0, 0, 0, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_reciprocal);
    }
}

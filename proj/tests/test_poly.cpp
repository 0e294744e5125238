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

#include "oracles.hpp"
#include "salemtori.hpp"

using namespace salemtori;

namespace {

IntPoly P(std::initializer_list<long> desc) { return IntPoly::descending(desc); }

IntPoly random_poly(oracle::Rng& rng, int degree, long bound, bool monic) {
    std::vector<Int> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(rng.uniform(-bound, bound));
    if (monic) c.back() = 1;
    return IntPoly(std::move(c));
}

Rational random_rational(oracle::Rng& rng) {
    Rational r(Int(rng.uniform(-50, 50)), Int(rng.uniform(1, 17)));
    r.canonicalize();
    return r;
}

}  // namespace

TEST(IntPoly, ZeroIsEmpty) {
    IntPoly z(std::vector<Int>{Int(0), Int(0)});
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.coeffs().empty());
    EXPECT_EQ(z.degree(), -1);
    EXPECT_EQ(P({1, 0, 0}).degree(), 2);
}

TEST(IntPoly, Add) {
    EXPECT_EQ(add(P({1, 0, 1}), P({-1, 0, 0})), P({1}));
    EXPECT_EQ(add(P({1, -1}), IntPoly()), P({1, -1}));
    EXPECT_EQ(add(P({1, -3, 1}), P({3, 0})), P({1, 0, 1}));
    EXPECT_TRUE(add(P({1, 2}), P({-1, -2})).is_zero());
}

TEST(IntPoly, Mul) {
    EXPECT_EQ(mul(P({1, 1}), P({1, -1})), P({1, 0, -1}));
    EXPECT_EQ(mul(P({1, -3, 1}), power(P({1, 1}), 2)), P({1, -1, -4, -1, 1}));
    EXPECT_EQ(mul(P({1, -3, 1}), P({1})), P({1, -3, 1}));
    EXPECT_TRUE(mul(P({1, -3, 1}), IntPoly()).is_zero());
}

TEST(IntPoly, MulMatchesNaiveConvolution) {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_poly(rng, static_cast<int>(rng.uniform(0, 6)), 20, false);
        const IntPoly b = random_poly(rng, static_cast<int>(rng.uniform(0, 6)), 20, false);
        std::vector<Int> c(a.coeffs().size() + b.coeffs().size(), Int(0));
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
        EXPECT_EQ(mul(a, b), IntPoly(c));
        if (!a.is_zero() && !b.is_zero()) {
            EXPECT_EQ(mul(a, b).degree(), a.degree() + b.degree());
        }
    }
}

TEST(IntPoly, DivExact) {
    EXPECT_EQ(div_exact(P({1, 0, -1}), P({1, -1})), P({1, 1}));
    EXPECT_EQ(div_exact(P({1, -1, -4, -1, 1}), P({1, 1})), P({1, -2, -2, 1}));
    try {
        div_exact(P({1, 0, -1, -1, -1, 0, 1}), P({1, 1, 1}));
        FAIL() << "expected not_divisible";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_divisible);
    }
    try {
        div_exact(P({1, 0, -1}), IntPoly());
        FAIL() << "expected zero_divisor";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::zero_divisor);
    }
}

TEST(IntPoly, DivExactInvertsMul) {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_poly(rng, static_cast<int>(rng.uniform(0, 6)), 30, false);
        const IntPoly b = random_poly(rng, static_cast<int>(rng.uniform(0, 4)), 30, true);
        EXPECT_EQ(div_exact(mul(a, b), b), a);
        const auto [q, r] = divmod_monic(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(IntPoly, Evaluate) {
    const IntPoly q = P({1, 0, -1, -1, -1, 0, 1});
    EXPECT_EQ(evaluate(q, Rational(1)), Rational(-1));
    EXPECT_EQ(evaluate(q, Rational(-1)), Rational(1));
    EXPECT_EQ(evaluate(P({7, -3, 5}), Rational(0)), Rational(5));
    EXPECT_EQ(evaluate(P({2, -3, 1}), Rational(1, 2)), Rational(0));
}

TEST(IntPoly, EvaluateIsMultiplicative) {
    oracle::Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_poly(rng, static_cast<int>(rng.uniform(0, 5)), 9, false);
        const IntPoly b = random_poly(rng, static_cast<int>(rng.uniform(0, 5)), 9, false);
        const Rational x = random_rational(rng);
        EXPECT_EQ(evaluate(mul(a, b), x), evaluate(a, x) * evaluate(b, x));
        EXPECT_EQ(sign_at(a, x), sgn(evaluate(a, x)));
    }
}

TEST(IntPoly, ReverseAndReciprocal) {
    EXPECT_TRUE(is_reciprocal(P({1, -2, -2, -2, 1})));
    EXPECT_FALSE(is_reciprocal(P({1, 0, 0, 1, 1})));
    EXPECT_EQ(reverse(P({1, 0, 0, 1, 1})), P({1, 1, 0, 0, 1}));
    oracle::Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly p = random_poly(rng, static_cast<int>(rng.uniform(1, 7)), 9, false);
        if (p.coeff(0) == 0) p += IntPoly::constant(Int(1));
        EXPECT_EQ(reverse(reverse(p)), p);
    }
}

TEST(IntPoly, GcdAndSquarefree) {
    const IntPoly a = P({1, 1}) * P({1, -3, 1});
    const IntPoly b = P({1, 1}) * P({1, 0, 1});
    EXPECT_EQ(gcd(a, b), P({1, 1}));
    const IntPoly p = power(P({1, 1}), 2) * P({1, -3, 1}) * power(P({1, -1}), 3);
    EXPECT_FALSE(is_squarefree(p));
    EXPECT_EQ(squarefree_part(p), P({1, 1}) * P({1, -3, 1}) * P({1, -1}));
    const auto parts = squarefree_decomposition(p);
    IntPoly acc = IntPoly::constant(Int(1));
    for (const auto& [g, m] : parts) acc *= power(g, m);
    EXPECT_EQ(acc, p);
}

TEST(Factor, SpecExamples) {
    const auto f = factor_bounded(P({1, -1, -4, -1, 1}));
    ASSERT_EQ(f.size(), 2U);
    EXPECT_EQ(f[0].poly, P({1, 1}));
    EXPECT_EQ(f[0].multiplicity, 2U);
    EXPECT_EQ(f[1].poly, P({1, -3, 1}));
    EXPECT_EQ(f[1].multiplicity, 1U);

    const auto g = factor_bounded(P({1, 0, 0, 1, 1}));
    ASSERT_EQ(g.size(), 1U);
    EXPECT_EQ(g[0].poly, P({1, 0, 0, 1, 1}));

    const auto h = factor_bounded(P({1, 0, -1}));
    ASSERT_EQ(h.size(), 2U);
    EXPECT_EQ(h[0].poly, P({1, -1}));
    EXPECT_EQ(h[1].poly, P({1, 1}));
}

TEST(Factor, Errors) {
    EXPECT_THROW(factor_bounded(P({2, 1})), Error);
    try {
        factor_bounded(IntPoly::monomial(Int(1), 9) + IntPoly::constant(Int(1)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degree_too_large);
    }
}

TEST(Factor, AgreesWithMignotteOracle) {
    oracle::Rng rng(15);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int deg = static_cast<int>(rng.uniform(1, 6));
        IntPoly p = random_poly(rng, deg, 2, true);
        if (trial % 3 == 0 && deg <= 4) p *= random_poly(rng, static_cast<int>(rng.uniform(1, 2)), 2, true);
        const auto expected = oracle::mignotte_factorization(p);
        const auto got = factor_bounded(p);
        ASSERT_EQ(got.size(), expected.size()) << to_string(p);
        for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(got[i].poly, expected[i].first) << to_string(p);
            EXPECT_EQ(got[i].multiplicity, expected[i].second) << to_string(p);
        }
        ++checked;
    }
    EXPECT_EQ(checked, 150);
}

TEST(Factor, ProductReproducesInput) {
    oracle::Rng rng(16);
    for (int trial = 0; trial < 150; ++trial) {
        const IntPoly p = random_poly(rng, static_cast<int>(rng.uniform(1, 8)), 6, true);
        IntPoly acc = IntPoly::constant(Int(1));
        for (const auto& f : factor_bounded(p)) {
            EXPECT_TRUE(f.poly.is_monic());
            acc *= power(f.poly, f.multiplicity);
        }
        EXPECT_EQ(acc, p);
    }
}

TEST(Cyclotomic, TableEntries) {
    const auto& table = CyclotomicTable::instance();
    EXPECT_EQ(table.entries().size(), 13U);
    for (const auto& [n, phi] : table.entries()) {
        const IntPoly tn = IntPoly::monomial(Int(1), n) - IntPoly::constant(Int(1));
        EXPECT_TRUE(try_div_exact(tn, phi).has_value()) << n;
        EXPECT_FALSE(oracle::mignotte_factor(phi).has_value()) << n;
    }
    EXPECT_EQ(table[12], P({1, 0, -1, 0, 1}));
    EXPECT_EQ(table[5], P({1, 1, 1, 1, 1}));
    EXPECT_EQ(table[7].degree(), 6);
    EXPECT_EQ(table[18], P({1, 0, 0, -1, 0, 0, 1}));
}

TEST(Cyclotomic, Part) {
    const auto a = cyclotomic_part(P({1, 0, -1, 0, 1}));
    ASSERT_EQ(a.factors.size(), 1U);
    EXPECT_EQ(a.factors[0], std::make_pair(12U, 1U));
    EXPECT_EQ(a.remainder, P({1}));

    const auto b = cyclotomic_part(P({1, -3, 1}));
    EXPECT_TRUE(b.factors.empty());
    EXPECT_EQ(b.remainder, P({1, -3, 1}));

    const auto c = cyclotomic_part(power(P({1, -1}), 2) * P({1, -3, 1}));
    ASSERT_EQ(c.factors.size(), 1U);
    EXPECT_EQ(c.factors[0], std::make_pair(1U, 2U));
    EXPECT_EQ(c.remainder, P({1, -3, 1}));
    EXPECT_EQ(c.cyclotomic_product() * c.remainder, power(P({1, -1}), 2) * P({1, -3, 1}));
    EXPECT_THROW(cyclotomic_part(P({2, 1})), Error);
}

TEST(Cyclotomic, RemainderIsCyclotomicFree) {
    oracle::Rng rng(17);
    const auto& table = CyclotomicTable::instance();
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly p = random_poly(rng, static_cast<int>(rng.uniform(1, 4)), 3, true);
        for (int k = 0; k < 2; ++k) p *= table[table.indices[static_cast<std::size_t>(rng.uniform(0, 12))]];
        const auto split = cyclotomic_part(p);
        EXPECT_EQ(split.cyclotomic_product() * split.remainder, p);
        for (const auto& [n, phi] : table.entries()) EXPECT_FALSE(try_div_exact(split.remainder, phi).has_value());
    }
}

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

#ifndef SALEMTORI_MATRIX_HPP
#define SALEMTORI_MATRIX_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "number.hpp"
#include "poly.hpp"

namespace salemtori {

template <std::size_t N>
using IntMatrix = std::array<std::array<Int, N>, N>;

template <std::size_t N>
IntMatrix<N> zero_matrix() {
    IntMatrix<N> m;
    for (auto& row : m) row.fill(Int(0));
    return m;
}

template <std::size_t N>
IntMatrix<N> identity_matrix() {
    IntMatrix<N> m = zero_matrix<N>();
    for (std::size_t i = 0; i < N; ++i) m[i][i] = 1;
    return m;
}

template <std::size_t N>
IntMatrix<N> operator*(const IntMatrix<N>& a, const IntMatrix<N>& b) {
    IntMatrix<N> c = zero_matrix<N>();
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < N; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

template <std::size_t N>
IntMatrix<N> operator+(IntMatrix<N> a, const IntMatrix<N>& b) {
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) a[i][j] += b[i][j];
    }
    return a;
}

template <std::size_t N>
IntMatrix<N> scaled(IntMatrix<N> a, const Int& s) {
    for (auto& row : a) {
        for (auto& x : row) x *= s;
    }
    return a;
}

template <std::size_t N>
IntMatrix<N> transpose(const IntMatrix<N>& a) {
    IntMatrix<N> t;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) t[j][i] = a[i][j];
    }
    return t;
}

template <std::size_t N>
Int trace(const IntMatrix<N>& a) {
    Int t(0);
    for (std::size_t i = 0; i < N; ++i) t += a[i][i];
    return t;
}

/// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier recursion;
/// every division is exact over the integers.
template <std::size_t N>
IntPoly charpoly(const IntMatrix<N>& a) {
    std::vector<Int> c(N + 1, Int(0));
    c[N] = 1;
    IntMatrix<N> m = zero_matrix<N>();
    for (std::size_t k = 1; k <= N; ++k) {
        m = a * m + scaled(identity_matrix<N>(), c[N - k + 1]);
        const Int tr = trace(a * m);
        c[N - k] = -tr / static_cast<unsigned long>(k);
    }
    return IntPoly(std::move(c));
}

template <std::size_t N>
Int determinant(const IntMatrix<N>& a) {
    const Int c0 = charpoly(a).coeff(0);
    return N % 2 == 0 ? c0 : Int(-c0);
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal and the
/// negated low coefficients in the last column.
template <std::size_t N>
IntMatrix<N> companion(const IntPoly& p) {
    IntMatrix<N> m = zero_matrix<N>();
    for (std::size_t i = 1; i < N; ++i) m[i][i - 1] = 1;
    for (std::size_t i = 0; i < N; ++i) m[i][N - 1] = -p.coeff(i);
    return m;
}

}  // namespace salemtori

#endif

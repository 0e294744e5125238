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

#ifndef SALEMTORI_STURM_HPP
#define SALEMTORI_STURM_HPP

#include <variant>
#include <vector>

#include "error.hpp"
#include "number.hpp"
#include "poly.hpp"

namespace salemtori {

enum class Infinity { negative, positive };

/// A real endpoint that may also be -infinity or +infinity.
using Endpoint = std::variant<Rational, Infinity>;

/// Signed remainder sequence p, p', -rem(p, p'), ... reduced by positive
/// contents so that every member keeps the sign of the true remainder.
class SturmChain {
   public:
    explicit SturmChain(const IntPoly& p) {
        if (p.is_zero()) return;
        chain_.push_back(p);
        IntPoly d = derivative(p);
        if (d.is_zero()) return;
        chain_.push_back(reduce(d));
        while (true) {
            const IntPoly& a = chain_[chain_.size() - 2];
            const IntPoly& b = chain_.back();
            if (b.degree() < 1) break;
            IntPoly r = -pseudo_remainder(a, b);
            if (r.is_zero()) break;
            chain_.push_back(reduce(r));
        }
    }

    const std::vector<IntPoly>& chain() const noexcept { return chain_; }

    int variations(const Rational& x) const {
        std::vector<int> signs;
        signs.reserve(chain_.size());
        for (const auto& q : chain_) signs.push_back(sign_at(q, x));
        return count(signs);
    }

    int variations(Infinity inf) const {
        std::vector<int> signs;
        signs.reserve(chain_.size());
        for (const auto& q : chain_) {
            int s = sgn(q.leading());
            if (inf == Infinity::negative && q.degree() % 2 != 0) s = -s;
            signs.push_back(s);
        }
        return count(signs);
    }

    int variations(const Endpoint& e) const {
        return std::visit([this](const auto& v) { return variations(v); }, e);
    }

   private:
    static IntPoly reduce(const IntPoly& p) {
        Int g = content(p);
        if (g <= 1) return p;
        std::vector<Int> v(p.coeffs());
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        return IntPoly(std::move(v));
    }

    static int count(const std::vector<int>& signs) {
        int changes = 0;
        int last = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    std::vector<IntPoly> chain_;
};

namespace detail {
inline bool endpoint_less(const Endpoint& a, const Endpoint& b) {
    if (std::holds_alternative<Infinity>(a)) {
        if (std::get<Infinity>(a) == Infinity::positive) return false;
        return !(std::holds_alternative<Infinity>(b) && std::get<Infinity>(b) == Infinity::negative);
    }
    if (std::holds_alternative<Infinity>(b)) return std::get<Infinity>(b) == Infinity::positive;
    return std::get<Rational>(a) < std::get<Rational>(b);
}
}  // namespace detail

/// Number of distinct real roots of p in (a, b]. p must be squarefree unless
/// `reduce_squarefree` is set, in which case its squarefree part is used.
inline int count_real_roots(const IntPoly& p, const Endpoint& a, const Endpoint& b, bool reduce_squarefree = false) {
    if (!detail::endpoint_less(a, b)) throw Error(Errc::bad_parameters, "count_real_roots needs a < b");
    if (p.is_zero()) throw Error(Errc::zero_divisor, "root count of the zero polynomial");
    IntPoly q = p;
    if (!is_squarefree(p)) {
        if (!reduce_squarefree) throw Error(Errc::not_squarefree, "polynomial is not squarefree");
        q = squarefree_part(p);
    }
    const SturmChain chain(q);
    return chain.variations(a) - chain.variations(b);
}

inline int count_real_roots(const IntPoly& p) {
    return count_real_roots(p, Infinity::negative, Infinity::positive, true);
}

}  // namespace salemtori

#endif

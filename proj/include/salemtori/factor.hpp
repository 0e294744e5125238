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

#ifndef SALEMTORI_FACTOR_HPP
#define SALEMTORI_FACTOR_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace salemtori {

/// An irreducible factor together with its multiplicity.
struct Factor {
    IntPoly poly;
    unsigned multiplicity = 1;

    friend bool operator==(const Factor& a, const Factor& b) {
        return a.poly == b.poly && a.multiplicity == b.multiplicity;
    }
};

namespace detail {

/// Coefficient enclosures of prod (t - z_k) over the chosen root disks.
inline std::vector<Disk> product_enclosure(const std::vector<RootBox>& roots, const std::vector<std::size_t>& subset) {
    std::vector<Disk> c{Disk{1, 0, 0}};
    for (std::size_t k : subset) {
        const Disk neg{-roots[k].disk.re, -roots[k].disk.im, roots[k].disk.radius};
        std::vector<Disk> next(c.size() + 1, Disk{0, 0, 0});
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = disk_add(next[i + 1], c[i]);
            next[i] = disk_add(next[i], disk_mul(c[i], neg));
        }
        c = std::move(next);
    }
    return c;
}

enum class SubsetVerdict { no_factor, candidate, too_wide };

/// The unique integer polynomial whose coefficients lie in the enclosures,
/// when the enclosures are narrow enough to decide.
inline std::pair<SubsetVerdict, IntPoly> integer_candidate(const std::vector<Disk>& enclosure) {
    std::vector<Int> coeffs;
    for (const auto& d : enclosure) {
        if (d.radius >= Rational(1, 2)) return {SubsetVerdict::too_wide, {}};
        const Int nearest = floor_of(d.re + Rational(1, 2));
        if (!disk_contains(d, Rational(nearest), Rational(0))) return {SubsetVerdict::no_factor, {}};
        coeffs.push_back(nearest);
    }
    return {SubsetVerdict::candidate, IntPoly(std::move(coeffs))};
}

inline bool conjugation_closed(const std::vector<RootBox>& roots, const std::vector<std::size_t>& subset) {
    for (std::size_t k : subset) {
        if (std::find(subset.begin(), subset.end(), roots[k].conjugate) == subset.end()) return false;
    }
    return true;
}

/// Smallest-degree monic factor of a squarefree monic g, searched over all
/// conjugation-closed subsets of its roots; nullopt when g is irreducible.
inline std::optional<IntPoly> smallest_factor(const IntPoly& g) {
    const int n = g.degree();
    Rational width = pow2(-64);
    for (int attempt = 0; attempt < 6; ++attempt, width *= pow2(-64)) {
        const auto roots = detail::isolate_squarefree(g, width);
        bool wide = false;
        for (int k = 1; k <= n / 2; ++k) {
            std::vector<bool> mask(static_cast<std::size_t>(n), false);
            std::fill(mask.begin(), mask.begin() + k, true);
            do {
                std::vector<std::size_t> subset;
                for (std::size_t i = 0; i < mask.size(); ++i) {
                    if (mask[i]) subset.push_back(i);
                }
                if (!conjugation_closed(roots, subset)) continue;
                auto [verdict, cand] = integer_candidate(product_enclosure(roots, subset));
                if (verdict == SubsetVerdict::too_wide) {
                    wide = true;
                    continue;
                }
                if (verdict == SubsetVerdict::candidate && try_div_exact(g, cand)) return cand;
            } while (std::prev_permutation(mask.begin(), mask.end()));
            // a too-wide subset of this size might hide a factor of this size
            if (wide) break;
        }
        if (!wide) return std::nullopt;
    }
    throw Error(Errc::precision_exhausted, "factor search could not resolve " + to_string(g));
}

inline void factor_squarefree_into(const IntPoly& g, unsigned mult, std::vector<Factor>& out) {
    if (g.degree() < 1) return;
    if (g.degree() == 1) {
        out.push_back({g, mult});
        return;
    }
    auto f = smallest_factor(g);
    if (!f) {
        out.push_back({g, mult});
        return;
    }
    out.push_back({*f, mult});
    factor_squarefree_into(div_exact(g, *f), mult, out);
}

}  // namespace detail

/// Complete factorization of a monic polynomial of degree 1..8 into monic
/// irreducible factors with multiplicities, sorted by (degree, coefficients).
inline std::vector<Factor> factor_bounded(const IntPoly& p) {
    if (!p.is_monic()) throw Error(Errc::not_monic, "factor_bounded needs a monic polynomial");
    if (p.degree() > 8) throw Error(Errc::degree_too_large, "factor_bounded supports degree <= 8");
    if (p.degree() < 1) throw Error(Errc::wrong_degree, "factor_bounded needs degree >= 1");
    std::vector<Factor> raw;
    for (const auto& [g, mult] : squarefree_decomposition(p)) detail::factor_squarefree_into(g, mult, raw);
    std::map<IntPoly, unsigned, std::less<>> merged;
    for (const auto& f : raw) merged[f.poly] += f.multiplicity;
    std::vector<Factor> out;
    for (const auto& [poly, mult] : merged) out.push_back({poly, mult});
    return out;
}

inline bool is_irreducible(const IntPoly& p) {
    const auto f = factor_bounded(p);
    return f.size() == 1 && f[0].multiplicity == 1;
}

/// Cyclotomic polynomials Phi_n for every n with Euler phi(n) <= 6.
class CyclotomicTable {
   public:
    static const CyclotomicTable& instance() {
        static const CyclotomicTable table;
        return table;
    }

    static constexpr std::array<unsigned, 13> indices{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};

    const IntPoly& operator[](unsigned n) const {
        auto it = entries_.find(n);
        if (it == entries_.end()) throw Error(Errc::bad_parameters, "cyclotomic index outside the table");
        return it->second;
    }
    const std::map<unsigned, IntPoly>& entries() const noexcept { return entries_; }

   private:
    CyclotomicTable() {
        for (unsigned n : indices) entries_.emplace(n, build(n));
    }

    static IntPoly build(unsigned n) {
        // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
        IntPoly acc = IntPoly::monomial(Int(1), n) - IntPoly::constant(Int(1));
        for (unsigned d = 1; d < n; ++d) {
            if (n % d == 0) acc = div_exact(acc, build(d));
        }
        return acc;
    }

    std::map<unsigned, IntPoly> entries_;
};

/// Result of peeling cyclotomic factors off a monic polynomial.
struct CyclotomicSplit {
    std::vector<std::pair<unsigned, unsigned>> factors;  // (n, multiplicity) ascending in n
    IntPoly remainder;

    /// Product of the peeled cyclotomic factors.
    IntPoly cyclotomic_product() const {
        IntPoly acc = IntPoly::constant(Int(1));
        for (const auto& [n, m] : factors) acc = acc * power(CyclotomicTable::instance()[n], m);
        return acc;
    }
    /// Product of the distinct peeled cyclotomic factors.
    IntPoly cyclotomic_radical() const {
        IntPoly acc = IntPoly::constant(Int(1));
        for (const auto& [n, m] : factors) acc = acc * CyclotomicTable::instance()[n];
        return acc;
    }
};

inline CyclotomicSplit cyclotomic_part(const IntPoly& p) {
    if (!p.is_monic()) throw Error(Errc::not_monic, "cyclotomic_part needs a monic polynomial");
    CyclotomicSplit out;
    IntPoly rest = p;
    for (const auto& [n, phi] : CyclotomicTable::instance().entries()) {
        unsigned mult = 0;
        while (rest.degree() >= phi.degree()) {
            auto q = try_div_exact(rest, phi);
            if (!q) break;
            rest = std::move(*q);
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(n, mult);
    }
    out.remainder = std::move(rest);
    return out;
}

}  // namespace salemtori

#endif

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

#ifndef SALEMTORI_ROOTS_HPP
#define SALEMTORI_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "error.hpp"
#include "number.hpp"
#include "poly.hpp"
#include "sturm.hpp"

namespace salemtori {

/// Closed disk in the complex plane with rational center and radius.
struct Disk {
    Rational re;
    Rational im;
    Rational radius;
};

/// Gaussian rational re + i*im.
struct GaussRational {
    Rational re;
    Rational im;

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        const Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw Error(Errc::zero_divisor, "division by a zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Rational norm() const { return re * re + im * im; }
    GaussRational conj() const { return {re, -im}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
};

inline GaussRational evaluate(const IntPoly& p, const GaussRational& z) {
    GaussRational acc{0, 0};
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * z;
        acc.re += Rational(p.coeffs()[i]);
    }
    return acc;
}

namespace detail {

inline long approx_log2(const Rational& x) {
    return static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

/// Rational strictly greater than sqrt(x), within roughly 2^-64 relative.
inline Rational sqrt_upper(const Rational& x) {
    if (x <= 0) return pow2(-1024);
    const long bits = std::max(64L, 64 - approx_log2(x) / 2);
    const Rational scaled = x * pow2(2 * bits);
    const Int n = ceil_of(scaled);
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    s += 1;
    return Rational(s) * pow2(-bits);
}

/// Rational at most sqrt(x), within roughly 2^-64 relative.
inline Rational sqrt_lower(const Rational& x) {
    if (x <= 0) return Rational(0);
    const long bits = std::max(64L, 64 - approx_log2(x) / 2);
    const Int n = floor_of(x * pow2(2 * bits));
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return Rational(s) * pow2(-bits);
}

inline Rational round_to_grid(const Rational& x, long prec) {
    const Rational scaled = x * pow2(prec) + Rational(1, 2);
    return Rational(floor_of(scaled)) * pow2(-prec);
}

}  // namespace detail

inline Rational abs_upper(const Rational& re, const Rational& im) { return detail::sqrt_upper(re * re + im * im); }

inline Disk disk_add(const Disk& a, const Disk& b) { return {a.re + b.re, a.im + b.im, a.radius + b.radius}; }

inline Disk disk_mul(const Disk& a, const Disk& b) {
    const Rational ra = abs_upper(a.re, a.im);
    const Rational rb = abs_upper(b.re, b.im);
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, ra * b.radius + rb * a.radius + a.radius * b.radius};
}

inline Disk disk_conj(const Disk& a) { return {a.re, -a.im, a.radius}; }

inline bool disks_intersect(const Disk& a, const Disk& b) {
    const Rational dr = a.re - b.re;
    const Rational di = a.im - b.im;
    const Rational s = a.radius + b.radius;
    return dr * dr + di * di <= s * s;
}

inline bool disk_contains(const Disk& d, const Rational& re, const Rational& im) {
    const Rational dr = d.re - re;
    const Rational di = d.im - im;
    return dr * dr + di * di <= d.radius * d.radius;
}

/// Certified isolating region for one distinct root: a disk containing exactly
/// that root, together with its conjugate partner and multiplicity.
struct RootBox {
    Disk disk;
    bool real = false;
    std::size_t conjugate = 0;
    unsigned multiplicity = 1;

    Interval real_part() const { return {disk.re - disk.radius, disk.re + disk.radius}; }
    Interval imag_part() const {
        if (real) return {Rational(0), Rational(0)};
        return {disk.im - disk.radius, disk.im + disk.radius};
    }
    Rational diameter() const { return 2 * disk.radius; }
    bool upper() const { return !real && disk.im > 0; }
};

namespace detail {

using CLD = std::complex<long double>;

inline CLD eval_ld(const std::vector<long double>& c, CLD z) {
    CLD acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

/// Floating-point Aberth iteration; only a starting guess for the exact stage.
inline std::vector<CLD> aberth_start(const IntPoly& p) {
    const int n = p.degree();
    std::vector<long double> c;
    for (const auto& x : p.coeffs()) c.push_back(static_cast<long double>(x.get_d()));
    std::vector<long double> dc;
    for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<long double>(i));
    long double bound = 0;
    for (int k = 1; k <= n; ++k) {
        const long double v = std::pow(std::abs(c[static_cast<std::size_t>(n - k)] / c.back()), 1.0L / k);
        bound = std::max(bound, v);
    }
    bound = std::max(bound, 1e-3L);
    std::vector<CLD> z(static_cast<std::size_t>(n));
    const long double pi = std::acos(-1.0L);
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(bound, 2 * pi * k / n + 0.4L);
    for (int iter = 0; iter < 800; ++iter) {
        long double worst = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const CLD pv = eval_ld(c, z[i]);
            const CLD dv = eval_ld(dc, z[i]);
            if (std::abs(dv) == 0) {
                z[i] += CLD(1e-6L, 1e-6L);
                worst = 1;
                continue;
            }
            const CLD ratio = pv / dv;
            CLD s = 0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != i && z[i] != z[j]) s += 1.0L / (z[i] - z[j]);
            }
            const CLD w = ratio / (1.0L - ratio * s);
            if (std::isfinite(w.real()) && std::isfinite(w.imag())) z[i] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
        }
        if (worst < 1e-18L) break;
    }
    return z;
}

/// Aberth iteration in exact Gaussian rationals rounded to a 2^-prec grid.
inline bool aberth_polish(const IntPoly& p, std::vector<GaussRational>& z, long prec) {
    const IntPoly dp = derivative(p);
    const Rational stop = pow2(-2 * (prec - 6));
    for (int iter = 0; iter < 60; ++iter) {
        Rational worst = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const GaussRational dv = evaluate(dp, z[i]);
            if (dv.norm() == 0) return false;
            const GaussRational ratio = evaluate(p, z[i]) / dv;
            GaussRational s{0, 0};
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j == i) continue;
                if (z[i] == z[j]) return false;
                s = s + GaussRational{1, 0} / (z[i] - z[j]);
            }
            const GaussRational denom = GaussRational{1, 0} - ratio * s;
            if (denom.norm() == 0) return false;
            const GaussRational w = ratio / denom;
            z[i] = {round_to_grid(z[i].re - w.re, prec), round_to_grid(z[i].im - w.im, prec)};
            worst = std::max(worst, w.norm());
        }
        if (worst < stop) return true;
    }
    return true;
}

/// Forces an exactly conjugation-symmetric approximation set with exactly
/// `real_count` real members.
inline bool symmetrize(std::vector<GaussRational>& z, int real_count) {
    std::vector<std::size_t> idx(z.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return abs(z[a].im) < abs(z[b].im); });
    std::vector<bool> done(z.size(), false);
    for (int k = 0; k < real_count; ++k) {
        z[idx[static_cast<std::size_t>(k)]].im = 0;
        done[idx[static_cast<std::size_t>(k)]] = true;
    }
    std::vector<std::size_t> up, down;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (done[i]) continue;
        if (z[i].im > 0) up.push_back(i);
        else if (z[i].im < 0) down.push_back(i);
        else return false;
    }
    if (up.size() != down.size()) return false;
    std::vector<bool> taken(down.size(), false);
    for (std::size_t u : up) {
        std::optional<std::size_t> best;
        Rational best_d;
        for (std::size_t k = 0; k < down.size(); ++k) {
            if (taken[k]) continue;
            const Rational d = (z[u].conj() - z[down[k]]).norm();
            if (!best || d < best_d) {
                best = k;
                best_d = d;
            }
        }
        taken[*best] = true;
        z[down[*best]] = z[u].conj();
    }
    return true;
}

/// Weierstrass inclusion: for distinct approximations z_i of the roots of p,
/// the disks |z - z_i| <= n|W_i| with W_i = p(z_i) / (lc * prod_{j!=i}(z_i - z_j))
/// contain all roots, and a disk disjoint from the others contains exactly one.
inline std::optional<std::vector<Disk>> certify(const IntPoly& p, const std::vector<GaussRational>& z) {
    const std::size_t n = z.size();
    std::vector<Disk> disks;
    disks.reserve(n);
    const GaussRational lc{Rational(p.leading()), 0};
    for (std::size_t i = 0; i < n; ++i) {
        GaussRational prod = lc;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (z[i] == z[j]) return std::nullopt;
            prod = prod * (z[i] - z[j]);
        }
        const GaussRational w = evaluate(p, z[i]) / prod;
        const Rational r2 = Rational(static_cast<unsigned long>(n * n)) * w.norm();
        disks.push_back({z[i].re, z[i].im, sqrt_upper(r2)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (disks_intersect(disks[i], disks[j])) return std::nullopt;
        }
    }
    return disks;
}

/// Canonical order: real roots ascending, then conjugate pairs by decreasing
/// modulus and decreasing real part, each upper root followed by its conjugate.
inline void canonical_order(std::vector<RootBox>& boxes) {
    const Rational tol = pow2(-40);
    std::vector<RootBox> reals, uppers;
    for (const auto& b : boxes) {
        if (b.real) reals.push_back(b);
        else if (b.disk.im > 0) uppers.push_back(b);
    }
    std::sort(reals.begin(), reals.end(), [](const RootBox& a, const RootBox& b) { return a.disk.re < b.disk.re; });
    std::sort(uppers.begin(), uppers.end(), [&](const RootBox& a, const RootBox& b) {
        const Rational ma = a.disk.re * a.disk.re + a.disk.im * a.disk.im;
        const Rational mb = b.disk.re * b.disk.re + b.disk.im * b.disk.im;
        if (abs(ma - mb) > tol) return ma > mb;
        if (abs(a.disk.re - b.disk.re) > tol) return a.disk.re > b.disk.re;
        return a.disk.im > b.disk.im;
    });
    std::vector<RootBox> out;
    out.reserve(boxes.size());
    for (auto& b : reals) {
        b.conjugate = out.size();
        out.push_back(b);
    }
    for (const auto& u : uppers) {
        RootBox up = u;
        RootBox down = u;
        down.disk = disk_conj(u.disk);
        up.conjugate = out.size() + 1;
        down.conjugate = out.size();
        out.push_back(up);
        out.push_back(down);
    }
    boxes = std::move(out);
}

/// Isolates the roots of a squarefree polynomial; every disk has diameter
/// at most `width`.
inline std::vector<RootBox> isolate_squarefree(const IntPoly& p, const Rational& width) {
    const int n = p.degree();
    if (n < 1) return {};
    const int real_count = count_real_roots(p, Infinity::negative, Infinity::positive);
    const auto start = aberth_start(p);
    std::vector<GaussRational> z;
    z.reserve(start.size());
    long prec = std::max(96L, 32 - approx_log2(width));
    for (const auto& s : start) {
        z.push_back({round_to_grid(Rational(static_cast<double>(s.real())), prec),
                     round_to_grid(Rational(static_cast<double>(s.imag())), prec)});
    }
    for (int attempt = 0; attempt < 8; ++attempt, prec *= 2) {
        if (!aberth_polish(p, z, prec)) {
            // perturb coincident or critical approximations and try again
            for (std::size_t i = 0; i < z.size(); ++i) {
                z[i].re += Rational(static_cast<long>(i + 1), 1000);
                z[i].im += Rational(static_cast<long>(2 * i + 1), 997);
            }
            continue;
        }
        std::vector<GaussRational> sym = z;
        if (!symmetrize(sym, real_count)) continue;
        auto disks = certify(p, sym);
        if (!disks) continue;
        bool narrow = true;
        for (const auto& d : *disks) narrow = narrow && 2 * d.radius <= width;
        if (!narrow) continue;
        std::vector<RootBox> boxes;
        for (const auto& d : *disks) {
            RootBox b;
            b.disk = d;
            b.real = d.im == 0;
            boxes.push_back(b);
        }
        canonical_order(boxes);
        return boxes;
    }
    throw Error(Errc::precision_exhausted, "root isolation did not converge for " + to_string(p));
}

}  // namespace detail

inline const Rational& default_root_width() {
    static const Rational w = pow2(-64);
    return w;
}

/// Certified isolation of all roots of a squarefree polynomial of degree at
/// most 8. Disks are pairwise disjoint, real roots are flagged, and conjugate
/// pairs are linked through `RootBox::conjugate`.
inline std::vector<RootBox> isolate_all_roots(const IntPoly& p, const Rational& width = default_root_width()) {
    if (p.degree() > 8) throw Error(Errc::degree_too_large, "root isolation supports degree <= 8");
    if (p.degree() < 1) return {};
    if (!is_squarefree(p)) throw Error(Errc::not_squarefree, "isolate_all_roots needs a squarefree polynomial");
    return detail::isolate_squarefree(p, width);
}

/// Distinct roots of a monic polynomial of any degree up to 8, with multiplicities.
inline std::vector<RootBox> isolate_roots_with_multiplicity(const IntPoly& p, Rational width = default_root_width()) {
    if (p.degree() > 8) throw Error(Errc::degree_too_large, "root isolation supports degree <= 8");
    const auto parts = squarefree_decomposition(p);
    for (int attempt = 0; attempt < 6; ++attempt, width *= pow2(-32)) {
        std::vector<RootBox> all;
        for (const auto& [g, mult] : parts) {
            for (auto b : detail::isolate_squarefree(g, width)) {
                b.multiplicity = mult;
                all.push_back(b);
            }
        }
        bool disjoint = true;
        for (std::size_t i = 0; i < all.size() && disjoint; ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                if (disks_intersect(all[i].disk, all[j].disk)) {
                    disjoint = false;
                    break;
                }
            }
        }
        if (!disjoint) continue;
        detail::canonical_order(all);
        return all;
    }
    throw Error(Errc::precision_exhausted, "could not separate roots of " + to_string(p));
}

}  // namespace salemtori

#endif

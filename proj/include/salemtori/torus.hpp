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

#ifndef SALEMTORI_TORUS_HPP
#define SALEMTORI_TORUS_HPP

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "factor.hpp"
#include "matrix.hpp"
#include "number.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "salem.hpp"
#include "wedge.hpp"

namespace salemtori {

using Matrix4 = IntMatrix<4>;

/// a + b * sqrt(-D) in Z[sqrt(-D)]; D is carried by the enclosing matrix.
struct QuadOrderElement {
    Int re;
    Int im;

    friend bool operator==(const QuadOrderElement& x, const QuadOrderElement& y) { return x.re == y.re && x.im == y.im; }
};

inline QuadOrderElement mul(const QuadOrderElement& x, const QuadOrderElement& y, const Int& d) {
    return {x.re * y.re - d * x.im * y.im, x.re * y.im + x.im * y.re};
}

inline Int norm(const QuadOrderElement& x, const Int& d) { return x.re * x.re + d * x.im * x.im; }

/// 2x2 matrix over Z[sqrt(-D)], row-major.
struct QuadOrderMatrix {
    Int d_param;
    std::array<std::array<QuadOrderElement, 2>, 2> entries;

    QuadOrderElement determinant() const {
        const auto p = mul(entries[0][0], entries[1][1], d_param);
        const auto q = mul(entries[0][1], entries[1][0], d_param);
        return {p.re - q.re, p.im - q.im};
    }
    QuadOrderElement trace() const { return {entries[0][0].re + entries[1][1].re, entries[0][0].im + entries[1][1].im}; }

    /// [[0, -1], [1, b1 + b2 sqrt(-D)]]
    static QuadOrderMatrix standard(const Int& d, const Int& b1, const Int& b2) {
        QuadOrderMatrix m;
        m.d_param = d;
        m.entries = {{{{{Int(0), Int(0)}, {Int(-1), Int(0)}}}, {{{Int(1), Int(0)}, {b1, b2}}}}};
        return m;
    }

    /// (b1, b2) when the matrix has the standard shape.
    std::optional<std::pair<Int, Int>> standard_params() const {
        const QuadOrderElement zero{Int(0), Int(0)};
        if (entries[0][0] == zero && entries[0][1] == QuadOrderElement{Int(-1), Int(0)} &&
            entries[1][0] == QuadOrderElement{Int(1), Int(0)}) {
            return std::make_pair(entries[1][1].re, entries[1][1].im);
        }
        return std::nullopt;
    }
};

/// Integer lift on the basis {1, sqrt(-D)} of each factor.
inline Matrix4 lift(const QuadOrderMatrix& q) {
    Matrix4 m = zero_matrix<4>();
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const auto& e = q.entries[i][j];
            m[2 * i][2 * j] = e.re;
            m[2 * i][2 * j + 1] = -e.im * q.d_param;
            m[2 * i + 1][2 * j] = e.im;
            m[2 * i + 1][2 * j + 1] = e.re;
        }
    }
    return m;
}

/// Indices into the model's distinct roots giving (gamma1, gamma2).
struct RootPairing {
    std::size_t first = 0;
    std::size_t second = 0;

    friend bool operator==(const RootPairing&, const RootPairing&) = default;
};

struct Provenance {
    std::string family;
    std::vector<std::pair<std::string, Int>> params;
    std::optional<QuadOrderMatrix> quad_order;
};

/// A 2-dimensional complex torus with an automorphism, recorded through the
/// integer action on H^1 and the choice of eigenvalues on H^{1,0}.
struct TorusModel {
    Matrix4 m_matrix;
    IntPoly p_charpoly;
    std::vector<RootBox> roots;  // distinct roots of p_charpoly, canonical order
    RootPairing pairing;
    IntPoly q_charpoly;
    Disk h20_product;
    Provenance provenance;
    bool reoriented = false;
    bool real_pairing = false;
    bool trivial_reorientation = false;

    const RootBox& gamma1() const { return roots[pairing.first]; }
    const RootBox& gamma2() const { return roots[pairing.second]; }
};

enum class PicardRank { zero, two, four, unconstrained };

constexpr std::string_view to_string(PicardRank r) noexcept {
    switch (r) {
        case PicardRank::zero: return "0";
        case PicardRank::two: return "2";
        case PicardRank::four: return "4";
        case PicardRank::unconstrained: return "unconstrained";
    }
    return "unknown";
}

/// Integer r > 0 with q - 2 = r^2 (sign -1) or q + 2 = r^2 (sign +1).
struct SquareShift {
    Int r;
    int sign = 0;
};

inline std::optional<SquareShift> square_shift(const Int& q) {
    if (auto r = exact_sqrt(q - 2); r && *r > 0) return SquareShift{*r, -1};
    if (auto r = exact_sqrt(q + 2); r && *r > 0) return SquareShift{*r, +1};
    return std::nullopt;
}

namespace detail {

/// The multiset {g1, g2, conj g1, conj g2} must be the roots of P.
inline bool valid_pairing(const std::vector<RootBox>& roots, const RootPairing& pr) {
    if (pr.first >= roots.size() || pr.second >= roots.size()) return false;
    std::vector<unsigned> count(roots.size(), 0);
    ++count[pr.first];
    ++count[pr.second];
    ++count[roots[pr.first].conjugate];
    ++count[roots[pr.second].conjugate];
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (count[i] != roots[i].multiplicity) return false;
    }
    return true;
}

inline void set_pairing(TorusModel& m, const RootPairing& pr) {
    if (!valid_pairing(m.roots, pr)) throw Error(Errc::bad_parameters, "pairing does not give a complex structure");
    m.pairing = pr;
    m.h20_product = disk_mul(m.gamma1().disk, m.gamma2().disk);
    m.real_pairing = m.gamma1().real && m.gamma2().real;
}

inline TorusModel assemble(const Matrix4& a, Provenance prov) {
    TorusModel m;
    m.m_matrix = a;
    m.p_charpoly = charpoly(a);
    m.roots = isolate_roots_with_multiplicity(m.p_charpoly);
    m.q_charpoly = exterior_square(m.p_charpoly);
    m.provenance = std::move(prov);
    return m;
}

inline std::size_t index_of_upper(const std::vector<RootBox>& roots, std::size_t which) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].upper() && seen++ == which) return i;
    }
    throw Error(Errc::bad_parameters, "root pair index out of range");
}

/// Real interval around sqrt(d) of radius 2^-(bits+1).
inline Disk sqrt_disk(const Int& d, long bits) {
    Int s;
    const Int scaled = d * pow_int(Int(4), static_cast<unsigned long>(bits));
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    return {(Rational(s) + Rational(1, 2)) * pow2(-bits), Rational(0), pow2(-bits - 1)};
}

/// Enclosure of a + b * sqrt(-D) under sqrt(-D) -> i sqrt(D).
inline Disk embed(const QuadOrderElement& x, const Disk& sqrt_d) {
    const Rational b(x.im);
    return {Rational(x.re), b * sqrt_d.re, abs(b) * sqrt_d.radius};
}

inline Disk disk_neg(const Disk& a) { return {-a.re, -a.im, a.radius}; }

}  // namespace detail

/// Re-isolate the roots at a finer width, keeping indices and pairing.
inline TorusModel refine(const TorusModel& model, const Rational& width) {
    TorusModel out = model;
    out.roots = isolate_roots_with_multiplicity(model.p_charpoly, width);
    if (out.roots.size() != model.roots.size()) throw std::logic_error("root count changed under refinement");
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
        if (!disks_intersect(out.roots[i].disk, model.roots[i].disk)) throw std::logic_error("root order changed under refinement");
    }
    out.h20_product = disk_mul(out.gamma1().disk, out.gamma2().disk);
    return out;
}

/// Model on the companion matrix of a quartic without real roots; the
/// pairing names which root of each conjugate pair is taken (0 = upper
/// half plane, 1 = lower).
inline TorusModel from_quartic(const IntPoly& p, std::pair<unsigned, unsigned> pairing_choice = {0, 0}) {
    if (p.degree() != 4) throw Error(Errc::wrong_degree, "from_quartic needs a quartic");
    if (!p.is_monic()) throw Error(Errc::not_monic, "from_quartic needs a monic quartic");
    if (p.coeff(0) != 1) throw Error(Errc::bad_parameters, "from_quartic needs constant term 1");
    if (count_real_roots(p) > 0) throw Error(Errc::real_roots, to_string(p) + " has real roots");
    if (pairing_choice.first > 1 || pairing_choice.second > 1) throw Error(Errc::bad_parameters, "pairing choice must be 0 or 1");
    TorusModel m = detail::assemble(companion<4>(p), {"quartic", {}, std::nullopt});
    for (std::size_t i = 0; i < 5; ++i) m.provenance.params.emplace_back("c" + std::to_string(i), p.coeff(i));
    const std::size_t pairs = m.roots.size() / 2;
    const std::size_t u1 = detail::index_of_upper(m.roots, 0);
    const std::size_t u2 = detail::index_of_upper(m.roots, pairs > 1 ? 1 : 0);
    const std::size_t g1 = pairing_choice.first == 0 ? u1 : m.roots[u1].conjugate;
    const std::size_t g2 = pairing_choice.second == 0 ? u2 : m.roots[u2].conjugate;
    detail::set_pairing(m, {g1, g2});
    return m;
}

/// Lift of a 2x2 matrix over Z[sqrt(-D)] acting on E x E; gamma1, gamma2
/// are the eigenvalues of the complex matrix.
inline TorusModel quad_order_model(const QuadOrderMatrix& q) {
    if (q.d_param < 1) throw Error(Errc::bad_parameters, "D must be positive");
    if (norm(q.determinant(), q.d_param) != 1) throw Error(Errc::not_unit, "determinant is not a unit");
    Provenance prov{"quad_order", {{"D", q.d_param}}, q};
    if (auto b = q.standard_params()) {
        prov.params.emplace_back("b1", b->first);
        prov.params.emplace_back("b2", b->second);
    }
    TorusModel m = detail::assemble(lift(q), std::move(prov));

    // roots of c(t) = t^2 - tr t + det, located among the roots of P
    const QuadOrderElement tr = q.trace();
    const QuadOrderElement det = q.determinant();
    const QuadOrderElement disc{tr.re * tr.re - q.d_param * tr.im * tr.im - 4 * det.re, 2 * tr.re * tr.im - 4 * det.im};
    const std::size_t expected = (disc.re == 0 && disc.im == 0) ? 1 : 2;
    TorusModel cur = m;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const Disk s = detail::sqrt_disk(q.d_param, 64 + 64L * attempt);
        const Disk ctr = detail::embed(tr, s);
        const Disk cdet = detail::embed(det, s);
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < cur.roots.size(); ++i) {
            const Disk& z = cur.roots[i].disk;
            const Disk v = disk_add(disk_add(disk_mul(z, z), detail::disk_neg(disk_mul(ctr, z))), cdet);
            if (disk_contains(v, Rational(0), Rational(0))) hits.push_back(i);
        }
        if (hits.size() == expected) {
            std::size_t g1 = hits.front();
            std::size_t g2 = hits.back();
            if (abs_upper(cur.roots[g2].disk.re, cur.roots[g2].disk.im) > abs_upper(cur.roots[g1].disk.re, cur.roots[g1].disk.im)) {
                std::swap(g1, g2);
            }
            detail::set_pairing(m, {g1, g2});
            return m;
        }
        cur = refine(m, pow2(-64L * (attempt + 2)));
    }
    throw Error(Errc::precision_exhausted, "could not locate the eigenvalues of the quad-order matrix");
}

/// Block-diagonal pair of companion blocks [[0, -det], [1, r]].
inline TorusModel gl2z_model(const Int& r, int det) {
    if (det != 1 && det != -1) throw Error(Errc::bad_parameters, "det must be +1 or -1");
    const bool hyperbolic = det == 1 ? abs(r) > 2 : r != 0;
    if (!hyperbolic) throw Error(Errc::not_hyperbolic, "t^2 - r t + det has roots on the unit circle");
    Matrix4 a = zero_matrix<4>();
    for (std::size_t b = 0; b < 4; b += 2) {
        a[b][b + 1] = -det;
        a[b + 1][b] = 1;
        a[b + 1][b + 1] = r;
    }
    TorusModel m = detail::assemble(a, {"gl2z", {{"r", r}, {"det", Int(det)}}, std::nullopt});
    // roots ascending; the larger one in absolute value becomes gamma1
    const bool first_larger = abs(m.roots[0].disk.re) > abs(m.roots[1].disk.re);
    detail::set_pairing(m, first_larger ? RootPairing{0, 1} : RootPairing{1, 0});
    return m;
}

/// Integer matrix realising t^4 + a t^2 + t + 1 through the sextic family
/// A_b; the exterior square is t^6 - a t^5 - t^4 + (2a-1) t^3 - t^2 - a t + 1.
inline Matrix4 sextic_family_matrix(const Int& a, const Int& b) {
    if (b == 0 || (1 + a) % b != 0) throw Error(Errc::bad_parameters, "b must divide 1 + a");
    Matrix4 m = zero_matrix<4>();
    m[0][2] = -1;
    m[1][0] = 1;
    m[2][1] = 1;
    m[2][2] = 1;
    m[2][3] = b;
    m[3][2] = -(1 + a) / b;
    m[3][3] = -1;
    return m;
}

inline TorusModel sextic_family(const Int& a, const Int& b = Int(1)) {
    TorusModel m = detail::assemble(sextic_family_matrix(a, b), {"sextic", {{"a", a}, {"b", b}}, std::nullopt});
    if (count_real_roots(m.p_charpoly) > 0) throw Error(Errc::real_roots, to_string(m.p_charpoly) + " has real roots");
    const std::size_t pairs = m.roots.size() / 2;
    detail::set_pairing(m, {detail::index_of_upper(m.roots, 0), detail::index_of_upper(m.roots, pairs > 1 ? 1 : 0)});
    return m;
}

/// Quad-order model over Z[2^k i] with matrix [[0, -1], [1, 1 + 2^(n-k) sqrt(-4^k)]].
inline TorusModel remark52_family(unsigned n, unsigned k) {
    if (n < 1 || k > n) throw Error(Errc::bad_parameters, "need n >= 1 and 0 <= k <= n");
    const Int d = pow_int(Int(4), k);
    TorusModel m = quad_order_model(QuadOrderMatrix::standard(d, Int(1), pow_int(Int(2), n - k)));
    m.provenance.family = "remark52";
    m.provenance.params.emplace_back("n", Int(n));
    m.provenance.params.emplace_back("k", Int(k));
    return m;
}

inline bool has_positive_entropy(const TorusModel& m) { return cyclotomic_part(m.p_charpoly).remainder.degree() > 0; }

/// Replace gamma2 by its conjugate. Real pairings are returned unchanged
/// with trivial_reorientation set.
inline TorusModel reorient(const TorusModel& model) {
    if (!has_positive_entropy(model)) throw Error(Errc::zero_entropy, "reorientation needs positive entropy");
    TorusModel out = model;
    if (model.gamma2().real) {
        out.trivial_reorientation = true;
        return out;
    }
    detail::set_pairing(out, {model.pairing.first, model.gamma2().conjugate});
    out.reoriented = !model.reoriented;
    out.trivial_reorientation = false;
    return out;
}

/// The non-cyclotomic factor of q_charpoly, certified Salem.
inline SalemCertificate salem_factor(const TorusModel& m) {
    const auto split = cyclotomic_part(m.q_charpoly);
    if (split.remainder.degree() < 1) throw Error(Errc::zero_entropy, "all eigenvalues lie on the unit circle");
    auto r = is_salem(split.remainder);
    if (auto* c = as_certificate(r)) return *c;
    throw Error(Errc::not_applicable, "non-cyclotomic part " + to_string(split.remainder) + " is not Salem");
}

/// True iff gamma1 gamma2 is a root of unity, i.e. a root of the cyclotomic
/// complement of the Salem factor.
inline bool is_projective(const TorusModel& model) {
    const auto split = cyclotomic_part(model.q_charpoly);
    if (split.remainder.degree() < 1) throw Error(Errc::zero_entropy, "projectivity criterion needs positive entropy");
    const IntPoly radical = split.cyclotomic_radical();
    const IntPoly s = squarefree_part(split.remainder);
    Rational width = pow2(-64);
    TorusModel cur = model;
    for (int attempt = 0; attempt < 8; ++attempt, width *= pow2(-64)) {
        if (attempt > 0) cur = refine(model, width);
        const auto s_roots = isolate_all_roots(s, width);
        const auto c_roots = isolate_all_roots(radical, width);
        int s_hits = 0;
        int c_hits = 0;
        for (const auto& b : s_roots) s_hits += disks_intersect(b.disk, cur.h20_product) ? 1 : 0;
        for (const auto& b : c_roots) c_hits += disks_intersect(b.disk, cur.h20_product) ? 1 : 0;
        if (s_hits + c_hits == 1) return c_hits == 1;
    }
    throw Error(Errc::precision_exhausted, "could not separate gamma1 gamma2 from the roots of q_charpoly");
}

namespace detail {

inline Interval log_interval(const Interval& x, long bits) {
    mpfr_t a, r;
    mpfr_init2(a, bits);
    mpfr_init2(r, bits);
    Interval out;
    mpfr_set_q(a, x.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_log(r, a, MPFR_RNDD);
    mpfr_get_q(out.lo.get_mpq_t(), r);
    mpfr_set_q(a, x.hi.get_mpq_t(), MPFR_RNDU);
    mpfr_log(r, a, MPFR_RNDU);
    mpfr_get_q(out.hi.get_mpq_t(), r);
    mpfr_clear(a);
    mpfr_clear(r);
    return out;
}

}  // namespace detail

/// Interval of width at most eps around log(max(|gamma1|^2, |gamma2|^2));
/// exactly [0, 0] when P is a product of cyclotomic polynomials.
inline Interval entropy(const TorusModel& model, const Rational& eps) {
    if (eps <= 0) throw Error(Errc::bad_parameters, "eps must be positive");
    if (!has_positive_entropy(model)) return {Rational(0), Rational(0)};
    const SalemCertificate cert = salem_factor(model);
    Rational lam_eps = eps / 4;
    long bits = 64 + std::max(0L, -detail::approx_log2(eps));
    for (;;) {
        const Interval out = detail::log_interval(lambda_approx(cert, lam_eps), bits);
        if (out.width() <= eps) return out;
        lam_eps /= 4;
        bits += 16;
    }
}

inline PicardRank picard_rank(const TorusModel& model) {
    const SalemCertificate s = salem_factor(model);
    switch (s.degree) {
        case 6: return PicardRank::zero;
        case 4: return is_projective(model) ? PicardRank::four : PicardRank::two;
        default: return square_shift(-s.s_poly.coeff(1)) ? PicardRank::unconstrained : PicardRank::four;
    }
}

namespace detail {

/// Solve J = h0 + h1 M + h2 M^2 + h3 M^3 over Q.
inline std::optional<std::array<Rational, 4>> solve_in_algebra(const Matrix4& m, const Matrix4& j) {
    std::array<Matrix4, 4> pw{identity_matrix<4>(), m, m * m, m * m * m};
    std::vector<std::array<Rational, 5>> rows;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            std::array<Rational, 5> row;
            for (std::size_t k = 0; k < 4; ++k) row[k] = pw[k][r][c];
            row[4] = j[r][c];
            rows.push_back(row);
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) return std::nullopt;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t k = col; k < 5; ++k) rows[i][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    for (std::size_t i = 4; i < rows.size(); ++i) {
        if (rows[i][4] != 0) return std::nullopt;
    }
    std::array<Rational, 4> h;
    for (std::size_t k = 0; k < 4; ++k) h[k] = rows[k][4] / rows[k][k];
    return h;
}

}  // namespace detail

/// Whether the lattice of a quad-order model is preserved by an integer J
/// with J^2 = -D, commuting with the H^1 action, acting as sqrt(D) i on
/// gamma1 and as -sqrt(D) i (twisted) or +sqrt(D) i (untwisted) on gamma2.
inline bool verify_jd(const TorusModel& model, const Int& d, bool twisted = true) {
    if (!model.provenance.quad_order) throw Error(Errc::not_applicable, "model has no quad-order provenance");
    if (d < 1) throw Error(Errc::bad_parameters, "D must be positive");
    if (!is_squarefree(model.p_charpoly)) throw Error(Errc::not_applicable, "H^1 action has repeated eigenvalues");
    const std::size_t n = model.roots.size();
    std::vector<int> eps(n, 0);
    const auto assign = [&](std::size_t i, int s) {
        if (eps[i] != 0 && eps[i] != s) return false;
        eps[i] = s;
        return true;
    };
    const int s2 = twisted ? -1 : 1;
    if (model.gamma1().real || model.gamma2().real) return false;
    if (!assign(model.pairing.first, 1) || !assign(model.gamma1().conjugate, -1) || !assign(model.pairing.second, s2) ||
        !assign(model.gamma2().conjugate, -s2)) {
        return false;
    }

    // J = g(M) with g interpolating the eigenvalue pattern, then rounded
    const TorusModel fine = refine(model, pow2(-192));
    const Rational sd = detail::sqrt_disk(d, 256).re;
    std::vector<GaussRational> z;
    for (const auto& b : fine.roots) z.push_back({b.disk.re, b.disk.im});
    std::vector<GaussRational> g(n, GaussRational{0, 0});
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<GaussRational> basis{GaussRational{1, 0}};
        GaussRational denom{1, 0};
        for (std::size_t l = 0; l < n; ++l) {
            if (l == k) continue;
            std::vector<GaussRational> next(basis.size() + 1, GaussRational{0, 0});
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] = next[i + 1] + basis[i];
                next[i] = next[i] - basis[i] * z[l];
            }
            basis = std::move(next);
            denom = denom * (z[k] - z[l]);
        }
        const GaussRational c = GaussRational{0, sd * eps[k]} / denom;
        for (std::size_t i = 0; i < n; ++i) g[i] = g[i] + c * basis[i];
    }
    Matrix4 j = zero_matrix<4>();
    Matrix4 pw = identity_matrix<4>();
    std::array<std::array<Rational, 4>, 4> acc{};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) acc[r][c] += g[i].re * Rational(pw[r][c]);
        }
        pw = pw * model.m_matrix;
    }
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) j[r][c] = floor_of(acc[r][c] + Rational(1, 2));
    }

    if (j * model.m_matrix != model.m_matrix * j) return false;
    if (j * j != scaled(identity_matrix<4>(), Int(-d))) return false;
    const auto h = detail::solve_in_algebra(model.m_matrix, j);
    if (!h) return false;
    for (std::size_t k = 0; k < n; ++k) {
        Disk v{(*h)[3], 0, 0};
        for (std::size_t i = 3; i-- > 0;) v = disk_add(disk_mul(v, fine.roots[k].disk), Disk{(*h)[i], 0, 0});
        const int got = v.im - v.radius > 0 ? 1 : (v.im + v.radius < 0 ? -1 : 0);
        if (got == 0) throw Error(Errc::precision_exhausted, "eigenvalue sign of J not resolved");
        if (got != eps[k]) return false;
    }
    return true;
}

/// Characteristic polynomial on the Neron-Severi group when the lattice
/// data determine it; nullopt means not forced.
inline std::optional<IntPoly> ns_charpoly(const TorusModel& model) {
    if (!has_positive_entropy(model)) throw Error(Errc::zero_entropy, "Neron-Severi polynomial needs positive entropy");
    const auto& qo = model.provenance.quad_order;
    if (qo && !model.reoriented) {
        const QuadOrderElement det = qo->determinant();
        const IntPoly h20 = IntPoly::descending(std::vector<Int>{Int(1), Int(-2 * det.re), Int(1)});
        IntPoly ns = div_exact(model.q_charpoly, h20);
        if (auto b = qo->standard_params()) {
            const Int s = b->first * b->first + b->second * b->second * qo->d_param;
            const Int mid = 2 * b->first * b->first - 2 * b->second * b->second * qo->d_param - 2;
            const IntPoly closed = IntPoly::descending(std::vector<Int>{Int(1), Int(-s), mid, Int(-s), Int(1)});
            if (closed != ns) throw std::logic_error("Neron-Severi closed form disagrees with q_charpoly");
        }
        return ns;
    }
    const SalemCertificate s = salem_factor(model);
    if (s.degree == 6 || !is_projective(model)) return std::nullopt;
    if (s.degree == 2 && square_shift(-s.s_poly.coeff(1))) return std::nullopt;
    const Disk& h = model.h20_product;
    const Int k = floor_of(2 * h.re + Rational(1, 2));
    if (abs(Rational(k) - 2 * h.re) > 2 * h.radius) return std::nullopt;
    const IntPoly h20 = IntPoly::descending(std::vector<Int>{Int(1), Int(-k), Int(1)});
    auto ns = try_div_exact(model.q_charpoly, h20);
    if (!ns) return std::nullopt;
    return *ns;
}

}  // namespace salemtori

#endif

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

#ifndef SALEMTORI_CLASSIFY_HPP
#define SALEMTORI_CLASSIFY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "factor.hpp"
#include "poly.hpp"
#include "salem.hpp"
#include "sturm.hpp"
#include "torus.hpp"
#include "wedge.hpp"

namespace salemtori {

enum class CaseTag { case1_deg6, case2_deg4, case3a_deg2, case3b_deg2 };

constexpr std::string_view to_string(CaseTag c) noexcept {
    switch (c) {
        case CaseTag::case1_deg6: return "1";
        case CaseTag::case2_deg4: return "2";
        case CaseTag::case3a_deg2: return "3a";
        case CaseTag::case3b_deg2: return "3b";
    }
    return "unknown";
}

enum class ProjectivityType { non_projective, projective };

constexpr std::string_view to_string(ProjectivityType t) noexcept {
    return t == ProjectivityType::projective ? "projective" : "non_projective";
}

/// One realization: H^2 polynomial Q = S C, H^1 polynomial P, and the
/// pairing class of (gamma1, gamma2) up to overall conjugation.
struct Witness {
    IntPoly q;
    IntPoly c;
    IntPoly p;
    unsigned pairing_class = 0;
    bool projective = false;

    friend bool operator==(const Witness&, const Witness&) = default;
};

inline bool operator<(const Witness& a, const Witness& b) {
    return std::tie(a.q, a.p, a.pairing_class) < std::tie(b.q, b.p, b.pairing_class);
}

struct Finiteness {
    enum class Kind { finite, infinite_family };

    Kind kind = Kind::finite;
    std::size_t candidate_count = 0;
    std::optional<SquareShift> square_witness;
};

constexpr std::string_view to_string(Finiteness::Kind k) noexcept {
    return k == Finiteness::Kind::finite ? "finite" : "infinite_family";
}

struct ClassificationReport {
    SalemCertificate salem;
    CaseTag case_tag = CaseTag::case1_deg6;
    std::optional<Int> q_value;
    std::optional<SquareShift> square_witness;
    std::set<ProjectivityType> projective_types;
    std::map<ProjectivityType, PicardRank> picard_ranks;
    std::optional<Finiteness> finiteness;
    std::vector<Witness> witnesses;

    /// Projectivity types actually attained by the witnesses.
    std::set<ProjectivityType> witnessed_types() const {
        std::set<ProjectivityType> out;
        for (const auto& w : witnesses) out.insert(w.projective ? ProjectivityType::projective : ProjectivityType::non_projective);
        return out;
    }
};

struct CandidateSet {
    IntPoly s_poly;
    std::vector<IntPoly> complements;
    std::vector<IntPoly> admissible_q;
    std::vector<Witness> quartets;
};

inline ClassificationReport case_of(const SalemCertificate& s) {
    ClassificationReport r;
    r.salem = s;
    switch (s.degree) {
        case 6:
            r.case_tag = CaseTag::case1_deg6;
            r.projective_types = {ProjectivityType::non_projective};
            r.picard_ranks = {{ProjectivityType::non_projective, PicardRank::zero}};
            break;
        case 4:
            r.case_tag = CaseTag::case2_deg4;
            r.projective_types = {ProjectivityType::non_projective, ProjectivityType::projective};
            r.picard_ranks = {{ProjectivityType::non_projective, PicardRank::two}, {ProjectivityType::projective, PicardRank::four}};
            break;
        case 2:
            r.q_value = -s.s_poly.coeff(1);
            r.square_witness = square_shift(*r.q_value);
            r.case_tag = r.square_witness ? CaseTag::case3a_deg2 : CaseTag::case3b_deg2;
            r.projective_types = {ProjectivityType::projective};
            r.picard_ranks = {{ProjectivityType::projective, r.square_witness ? PicardRank::unconstrained : PicardRank::four}};
            break;
        default: throw Error(Errc::wrong_degree, "torus entropies come from Salem polynomials of degree 2, 4 or 6");
    }
    return r;
}

namespace detail {

inline IntPoly reciprocal_quadratic(int j) { return IntPoly::descending({1, j, 1}); }

}  // namespace detail

/// Cyclotomic complements C with deg(S C) = 6, and the products S C that
/// pass the square-value test.
inline CandidateSet enumerate_complements(const SalemCertificate& s) {
    CandidateSet out;
    out.s_poly = s.s_poly;
    switch (s.degree) {
        case 6: out.complements.push_back(IntPoly::constant(Int(1))); break;
        case 4:
            for (int a = -2; a <= 2; ++a) out.complements.push_back(detail::reciprocal_quadratic(a));
            break;
        case 2: {
            for (int j = -2; j <= 2; ++j) {
                for (int k = j; k <= 2; ++k) out.complements.push_back(detail::reciprocal_quadratic(j) * detail::reciprocal_quadratic(k));
            }
            const auto& table = CyclotomicTable::instance();
            for (unsigned n : {5U, 8U, 10U, 12U}) out.complements.push_back(table[n]);
            break;
        }
        default: throw Error(Errc::wrong_degree, "torus entropies come from Salem polynomials of degree 2, 4 or 6");
    }
    for (const auto& c : out.complements) {
        IntPoly q = s.s_poly * c;
        if (square_values(q)) out.admissible_q.push_back(std::move(q));
    }
    return out;
}

namespace detail {

/// P = g^2 with g = t^2 - r t + det, det = +-1, real roots off the circle.
inline std::optional<TorusModel> real_pairing_model(const IntPoly& p) {
    const IntPoly g = squarefree_part(p);
    if (g.degree() != 2 || g * g != p) return std::nullopt;
    const Int det = g.coeff(0);
    if (det != 1 && det != -1) return std::nullopt;
    try {
        return gl2z_model(-g.coeff(1), static_cast<int>(det.get_si()));
    } catch (const Error& e) {
        if (e.code() == Errc::not_hyperbolic) return std::nullopt;
        throw;
    }
}

}  // namespace detail

/// All (Q, P, pairing class) realizations of log(lambda) by this search.
inline ClassificationReport realizable(const SalemCertificate& s) {
    ClassificationReport report = case_of(s);
    CandidateSet cands = enumerate_complements(s);
    std::set<Witness> found;
    for (std::size_t i = 0; i < cands.complements.size(); ++i) {
        const IntPoly& c = cands.complements[i];
        const IntPoly q = s.s_poly * c;
        if (std::find(cands.admissible_q.begin(), cands.admissible_q.end(), q) == cands.admissible_q.end()) continue;
        const InversionCandidates inv = invert_wedge(q);
        for (const IntPoly& p : inv.verified) {
            if (count_real_roots(p) == 0) {
                for (unsigned cls = 0; cls < 2; ++cls) {
                    const TorusModel m = from_quartic(p, {0, cls});
                    found.insert(Witness{q, c, p, cls, is_projective(m)});
                }
            } else if (s.degree == 2) {
                if (auto m = detail::real_pairing_model(p)) found.insert(Witness{q, c, p, 0, is_projective(*m)});
            }
        }
    }
    report.witnesses.assign(found.begin(), found.end());
    cands.quartets = report.witnesses;
    if (!report.witnesses.empty()) {
        Finiteness f;
        f.candidate_count = report.witnesses.size();
        if (s.degree == 2) {
            f.square_witness = square_shift(-s.s_poly.coeff(1));
        } else {
            // lambda + 1/lambda = r^2 -+ 2 would make it a root of the trace polynomial
            Int bound(1);
            for (const auto& x : s.trace_poly.coeffs()) bound = std::max(bound, Int(abs(x) + 1));
            for (Int r(1); r * r <= bound + 2 && !f.square_witness; ++r) {
                if (evaluate(s.trace_poly, Int(r * r - 2)) == 0) f.square_witness = SquareShift{r, +1};
                else if (evaluate(s.trace_poly, Int(r * r + 2)) == 0) f.square_witness = SquareShift{r, -1};
            }
        }
        f.kind = f.square_witness ? Finiteness::Kind::infinite_family : Finiteness::Kind::finite;
        report.finiteness = f;
    }
    return report;
}

inline ClassificationReport realizable(const IntPoly& s) { return realizable(certify_salem(s)); }

/// Finiteness decision; throws not_realizable when the search
/// finds no torus.
inline Finiteness finiteness(const SalemCertificate& s) {
    const ClassificationReport r = realizable(s);
    if (!r.finiteness) throw Error(Errc::not_realizable, to_string(s.s_poly) + " is not realized by a torus automorphism");
    return *r.finiteness;
}

}  // namespace salemtori

#endif

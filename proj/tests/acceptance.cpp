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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "salemtori.hpp"
#include "salemtori/cli.hpp"

using namespace salemtori;

namespace {

IntPoly P(std::initializer_list<long> desc) { return IntPoly::descending(desc); }

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome wedge_identity() {
    for (long a = 0; a <= 20; ++a) {
        const IntPoly q = exterior_square(P({1, 0, a, 1, 1}));
        if (q != P({1, -a, -1, 2 * a - 1, -1, -a, 1})) return {false, "coefficient mismatch at a=" + std::to_string(a)};
        if (!as_certificate(is_salem(q))) return {false, "not certified Salem at a=" + std::to_string(a)};
    }
    return {true, "a=0..20 exact, all 21 certified Salem"};
}

Outcome compound_oracle() {
    oracle::Rng rng(20260101);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Int> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(rng.uniform(-10, 10));
        c.emplace_back(1);
        const IntPoly p(c);
        if (exterior_square(p) != oracle::compound_charpoly(p)) return {false, "mismatch on " + to_string(p)};
    }
    return {true, "500/500 quartics agree exactly"};
}

std::vector<TorusModel> quad_order_sweep() {
    std::vector<TorusModel> out;
    for (long d = 1; d <= 5; ++d) {
        for (long b1 = -3; b1 <= 3; ++b1) {
            for (long b2 = -3; b2 <= 3; ++b2) out.push_back(quad_order_model(QuadOrderMatrix::standard(Int(d), Int(b1), Int(b2))));
        }
    }
    return out;
}

Outcome square_values_sweep(const std::vector<TorusModel>& models) {
    std::size_t ok = 0;
    for (const auto& m : models) {
        if (norm(m.provenance.quad_order->determinant(), m.provenance.quad_order->d_param) != 1) return {false, "non-unit determinant"};
        const auto w = square_values(m.q_charpoly);
        if (!w || -evaluate(m.q_charpoly, Int(1)) != w->m * w->m || evaluate(m.q_charpoly, Int(-1)) != w->n * w->n) {
            return {false, "square test failed for " + to_string(m.q_charpoly)};
        }
        ++ok;
    }
    if (ok < 200) return {false, "only " + std::to_string(ok) + " models"};
    return {true, std::to_string(ok) + " models, all squares exact"};
}

Outcome ns_formula() {
    const auto a = ns_charpoly(quad_order_model(QuadOrderMatrix::standard(Int(1), Int(1), Int(1))));
    if (!a || *a != P({1, -2, -2, -2, 1})) return {false, "D=1,b=(1,1) polynomial mismatch"};
    const SalemResult res = is_salem(*a);
    const auto* cert = as_certificate(res);
    if (!cert) return {false, "D=1,b=(1,1) not Salem"};
    const Interval lam = lambda_approx(*cert, Rational(1, 10000));
    const auto b = ns_charpoly(quad_order_model(QuadOrderMatrix::standard(Int(1), Int(0), Int(1))));
    if (!b || *b != P({1, -1, -4, -1, 1})) return {false, "D=1,b=(0,1) polynomial mismatch"};
    const auto r = is_salem(*b);
    const auto* n = std::get_if<NotSalem>(&r);
    if (!n || n->reason != NotSalem::Reason::reducible) return {false, "D=1,b=(0,1) not rejected as reducible"};
    const std::vector<Factor> expected{{P({1, 1}), 2}, {P({1, -3, 1}), 1}};
    if (n->factorization.size() != 2 || n->factorization[0].poly != expected[0].poly || n->factorization[0].multiplicity != 2 ||
        n->factorization[1].poly != expected[1].poly || n->factorization[1].multiplicity != 1) {
        return {false, "wrong factorization witness"};
    }
    std::ostringstream os;
    os.precision(10);
    os << "polynomials and exclusion (t+1)^2(t^2-3t+1) exact; certified lambda in [" << lam.lo.get_d() << ", " << lam.hi.get_d() << "]";
    if (lam.lo < Rational(45615, 10000) || lam.hi > Rational(45617, 10000)) {
        os << " is outside 4.5616 +- 1e-4";
        return {false, os.str()};
    }
    return {true, os.str()};
}

Outcome reorientation_sweep(const std::vector<TorusModel>& models) {
    std::size_t checked = 0;
    for (const auto& m : models) {
        if (!has_positive_entropy(m) || salem_factor(m).degree != 4) continue;
        ++checked;
        if (is_projective(m) == is_projective(reorient(m))) return {false, "exception at " + to_string(m.p_charpoly)};
    }
    return {true, std::to_string(checked) + " degree-4 models, 0 exceptions"};
}

Outcome case_table() {
    const auto a = realizable(certify_salem(P({1, -3, 1})));
    if (a.case_tag != CaseTag::case3a_deg2) return {false, "t^2-3t+1 not 3a"};
    const auto b = realizable(certify_salem(P({1, -4, 1})));
    if (b.case_tag != CaseTag::case3b_deg2 || b.picard_ranks.at(ProjectivityType::projective) != PicardRank::four) {
        return {false, "t^2-4t+1 not 3b with rank 4"};
    }
    const auto c = realizable(certify_salem(P({1, -2, -2, -2, 1})));
    if (c.case_tag != CaseTag::case2_deg4 || c.witnessed_types().size() != 2) return {false, "quartic not case 2 with both types"};
    const auto d = realizable(certify_salem(P({1, 0, -1, -1, -1, 0, 1})));
    if (d.case_tag != CaseTag::case1_deg6 || d.witnessed_types() != std::set<ProjectivityType>{ProjectivityType::non_projective} ||
        d.picard_ranks.at(ProjectivityType::non_projective) != PicardRank::zero) {
        return {false, "sextic not case 1 / non-projective / rank 0"};
    }
    return {true, "3a, 3b (rank 4), 2 (both types), 1 (non-projective, rank 0)"};
}

Outcome finiteness_table() {
    const auto a = finiteness(certify_salem(P({1, -3, 1})));
    if (a.kind != Finiteness::Kind::infinite_family || !a.square_witness || a.square_witness->r != 1) return {false, "golden not infinite r=1"};
    const auto b = finiteness(certify_salem(P({1, -2, -2, -2, 1})));
    const auto c = finiteness(certify_salem(P({1, 0, -1, -1, -1, 0, 1})));
    for (const auto& f : {b, c}) {
        if (f.kind != Finiteness::Kind::finite || f.candidate_count < 1 || f.candidate_count > 320) return {false, "finite count out of range"};
    }
    return {true, "infinite r=1; finite counts " + std::to_string(b.candidate_count) + " and " + std::to_string(c.candidate_count)};
}

Outcome k_independent_family() {
    for (unsigned n = 1; n <= 2; ++n) {
        const Int f = pow_int(Int(4), n);
        const IntPoly expected = IntPoly::descending(std::vector<Int>{Int(1), Int(-(1 + f)), Int(-2 * f), Int(-(1 + f)), Int(1)});
        for (unsigned k = 0; k <= n; ++k) {
            if (salem_factor(remark52_family(n, k)).s_poly != expected) {
                return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k)};
            }
        }
    }
    return {true, "5 models, Salem factor exact and independent of k"};
}

Outcome entropy_numerics() {
    const Rational w9(1, 1000000000);
    const Interval a = entropy(gl2z_model(Int(1), -1), w9);
    const long double ref_a = std::log((3.0L + std::sqrt(5.0L)) / 2.0L);
    const long double slack = 1e-15L;
    if (a.width() > w9 || static_cast<long double>(a.lo.get_d()) > ref_a + slack || static_cast<long double>(a.hi.get_d()) < ref_a - slack) {
        return {false, "gl2z(1,-1) interval misses log((3+sqrt5)/2)"};
    }
    const Rational w6(1, 1000000);
    const Interval b = entropy(sextic_family(Int(0)), w6);
    const long double ref_b = std::log(oracle::bisect_root(P({1, 0, -1, -1, -1, 0, 1}), 1.40L, 1.41L));
    if (b.width() > w6 || static_cast<long double>(b.lo.get_d()) > ref_b + slack || static_cast<long double>(b.hi.get_d()) < ref_b - slack) {
        return {false, "a=0 model interval misses bisection oracle"};
    }
    std::ostringstream os;
    os.precision(13);
    os << "log((3+sqrt5)/2) ~ " << static_cast<double>(ref_a) << ", log(lambda_6) ~ " << static_cast<double>(ref_b);
    return {true, os.str()};
}

Outcome determinism() {
    const std::string one = cli::atlas_csv(cli::atlas(4, 3, 1));
    const std::string four = cli::atlas_csv(cli::atlas(4, 3, 4));
    if (one != four) return {false, "CSV differs between 1 and 4 workers"};
    std::size_t rows = 0;
    for (char c : one) rows += c == '\n' ? 1 : 0;
    return {true, std::to_string(rows - 1) + " rows, byte-identical"};
}

}  // namespace

int main() {
    const std::vector<TorusModel> sweep = quad_order_sweep();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"wedge identity for t^4+at^2+t+1, a=0..20", wedge_identity},
        {"exterior square vs second-compound oracle", compound_oracle},
        {"square values on quad-order models", [&] { return square_values_sweep(sweep); }},
        {"Neron-Severi formula and exclusion", ns_formula},
        {"projectivity flips under reorientation", [&] { return reorientation_sweep(sweep); }},
        {"case table", case_table},
        {"finiteness", finiteness_table},
        {"k-independent family Salem factor", k_independent_family},
        {"entropy numerics", entropy_numerics},
        {"atlas determinism across workers", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " (" << o.detail << ")\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}

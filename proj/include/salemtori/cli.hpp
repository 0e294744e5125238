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

#ifndef SALEMTORI_CLI_HPP
#define SALEMTORI_CLI_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "classify.hpp"
#include "error.hpp"
#include "poly.hpp"
#include "salem.hpp"
#include "torus.hpp"
#include "wedge.hpp"

namespace salemtori::cli {

using json = nlohmann::json;

class ParseError : public Error {
   public:
    ParseError(std::size_t position, const std::string& what)
        : Error(Errc::parse_error, what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// Comma-separated integers; surrounding blanks are allowed.
inline std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> desc;
    std::size_t pos = 0;
    for (;;) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        const std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError(pos, "expected an integer");
        std::string token(text.substr(start, pos - start));
        if (token[0] == '+') token.erase(0, 1);
        desc.emplace_back(token, 10);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError(pos, "expected ','");
        ++pos;
    }
    return desc;
}

/// "c_d,...,c_0", highest degree first.
inline IntPoly parse_poly(std::string_view text) {
    std::vector<Int> desc = parse_int_list(text);
    if (desc.size() > 1 && desc.front() == 0) throw ParseError(0, "leading coefficient must be nonzero");
    return IntPoly::descending(std::move(desc));
}

inline std::string print_poly(const IntPoly& p) { return to_coeff_list(p); }

inline json int_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

inline std::string ceil_decimal(const Rational& x, unsigned digits) {
    const Rational scale(pow_int(Int(10), digits));
    if (floor_of(x * scale) == x * scale) return floor_decimal(x, digits);
    return floor_decimal(x + 1 / scale, digits);
}

inline json interval_json(const Interval& iv, unsigned digits = 15) {
    return {{"lo", floor_decimal(iv.lo, digits)}, {"hi", ceil_decimal(iv.hi, digits)}};
}

inline json factors_json(const std::vector<Factor>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back({{"poly", print_poly(f.poly)}, {"multiplicity", f.multiplicity}});
    return out;
}

inline json salem_json(const SalemResult& r) {
    if (const auto* c = as_certificate(r)) {
        const Interval lam = lambda_approx(*c, Rational(1, pow_int(Int(10), 15)));
        return {{"salem", true},
                {"s_poly", print_poly(c->s_poly)},
                {"degree", c->degree},
                {"trace_poly", print_poly(c->trace_poly)},
                {"roots_on_circle", c->roots_on_circle},
                {"lambda", interval_json(lam)}};
    }
    const auto& n = std::get<NotSalem>(r);
    json out{{"salem", false}, {"reason", std::string(to_string(n.reason))}, {"detail", n.detail}};
    if (!n.factorization.empty()) out["factorization"] = factors_json(n.factorization);
    return out;
}

inline json shift_json(const SquareShift& s) { return {{"r", int_json(s.r)}, {"sign", s.sign > 0 ? "+" : "-"}}; }

inline std::string picard_text(PicardRank r) { return std::string(to_string(r)); }

inline json report_json(const ClassificationReport& r) {
    json out;
    out["s_poly"] = print_poly(r.salem.s_poly);
    out["degree"] = r.salem.degree;
    out["case"] = std::string(to_string(r.case_tag));
    out["lambda"] = interval_json(lambda_approx(r.salem, Rational(1, pow_int(Int(10), 15))));
    if (r.q_value) out["q_value"] = int_json(*r.q_value);
    if (r.square_witness) out["square_witness"] = shift_json(*r.square_witness);
    json types = json::array();
    for (auto t : r.projective_types) types.push_back(std::string(to_string(t)));
    out["projective_types"] = types;
    json seen = json::array();
    for (auto t : r.witnessed_types()) seen.push_back(std::string(to_string(t)));
    out["witnessed_types"] = seen;
    json ranks = json::object();
    for (const auto& [t, rank] : r.picard_ranks) ranks[std::string(to_string(t))] = picard_text(rank);
    out["picard_ranks"] = ranks;
    if (r.finiteness) {
        out["finiteness"] = std::string(to_string(r.finiteness->kind));
        out["quartet_count"] = r.finiteness->candidate_count;
        if (r.finiteness->square_witness) out["r"] = int_json(r.finiteness->square_witness->r);
        if (r.finiteness->square_witness) out["family_witness"] = shift_json(*r.finiteness->square_witness);
    } else {
        out["finiteness"] = "not_realizable";
        out["quartet_count"] = 0;
    }
    json ws = json::array();
    for (const auto& w : r.witnesses) {
        ws.push_back({{"q", print_poly(w.q)},
                      {"c", print_poly(w.c)},
                      {"p", print_poly(w.p)},
                      {"pairing_class", w.pairing_class},
                      {"projective", w.projective}});
    }
    out["witnesses"] = ws;
    return out;
}

inline json inversion_json(const InversionCandidates& inv) {
    json out{{"q_poly", print_poly(inv.q_poly)}, {"a", int_json(inv.a)}, {"failure", std::string(to_string(inv.failure))}};
    if (inv.squares) out["squares"] = {{"m", int_json(inv.squares->m)}, {"n", int_json(inv.squares->n)}};
    if (inv.j) out["j"] = int_json(*inv.j);
    if (inv.k) out["k"] = int_json(*inv.k);
    json cands = json::array();
    for (const auto& p : inv.candidates) cands.push_back(print_poly(p));
    json ver = json::array();
    for (const auto& p : inv.verified) ver.push_back(print_poly(p));
    out["candidates"] = cands;
    out["verified"] = ver;
    return out;
}

inline json disk_json(const Disk& d) {
    return {{"re", floor_decimal(d.re, 15)}, {"im", floor_decimal(d.im, 15)}, {"radius", ceil_decimal(d.radius, 30)}};
}

inline json model_json(const TorusModel& m, const Rational& eps) {
    json out;
    out["family"] = m.provenance.family;
    json params = json::object();
    for (const auto& [k, v] : m.provenance.params) params[k] = int_json(v);
    out["params"] = params;
    json rows = json::array();
    for (const auto& row : m.m_matrix) {
        json r = json::array();
        for (const auto& x : row) r.push_back(int_json(x));
        rows.push_back(r);
    }
    out["m_matrix"] = rows;
    out["p_charpoly"] = print_poly(m.p_charpoly);
    out["q_charpoly"] = print_poly(m.q_charpoly);
    out["pairing"] = {m.pairing.first, m.pairing.second};
    out["gamma1"] = disk_json(m.gamma1().disk);
    out["gamma2"] = disk_json(m.gamma2().disk);
    out["h20_product"] = disk_json(m.h20_product);
    out["reoriented"] = m.reoriented;
    out["trivial_reorientation"] = m.trivial_reorientation;
    out["entropy"] = interval_json(entropy(m, eps));
    const bool positive = has_positive_entropy(m);
    out["positive_entropy"] = positive;
    if (positive) {
        out["salem_factor"] = print_poly(salem_factor(m).s_poly);
        out["projective"] = is_projective(m);
        out["picard_rank"] = picard_text(picard_rank(m));
        const auto ns = ns_charpoly(m);
        out["ns_charpoly"] = ns ? json(print_poly(*ns)) : json("not_forced");
    }
    return out;
}

/// Named integer parameters for the model constructors, from key=value words.
struct FamilyParams {
    std::string family;
    std::map<std::string, std::string> values;

    const std::string& text(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end()) throw Error(Errc::bad_parameters, "family " + family + " needs parameter " + key);
        return it->second;
    }
    Int integer(const std::string& key) const {
        const std::string& v = text(key);
        Int out;
        if (v.empty() || out.set_str(v[0] == '+' ? v.substr(1) : v, 10) != 0) throw Error(Errc::bad_parameters, key + " is not an integer");
        return out;
    }
    Int integer_or(const std::string& key, long fallback) const { return values.count(key) ? integer(key) : Int(fallback); }
};

inline FamilyParams parse_family(const std::string& family, const std::vector<std::string>& words) {
    FamilyParams p{family, {}};
    for (const auto& w : words) {
        const auto eq = w.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(Errc::bad_parameters, "expected key=value, got '" + w + "'");
        p.values[w.substr(0, eq)] = w.substr(eq + 1);
    }
    return p;
}

inline unsigned small_unsigned(const Int& x, const std::string& name) {
    if (x < 0 || !x.fits_uint_p()) throw Error(Errc::bad_parameters, name + " out of range");
    return static_cast<unsigned>(x.get_ui());
}

inline TorusModel build_model(const FamilyParams& p) {
    if (p.family == "quartic") {
        const IntPoly poly = parse_poly(p.text("poly"));
        const unsigned c1 = small_unsigned(p.integer_or("first", 0), "first");
        const unsigned c2 = small_unsigned(p.integer_or("second", 0), "second");
        return from_quartic(poly, {c1, c2});
    }
    if (p.family == "gl2z") {
        const Int det = p.integer("det");
        if (det != 1 && det != -1) throw Error(Errc::bad_parameters, "det must be +1 or -1");
        return gl2z_model(p.integer("r"), static_cast<int>(det.get_si()));
    }
    if (p.family == "quad-order") {
        const Int d = p.integer("D");
        if (p.values.count("entries")) {
            const std::vector<Int> e = parse_int_list(p.text("entries"));
            if (e.size() != 8) throw Error(Errc::bad_parameters, "entries needs 8 integers a11,b11,a12,b12,a21,b21,a22,b22");
            QuadOrderMatrix q;
            q.d_param = d;
            for (std::size_t i = 0; i < 4; ++i) q.entries[i / 2][i % 2] = {e[2 * i], e[2 * i + 1]};
            return quad_order_model(q);
        }
        return quad_order_model(QuadOrderMatrix::standard(d, p.integer("b1"), p.integer("b2")));
    }
    if (p.family == "sextic") return sextic_family(p.integer("a"), p.integer_or("b", 1));
    if (p.family == "remark52") return remark52_family(small_unsigned(p.integer("n"), "n"), small_unsigned(p.integer("k"), "k"));
    throw Error(Errc::bad_parameters, "unknown family '" + p.family + "' (quartic, gl2z, quad-order, sextic, remark52)");
}

struct CommandOutput {
    std::string text;
    int exit_code = 0;
};

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline CommandOutput cmd_is_salem(const IntPoly& p) {
    const SalemResult r = is_salem(p);
    return {dump(salem_json(r)), as_certificate(r) ? 0 : 2};
}

inline CommandOutput cmd_classify(const IntPoly& p) {
    const SalemResult r = is_salem(p);
    const auto* cert = as_certificate(r);
    if (!cert) return {dump(salem_json(r)), 2};
    const ClassificationReport report = realizable(*cert);
    return {dump(report_json(report)), report.witnesses.empty() ? 2 : 0};
}

inline CommandOutput cmd_wedge(const IntPoly& p, bool plain) {
    const IntPoly q = exterior_square(p);
    if (plain) return {print_poly(q) + "\n", 0};
    return {dump({{"p_poly", print_poly(p)}, {"q_poly", print_poly(q)}}), 0};
}

inline CommandOutput cmd_invert_wedge(const IntPoly& q) {
    const InversionCandidates inv = invert_wedge(q);
    return {dump(inversion_json(inv)), 0};
}

inline CommandOutput cmd_construct(const FamilyParams& p, const Rational& eps) { return {dump(model_json(build_model(p), eps)), 0}; }

inline CommandOutput cmd_reorient(const FamilyParams& p, const Rational& eps) {
    const TorusModel m = build_model(p);
    const TorusModel r = reorient(m);
    json out = model_json(r, eps);
    if (r.provenance.quad_order) out["jd_torus"] = verify_jd(r, r.provenance.quad_order->d_param);
    return {dump(out), 0};
}

inline const char* atlas_header() {
    return "s_poly,degree,lambda,case,finiteness,witness_count,example_model,projective_types,picard_ranks";
}

struct AtlasRow {
    std::string s_poly;
    int degree = 0;
    std::string lambda;
    std::string case_tag;
    std::string finiteness;
    std::size_t witness_count = 0;
    std::string example_model;
    std::string projective_types;
    std::string picard_ranks;
    Rational lambda_lo;  // sort key
};

/// Twelve-digit truncation d of lambda with d <= lambda < d + 10^-12.
inline std::pair<std::string, Rational> lambda_decimal(const SalemCertificate& s) {
    for (Rational eps(1, pow_int(Int(10), 14));; eps /= 1024) {
        const Interval iv = lambda_approx(s, eps);
        const std::string lo = floor_decimal(iv.lo, 12);
        if (lo == floor_decimal(iv.hi, 12)) return {lo, iv.lo};
    }
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string witness_model_name(const Witness& w) {
    if (count_real_roots(w.p) > 0) {
        const IntPoly g = squarefree_part(w.p);
        return "gl2z(r=" + Int(-g.coeff(1)).get_str() + ";det=" + g.coeff(0).get_str() + ")";
    }
    return "quartic(poly=" + print_poly(w.p) + ";second=" + std::to_string(w.pairing_class) + ")";
}

inline AtlasRow atlas_row(const SalemCertificate& s) {
    const ClassificationReport r = realizable(s);
    AtlasRow row;
    row.s_poly = print_poly(s.s_poly);
    row.degree = s.degree;
    std::tie(row.lambda, row.lambda_lo) = lambda_decimal(s);
    row.case_tag = std::string(to_string(r.case_tag));
    row.finiteness = r.finiteness ? std::string(to_string(r.finiteness->kind)) : "not_realizable";
    row.witness_count = r.witnesses.size();
    if (!r.witnesses.empty()) row.example_model = witness_model_name(r.witnesses.front());
    std::vector<std::string> types;
    for (auto t : r.witnessed_types()) types.emplace_back(to_string(t));
    row.projective_types = join(types, ';');
    std::vector<std::string> ranks;
    for (const auto& [t, rank] : r.picard_ranks) ranks.push_back(std::string(to_string(t)) + "=" + picard_text(rank));
    row.picard_ranks = join(ranks, ';');
    return row;
}

/// Monic reciprocal polynomials of the given even degree with constant
/// term 1 and remaining coefficients in [-bound, bound], in lexicographic order.
inline std::vector<IntPoly> reciprocal_sweep(int degree, long bound) {
    const int half = degree / 2;
    std::vector<long> free(static_cast<std::size_t>(half), -bound);
    std::vector<IntPoly> out;
    for (;;) {
        std::vector<Int> asc(static_cast<std::size_t>(degree + 1), Int(0));
        asc[0] = asc[static_cast<std::size_t>(degree)] = 1;
        for (int i = 1; i <= half; ++i) {
            asc[static_cast<std::size_t>(i)] = free[static_cast<std::size_t>(i - 1)];
            asc[static_cast<std::size_t>(degree - i)] = free[static_cast<std::size_t>(i - 1)];
        }
        out.emplace_back(std::move(asc));
        std::size_t k = 0;
        while (k < free.size() && free[k] == bound) free[k++] = -bound;
        if (k == free.size()) break;
        ++free[k];
    }
    return out;
}

inline std::vector<AtlasRow> atlas(int degree, long max_coeff, unsigned workers = 1) {
    if (degree != 2 && degree != 4 && degree != 6) throw Error(Errc::bad_parameters, "degree must be 2, 4 or 6");
    if (max_coeff < 1) throw Error(Errc::bad_parameters, "max_coeff must be at least 1");
    workers = std::max(1U, workers);
    const std::vector<IntPoly> sweep = reciprocal_sweep(degree, max_coeff);
    std::vector<std::vector<AtlasRow>> parts(workers);
    const auto run = [&](unsigned w) {
        for (std::size_t i = w; i < sweep.size(); i += workers) {
            const SalemResult r = is_salem(sweep[i]);
            if (const auto* c = as_certificate(r)) parts[w].push_back(atlas_row(*c));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::vector<AtlasRow> rows;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(rows));
    std::sort(rows.begin(), rows.end(), [](const AtlasRow& a, const AtlasRow& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.lambda_lo != b.lambda_lo) return a.lambda_lo < b.lambda_lo;
        return a.s_poly < b.s_poly;
    });
    return rows;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string atlas_csv(const std::vector<AtlasRow>& rows) {
    std::ostringstream os;
    os << atlas_header() << '\n';
    for (const auto& r : rows) {
        os << csv_field(r.s_poly) << ',' << r.degree << ',' << r.lambda << ',' << csv_field(r.case_tag) << ','
           << csv_field(r.finiteness) << ',' << r.witness_count << ',' << csv_field(r.example_model) << ','
           << csv_field(r.projective_types) << ',' << csv_field(r.picard_ranks) << '\n';
    }
    return os.str();
}

/// Writes the atlas to `out`, or returns it as text when `out` is empty.
inline CommandOutput cmd_enumerate(int degree, long max_coeff, const std::string& out, unsigned workers = 1) {
    const std::string csv = atlas_csv(atlas(degree, max_coeff, workers));
    if (out.empty()) return {csv, 0};
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(Errc::io_error, "cannot open " + out);
    f << csv;
    if (!f.flush()) throw Error(Errc::io_error, "write failed for " + out);
    return {"", 0};
}

}  // namespace salemtori::cli

#endif

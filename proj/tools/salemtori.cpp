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

// Command-line front end: single-shot reports as JSON and the atlas sweep
// as CSV.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "salemtori/cli.hpp"

namespace st = salemtori;
namespace cli = salemtori::cli;

namespace {

struct Options {
    std::string format = "json";
    std::string eps = "1e-9";
    std::string out;
    unsigned workers = 1;
};

int emit(const cli::CommandOutput& r, const Options& opt) {
    if (opt.out.empty()) {
        std::cout << r.text;
    } else if (!r.text.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw st::Error(st::Errc::io_error, "cannot open " + opt.out);
        f << r.text;
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"salemtori: Salem numbers, exterior squares and automorphisms of complex tori"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--eps", opt.eps, "width of reported entropy intervals");
    app.add_option("--out", opt.out, "write output to this file");
    app.add_option("--workers", opt.workers, "worker threads for enumerate")->check(CLI::Range(1U, 256U));

    std::string poly_text;
    auto* classify = app.add_subcommand("classify", "case, finiteness and witnesses for a Salem polynomial");
    classify->add_option("poly", poly_text, "coefficients, highest degree first")->required();
    auto* is_salem = app.add_subcommand("is-salem", "certify a Salem polynomial");
    is_salem->add_option("poly", poly_text, "coefficients, highest degree first")->required();
    auto* wedge = app.add_subcommand("wedge", "exterior square of a monic quartic");
    wedge->add_option("poly", poly_text, "coefficients, highest degree first")->required();
    auto* invert = app.add_subcommand("invert-wedge", "quartics whose exterior square is a given sextic");
    invert->add_option("poly", poly_text, "coefficients, highest degree first")->required();

    std::string family;
    std::vector<std::string> params;
    auto* construct = app.add_subcommand("construct", "build a torus model: quartic, gl2z, quad-order, sextic or remark52");
    construct->add_option("family", family)->required();
    construct->add_option("params", params, "key=value parameters");
    auto* reorient = app.add_subcommand("reorient", "build a torus model and report its reorientation");
    reorient->add_option("family", family)->required();
    reorient->add_option("params", params, "key=value parameters");

    int degree = 0;
    long max_coeff = 0;
    auto* enumerate = app.add_subcommand("enumerate", "CSV atlas of Salem polynomials of one degree");
    enumerate->add_option("--degree", degree)->required()->check(CLI::IsMember({2, 4, 6}));
    enumerate->add_option("--max-coeff", max_coeff)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const auto eps = st::parse_rational(opt.eps);
        if (!eps || *eps <= 0) {
            std::cerr << "error: --eps must be a positive number\n";
            return 1;
        }
        if (classify->parsed()) return emit(cli::cmd_classify(cli::parse_poly(poly_text)), opt);
        if (is_salem->parsed()) return emit(cli::cmd_is_salem(cli::parse_poly(poly_text)), opt);
        if (wedge->parsed()) return emit(cli::cmd_wedge(cli::parse_poly(poly_text), opt.format == "csv"), opt);
        if (invert->parsed()) return emit(cli::cmd_invert_wedge(cli::parse_poly(poly_text)), opt);
        if (construct->parsed()) return emit(cli::cmd_construct(cli::parse_family(family, params), *eps), opt);
        if (reorient->parsed()) return emit(cli::cmd_reorient(cli::parse_family(family, params), *eps), opt);
        if (enumerate->parsed()) {
            const auto r = cli::cmd_enumerate(degree, max_coeff, opt.out, opt.workers);
            std::cout << r.text;
            return r.exit_code;
        }
    } catch (const cli::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const st::Error& e) {
        std::cout << cli::dump({{"error", std::string(st::to_string(e.code()))}, {"message", e.what()}});
        return 2;
    }
    return 1;
}

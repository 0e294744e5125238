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

#ifndef SALEMTORI_ERROR_HPP
#define SALEMTORI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace salemtori {

/// Machine-readable failure category carried by every library exception.
enum class Errc {
    not_divisible,
    zero_divisor,
    not_monic,
    degree_too_large,
    not_reciprocal,
    odd_degree,
    not_squarefree,
    wrong_degree,
    not_salem_input,
    not_realizable,
    real_roots,
    not_unit,
    not_hyperbolic,
    zero_entropy,
    not_applicable,
    bad_parameters,
    parse_error,
    io_error,
    precision_exhausted,
};

constexpr std::string_view to_string(Errc c) noexcept {
    switch (c) {
        case Errc::not_divisible: return "not_divisible";
        case Errc::zero_divisor: return "zero_divisor";
        case Errc::not_monic: return "not_monic";
        case Errc::degree_too_large: return "degree_too_large";
        case Errc::not_reciprocal: return "not_reciprocal";
        case Errc::odd_degree: return "odd_degree";
        case Errc::not_squarefree: return "not_squarefree";
        case Errc::wrong_degree: return "wrong_degree";
        case Errc::not_salem_input: return "not_salem_input";
        case Errc::not_realizable: return "not_realizable";
        case Errc::real_roots: return "real_roots";
        case Errc::not_unit: return "not_unit";
        case Errc::not_hyperbolic: return "not_hyperbolic";
        case Errc::zero_entropy: return "zero_entropy";
        case Errc::not_applicable: return "not_applicable";
        case Errc::bad_parameters: return "bad_parameters";
        case Errc::parse_error: return "parse_error";
        case Errc::io_error: return "io_error";
        case Errc::precision_exhausted: return "precision_exhausted";
    }
    return "unknown";
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace salemtori

#endif

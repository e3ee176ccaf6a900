/*
   Copyright 2026 The mrdcodes Authors

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

#ifndef MRD_CERTIFICATE_HPP
#define MRD_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mrd/codes.hpp"
#include "mrd/linpoly.hpp"

namespace mrd {

enum class Verdict { mrd, not_mrd, unknown };

std::string_view to_string(Verdict v) noexcept;

/**
 * Outcome of an MRD check on a support code.
 *
 * method is one of scan, moore, trinomial, witness, gcd, gabidulin or curve.
 * A NOT_MRD certificate carries a codeword whose kernel has dimension at
 * least k; an MRD certificate from a scan records how many projective
 * codewords were examined. details holds engine-specific extras (offending
 * t, Moore subsets, curve points) already in JSON form.
 */
struct Certificate {
    explicit Certificate(SupportCode c) : code(std::move(c)) {}

    SupportCode code;
    Verdict verdict = Verdict::unknown;
    std::string method;
    std::optional<LinPoly> witness;
    std::uint64_t scanned = 0;
    double elapsed_ms = 0.0;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

/// Re-checks a certificate without re-running the search: a refutation
/// needs a witness inside the code with kernel_dim >= k.
bool self_validate(const Certificate& cert);

/// (q^{kn} - 1) / (q^n - 1), the number of projective codewords of C_T;
/// nullopt on 64-bit overflow.
std::optional<std::uint64_t> projective_count(std::uint64_t q, std::uint32_t n, std::size_t k);

}  // namespace mrd

#endif  // MRD_CERTIFICATE_HPP

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

#include "mrd/certificate.hpp"

#include <algorithm>

namespace mrd {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::mrd:
            return "MRD";
        case Verdict::not_mrd:
            return "NOT_MRD";
        case Verdict::unknown:
            break;
    }
    return "UNKNOWN";
}

bool self_validate(const Certificate& cert) {
    if (cert.verdict != Verdict::not_mrd) return true;
    if (!cert.witness) return false;
    const LinPoly& w = *cert.witness;
    if (w.tower().get() != cert.code.tower().get() || w.is_zero()) return false;
    const auto e = cert.code.sorted_exponents();
    for (std::uint32_t i = 0; i < w.n(); ++i)
        if (!w.coeff(i).is_zero() && !std::binary_search(e.begin(), e.end(), i)) return false;
    return kernel_dim(w) >= cert.code.k();
}

std::optional<std::uint64_t> projective_count(std::uint64_t q, std::uint32_t n, std::size_t k) {
    // sum_{i<k} q^{n i}
    std::uint64_t qn = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (qn > UINT64_MAX / q) return std::nullopt;
        qn *= q;
    }
    std::uint64_t total = 0, term = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > UINT64_MAX - term) return std::nullopt;
        total += term;
        if (i + 1 < k) {
            if (term > UINT64_MAX / qn) return std::nullopt;
            term *= qn;
        }
    }
    return total;
}

}  // namespace mrd

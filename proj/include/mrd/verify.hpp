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

#ifndef MRD_VERIFY_HPP
#define MRD_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mrd/certificate.hpp"
#include "mrd/codes.hpp"
#include "mrd/field.hpp"
#include "mrd/linpoly.hpp"

namespace mrd {

inline constexpr std::uint64_t kDefaultScanBudget = std::uint64_t{1} << 28;

struct ScanOptions {
    std::uint64_t budget = kDefaultScanBudget;
    /// 0 means one worker per hardware thread.
    unsigned workers = 0;
};

/// True iff gcd(t_i - t_j, n) < k for all i != j. False proves C_T is not MRD.
bool gcd_filter(std::span<const std::uint32_t> T, std::uint32_t n, std::size_t k);

/// X^{q^{e_i}} - X^{q^{e_j}} for the first pair of exponents violating the
/// gcd condition; its kernel is F_{q^{gcd(e_i - e_j, n)}}.
std::optional<LinPoly> gcd_witness(const SupportCode& code);

/**
 * Visits every codeword of C_T whose first nonzero coefficient (in T order)
 * is 1, and reports the first one with kernel dimension >= k. The search is
 * split into chunks by the position of the leading coefficient and a block
 * of values of the next one; the reported witness is the first in
 * sequential order whatever the number of workers.
 */
Certificate exhaustive_scan(const SupportCode& code, const ScanOptions& opt = {});

/**
 * MRD test for C_n = <X, X^q, X^{q^3}>: for every t in F_{q^n}, the roots of
 * Z^{q^2} + Z^q + tZ with trace zero must span at most a line over F_q.
 * budget bounds the number of t values (q^n).
 */
Certificate trinomial_criterion(const TowerPtr& tower, const ScanOptions& opt = {});

/// c in F_{q^3}^* with Tr_{q^3/q}(1/c) = -2 and N_{q^3/q}(1/c) = -1, first in enumeration order.
std::optional<Fel> n9_parameter(const FieldTower& F);

/// -X + (1 + c^{-q}) X^q + c X^{q^2} - X^{q^4} with exponents multiplied by s.
LinPoly n9_polynomial(const TowerPtr& tower, Fel c, std::uint32_t s);

/// Permutation matrix K with K_{i, 7i mod 9} = 1.
Matrix<Fel> n9_conjugator(const FieldTower& F);

/// NOT_MRD certificate for D_s (n = 9, s in {1, 4, 7}) built from the explicit
/// codeword; for s = 4, 7 its Dickson matrix is also checked against the K-conjugates.
Certificate n9_witness(const TowerPtr& tower, std::uint32_t s, const ScanOptions& opt = {});

/// Lexicographically smallest of the n cyclic shifts of T (sorted).
std::vector<std::uint32_t> shift_canonical(std::span<const std::uint32_t> T, std::uint32_t n);
/// Smallest s with T1 + s = T2 (mod n).
std::optional<std::uint32_t> shift_equivalent(std::span<const std::uint32_t> T1, std::span<const std::uint32_t> T2,
                                              std::uint32_t n);
/// Smallest common difference d coprime to n with T a shift of {0, d, ..., (k-1)d}.
std::optional<std::uint32_t> progression_step(std::span<const std::uint32_t> T, std::uint32_t n);

/**
 * Engine selection for a single support code: gcd filter, then the family
 * criteria (trinomial for shifts of {0,1,3}, the explicit witness for the
 * n = 9 codes D_s), then the exhaustive scan.
 */
Certificate verify_code(const SupportCode& code, const ScanOptions& opt = {});

struct CandidateEntry {
    std::vector<std::uint32_t> T;
    bool removed_by_gcd = false;
    bool removed_by_adjoint = false;
    bool removed_by_dual = false;
    std::optional<std::uint32_t> progression;
    /// Canonical support whose verdict this entry inherits.
    std::optional<std::vector<std::uint32_t>> reduced_to;
    Verdict verdict = Verdict::unknown;
    std::optional<Certificate> certificate;
};

struct CandidateList {
    std::uint32_t n = 0;
    std::size_t k = 0;
    std::vector<CandidateEntry> entries;
};

struct ClassifyOptions {
    ScanOptions scan;
    /// Progressions are MRD by the Gabidulin construction; they are scanned
    /// anyway when the scan is no larger than this.
    std::uint64_t progression_scan_limit = std::uint64_t{1} << 22;
};

/// All k-subsets of Z_n up to shift, with redundancy tags and verdicts.
CandidateList classify(const TowerPtr& tower, std::size_t k, const ClassifyOptions& opt = {});

/// (q^n + 1 - q(q-1)(q^2+2))^2 > 4 g^2 q^n with positive left side,
/// g = q(q-1)(q^3-2q-2)/2 + 1, in exact integers.
bool hasse_weil_gap(std::uint64_t q, std::uint32_t n);

}  // namespace mrd

#endif  // MRD_VERIFY_HPP

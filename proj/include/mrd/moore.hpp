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

#ifndef MRD_MOORE_HPP
#define MRD_MOORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mrd/certificate.hpp"
#include "mrd/codes.hpp"
#include "mrd/field.hpp"
#include "mrd/linalg.hpp"

namespace mrd {

/// k x k matrix with entry (i, j) = alpha_i^{q^{s t_j}}.
Matrix<Fel> moore_matrix(const FieldTower& F, std::span<const Fel> A, std::span<const std::uint32_t> T,
                         std::uint32_t s = 1);

Fel moore_det(const FieldTower& F, std::span<const Fel> A, std::span<const std::uint32_t> T, std::uint32_t s = 1);

/**
 * det of the square Moore matrix (s = 1, T = {0..k-1}) as the product of
 * all F_q-combinations alpha_i + c_0 alpha_0 + ... + c_{i-1} alpha_{i-1},
 * one per projective direction with the last nonzero coordinate equal to 1.
 */
Fel moore_product_formula(const FieldTower& F, std::span<const Fel> A);

/// det(M_A) != 0 with T = {0..k-1}; equivalent to A being F_q-independent.
bool independence_criterion(const FieldTower& F, std::span<const Fel> A, std::uint32_t s = 1);

/// Rank over F_q of the span of A (coordinate oracle).
std::size_t fq_rank(const FieldTower& F, std::span<const Fel> A);

/// A nonzero codeword of C_{T,s} vanishing on A (|A| = k), read off the
/// null space of M_{T,A,sigma}; nullopt when that matrix is invertible.
std::optional<LinPoly> vanishing_codeword(const SupportCode& code, std::span<const Fel> A);

/**
 * Decides whether C_{T,s} is MRD by testing det(M_{T,A,sigma}) over all
 * F_q-independent k-subsets A of F_{q^n}, taken up to scaling of each
 * element and up to order. Returns UNKNOWN when the number of subsets
 * exceeds budget.
 */
Certificate mrd_by_moore(const SupportCode& code, std::uint64_t budget = std::uint64_t{1} << 28, unsigned workers = 0);

}  // namespace mrd

#endif  // MRD_MOORE_HPP

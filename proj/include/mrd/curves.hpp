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

#ifndef MRD_CURVES_HPP
#define MRD_CURVES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mrd/certificate.hpp"
#include "mrd/field.hpp"
#include "mrd/verify.hpp"

namespace mrd {

/// H(1, x, y) = (x^q - x^{q^3})(y^q - y) + (y^{q^3} - y^q)(x^q - x).
Fel eval_H(const FieldTower& F, Fel x, Fel y);
/// W(1, x, y) = (x^q - x^{q^2})(y^q - y) + (y^{q^2} - y^q)(x^q - x).
Fel eval_W(const FieldTower& F, Fel x, Fel y);
/// Homogeneous forms: the Moore determinants of (x0, x1, x2) with exponents {0,1,3} and {0,1,2}.
Fel eval_H(const FieldTower& F, Fel x0, Fel x1, Fel x2);
Fel eval_W(const FieldTower& F, Fel x0, Fel x1, Fel x2);

/**
 * V(x, y) = prod_{gamma in F_{q^2} \ F_q} ((x^q - x) - gamma (y^q - y)) + 1,
 * evaluated through the identity
 *   prod_gamma (u - gamma v) = (u^q - u v^{q-1})^{q-1} + v^{q^2-q},
 * which needs no F_{q^2} inside F_{q^n}.
 */
Fel eval_V(const FieldTower& F, Fel x, Fel y);
/// Reference product over gamma; requires n even so that F_{q^2} embeds.
Fel eval_V_product(const FieldTower& F, Fel x, Fel y);

/// Number of affine points (x, y) in F_{q^n}^2 with W = V = 0.
std::uint64_t count_V_cap_W(const FieldTower& F, const ScanOptions& opt = {});

struct InfinityReport {
    std::size_t count = 0;
    /// Multiplicity of each root of V*(X, 1, 0) in F_{q^2}.
    std::vector<std::size_t> multiplicities;
};

/// Roots of V*(X, 1, 0) = prod_gamma (X^q - gamma) in a standalone F_{q^2} = (p, e, 2).
InfinityReport points_at_infinity(std::uint32_t p, std::uint32_t e);

/**
 * C_n is MRD iff H has no F_{q^n}-rational point off W. Scans affine points
 * (the line X_0 = 0 lies on both curves and is checked as well); a point
 * (1 : x : y) of H \ W yields a codeword vanishing on <1, x, y>.
 */
Certificate mrd_via_curve(const TowerPtr& tower, const ScanOptions& opt = {});

struct CurveCount {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint64_t affine_V_cap_W = 0;
    std::size_t points_at_infinity_V = 0;
    /// Affine points of H \ W, at most point_cap of them, as (x, y).
    std::vector<std::pair<Fel, Fel>> H_minus_W_points;
    std::uint64_t H_minus_W_total = 0;
    bool mrd_consistent = false;
};

/// Everything above for one tower; mrd_consistent compares H \ W with the trinomial verdict.
CurveCount curve_count(const TowerPtr& tower, const ScanOptions& opt = {}, std::size_t point_cap = 16);

}  // namespace mrd

#endif  // MRD_CURVES_HPP

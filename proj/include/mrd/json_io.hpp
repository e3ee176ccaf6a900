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

#ifndef MRD_JSON_IO_HPP
#define MRD_JSON_IO_HPP

#include <span>
#include <variant>

#include <json.hpp>

#include "mrd/certificate.hpp"
#include "mrd/codes.hpp"
#include "mrd/curves.hpp"
#include "mrd/field.hpp"
#include "mrd/linpoly.hpp"
#include "mrd/verify.hpp"

namespace mrd {

using json = nlohmann::ordered_json;

/// {"p","e","n","modulus"}; modulus constant term first.
json tower_to_json(const FieldTower& F);
/// Builds the tower from p, e, n. A "modulus" entry, when present, must
/// match the deterministic choice.
TowerPtr tower_from_json(const json& j);

/// F_p coordinate array in the power basis of the modulus.
json element_to_json(const FieldTower& F, Fel x);
Fel element_from_json(const FieldTower& F, const json& j);
json elements_to_json(const FieldTower& F, std::span<const Fel> xs);

/// Array of n coefficient arrays.
json poly_to_json(const LinPoly& f);
/// Accepts the dense array form or {"terms":[{"i":..,"c":..}, ...]}.
LinPoly poly_from_json(const TowerPtr& tower, const json& j);

json code_to_json(const SupportCode& c);
json code_to_json(const GeneralCode& c);
std::variant<SupportCode, GeneralCode> code_from_json(const TowerPtr& tower, const json& j);

json certificate_to_json(const Certificate& cert);

/// {"A","T","s","det"}.
json moore_witness_json(const FieldTower& F, std::span<const Fel> A, std::span<const std::uint32_t> T,
                        std::uint32_t s, Fel det);

json idealiser_to_json(const IdealiserReport& rep);
json candidate_list_to_json(const FieldTower& F, const CandidateList& list);
json curve_count_to_json(const FieldTower& F, const CurveCount& cc);

}  // namespace mrd

#endif  // MRD_JSON_IO_HPP

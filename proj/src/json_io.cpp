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

#include "mrd/json_io.hpp"

#include <stdexcept>

namespace mrd {

json tower_to_json(const FieldTower& F) {
    json j;
    j["p"] = F.p();
    j["e"] = F.e();
    j["n"] = F.n();
    j["modulus"] = F.modulus();
    return j;
}

TowerPtr tower_from_json(const json& j) {
    auto t = make_tower(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>(), j.at("n").get<std::uint32_t>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != t->modulus())
        throw std::invalid_argument("tower_from_json: modulus differs from the deterministic choice");
    return t;
}

json element_to_json(const FieldTower& F, Fel x) { return F.coords(x); }

Fel element_from_json(const FieldTower& F, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("element_from_json: expected a coordinate array");
    auto c = j.get<std::vector<std::int64_t>>();
    if (c.size() > F.degree()) throw std::invalid_argument("element_from_json: too many coordinates");
    std::vector<std::uint32_t> coords(F.degree(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t p = F.p();
        coords[i] = static_cast<std::uint32_t>(((c[i] % p) + p) % p);
    }
    return F.from_coords(coords);
}

json elements_to_json(const FieldTower& F, std::span<const Fel> xs) {
    json a = json::array();
    for (Fel x : xs) a.push_back(element_to_json(F, x));
    return a;
}

json poly_to_json(const LinPoly& f) { return elements_to_json(f.field(), f.coeffs()); }

LinPoly poly_from_json(const TowerPtr& tower, const json& j) {
    LinPoly f(tower);
    if (j.is_array()) {
        if (j.size() != tower->n()) throw std::invalid_argument("poly_from_json: expected n coefficients");
        for (std::size_t i = 0; i < j.size(); ++i) f.set_coeff(i, element_from_json(*tower, j[i]));
        return f;
    }
    if (j.is_object() && j.contains("terms")) {
        for (const auto& term : j.at("terms")) {
            const auto i = term.at("i").get<std::int64_t>();
            const std::int64_t n = tower->n();
            const auto idx = static_cast<std::size_t>(((i % n) + n) % n);
            f.set_coeff(idx, tower->add(f.coeff(idx), element_from_json(*tower, term.at("c"))));
        }
        return f;
    }
    throw std::invalid_argument("poly_from_json: expected an array or a {\"terms\": [...]} object");
}

json code_to_json(const SupportCode& c) {
    json j;
    j["kind"] = "support";
    j["T"] = c.support();
    j["s"] = c.s();
    return j;
}

json code_to_json(const GeneralCode& c) {
    json j;
    j["kind"] = "general";
    j["basis"] = json::array();
    for (const auto& b : c.basis()) j["basis"].push_back(poly_to_json(b));
    return j;
}

std::variant<SupportCode, GeneralCode> code_from_json(const TowerPtr& tower, const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "support")
        return SupportCode(tower, j.at("T").get<std::vector<std::uint32_t>>(), j.value("s", std::uint32_t{1}));
    if (kind == "general") {
        std::vector<LinPoly> basis;
        for (const auto& b : j.at("basis")) basis.push_back(poly_from_json(tower, b));
        return GeneralCode(tower, std::move(basis));
    }
    throw std::invalid_argument("code_from_json: unknown kind " + kind);
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["code"] = code_to_json(cert.code);
    j["verdict"] = std::string(to_string(cert.verdict));
    j["method"] = cert.method;
    j["witness"] = cert.witness ? poly_to_json(*cert.witness) : json(nullptr);
    if (cert.witness) j["witness_kernel_dim"] = kernel_dim(*cert.witness);
    j["scanned"] = cert.scanned;
    j["tower"] = tower_to_json(cert.code.field());
    j["elapsed_ms"] = cert.elapsed_ms;
    if (!cert.details.empty()) j["details"] = cert.details;
    return j;
}

json moore_witness_json(const FieldTower& F, std::span<const Fel> A, std::span<const std::uint32_t> T,
                        std::uint32_t s, Fel det) {
    json j;
    j["A"] = elements_to_json(F, A);
    j["T"] = std::vector<std::uint32_t>(T.begin(), T.end());
    j["s"] = s;
    j["det"] = element_to_json(F, det);
    return j;
}

json idealiser_to_json(const IdealiserReport& rep) {
    json j;
    j["side"] = rep.side == Side::left ? "left" : "right";
    j["fq_dimension"] = rep.fq_dimension;
    j["is_field"] = rep.is_field;
    j["is_max"] = rep.is_max;
    return j;
}

json candidate_list_to_json(const FieldTower& F, const CandidateList& list) {
    json j;
    j["tower"] = tower_to_json(F);
    j["n"] = list.n;
    j["k"] = list.k;
    j["entries"] = json::array();
    for (const auto& e : list.entries) {
        json je;
        je["T"] = e.T;
        je["removed_by_gcd"] = e.removed_by_gcd;
        je["removed_by_adjoint"] = e.removed_by_adjoint;
        je["removed_by_dual"] = e.removed_by_dual;
        je["progression"] = e.progression ? json(*e.progression) : json(nullptr);
        je["reduced_to"] = e.reduced_to ? json(*e.reduced_to) : json(nullptr);
        je["verdict"] = std::string(to_string(e.verdict));
        if (e.certificate) je["certificate"] = certificate_to_json(*e.certificate);
        j["entries"].push_back(std::move(je));
    }
    return j;
}

json curve_count_to_json(const FieldTower& F, const CurveCount& cc) {
    json j;
    j["q"] = cc.q;
    j["n"] = cc.n;
    j["affine_V_cap_W"] = cc.affine_V_cap_W;
    j["points_at_infinity_V"] = cc.points_at_infinity_V;
    j["H_minus_W_total"] = cc.H_minus_W_total;
    j["H_minus_W_points"] = json::array();
    for (auto [x, y] : cc.H_minus_W_points) {
        const Fel pt[] = {F.one(), x, y};  // (X_0 : X_1 : X_2)
        j["H_minus_W_points"].push_back(elements_to_json(F, pt));
    }
    j["mrd_consistent"] = cc.mrd_consistent;
    return j;
}

}  // namespace mrd

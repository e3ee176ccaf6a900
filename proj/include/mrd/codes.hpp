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

#ifndef MRD_CODES_HPP
#define MRD_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mrd/field.hpp"
#include "mrd/linpoly.hpp"

namespace mrd {

/**
 * C_{T,s} = { sum_i a_i X^{q^{s t_i}} : a_i in F_{q^n} }.
 *
 * T is the support in sigma-exponents (sigma = q^s); the actual Frobenius
 * exponents are s*t mod n. T is kept sorted.
 */
class SupportCode {
   public:
    SupportCode(TowerPtr tower, std::vector<std::uint32_t> support, std::uint32_t s = 1);

    const TowerPtr& tower() const noexcept { return tower_; }
    const FieldTower& field() const noexcept { return *tower_; }
    std::uint32_t n() const noexcept { return tower_->n(); }
    std::size_t k() const noexcept { return support_.size(); }
    std::uint32_t s() const noexcept { return s_; }
    const std::vector<std::uint32_t>& support() const noexcept { return support_; }

    /// s*t mod n for each t in T, in T order.
    std::vector<std::uint32_t> exponents() const;
    /// Same set, sorted.
    std::vector<std::uint32_t> sorted_exponents() const;

    /// Codeword sum_i a[i] X^{q^{s t_i}}.
    LinPoly codeword(std::span<const Fel> a) const;

    friend bool operator==(const SupportCode& a, const SupportCode& b) noexcept {
        return a.tower_.get() == b.tower_.get() && a.sorted_exponents() == b.sorted_exponents();
    }

   private:
    TowerPtr tower_;
    std::vector<std::uint32_t> support_;
    std::uint32_t s_;
};

/// An F_q-subspace of L_{n,q}[X] given by an F_q-independent basis.
class GeneralCode {
   public:
    /// Throws std::invalid_argument if the basis is F_q-dependent.
    GeneralCode(TowerPtr tower, std::vector<LinPoly> basis);
    /// Extracts an independent basis from an arbitrary spanning list.
    static GeneralCode span(TowerPtr tower, const std::vector<LinPoly>& gens);

    const TowerPtr& tower() const noexcept { return tower_; }
    const FieldTower& field() const noexcept { return *tower_; }
    std::uint32_t n() const noexcept { return tower_->n(); }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<LinPoly>& basis() const noexcept { return basis_; }

    /// d x n^2 matrix over F_q whose rows are the coordinates of the basis.
    Matrix<Fel> generator_matrix() const;

   private:
    TowerPtr tower_;
    std::vector<LinPoly> basis_;
};

/// Coordinates of f over F_q: entry i*n + j is the j-th q-coordinate of c_i.
std::vector<Fel> poly_coords(const LinPoly& f);
LinPoly poly_from_coords(const TowerPtr& tower, std::span<const Fel> v);

/// Generalized Gabidulin code, sigma-support {0, ..., k-1}.
SupportCode gabidulin(TowerPtr tower, std::uint32_t k, std::uint32_t s = 1);

/// C7, C7', C8, C8', Cn (T = {0,1,3}) and Ds (n = 9, T = {0,1,2,4} with twist s).
SupportCode named_family(std::string_view name, TowerPtr tower, std::uint32_t s = 1);

GeneralCode to_general(const SupportCode& c);
bool contains(const GeneralCode& c, const LinPoly& f);
/// Same F_q-subspace.
bool same_code(const GeneralCode& a, const GeneralCode& b);

/// Tr_{q^n/q}(sum_i a_i b_i).
Fel bilinear_form(const LinPoly& f, const LinPoly& g);

GeneralCode delsarte_dual(const GeneralCode& c);
/// Complement rule: the dual of C_T is C_{T^c}.
SupportCode delsarte_dual(const SupportCode& c);

GeneralCode adjoint_code(const GeneralCode& c);
/// Reflection rule: {0} together with n - t for the nonzero t in T.
SupportCode adjoint_code(const SupportCode& c);

enum class Side { left, right };

struct IdealiserReport {
    Side side = Side::left;
    std::size_t fq_dimension = 0;
    bool is_field = false;
    bool is_max = false;
    std::vector<LinPoly> basis;
};

/// Left: { phi : f o phi in C for all f in C }. Right: { phi : phi o f in C }.
IdealiserReport idealiser(const GeneralCode& c, Side side);

/// Minimum rank over nonzero codewords by enumerating projective
/// codewords; BudgetExceeded when q^d exceeds the cap.
std::size_t min_distance(const GeneralCode& c, std::uint64_t cap = std::uint64_t{1} << 26);

}  // namespace mrd

#endif  // MRD_CODES_HPP

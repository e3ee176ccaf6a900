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

#ifndef MRD_LINPOLY_HPP
#define MRD_LINPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mrd/field.hpp"
#include "mrd/linalg.hpp"

namespace mrd {

/// A q-polynomial sum_{i<n} c_i X^{q^i} over F_{q^n}, i.e. an F_q-linear
/// endomorphism of F_{q^n}. Always holds exactly n coefficients.
class LinPoly {
   public:
    explicit LinPoly(TowerPtr tower);
    LinPoly(TowerPtr tower, std::vector<Fel> coeffs);

    /// c X^{q^i}, exponent taken mod n.
    static LinPoly monomial(TowerPtr tower, Fel c, std::int64_t i);
    static LinPoly identity(TowerPtr tower);
    /// Tr_{q^n/q} as the polynomial X + X^q + ... + X^{q^{n-1}}.
    static LinPoly trace(TowerPtr tower);

    const FieldTower& field() const noexcept { return *tower_; }
    const TowerPtr& tower() const noexcept { return tower_; }
    std::size_t n() const noexcept { return coeffs_.size(); }
    std::span<const Fel> coeffs() const noexcept { return coeffs_; }
    Fel coeff(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, Fel c) { coeffs_.at(i) = c; }
    bool is_zero() const noexcept;

    LinPoly operator+(const LinPoly& o) const;
    LinPoly operator-(const LinPoly& o) const;
    LinPoly operator-() const;
    /// (aX) o f.
    LinPoly scaled(Fel a) const;

    friend bool operator==(const LinPoly& a, const LinPoly& b) noexcept {
        return a.tower_.get() == b.tower_.get() && a.coeffs_ == b.coeffs_;
    }

   private:
    void check_same(const LinPoly& o) const;

    TowerPtr tower_;
    std::vector<Fel> coeffs_;
};

Fel eval(const LinPoly& f, Fel x);

/// f o g reduced modulo X^{q^n} - X.
LinPoly compose(const LinPoly& f, const LinPoly& g);

/// The adjoint sum a_i^{q^{n-i}} X^{q^{n-i}} with respect to Tr(xy).
LinPoly adjoint(const LinPoly& f);

/// Dickson (q-circulant) matrix, entry (i,j) = c_{(j-i) mod n}^{q^i}.
Matrix<Fel> dickson(const LinPoly& f);

/// Rank of f as an F_q-linear map, via elimination on its Dickson matrix.
std::size_t rank(const LinPoly& f);
std::size_t kernel_dim(const LinPoly& f);

inline constexpr std::size_t kSmallDickson = 16;

/// Rank of the Dickson matrix built from raw coefficients; allocation-free
/// for n <= kSmallDickson. This is the kernel used by the search engines.
std::size_t dickson_rank(const FieldTower& field, std::span<const Fel> coeffs);

/// Rank of the n x n row-major matrix m, destroying it. Stops as soon as
/// the rank reaches stop_at, in which case the result equals stop_at.
std::size_t rank_in_place(const FieldTower& field, Fel* m, std::size_t n, std::size_t stop_at = SIZE_MAX);

/// Matrix of f over F_q in the basis q_basis(): column j holds q_coords(f(b_j)).
Matrix<Fel> fq_matrix(const LinPoly& f);

/// F_q-basis of ker f, obtained from the F_q matrix.
std::vector<Fel> kernel_basis(const LinPoly& f);

/// Some x with f(x) = y, if one exists.
std::optional<Fel> preimage(const LinPoly& f, Fel y);

/// All roots by enumerating the field (brute-force oracle; BudgetExceeded above the cap).
std::vector<Fel> roots(const LinPoly& f);

}  // namespace mrd

#endif  // MRD_LINPOLY_HPP

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

#ifndef MRD_FIELD_HPP
#define MRD_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "mrd/linalg.hpp"

namespace mrd {

/// Element of a FieldTower. The raw word is only meaningful together with
/// the tower that produced it; use FieldTower::coords for a portable form.
/// A default-constructed Fel is zero in every tower.
struct Fel {
    std::uint64_t raw = 0;

    constexpr bool is_zero() const noexcept { return raw == 0; }
    friend constexpr auto operator<=>(const Fel&, const Fel&) = default;
};

/// Raised when an enumeration or search would exceed its configured cap.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/**
 * The tower F_p < F_q < F_{q^n}, q = p^e, realised as F_p[X]/(m(X)) where m is
 * the lexicographically smallest monic irreducible polynomial of degree e*n
 * (coefficients compared constant term first).
 *
 * Fields with at most table_cap elements keep logarithm and Zech tables and
 * store elements as shifted discrete logarithms; larger fields fall back to
 * table-free arithmetic on base-p coordinate words. Both modes expose the
 * same interface and agree on coords().
 *
 * Immutable after construction and safe to share between threads.
 */
class FieldTower {
   public:
    using element_type = Fel;

    static constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 24;
    static constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;

    FieldTower(std::uint32_t p, std::uint32_t e, std::uint32_t n, std::uint64_t table_cap = kDefaultTableCap);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t n() const noexcept { return n_; }
    /// e*n, the degree over the prime field.
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint64_t q() const noexcept { return q_; }
    /// q^n, the number of elements.
    std::uint64_t order() const noexcept { return order_; }
    bool tabled() const noexcept { return tabled_; }
    /// Coefficients c_0..c_{en} of the modulus, constant term first.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// Residue class of X.
    Fel generator() const noexcept { return generator_; }
    /// Ordered F_q-basis {1, g, ..., g^{n-1}}.
    const std::vector<Fel>& q_basis() const noexcept { return q_basis_; }
    /// F_p-basis of the embedded subfield F_q.
    const std::vector<Fel>& subfield_basis() const noexcept { return subfield_basis_; }

    Fel zero() const noexcept { return {}; }
    Fel one() const noexcept { return one_; }
    bool is_zero(Fel a) const noexcept { return a.raw == 0; }
    /// Image of the integer k in the prime field.
    Fel from_int(std::int64_t k) const;

    Fel add(Fel a, Fel b) const noexcept {
        if (!tabled_) return add_slow(a, b);
        if (a.raw == 0) return b;
        if (b.raw == 0) return a;
        const std::uint64_t la = a.raw - 1, lb = b.raw - 1;
        const std::uint64_t d = lb >= la ? lb - la : lb + group_order_ - la;
        const std::uint32_t z = zech_[d];
        if (z == 0) return {};
        std::uint64_t r = la + z - 1;
        if (r >= group_order_) r -= group_order_;
        return {r + 1};
    }
    Fel neg(Fel a) const noexcept {
        if (p_ == 2 || a.raw == 0) return a;
        if (!tabled_) return neg_slow(a);
        std::uint64_t r = a.raw - 1 + group_order_ / 2;
        if (r >= group_order_) r -= group_order_;
        return {r + 1};
    }
    Fel sub(Fel a, Fel b) const noexcept { return add(a, neg(b)); }
    Fel mul(Fel a, Fel b) const noexcept {
        if (a.raw == 0 || b.raw == 0) return {};
        if (!tabled_) return mul_slow(a, b);
        std::uint64_t r = (a.raw - 1) + (b.raw - 1);
        if (r >= group_order_) r -= group_order_;
        return {r + 1};
    }
    Fel inv(Fel a) const {
        if (a.raw == 0) throw std::domain_error("FieldTower: inverse of zero");
        if (!tabled_) return pow(a, order_ - 2);
        return {a.raw == 1 ? 1 : group_order_ - (a.raw - 1) + 1};
    }
    Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
    Fel pow(Fel a, std::uint64_t k) const noexcept;

    /// x^(q^i), i taken modulo n (negative i allowed).
    Fel frobenius_q(Fel x, std::int64_t i) const noexcept {
        if (x.raw == 0) return x;
        std::int64_t r = i % static_cast<std::int64_t>(n_);
        if (r < 0) r += n_;
        if (r == 0) return x;
        if (!tabled_) return frobenius_slow(x, static_cast<std::uint64_t>(r) * e_);
        const std::uint64_t l = (x.raw - 1) * q_pow_log_[r] % group_order_;
        return {l + 1};
    }
    /// x^p.
    Fel frobenius_p(Fel x) const noexcept;

    /// Tr_{q^n/q}(x) = x + x^q + ... + x^{q^{n-1}}.
    Fel rel_trace(Fel x) const noexcept;
    /// N_{q^n/q}(x) = x^{1+q+...+q^{n-1}}.
    Fel rel_norm(Fel x) const noexcept;
    bool in_subfield_q(Fel x) const noexcept { return frobenius_q(x, 1) == x; }

    /// Coordinates over F_p in the power basis of X, length e*n.
    std::vector<std::uint32_t> coords(Fel x) const;
    Fel from_coords(std::span<const std::uint32_t> c) const;
    /// Coordinates over F_q with respect to q_basis(); entries lie in the embedded F_q.
    std::vector<Fel> q_coords(Fel x) const;
    Fel from_q_coords(std::span<const Fel> c) const;

    /// k-th element in lexicographic order of coords (first coordinate most significant).
    Fel element_at(std::uint64_t k) const;
    /// Every element once, lexicographic on coords. Throws BudgetExceeded above kEnumerationCap.
    std::vector<Fel> enumerate_field() const;
    /// The q elements of the embedded F_q, lexicographic on coords.
    const std::vector<Fel>& enumerate_subfield_q() const noexcept { return subfield_elements_; }
    /// Position of a subfield element within enumerate_subfield_q(), or -1.
    std::int64_t subfield_index(Fel x) const noexcept;

    /// Dense base-p index (coefficient of X^i is digit i). Bijective on elements.
    std::uint64_t to_index(Fel x) const noexcept {
        if (!tabled_) return x.raw;
        return x.raw == 0 ? 0 : index_of_log_[x.raw - 1];
    }
    Fel from_index(std::uint64_t idx) const noexcept {
        if (!tabled_) return {idx};
        return {log_of_index_[idx]};
    }

   private:
    Fel add_slow(Fel a, Fel b) const noexcept;
    Fel neg_slow(Fel a) const noexcept;
    Fel mul_slow(Fel a, Fel b) const noexcept;
    Fel frobenius_slow(Fel x, std::uint64_t p_powers) const noexcept;
    void build_tables(std::uint64_t primitive_index);
    std::uint64_t find_primitive_index() const;
    std::vector<std::uint32_t> digits(std::uint64_t idx) const;
    std::uint64_t undigits(std::span<const std::uint32_t> d) const;
    std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const;

    std::uint32_t p_, e_, n_, degree_;
    std::uint64_t q_, order_, group_order_;
    bool tabled_ = false;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> p_pow_;
    Fel one_, generator_;

    // x -> x^p as an F_p-linear map on coordinates; column j is (X^j)^p.
    Matrix<std::uint32_t> frob_p_;
    // Tabled mode: raw = 1 + log_g(x), raw 0 is zero.
    std::vector<std::uint32_t> log_of_index_;
    std::vector<std::uint32_t> index_of_log_;
    std::vector<std::uint32_t> zech_;
    std::vector<std::uint64_t> q_pow_log_;

    std::vector<Fel> subfield_basis_;
    std::vector<Fel> subfield_elements_;
    std::vector<Fel> q_basis_;
    // Maps F_p coordinates to coordinates in the basis {f_a g^j}, index a*n + j.
    Matrix<std::uint32_t> to_product_basis_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Deterministic tower for F_p < F_{p^e} < F_{p^{en}}.
TowerPtr make_tower(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                    std::uint64_t table_cap = FieldTower::kDefaultTableCap);

/// Splits a prime power q = p^e; throws for anything else.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

bool is_prime(std::uint64_t v) noexcept;

}  // namespace mrd

#endif  // MRD_FIELD_HPP

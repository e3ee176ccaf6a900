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

#include "mrd/field.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace mrd {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, const PrimeField& fp) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const auto lead_inv = fp.inv(f.back());
    while (a.size() > df) {
        const auto c = fp.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = fp.sub(a[shift + i], fp.mul(c, f[i]));
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, const PrimeField& fp) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fp.add(r[i + j], fp.mul(a[i], b[j]));
    }
    return poly_mod(std::move(r), f, fp);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& f, const PrimeField& fp) {
    Poly r{1};
    base = poly_mod(std::move(base), f, fp);
    while (k) {
        if (k & 1) r = poly_mulmod(r, base, f, fp);
        base = poly_mulmod(base, base, f, fp);
        k >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& fp) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, fp);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= v / d; ++d) {
        if (v % d) continue;
        out.push_back(d);
        while (v % d == 0) v /= d;
    }
    if (v > 1) out.push_back(v);
    return out;
}

// Rabin's test: f (monic, degree m) is irreducible iff X^{p^m} = X mod f and
// gcd(X^{p^{m/r}} - X, f) = 1 for every prime r dividing m.
bool is_irreducible(const Poly& f, const PrimeField& fp) {
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    if (f[0] == 0) return false;
    const auto rs = prime_factors(m);
    std::vector<std::size_t> checkpoints;
    for (auto r : rs) checkpoints.push_back(m / r);
    Poly h{0, 1};
    for (std::size_t i = 1; i <= m; ++i) {
        h = poly_powmod(h, fp.characteristic(), f, fp);
        if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
            Poly diff = h;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = fp.sub(diff[1], 1);
            if (poly_gcd(diff, f, fp).size() != 1) return false;
        }
    }
    Poly x{0, 1};
    trim(h);
    return h == x;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t m) {
    const PrimeField fp(p);
    Poly f(m + 1, 0);
    f[m] = 1;
    // Odometer over (c_0, ..., c_{m-1}) with c_0 most significant. For m > 1
    // every candidate with c_0 = 0 is divisible by X, so start at c_0 = 1.
    if (m > 1) f[0] = 1;
    while (true) {
        if (is_irreducible(f, fp)) return f;
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++f[i] < p) break;
            f[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

}  // namespace

bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d <= v / d; ++d)
        if (v % d == 0) return false;
    return true;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
        if (d > q / d) {
            p = q;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    return {static_cast<std::uint32_t>(p), e};
}

FieldTower::FieldTower(std::uint32_t p, std::uint32_t e, std::uint32_t n, std::uint64_t table_cap)
    : p_(p), e_(e), n_(n), degree_(e * n) {
    if (!is_prime(p)) throw std::invalid_argument("FieldTower: p = " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw std::invalid_argument("FieldTower: p too large");
    if (e == 0 || n == 0) throw std::invalid_argument("FieldTower: e and n must be positive");
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        acc *= p;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::invalid_argument("FieldTower: p^(e*n) exceeds 64 bits");
    }
    order_ = static_cast<std::uint64_t>(acc);
    group_order_ = order_ - 1;
    q_ = 1;
    for (std::uint32_t i = 0; i < e_; ++i) q_ *= p_;
    p_pow_.resize(degree_ + 1);
    p_pow_[0] = 1;
    for (std::uint32_t i = 1; i <= degree_; ++i)
        p_pow_[i] = i < degree_ ? p_pow_[i - 1] * p_ : 0;  // p^{en} may not fit

    modulus_ = smallest_irreducible(p_, degree_);

    // Residue of X, as a dense index.
    std::uint64_t x_index;
    if (degree_ >= 2) {
        x_index = p_;
    } else {
        x_index = modulus_[0] == 0 ? 0 : p_ - modulus_[0];
    }

    frob_p_ = Matrix<std::uint32_t>(degree_, degree_, 0);
    {
        const PrimeField fp(p_);
        for (std::uint32_t j = 0; j < degree_; ++j) {
            Poly xj(j + 1, 0);
            xj[j] = 1;
            Poly r = poly_powmod(xj, p_, modulus_, fp);
            for (std::size_t i = 0; i < r.size(); ++i) frob_p_(i, j) = r[i];
        }
    }

    if (order_ <= table_cap) {
        tabled_ = true;
        build_tables(find_primitive_index());
    }
    one_ = from_index(1);
    generator_ = from_index(x_index);

    // F_q as the fixed points of x -> x^{p^e}.
    const PrimeField fp(p_);
    Matrix<std::uint32_t> fe(degree_, degree_, 0);
    for (std::uint32_t i = 0; i < degree_; ++i) fe(i, i) = 1;
    for (std::uint32_t k = 0; k < e_; ++k) {
        Matrix<std::uint32_t> next(degree_, degree_, 0);
        for (std::uint32_t i = 0; i < degree_; ++i)
            for (std::uint32_t l = 0; l < degree_; ++l) {
                if (frob_p_(i, l) == 0) continue;
                for (std::uint32_t j = 0; j < degree_; ++j)
                    next(i, j) = fp.add(next(i, j), fp.mul(frob_p_(i, l), fe(l, j)));
            }
        fe = std::move(next);
    }
    for (std::uint32_t i = 0; i < degree_; ++i) fe(i, i) = fp.sub(fe(i, i), 1);
    for (const auto& v : nullspace(fe, fp)) subfield_basis_.push_back(from_coords(v));
    if (subfield_basis_.size() != e_) throw std::logic_error("FieldTower: subfield has wrong dimension");

    // All F_p-combinations of the subfield basis, sorted lexicographically on coords.
    if (q_ <= kEnumerationCap) {
        std::vector<std::pair<std::vector<std::uint32_t>, Fel>> sub;
        std::vector<std::uint32_t> combo(e_, 0);
        while (true) {
            Fel x{};
            for (std::uint32_t a = 0; a < e_; ++a) x = add(x, mul(from_int(combo[a]), subfield_basis_[a]));
            sub.emplace_back(coords(x), x);
            std::uint32_t a = 0;
            while (a < e_ && ++combo[a] == p_) combo[a++] = 0;
            if (a == e_) break;
        }
        std::sort(sub.begin(), sub.end());
        for (auto& [c, x] : sub) subfield_elements_.push_back(x);
    }

    q_basis_.push_back(one_);
    for (std::uint32_t j = 1; j < n_; ++j) q_basis_.push_back(mul(q_basis_.back(), generator_));

    Matrix<std::uint32_t> b(degree_, degree_, 0);
    for (std::uint32_t a = 0; a < e_; ++a)
        for (std::uint32_t j = 0; j < n_; ++j) {
            const auto c = coords(mul(subfield_basis_[a], q_basis_[j]));
            for (std::uint32_t i = 0; i < degree_; ++i) b(i, a * n_ + j) = c[i];
        }
    try {
        to_product_basis_ = inverse(b, fp);
    } catch (const std::domain_error&) {
        throw std::logic_error("FieldTower: power basis of the generator does not span over F_q");
    }

    if (tabled_) {
        q_pow_log_.resize(n_);
        std::uint64_t qp = 1 % group_order_;
        for (std::uint32_t i = 0; i < n_; ++i) {
            q_pow_log_[i] = qp;
            qp = static_cast<std::uint64_t>(static_cast<unsigned __int128>(qp) * q_ % group_order_);
        }
    }
}

std::vector<std::uint32_t> FieldTower::digits(std::uint64_t idx) const {
    std::vector<std::uint32_t> d(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) {
        d[i] = static_cast<std::uint32_t>(idx % p_);
        idx /= p_;
    }
    return d;
}

std::uint64_t FieldTower::undigits(std::span<const std::uint32_t> d) const {
    std::uint64_t idx = 0;
    for (std::size_t i = d.size(); i > 0; --i) idx = idx * p_ + d[i - 1];
    return idx;
}

std::uint64_t FieldTower::mul_index(std::uint64_t a, std::uint64_t b) const {
    const PrimeField fp(p_);
    Poly pa = digits(a), pb = digits(b);
    Poly r = poly_mulmod(pa, pb, modulus_, fp);
    r.resize(degree_, 0);
    return undigits(r);
}

Fel FieldTower::add_slow(Fel a, Fel b) const noexcept {
    if (p_ == 2) return {a.raw ^ b.raw};
    std::uint64_t x = a.raw, y = b.raw, r = 0;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        std::uint64_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        r += s * p_pow_[i];
        x /= p_;
        y /= p_;
    }
    return {r};
}

Fel FieldTower::neg_slow(Fel a) const noexcept {
    std::uint64_t x = a.raw, r = 0;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        const std::uint64_t d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * p_pow_[i];
        x /= p_;
    }
    return {r};
}

Fel FieldTower::mul_slow(Fel a, Fel b) const noexcept { return {mul_index(a.raw, b.raw)}; }

Fel FieldTower::pow(Fel a, std::uint64_t k) const noexcept {
    if (k == 0) return one_;
    if (a.raw == 0) return a;
    if (tabled_) {
        const auto l = static_cast<unsigned __int128>(a.raw - 1) * (k % group_order_) % group_order_;
        return {static_cast<std::uint64_t>(l) + 1};
    }
    Fel r = one_;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

Fel FieldTower::frobenius_slow(Fel x, std::uint64_t p_powers) const noexcept {
    const PrimeField fp(p_);
    auto c = digits(x.raw);
    std::vector<std::uint32_t> next(degree_);
    for (std::uint64_t k = 0; k < p_powers % degree_; ++k) {
        std::fill(next.begin(), next.end(), 0);
        for (std::uint32_t j = 0; j < degree_; ++j) {
            if (c[j] == 0) continue;
            for (std::uint32_t i = 0; i < degree_; ++i) next[i] = fp.add(next[i], fp.mul(frob_p_(i, j), c[j]));
        }
        c.swap(next);
    }
    return {undigits(c)};
}

Fel FieldTower::frobenius_p(Fel x) const noexcept {
    if (x.raw == 0) return x;
    if (!tabled_) return frobenius_slow(x, 1);
    return {(x.raw - 1) * p_ % group_order_ + 1};
}

Fel FieldTower::rel_trace(Fel x) const noexcept {
    Fel t{};
    for (std::uint32_t i = 0; i < n_; ++i) t = add(t, frobenius_q(x, i));
    return t;
}

Fel FieldTower::rel_norm(Fel x) const noexcept {
    Fel t = one_;
    for (std::uint32_t i = 0; i < n_; ++i) t = mul(t, frobenius_q(x, i));
    return t;
}

Fel FieldTower::from_int(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return from_index(static_cast<std::uint64_t>(r));
}

std::vector<std::uint32_t> FieldTower::coords(Fel x) const { return digits(to_index(x)); }

Fel FieldTower::from_coords(std::span<const std::uint32_t> c) const {
    if (c.size() != degree_) throw std::invalid_argument("FieldTower::from_coords: expected " +
                                                         std::to_string(degree_) + " coordinates");
    for (auto v : c)
        if (v >= p_) throw std::invalid_argument("FieldTower::from_coords: coordinate out of range");
    return from_index(undigits(c));
}

std::vector<Fel> FieldTower::q_coords(Fel x) const {
    const PrimeField fp(p_);
    const auto c = coords(x);
    std::vector<Fel> out(n_, Fel{});
    for (std::uint32_t a = 0; a < e_; ++a)
        for (std::uint32_t j = 0; j < n_; ++j) {
            std::uint32_t mu = 0;
            const auto row = to_product_basis_.row(a * n_ + j);
            for (std::uint32_t i = 0; i < degree_; ++i) mu = fp.add(mu, fp.mul(row[i], c[i]));
            if (mu) out[j] = add(out[j], mul(from_int(mu), subfield_basis_[a]));
        }
    return out;
}

Fel FieldTower::from_q_coords(std::span<const Fel> c) const {
    if (c.size() != n_) throw std::invalid_argument("FieldTower::from_q_coords: expected n coordinates");
    Fel x{};
    for (std::uint32_t j = 0; j < n_; ++j) x = add(x, mul(c[j], q_basis_[j]));
    return x;
}

Fel FieldTower::element_at(std::uint64_t k) const {
    if (k >= order_) throw std::out_of_range("FieldTower::element_at: index out of range");
    std::vector<std::uint32_t> c(degree_);
    for (std::uint32_t i = degree_; i > 0; --i) {
        c[i - 1] = static_cast<std::uint32_t>(k % p_);
        k /= p_;
    }
    return from_index(undigits(c));
}

std::vector<Fel> FieldTower::enumerate_field() const {
    if (order_ > kEnumerationCap)
        throw BudgetExceeded("field of order " + std::to_string(order_) + " exceeds the enumeration cap");
    std::vector<Fel> out;
    out.reserve(order_);
    for (std::uint64_t k = 0; k < order_; ++k) out.push_back(element_at(k));
    return out;
}

std::int64_t FieldTower::subfield_index(Fel x) const noexcept {
    for (std::size_t i = 0; i < subfield_elements_.size(); ++i)
        if (subfield_elements_[i] == x) return static_cast<std::int64_t>(i);
    return -1;
}

std::uint64_t FieldTower::find_primitive_index() const {
    if (group_order_ == 1) return 1;
    const auto factors = prime_factors(group_order_);
    auto pow_index = [&](std::uint64_t a, std::uint64_t k) {
        std::uint64_t r = 1;
        while (k) {
            if (k & 1) r = mul_index(r, a);
            a = mul_index(a, a);
            k >>= 1;
        }
        return r;
    };
    for (std::uint64_t cand = 2; cand < order_; ++cand) {
        bool ok = true;
        for (auto r : factors)
            if (pow_index(cand, group_order_ / r) == 1) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    throw std::logic_error("FieldTower: no primitive element found");
}

void FieldTower::build_tables(std::uint64_t primitive_index) {
    const PrimeField fp(p_);
    log_of_index_.assign(order_, 0);
    index_of_log_.assign(group_order_, 0);
    zech_.assign(group_order_, 0);

    // cur <- cur * g, computed as sum_j g_j (cur X^j) with X-multiplication
    // done by shift and reduction against the monic modulus.
    const auto g = digits(primitive_index);
    std::uint32_t gdeg = 0;
    for (std::uint32_t i = 0; i < degree_; ++i)
        if (g[i]) gdeg = i;
    std::vector<std::uint32_t> cur(degree_, 0), shifted(degree_), acc(degree_);
    cur[0] = 1;
    auto times_x = [&](std::vector<std::uint32_t>& v) {
        const std::uint32_t top = v[degree_ - 1];
        for (std::uint32_t i = degree_ - 1; i > 0; --i) v[i] = v[i - 1];
        v[0] = 0;
        if (top)
            for (std::uint32_t i = 0; i < degree_; ++i) v[i] = fp.sub(v[i], fp.mul(top, modulus_[i]));
    };
    for (std::uint64_t l = 0; l < group_order_; ++l) {
        const std::uint64_t idx = undigits(cur);
        index_of_log_[l] = static_cast<std::uint32_t>(idx);
        log_of_index_[idx] = static_cast<std::uint32_t>(l + 1);
        std::fill(acc.begin(), acc.end(), 0);
        shifted = cur;
        for (std::uint32_t j = 0; j <= gdeg; ++j) {
            if (g[j])
                for (std::uint32_t i = 0; i < degree_; ++i) acc[i] = fp.add(acc[i], fp.mul(g[j], shifted[i]));
            if (j < gdeg) times_x(shifted);
        }
        cur.swap(acc);
    }
    for (std::uint64_t d = 0; d < group_order_; ++d) {
        std::uint64_t idx = index_of_log_[d];
        const std::uint64_t d0 = idx % p_;
        idx = d0 == p_ - 1 ? idx - (p_ - 1) : idx + 1;
        zech_[d] = log_of_index_[idx];
    }
}

TowerPtr make_tower(std::uint32_t p, std::uint32_t e, std::uint32_t n, std::uint64_t table_cap) {
    return std::make_shared<const FieldTower>(p, e, n, table_cap);
}

}  // namespace mrd

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

#include "mrd/linpoly.hpp"

#include <array>
#include <stdexcept>

namespace mrd {

LinPoly::LinPoly(TowerPtr tower) : tower_(std::move(tower)) {
    if (!tower_) throw std::invalid_argument("LinPoly: null tower");
    coeffs_.assign(tower_->n(), Fel{});
}

LinPoly::LinPoly(TowerPtr tower, std::vector<Fel> coeffs) : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
    if (!tower_) throw std::invalid_argument("LinPoly: null tower");
    if (coeffs_.size() != tower_->n())
        throw std::invalid_argument("LinPoly: expected " + std::to_string(tower_->n()) + " coefficients, got " +
                                    std::to_string(coeffs_.size()));
}

LinPoly LinPoly::monomial(TowerPtr tower, Fel c, std::int64_t i) {
    LinPoly f(std::move(tower));
    const auto n = static_cast<std::int64_t>(f.n());
    f.coeffs_[((i % n) + n) % n] = c;
    return f;
}

LinPoly LinPoly::identity(TowerPtr tower) {
    const Fel one = tower->one();
    return monomial(std::move(tower), one, 0);
}

LinPoly LinPoly::trace(TowerPtr tower) {
    const Fel one = tower->one();
    const auto n = tower->n();
    return LinPoly(std::move(tower), std::vector<Fel>(n, one));
}

bool LinPoly::is_zero() const noexcept {
    for (Fel c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

void LinPoly::check_same(const LinPoly& o) const {
    if (tower_.get() != o.tower_.get()) throw std::invalid_argument("LinPoly: operands live in different towers");
}

LinPoly LinPoly::operator+(const LinPoly& o) const {
    check_same(o);
    LinPoly r(*this);
    for (std::size_t i = 0; i < n(); ++i) r.coeffs_[i] = tower_->add(coeffs_[i], o.coeffs_[i]);
    return r;
}

LinPoly LinPoly::operator-(const LinPoly& o) const {
    check_same(o);
    LinPoly r(*this);
    for (std::size_t i = 0; i < n(); ++i) r.coeffs_[i] = tower_->sub(coeffs_[i], o.coeffs_[i]);
    return r;
}

LinPoly LinPoly::operator-() const {
    LinPoly r(*this);
    for (auto& c : r.coeffs_) c = tower_->neg(c);
    return r;
}

LinPoly LinPoly::scaled(Fel a) const {
    LinPoly r(*this);
    for (auto& c : r.coeffs_) c = tower_->mul(a, c);
    return r;
}

Fel eval(const LinPoly& f, Fel x) {
    const auto& F = f.field();
    Fel acc{};
    for (std::size_t i = 0; i < f.n(); ++i)
        if (!f.coeffs()[i].is_zero()) acc = F.add(acc, F.mul(f.coeffs()[i], F.frobenius_q(x, i)));
    return acc;
}

LinPoly compose(const LinPoly& f, const LinPoly& g) {
    if (f.tower().get() != g.tower().get()) throw std::invalid_argument("compose: operands live in different towers");
    const auto& F = f.field();
    const std::size_t n = f.n();
    std::vector<Fel> c(n, Fel{});
    for (std::size_t i = 0; i < n; ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (g.coeffs()[j].is_zero()) continue;
            const std::size_t k = (i + j) % n;
            c[k] = F.add(c[k], F.mul(f.coeffs()[i], F.frobenius_q(g.coeffs()[j], i)));
        }
    }
    return LinPoly(f.tower(), std::move(c));
}

LinPoly adjoint(const LinPoly& f) {
    const auto& F = f.field();
    const std::size_t n = f.n();
    std::vector<Fel> c(n, Fel{});
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = (n - i) % n;
        c[k] = F.frobenius_q(f.coeffs()[i], static_cast<std::int64_t>(k));
    }
    return LinPoly(f.tower(), std::move(c));
}

Matrix<Fel> dickson(const LinPoly& f) {
    const auto& F = f.field();
    const std::size_t n = f.n();
    Matrix<Fel> d(n, n, Fel{});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d(i, j) = F.frobenius_q(f.coeffs()[(j + n - i) % n], static_cast<std::int64_t>(i));
    return d;
}

std::size_t rank_in_place(const FieldTower& F, Fel* m, std::size_t n, std::size_t stop_at) {
    // Fraction-free forward elimination, first nonzero pivot in each column.
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n && r < stop_at; ++c) {
        std::size_t piv = r;
        while (piv < n && m[piv * n + c].is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != r)
            for (std::size_t j = c; j < n; ++j) std::swap(m[piv * n + j], m[r * n + j]);
        const Fel a = m[r * n + c];
        for (std::size_t i = r + 1; i < n; ++i) {
            const Fel b = m[i * n + c];
            if (b.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j)
                m[i * n + j] = F.sub(F.mul(a, m[i * n + j]), F.mul(b, m[r * n + j]));
        }
        ++r;
    }
    return r;
}

std::size_t dickson_rank(const FieldTower& F, std::span<const Fel> coeffs) {
    const std::size_t n = coeffs.size();
    if (n > kSmallDickson) {
        Matrix<Fel> d(n, n, Fel{});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d(i, j) = F.frobenius_q(coeffs[(j + n - i) % n], static_cast<std::int64_t>(i));
        return rank(std::move(d), F);
    }
    std::array<Fel, kSmallDickson * kSmallDickson> m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] = F.frobenius_q(coeffs[(j + n - i) % n], static_cast<std::int64_t>(i));
    return rank_in_place(F, m.data(), n);
}

std::size_t rank(const LinPoly& f) { return dickson_rank(f.field(), f.coeffs()); }

std::size_t kernel_dim(const LinPoly& f) { return f.n() - rank(f); }

Matrix<Fel> fq_matrix(const LinPoly& f) {
    const auto& F = f.field();
    const std::size_t n = f.n();
    Matrix<Fel> m(n, n, Fel{});
    for (std::size_t j = 0; j < n; ++j) {
        const auto c = F.q_coords(eval(f, F.q_basis()[j]));
        for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
    }
    return m;
}

std::vector<Fel> kernel_basis(const LinPoly& f) {
    const auto& F = f.field();
    std::vector<Fel> out;
    for (const auto& v : nullspace(fq_matrix(f), F)) out.push_back(F.from_q_coords(v));
    return out;
}

std::vector<Fel> roots(const LinPoly& f) {
    std::vector<Fel> out;
    for (Fel x : f.field().enumerate_field())
        if (eval(f, x).is_zero()) out.push_back(x);
    return out;
}

std::optional<Fel> preimage(const LinPoly& f, Fel y) {
    const auto& F = f.field();
    const std::size_t n = f.n();
    Matrix<Fel> aug(n, n + 1, F.zero());
    const auto m = fq_matrix(f);
    const auto target = F.q_coords(y);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = target[i];
    }
    const auto pivots = rref(aug, F);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<Fel> x(n, F.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
    return F.from_q_coords(x);
}

}  // namespace mrd

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

#include "mrd/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mrd {

namespace {

// Calls visit(lambda) for one representative lambda in F_q^dim of every
// projective point (first nonzero entry equal to 1), odometer order.
// Stops early when visit returns false.
template <class Visit>
void for_each_projective(const FieldTower& F, std::size_t dim, Visit&& visit) {
    const auto& sub = F.enumerate_subfield_q();
    const std::size_t q = sub.size();
    std::vector<Fel> lam(dim, F.zero());
    std::vector<std::size_t> idx(dim, 0);
    for (std::size_t lead = 0; lead < dim; ++lead) {
        std::fill(lam.begin(), lam.end(), F.zero());
        std::fill(idx.begin(), idx.end(), 0);
        lam[lead] = F.one();
        bool more = true;
        while (more) {
            if (!visit(std::span<const Fel>(lam))) return;
            more = false;
            for (std::size_t j = dim; j-- > lead + 1;) {
                if (++idx[j] < q) {
                    lam[j] = sub[idx[j]];
                    more = true;
                    break;
                }
                idx[j] = 0;
                lam[j] = sub[0];
            }
        }
    }
}

std::vector<Fel> combine(const FieldTower& F, const std::vector<LinPoly>& basis, std::span<const Fel> lam) {
    const std::size_t n = F.n();
    std::vector<Fel> acc(n, F.zero());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        if (lam[r].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) acc[i] = F.add(acc[i], F.mul(lam[r], basis[r].coeff(i)));
    }
    return acc;
}

void check_tower(const TowerPtr& t) {
    if (!t) throw std::invalid_argument("code: null tower");
}

}  // namespace

SupportCode::SupportCode(TowerPtr tower, std::vector<std::uint32_t> support, std::uint32_t s)
    : tower_(std::move(tower)), support_(std::move(support)), s_(s) {
    check_tower(tower_);
    const std::uint32_t n = tower_->n();
    if (support_.empty() || support_.size() > n) throw std::invalid_argument("SupportCode: need 1 <= |T| <= n");
    if (std::gcd(s_, n) != 1) throw std::invalid_argument("SupportCode: gcd(s, n) must be 1");
    std::sort(support_.begin(), support_.end());
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (support_[i] >= n) throw std::invalid_argument("SupportCode: support element out of range");
        if (i > 0 && support_[i] == support_[i - 1]) throw std::invalid_argument("SupportCode: repeated support element");
    }
}

std::vector<std::uint32_t> SupportCode::exponents() const {
    std::vector<std::uint32_t> e;
    e.reserve(support_.size());
    const std::uint64_t n = this->n();
    for (auto t : support_) e.push_back(static_cast<std::uint32_t>(std::uint64_t{s_} * t % n));
    return e;
}

std::vector<std::uint32_t> SupportCode::sorted_exponents() const {
    auto e = exponents();
    std::sort(e.begin(), e.end());
    return e;
}

LinPoly SupportCode::codeword(std::span<const Fel> a) const {
    if (a.size() != k()) throw std::invalid_argument("SupportCode::codeword: wrong number of coefficients");
    LinPoly f(tower_);
    const auto e = exponents();
    for (std::size_t i = 0; i < e.size(); ++i) f.set_coeff(e[i], a[i]);
    return f;
}

std::vector<Fel> poly_coords(const LinPoly& f) {
    const std::size_t n = f.n();
    std::vector<Fel> v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = f.field().q_coords(f.coeff(i));
        v.insert(v.end(), c.begin(), c.end());
    }
    return v;
}

LinPoly poly_from_coords(const TowerPtr& tower, std::span<const Fel> v) {
    const std::size_t n = tower->n();
    if (v.size() != n * n) throw std::invalid_argument("poly_from_coords: expected n^2 coordinates");
    LinPoly f(tower);
    for (std::size_t i = 0; i < n; ++i) f.set_coeff(i, tower->from_q_coords(v.subspan(i * n, n)));
    return f;
}

GeneralCode::GeneralCode(TowerPtr tower, std::vector<LinPoly> basis) : tower_(std::move(tower)), basis_(std::move(basis)) {
    check_tower(tower_);
    for (const auto& b : basis_)
        if (b.tower().get() != tower_.get()) throw std::invalid_argument("GeneralCode: basis over a different tower");
    if (mrd::rank(generator_matrix(), *tower_) != basis_.size())
        throw std::invalid_argument("GeneralCode: basis is not F_q-independent");
}

GeneralCode GeneralCode::span(TowerPtr tower, const std::vector<LinPoly>& gens) {
    const std::size_t N = std::size_t{tower->n()} * tower->n();
    Matrix<Fel> m(0, N);
    for (const auto& g : gens) m.append_row(poly_coords(g));
    const auto pivots = rref(m, *tower);
    std::vector<LinPoly> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.push_back(poly_from_coords(tower, m.row(r)));
    return GeneralCode(std::move(tower), std::move(basis));
}

Matrix<Fel> GeneralCode::generator_matrix() const {
    const std::size_t N = std::size_t{n()} * n();
    Matrix<Fel> m(0, N);
    for (const auto& b : basis_) m.append_row(poly_coords(b));
    return m;
}

SupportCode gabidulin(TowerPtr tower, std::uint32_t k, std::uint32_t s) {
    std::vector<std::uint32_t> T(k);
    std::iota(T.begin(), T.end(), 0u);
    return SupportCode(std::move(tower), std::move(T), s);
}

SupportCode named_family(std::string_view name, TowerPtr tower, std::uint32_t s) {
    check_tower(tower);
    const std::uint32_t n = tower->n();
    auto require = [&](bool ok) {
        if (!ok) throw std::invalid_argument("named_family: parameters do not match family " + std::string(name));
    };
    if (name == "Ds") {
        require(n == 9 && (s == 1 || s == 4 || s == 7));
        return SupportCode(std::move(tower), {0, 1, 2, 4}, s);
    }
    require(s == 1);
    if (name == "C7") {
        require(n == 7);
        return SupportCode(std::move(tower), {0, 1, 3});
    }
    if (name == "C7'" || name == "C7p") {
        require(n == 7);
        return SupportCode(std::move(tower), {0, 3, 5, 6});
    }
    if (name == "C8") {
        require(n == 8);
        return SupportCode(std::move(tower), {0, 1, 3});
    }
    if (name == "C8'" || name == "C8p") {
        require(n == 8);
        return SupportCode(std::move(tower), {0, 2, 3, 4, 5});
    }
    if (name == "Cn") {
        require(n >= 4);
        return SupportCode(std::move(tower), {0, 1, 3});
    }
    throw std::invalid_argument("named_family: unknown family " + std::string(name));
}

GeneralCode to_general(const SupportCode& c) {
    std::vector<LinPoly> basis;
    for (auto e : c.exponents())
        for (Fel b : c.field().q_basis()) basis.push_back(LinPoly::monomial(c.tower(), b, e));
    return GeneralCode(c.tower(), std::move(basis));
}

bool contains(const GeneralCode& c, const LinPoly& f) {
    if (f.tower().get() != c.tower().get()) throw std::invalid_argument("contains: tower mismatch");
    if (f.is_zero()) return true;
    auto m = c.generator_matrix();
    m.append_row(poly_coords(f));
    return mrd::rank(std::move(m), c.field()) == c.dimension();
}

bool same_code(const GeneralCode& a, const GeneralCode& b) {
    if (a.tower().get() != b.tower().get() || a.dimension() != b.dimension()) return false;
    auto m = a.generator_matrix();
    for (const auto& g : b.basis()) m.append_row(poly_coords(g));
    return mrd::rank(std::move(m), a.field()) == a.dimension();
}

Fel bilinear_form(const LinPoly& f, const LinPoly& g) {
    const auto& F = f.field();
    Fel acc = F.zero();
    for (std::size_t i = 0; i < f.n(); ++i) acc = F.add(acc, F.mul(f.coeff(i), g.coeff(i)));
    return F.rel_trace(acc);
}

GeneralCode delsarte_dual(const GeneralCode& c) {
    const auto& F = c.field();
    const std::size_t n = c.n(), N = n * n;
    Matrix<Fel> m(c.dimension(), N, F.zero());
    for (std::size_t r = 0; r < c.dimension(); ++r)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(r, i * n + j) = F.rel_trace(F.mul(F.q_basis()[j], c.basis()[r].coeff(i)));
    std::vector<LinPoly> basis;
    for (const auto& v : nullspace(std::move(m), F)) basis.push_back(poly_from_coords(c.tower(), v));
    return GeneralCode(c.tower(), std::move(basis));
}

SupportCode delsarte_dual(const SupportCode& c) {
    if (c.k() == c.n()) throw std::invalid_argument("delsarte_dual: dual of the full space is the zero code");
    std::vector<std::uint32_t> T;
    for (std::uint32_t t = 0; t < c.n(); ++t)
        if (!std::binary_search(c.support().begin(), c.support().end(), t)) T.push_back(t);
    return SupportCode(c.tower(), std::move(T), c.s());
}

GeneralCode adjoint_code(const GeneralCode& c) {
    std::vector<LinPoly> basis;
    for (const auto& b : c.basis()) basis.push_back(adjoint(b));
    return GeneralCode(c.tower(), std::move(basis));
}

SupportCode adjoint_code(const SupportCode& c) {
    std::vector<std::uint32_t> T;
    for (auto t : c.support()) T.push_back((c.n() - t) % c.n());
    return SupportCode(c.tower(), std::move(T), c.s());
}

IdealiserReport idealiser(const GeneralCode& c, Side side) {
    const auto& F = c.field();
    const auto& tower = c.tower();
    const std::size_t n = c.n(), N = n * n;
    const auto parity = nullspace(c.generator_matrix(), F);

    // Unknown phi = sum_m x_m u_m with u_{i*n+j} = b_j X^{q^i}.
    std::vector<LinPoly> unknowns;
    unknowns.reserve(N);
    for (std::size_t i = 0; i < n; ++i)
        for (Fel b : F.q_basis()) unknowns.push_back(LinPoly::monomial(tower, b, static_cast<std::int64_t>(i)));

    Matrix<Fel> system(0, N);
    std::vector<std::vector<Fel>> images(N);
    std::vector<Fel> row(N);
    for (const auto& f : c.basis()) {
        for (std::size_t m = 0; m < N; ++m)
            images[m] = poly_coords(side == Side::left ? compose(f, unknowns[m]) : compose(unknowns[m], f));
        for (const auto& h : parity) {
            for (std::size_t m = 0; m < N; ++m) {
                Fel acc = F.zero();
                for (std::size_t t = 0; t < N; ++t)
                    if (!h[t].is_zero()) acc = F.add(acc, F.mul(h[t], images[m][t]));
                row[m] = acc;
            }
            system.append_row(row);
        }
        if (system.rows() > 4 * N) {
            const auto piv = rref(system, F);
            Matrix<Fel> reduced(0, N);
            for (std::size_t r = 0; r < piv.size(); ++r) reduced.append_row(system.row(r));
            system = std::move(reduced);
        }
    }

    IdealiserReport rep;
    rep.side = side;
    if (system.rows() == 0) {
        rep.basis = unknowns;
    } else {
        for (const auto& v : nullspace(std::move(system), F)) rep.basis.push_back(poly_from_coords(tower, v));
    }
    rep.fq_dimension = rep.basis.size();
    rep.is_field = false;
    if (rep.fq_dimension >= 1 && rep.fq_dimension <= n) {
        const GeneralCode algebra(tower, rep.basis);
        bool ok = true;
        for (std::size_t a = 0; ok && a < rep.basis.size(); ++a)
            for (std::size_t b = 0; ok && b < rep.basis.size(); ++b)
                ok = contains(algebra, compose(rep.basis[a], rep.basis[b]));
        if (ok) {
            std::uint64_t count = 1;
            for (std::size_t t = 0; t < rep.fq_dimension; ++t) count *= F.q();
            if (count > FieldTower::kEnumerationCap) throw BudgetExceeded("idealiser: too many elements for the field test");
            for_each_projective(F, rep.fq_dimension, [&](std::span<const Fel> lam) {
                ok = dickson_rank(F, combine(F, rep.basis, lam)) == n;
                return ok;
            });
        }
        rep.is_field = ok;
    }
    rep.is_max = rep.is_field && rep.fq_dimension == n;
    return rep;
}

std::size_t min_distance(const GeneralCode& c, std::uint64_t cap) {
    const auto& F = c.field();
    if (c.dimension() == 0) throw std::invalid_argument("min_distance: zero code");
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < c.dimension(); ++t) {
        count *= F.q();
        if (count > cap) throw BudgetExceeded("min_distance: code too large to enumerate");
    }
    std::size_t best = c.n();
    for_each_projective(F, c.dimension(), [&](std::span<const Fel> lam) {
        best = std::min(best, dickson_rank(F, combine(F, c.basis(), lam)));
        return best > 1;
    });
    return best;
}

}  // namespace mrd

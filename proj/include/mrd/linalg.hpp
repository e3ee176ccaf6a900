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

#ifndef MRD_LINALG_HPP
#define MRD_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mrd {

// Any type exposing element arithmetic for a finite field. FieldTower and
// PrimeField model it; the routines below are generic over it.
template <class F>
concept FieldOps = requires(const F& f, typename F::element_type a, typename F::element_type b) {
    { f.zero() } -> std::same_as<typename F::element_type>;
    { f.one() } -> std::same_as<typename F::element_type>;
    { f.add(a, b) } -> std::same_as<typename F::element_type>;
    { f.sub(a, b) } -> std::same_as<typename F::element_type>;
    { f.mul(a, b) } -> std::same_as<typename F::element_type>;
    { f.neg(a) } -> std::same_as<typename F::element_type>;
    { f.inv(a) } -> std::same_as<typename F::element_type>;
    { f.is_zero(a) } -> std::same_as<bool>;
};

/// Z/pZ for a prime p < 2^31, elements stored as residues.
class PrimeField {
   public:
    using element_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2) throw std::invalid_argument("PrimeField: modulus must be at least 2");
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    element_type zero() const noexcept { return 0; }
    element_type one() const noexcept { return 1; }
    bool is_zero(element_type a) const noexcept { return a == 0; }
    element_type add(element_type a, element_type b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    element_type sub(element_type a, element_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    element_type neg(element_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    element_type mul(element_type a, element_type b) const noexcept {
        return static_cast<element_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    element_type pow(element_type a, std::uint64_t k) const noexcept {
        element_type r = 1;
        while (k) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }
    element_type inv(element_type a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }

   private:
    std::uint32_t p_;
};

/// Dense row-major matrix.
template <class E>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, E fill = E{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    E& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<E> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const E> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const E> r) {
        if (rows_ == 0 && data_.empty()) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(std::size_t a, std::size_t b) noexcept {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<E> data_;
};

/// Brings m to reduced row echelon form in place and returns the pivot
/// columns. Rows beyond the rank are left zero.
template <FieldOps F>
std::vector<std::size_t> rref(Matrix<typename F::element_type>& m, const F& f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        const auto s = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            const auto t = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Rank by fraction-free forward elimination with first-nonzero pivoting.
template <FieldOps F>
std::size_t rank(Matrix<typename F::element_type> m, const F& f) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        const auto a = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (f.is_zero(m(i, c))) continue;
            const auto b = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(f.mul(a, m(i, j)), f.mul(b, m(r, j)));
        }
        ++r;
    }
    return r;
}

/// Basis of the right null space {v : m v = 0}.
template <FieldOps F>
std::vector<std::vector<typename F::element_type>> nullspace(Matrix<typename F::element_type> m, const F& f) {
    const auto pivots = rref(m, f);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::element_type>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::element_type> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <FieldOps F>
typename F::element_type determinant(Matrix<typename F::element_type> m, const F& f) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    auto det = f.one();
    const std::size_t k = m.rows();
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && f.is_zero(m(piv, c))) ++piv;
        if (piv == k) return f.zero();
        if (piv != c) {
            m.swap_rows(c, piv);
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const auto s = f.inv(m(c, c));
        for (std::size_t i = c + 1; i < k; ++i) {
            if (f.is_zero(m(i, c))) continue;
            const auto t = f.mul(m(i, c), s);
            for (std::size_t j = c; j < k; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(c, j)));
        }
    }
    return det;
}

/// Inverse of a square matrix; throws if singular.
template <FieldOps F>
Matrix<typename F::element_type> inverse(const Matrix<typename F::element_type>& m, const F& f) {
    const std::size_t k = m.rows();
    if (k != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
    Matrix<typename F::element_type> aug(k, 2 * k, f.zero());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
        aug(i, k + i) = f.one();
    }
    const auto pivots = rref(aug, f);
    if (pivots.size() < k || pivots[k - 1] != k - 1) throw std::domain_error("inverse: matrix is singular");
    Matrix<typename F::element_type> out(k, k, f.zero());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = aug(i, k + j);
    return out;
}

}  // namespace mrd

#endif  // MRD_LINALG_HPP

/*
   Copyright 2026 The selfdual Authors

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

#ifndef SELFDUAL_MATRIX_HPP
#define SELFDUAL_MATRIX_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "field_algorithms.hpp"

namespace selfdual {

/// Row-major matrix of field encodings. The field is passed to every operation.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Element> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(std::size_t a, std::size_t b) noexcept {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
    }

    bool is_zero() const noexcept {
        for (const auto& e : data_)
            if (e.value != 0) return false;
        return true;
    }

    bool operator==(const Matrix&) const = default;

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Element> data_;
};

/// In-place reduced row echelon form; returns the pivot columns. Pivots are taken leftmost
/// column first, topmost candidate row, and scaled to 1.
template <FiniteField F>
std::vector<std::size_t> row_reduce(const F& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c) == f.zero()) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(r, sel);
        const Element s = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == f.zero()) continue;
            const Element factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <FiniteField F>
std::size_t rank(const F& f, Matrix m) {
    return row_reduce(f, m).size();
}

/// Rows spanning {x : m x^T = 0}.
template <FiniteField F>
Matrix null_space(const F& f, Matrix m) {
    const auto pivots = row_reduce(f, m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix basis(0, n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Element> v(n, f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
        basis.append_row(v);
    }
    return basis;
}

template <FiniteField F>
Matrix multiply_transpose(const F& f, const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) {
            Element acc = f.zero();
            for (std::size_t c = 0; c < a.cols(); ++c) acc = f.add(acc, f.mul(a(i, c), b(j, c)));
            out(i, j) = acc;
        }
    return out;
}

template <FiniteField F>
bool same_row_space(const F& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    const std::size_t ra = rank(f, a);
    if (ra != rank(f, b)) return false;
    Matrix stacked = a;
    for (std::size_t i = 0; i < b.rows(); ++i) stacked.append_row(b.row(i));
    return rank(f, stacked) == ra;
}

}  // namespace selfdual

#endif

/*
 * Copyright 2026 The braidrep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "braidrep/polymatrix.hpp"

#include "braidrep/error.hpp"
#include "braidrep/kernels.hpp"

namespace braidrep {

namespace {

void check_same_shape(const PolyMatrix& a, const PolyMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError(std::string(op) + " of " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

} // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<LaurentPoly>& d) {
    PolyMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

PolyMatrix PolyMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) throw RangeError("matrix unit index out of range");
    PolyMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<LaurentPoly>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    PolyMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

PolyMatrix PolyMatrix::parse(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<LaurentPoly>> p;
    p.reserve(rows.size());
    for (const auto& row : rows) {
        auto& out = p.emplace_back();
        for (const auto& s : row) out.push_back(parse_poly(s));
    }
    return from_rows(p);
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    check_same_shape(*this, o, "sum");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    check_same_shape(*this, o, "difference");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
}

PolyMatrix operator-(PolyMatrix a) {
    for (auto& e : a.entries_) e = -e;
    return a;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    return kernels::multiply(a, b, kernels::default_backend());
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& s) const {
    PolyMatrix r = *this;
    for (auto& e : r.entries_) e = e * s;
    return r;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
    PolyMatrix r(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (row_idx[i] >= rows_ || col_idx[j] >= cols_) throw RangeError("submatrix index out of range");
            r(i, j) = (*this)(row_idx[i], col_idx[j]);
        }
    return r;
}

bool PolyMatrix::is_zero() const noexcept {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_identity() const noexcept {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const LaurentPoly& e = (*this)(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

std::string PolyMatrix::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += (*this)(i, j).to_string();
        }
        s += "]\n";
    }
    return s;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) { return direct_sum({a, b}); }

PolyMatrix direct_sum(const std::vector<PolyMatrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    PolyMatrix m(r, c);
    std::size_t oi = 0, oj = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(oi + i, oj + j) = b(i, j);
        oi += b.rows();
        oj += b.cols();
    }
    return m;
}

PolyMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
    std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    PolyMatrix p(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (perm[j] >= n || seen[perm[j]]) throw RangeError("not a permutation");
        seen[perm[j]] = true;
        p(perm[j], j) = 1;
    }
    return p;
}

PolyMatrix conjugate_by_permutation(const PolyMatrix& a, const std::vector<std::size_t>& perm) {
    if (!a.is_square() || a.rows() != perm.size()) throw ShapeError("permutation size mismatch");
    permutation_matrix(perm);  // validates
    std::size_t n = perm.size();
    PolyMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(perm[i], perm[j]) = a(i, j);
    return r;
}

PolyMatrix substitute_units(const PolyMatrix& a, const LaurentPoly& t_image, const LaurentPoly& q_image) {
    PolyMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = substitute_units(a(i, j), t_image, q_image);
    return r;
}

} // namespace braidrep

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

#ifndef BRAIDREP_POLYMATRIX_HPP
#define BRAIDREP_POLYMATRIX_HPP

#include "braidrep/laurent.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace braidrep {

/// Dense row-major matrix over the Laurent ring. Zero-sized matrices are
/// allowed so that block constructions such as I_0 + B + I_k work uniformly.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols);

    static PolyMatrix identity(std::size_t n);
    static PolyMatrix diagonal(const std::vector<LaurentPoly>& d);
    /// E_{ij} of size n (0-based indices).
    static PolyMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static PolyMatrix from_rows(const std::vector<std::vector<LaurentPoly>>& rows);
    /// Rows of polynomial literals, e.g. {{"-t", "t"}, {"0", "1"}}.
    static PolyMatrix parse(const std::vector<std::vector<std::string>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    const std::vector<LaurentPoly>& entries() const noexcept { return entries_; }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator-(PolyMatrix a);
    /// Uses the process-wide kernel backend (see kernels.hpp).
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

    PolyMatrix scaled(const LaurentPoly& s) const;
    PolyMatrix transposed() const;
    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const;

    bool is_zero() const noexcept;
    bool is_identity() const noexcept;

    /// One `[a, b, c]` line per row.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LaurentPoly> entries_;
};

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix direct_sum(const std::vector<PolyMatrix>& blocks);

/// Matrix of the permutation e_j -> e_{perm[j]}.
PolyMatrix permutation_matrix(const std::vector<std::size_t>& perm);
/// P a P^{-1} for the permutation matrix P of `perm`.
PolyMatrix conjugate_by_permutation(const PolyMatrix& a, const std::vector<std::size_t>& perm);

/// Entrywise t -> t_image, q -> q_image with unit images.
PolyMatrix substitute_units(const PolyMatrix& a, const LaurentPoly& t_image,
                            const LaurentPoly& q_image);

} // namespace braidrep

#endif

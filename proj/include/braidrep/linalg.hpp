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

#ifndef BRAIDREP_LINALG_HPP
#define BRAIDREP_LINALG_HPP

#include "braidrep/kernels.hpp"
#include "braidrep/polymatrix.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace braidrep {

/// Fraction-free Bareiss elimination with row swaps.
LaurentPoly determinant(const PolyMatrix& a);
LaurentPoly determinant(const PolyMatrix& a, kernels::Backend be);

/// Exact inverse; throws NotInvertible unless det(a) is +-monomial.
PolyMatrix inverse(const PolyMatrix& a);

/// Kronecker product, (a (x) b)[i*rb + k][j*cb + l] = a[i][j] * b[k][l].
PolyMatrix tensor_product(const PolyMatrix& a, const PolyMatrix& b);

/// Basis of S^m(V), dim V = n: nondecreasing index tuples (0-based) in
/// colexicographic order, so for m = 2 the order is
/// (0,0), (0,1), (1,1), (0,2), (1,2), (2,2), ...
class SymIndex {
public:
    SymIndex(std::size_t n, std::size_t m);
    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    const std::vector<std::vector<std::size_t>>& tuples() const noexcept { return tuples_; }
    const std::vector<std::size_t>& operator[](std::size_t k) const { return tuples_[k]; }
    /// Position of a tuple; the tuple is sorted first.
    std::size_t index_of(std::vector<std::size_t> tuple) const;

private:
    std::size_t n_, m_;
    std::vector<std::vector<std::size_t>> tuples_;
    std::map<std::vector<std::size_t>, std::size_t> pos_;
};

/// Basis of the m-th exterior power: strictly increasing tuples in lexicographic order.
class ExtIndex {
public:
    ExtIndex(std::size_t n, std::size_t m);
    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    const std::vector<std::vector<std::size_t>>& tuples() const noexcept { return tuples_; }
    const std::vector<std::size_t>& operator[](std::size_t k) const { return tuples_[k]; }

private:
    std::size_t n_, m_;
    std::vector<std::vector<std::size_t>> tuples_;
};

/// Action on S^m(V) in the unnormalized symmetrized basis
/// e_{a1..am} = sum of e_{p1} (x) ... (x) e_{pm} over distinct permutations p.
PolyMatrix sym_power(const PolyMatrix& a, std::size_t m);
/// Lie-algebra action of a on S^m(V): sum over tensor slots of
/// 1 (x) .. (x) a (x) .. (x) 1, in the SymIndex basis. exp of this is sym_power(exp a, m).
PolyMatrix sym_power_derivation(const PolyMatrix& a, std::size_t m);
/// Matrix of m x m minors indexed by ExtIndex.
PolyMatrix ext_power(const PolyMatrix& a, std::size_t m);

/// I + A + A^2/2! + ...; throws DomainError when A^dim != 0 or a factorial
/// division is inexact.
PolyMatrix exp_nilpotent(const PolyMatrix& a);

/// a#[k][m] = a[n-k][n-m]: conjugation by the reversal permutation.
PolyMatrix sharp(const PolyMatrix& a);

/// det(C + diag(lambdas)).
LaurentPoly generalized_char_poly(const PolyMatrix& c, const std::vector<LaurentPoly>& lambdas);
/// Same value as a sum over index subsets S of prod_{i in S} lambda_i times the
/// complementary principal minor of C.
LaurentPoly generalized_char_poly_cofactor(const PolyMatrix& c, const std::vector<LaurentPoly>& lambdas);

/// Polynomial in an auxiliary variable x with Laurent coefficients.
class CharPoly {
public:
    CharPoly() = default;
    /// coeffs[k] multiplies x^k.
    explicit CharPoly(std::vector<LaurentPoly> coeffs);
    /// prod (x - r) over the given roots.
    static CharPoly from_roots(const std::vector<LaurentPoly>& roots);

    const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    LaurentPoly evaluate(const LaurentPoly& x) const;
    /// Entrywise unit substitution of t and q in the coefficients.
    CharPoly substitute_units(const LaurentPoly& t_image, const LaurentPoly& q_image) const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
    friend CharPoly operator*(const CharPoly& a, const CharPoly& b);

    /// e.g. `x^3 + (-t - 1)*x^2 + ...`
    std::string to_string() const;

private:
    std::vector<LaurentPoly> coeffs_;
    void trim();
};

/// det(xI - A).
CharPoly char_poly(const PolyMatrix& a);

} // namespace braidrep

#endif

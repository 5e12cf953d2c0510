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

#include "braidrep/linalg.hpp"

#include "braidrep/error.hpp"

#include <algorithm>
#include <utility>

namespace braidrep {

LaurentPoly determinant(const PolyMatrix& a) { return determinant(a, kernels::default_backend()); }

LaurentPoly determinant(const PolyMatrix& a, kernels::Backend be) {
    return kernels::bareiss_determinant(a, be);
}

PolyMatrix inverse(const PolyMatrix& a) {
    auto r = kernels::gauss_jordan(a, kernels::default_backend());
    if (r.singular || !r.pivot.is_unit())
        throw NotInvertible("not invertible over the Laurent ring (det = " +
                            (r.singular ? std::string("0") : r.pivot.to_string()) + " up to sign)");
    // pivot = +-t^a q^b, so its inverse is a monomial.
    LaurentPoly inv = r.pivot.pow(-1);
    return r.scaled_inverse.scaled(inv);
}

PolyMatrix tensor_product(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

void nondecreasing(std::size_t n, std::size_t m, std::size_t from, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == m) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = from; v < n; ++v) {
        cur.push_back(v);
        nondecreasing(n, m, v, cur, out);
        cur.pop_back();
    }
}

void increasing(std::size_t n, std::size_t m, std::size_t from, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == m) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = from; v < n; ++v) {
        cur.push_back(v);
        increasing(n, m, v + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

SymIndex::SymIndex(std::size_t n, std::size_t m) : n_(n), m_(m) {
    if (m == 0) throw RangeError("symmetric power needs m >= 1");
    std::vector<std::size_t> cur;
    nondecreasing(n, m, 0, cur, tuples_);
    std::sort(tuples_.begin(), tuples_.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    for (std::size_t k = 0; k < tuples_.size(); ++k) pos_.emplace(tuples_[k], k);
}

std::size_t SymIndex::index_of(std::vector<std::size_t> tuple) const {
    std::sort(tuple.begin(), tuple.end());
    auto it = pos_.find(tuple);
    if (it == pos_.end()) throw RangeError("tuple not in symmetric basis");
    return it->second;
}

ExtIndex::ExtIndex(std::size_t n, std::size_t m) : n_(n), m_(m) {
    if (m == 0 || m > n) throw RangeError("exterior power needs 1 <= m <= n");
    std::vector<std::size_t> cur;
    increasing(n, m, 0, cur, tuples_);
}

PolyMatrix sym_power(const PolyMatrix& a, std::size_t m) {
    if (!a.is_square()) throw ShapeError("symmetric power of a non-square matrix");
    SymIndex idx(a.rows(), m);
    std::size_t d = idx.size();
    PolyMatrix r(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t row = 0; row < d; ++row) {
            const auto& alpha = idx[row];
            std::vector<std::size_t> p = idx[c];
            LaurentPoly s;
            do {
                LaurentPoly prod = 1;
                for (std::size_t i = 0; i < m && !prod.is_zero(); ++i) prod *= a(alpha[i], p[i]);
                s += prod;
            } while (std::next_permutation(p.begin(), p.end()));
            r(row, c) = std::move(s);
        }
    }
    return r;
}

PolyMatrix sym_power_derivation(const PolyMatrix& a, std::size_t m) {
    if (!a.is_square()) throw ShapeError("symmetric power of a non-square matrix");
    SymIndex idx(a.rows(), m);
    std::size_t d = idx.size();
    PolyMatrix r(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t row = 0; row < d; ++row) {
            const auto& alpha = idx[row];
            std::vector<std::size_t> p = idx[c];
            LaurentPoly s;
            do {
                // slot i carries a, the others must match exactly
                std::size_t mismatches = 0, slot = 0;
                for (std::size_t i = 0; i < m; ++i)
                    if (alpha[i] != p[i]) {
                        ++mismatches;
                        slot = i;
                    }
                if (mismatches == 0) {
                    for (std::size_t i = 0; i < m; ++i) s += a(alpha[i], p[i]);
                } else if (mismatches == 1) {
                    s += a(alpha[slot], p[slot]);
                }
            } while (std::next_permutation(p.begin(), p.end()));
            r(row, c) = std::move(s);
        }
    }
    return r;
}

PolyMatrix ext_power(const PolyMatrix& a, std::size_t m) {
    if (!a.is_square()) throw ShapeError("exterior power of a non-square matrix");
    ExtIndex idx(a.rows(), m);
    std::size_t d = idx.size();
    PolyMatrix r(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r(i, j) = determinant(a.submatrix(idx[i], idx[j]));
    return r;
}

PolyMatrix exp_nilpotent(const PolyMatrix& a) {
    if (!a.is_square()) throw ShapeError("exponential of a non-square matrix");
    std::size_t n = a.rows();
    PolyMatrix result = PolyMatrix::identity(n);
    PolyMatrix power = PolyMatrix::identity(n);
    mpz_class fact = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * a;
        if (power.is_zero()) return result;
        if (k == n) break;
        fact *= static_cast<unsigned long>(k);
        PolyMatrix term(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) term(i, j) = power(i, j).divided_by(fact);
        result += term;
    }
    if (n > 0 && !power.is_zero()) throw DomainError("exp_nilpotent: matrix is not nilpotent");
    return result;
}

PolyMatrix sharp(const PolyMatrix& a) {
    if (!a.is_square()) throw ShapeError("sharp of a non-square matrix");
    std::size_t n = a.rows();
    PolyMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = a(n - 1 - i, n - 1 - j);
    return r;
}

LaurentPoly generalized_char_poly(const PolyMatrix& c, const std::vector<LaurentPoly>& lambdas) {
    if (!c.is_square() || c.rows() != lambdas.size())
        throw ShapeError("generalized_char_poly needs a square matrix and one lambda per row");
    PolyMatrix m = c;
    for (std::size_t i = 0; i < lambdas.size(); ++i) m(i, i) += lambdas[i];
    return determinant(m);
}

LaurentPoly generalized_char_poly_cofactor(const PolyMatrix& c, const std::vector<LaurentPoly>& lambdas) {
    if (!c.is_square() || c.rows() != lambdas.size())
        throw ShapeError("generalized_char_poly needs a square matrix and one lambda per row");
    std::size_t n = c.rows();
    if (n >= 8 * sizeof(unsigned long) - 1) throw RangeError("matrix too large for subset expansion");
    LaurentPoly sum;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        LaurentPoly coeff = 1;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1UL << i))
                coeff *= lambdas[i];
            else
                rest.push_back(i);
        }
        if (coeff.is_zero()) continue;
        sum += coeff * determinant(c.submatrix(rest, rest));
    }
    return sum;
}

// ---------------------------------------------------------------------------

CharPoly::CharPoly(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void CharPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CharPoly CharPoly::from_roots(const std::vector<LaurentPoly>& roots) {
    CharPoly r(std::vector<LaurentPoly>{1});
    for (const auto& root : roots) r = r * CharPoly(std::vector<LaurentPoly>{-root, 1});
    return r;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<LaurentPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return CharPoly(std::move(c));
}

LaurentPoly CharPoly::evaluate(const LaurentPoly& x) const {
    LaurentPoly r;
    for (std::size_t k = coeffs_.size(); k-- > 0;) r = r * x + coeffs_[k];
    return r;
}

CharPoly CharPoly::substitute_units(const LaurentPoly& t_image, const LaurentPoly& q_image) const {
    std::vector<LaurentPoly> c;
    c.reserve(coeffs_.size());
    for (const auto& k : coeffs_) c.push_back(braidrep::substitute_units(k, t_image, q_image));
    return CharPoly(std::move(c));
}

std::string CharPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const LaurentPoly& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string xs = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        std::string body;
        bool negative = false;
        if (k == 0) {
            body = c.to_string();
            if (c.is_monomial() && c.leading().coeff < 0) {
                negative = true;
                body = (-c).to_string();
            }
        } else if (c.is_one()) {
            body = xs;
        } else if (c.is_monomial() && c.leading().coeff == -1 && c.leading().mono.is_one()) {
            negative = true;
            body = xs;
        } else if (c.is_monomial()) {
            negative = c.leading().coeff < 0;
            body = (negative ? -c : c).to_string() + "*" + xs;
        } else {
            body = "(" + c.to_string() + ")*" + xs;
        }
        if (first)
            s += negative ? "-" + body : body;
        else
            s += (negative ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

CharPoly char_poly(const PolyMatrix& a) {
    if (!a.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
    std::size_t n = a.rows();
    const LaurentPoly x = LaurentPoly::monomial(1, Monomial{0, 0, 1});
    for (const auto& e : a.entries())
        for (const auto& t : e.terms())
            if (t.mono.ex != 0) throw DomainError("matrix already uses the auxiliary variable");
    PolyMatrix m = -a;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += x;
    LaurentPoly d = determinant(m);
    std::vector<std::vector<LaurentPoly::Term>> split(n + 1);
    for (const auto& t : d.terms()) {
        if (t.mono.ex < 0 || static_cast<std::size_t>(t.mono.ex) > n)
            throw std::logic_error("characteristic polynomial degree out of range");
        split[static_cast<std::size_t>(t.mono.ex)].push_back({Monomial{t.mono.et, t.mono.eq, 0}, t.coeff});
    }
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(n + 1);
    for (auto& s : split) coeffs.push_back(LaurentPoly::from_terms(std::move(s)));
    return CharPoly(std::move(coeffs));
}

} // namespace braidrep

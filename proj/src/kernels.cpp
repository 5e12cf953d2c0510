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

#include "braidrep/kernels.hpp"

#include "braidrep/error.hpp"

#include <atomic>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidrep::kernels {

namespace {

std::atomic<Backend> g_backend{
#ifdef _OPENMP
    Backend::Parallel
#else
    Backend::Serial
#endif
};

void check_product_shape(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

LaurentPoly dot(const PolyMatrix& a, const PolyMatrix& b, std::size_t i, std::size_t j) {
    LaurentPoly s;
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const LaurentPoly& x = a(i, k);
        if (x.is_zero()) continue;
        const LaurentPoly& y = b(k, j);
        if (y.is_zero()) continue;
        s += x * y;
    }
    return s;
}

// (p*x - l*y) / prev, exact by Sylvester's identity.
LaurentPoly bareiss_entry(const LaurentPoly& p, const LaurentPoly& x, const LaurentPoly& l,
                          const LaurentPoly& y, const LaurentPoly& prev) {
    LaurentPoly v = p * x - l * y;
    if (prev.is_one() || v.is_zero()) return v;
    auto r = exact_div(v, prev);
    if (!r) throw std::logic_error("inexact Bareiss division");
    return std::move(*r);
}

// Moves a row with a nonzero entry in column k (searching rows >= k) to row k.
// Returns false when the column is zero below the diagonal.
bool pivot(std::vector<LaurentPoly>& m, std::size_t n, std::size_t width, std::size_t k, int& sign) {
    if (!m[k * width + k].is_zero()) return true;
    for (std::size_t r = k + 1; r < n; ++r) {
        if (!m[r * width + k].is_zero()) {
            for (std::size_t j = 0; j < width; ++j) std::swap(m[k * width + j], m[r * width + j]);
            sign = -sign;
            return true;
        }
    }
    return false;
}

std::vector<LaurentPoly> augmented(const PolyMatrix& a) {
    std::size_t n = a.rows();
    std::vector<LaurentPoly> m(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * 2 * n + j] = a(i, j);
        m[i * 2 * n + n + i] = 1;
    }
    return m;
}

FractionFreeInverse finish_inverse(const std::vector<LaurentPoly>& m, std::size_t n, LaurentPoly prev) {
    FractionFreeInverse r;
    r.pivot = std::move(prev);
    r.scaled_inverse = PolyMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.scaled_inverse(i, j) = m[i * 2 * n + n + j];
    return r;
}

} // namespace

Backend default_backend() noexcept { return g_backend.load(); }
void set_default_backend(Backend b) noexcept { g_backend.store(b); }

bool parallel_available() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

// ---------------------------------------------------------------------------

namespace serial {

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    check_product_shape(a, b);
    PolyMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = dot(a, b, i, j);
    return c;
}

LaurentPoly bareiss_determinant(PolyMatrix a) {
    if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<LaurentPoly> m = a.entries();
    int sign = 1;
    LaurentPoly prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!pivot(m, n, n, k, sign)) return {};
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i * n + j] = bareiss_entry(m[k * n + k], m[i * n + j], m[i * n + k], m[k * n + j], prev);
            m[i * n + k] = LaurentPoly{};
        }
        prev = m[k * n + k];
    }
    LaurentPoly d = std::move(m[n * n - 1]);
    return sign < 0 ? -d : d;
}

FractionFreeInverse gauss_jordan(const PolyMatrix& a) {
    if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
    std::size_t n = a.rows(), w = 2 * n;
    std::vector<LaurentPoly> m = augmented(a);
    int sign = 1;
    LaurentPoly prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (!pivot(m, n, w, k, sign)) {
            FractionFreeInverse r;
            r.singular = true;
            return r;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < w; ++j) {
                if (j == k) continue;
                m[i * w + j] = bareiss_entry(m[k * w + k], m[i * w + j], m[i * w + k], m[k * w + j], prev);
            }
            m[i * w + k] = LaurentPoly{};
        }
        prev = m[k * w + k];
    }
    return finish_inverse(m, n, std::move(prev));
}

} // namespace serial

// ---------------------------------------------------------------------------

namespace parallel {

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    check_product_shape(a, b);
    PolyMatrix c(a.rows(), b.cols());
    const long rows = static_cast<long>(a.rows()), cols = static_cast<long>(b.cols());
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            c(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                dot(a, b, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return c;
}

LaurentPoly bareiss_determinant(PolyMatrix a) {
    if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<LaurentPoly> m = a.entries();
    int sign = 1;
    LaurentPoly prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!pivot(m, n, n, k, sign)) return {};
        std::atomic<bool> failed{false};
        const long lo = static_cast<long>(k + 1), hi = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
        for (long ii = lo; ii < hi; ++ii) {
            std::size_t i = static_cast<std::size_t>(ii);
            try {
                for (std::size_t j = k + 1; j < n; ++j)
                    m[i * n + j] = bareiss_entry(m[k * n + k], m[i * n + j], m[i * n + k], m[k * n + j], prev);
                m[i * n + k] = LaurentPoly{};
            } catch (...) {
                failed = true;
            }
        }
        if (failed) throw std::logic_error("inexact Bareiss division");
        prev = m[k * n + k];
    }
    LaurentPoly d = std::move(m[n * n - 1]);
    return sign < 0 ? -d : d;
}

FractionFreeInverse gauss_jordan(const PolyMatrix& a) {
    if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
    std::size_t n = a.rows(), w = 2 * n;
    std::vector<LaurentPoly> m = augmented(a);
    int sign = 1;
    LaurentPoly prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (!pivot(m, n, w, k, sign)) {
            FractionFreeInverse r;
            r.singular = true;
            return r;
        }
        std::atomic<bool> failed{false};
        const long hi = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
        for (long ii = 0; ii < hi; ++ii) {
            std::size_t i = static_cast<std::size_t>(ii);
            if (i == k) continue;
            try {
                for (std::size_t j = 0; j < w; ++j) {
                    if (j == k) continue;
                    m[i * w + j] = bareiss_entry(m[k * w + k], m[i * w + j], m[i * w + k], m[k * w + j], prev);
                }
                m[i * w + k] = LaurentPoly{};
            } catch (...) {
                failed = true;
            }
        }
        if (failed) throw std::logic_error("inexact Bareiss division");
        prev = m[k * w + k];
    }
    return finish_inverse(m, n, std::move(prev));
}

} // namespace parallel

// ---------------------------------------------------------------------------

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, Backend be) {
    return be == Backend::Parallel ? parallel::multiply(a, b) : serial::multiply(a, b);
}

LaurentPoly bareiss_determinant(const PolyMatrix& a, Backend be) {
    return be == Backend::Parallel ? parallel::bareiss_determinant(a) : serial::bareiss_determinant(a);
}

FractionFreeInverse gauss_jordan(const PolyMatrix& a, Backend be) {
    return be == Backend::Parallel ? parallel::gauss_jordan(a) : serial::gauss_jordan(a);
}

} // namespace braidrep::kernels

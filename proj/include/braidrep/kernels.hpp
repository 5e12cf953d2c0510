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

#ifndef BRAIDREP_KERNELS_HPP
#define BRAIDREP_KERNELS_HPP

#include "braidrep/polymatrix.hpp"

namespace braidrep::kernels {

/// Serial kernels are the reference; Parallel kernels use OpenMP over rows
/// and produce bit-identical results.
enum class Backend { Serial, Parallel };

Backend default_backend() noexcept;
void set_default_backend(Backend b) noexcept;
bool parallel_available() noexcept;

/// Result of fraction-free Gauss-Jordan on [A | I]:
/// `pivot` is the last Bareiss pivot (det A up to the sign of the row
/// permutation) and `scaled_inverse` = pivot * A^{-1}.
struct FractionFreeInverse {
    LaurentPoly pivot;
    PolyMatrix scaled_inverse;
    bool singular = false;
};

namespace serial {
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
LaurentPoly bareiss_determinant(PolyMatrix a);
FractionFreeInverse gauss_jordan(const PolyMatrix& a);
} // namespace serial

namespace parallel {
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
LaurentPoly bareiss_determinant(PolyMatrix a);
FractionFreeInverse gauss_jordan(const PolyMatrix& a);
} // namespace parallel

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, Backend be);
LaurentPoly bareiss_determinant(const PolyMatrix& a, Backend be);
FractionFreeInverse gauss_jordan(const PolyMatrix& a, Backend be);

} // namespace braidrep::kernels

#endif

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

#ifndef BRAIDREP_FRACTION_HPP
#define BRAIDREP_FRACTION_HPP

#include "braidrep/laurent.hpp"

#include <optional>
#include <string>

namespace braidrep {

/// num/den over the Laurent ring. No polynomial gcd is taken; the canonical
/// form strips monomial and integer content, makes the leading coefficient of
/// den positive and collapses to den = 1 whenever den divides num.
class PolyFraction {
public:
    PolyFraction() : den_(1) {}
    PolyFraction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
    PolyFraction(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }

    bool is_polynomial() const noexcept { return den_.is_one(); }
    std::optional<LaurentPoly> as_polynomial() const;
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend bool operator==(const PolyFraction& a, const PolyFraction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator/(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator-(const PolyFraction& a);

    /// `num` alone when den = 1, otherwise `(num)/(den)`.
    std::string to_string() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;

    void canonicalize();
};

/// t -> t_image, q -> q_image. Throws DomainError when a negative power of a
/// vanishing image is needed.
PolyFraction substitute(const LaurentPoly& p, const PolyFraction& t_image,
                        const PolyFraction& q_image);
/// Throws DomainError naming the denominator if it vanishes after substitution.
PolyFraction substitute(const PolyFraction& f, const PolyFraction& t_image,
                        const PolyFraction& q_image);

PolyFraction rational_constant(const mpq_class& v);

mpq_class eval_rational(const PolyFraction& f, const mpq_class& t, const mpq_class& q);

} // namespace braidrep

#endif

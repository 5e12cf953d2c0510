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

#ifndef BRAIDREP_LAURENT_HPP
#define BRAIDREP_LAURENT_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

/// Exponent vector t^et q^eq. The `ex` slot belongs to an auxiliary variable
/// used only while building characteristic polynomials; it is zero for every
/// element of the ring itself.
struct Monomial {
    int et = 0;
    int eq = 0;
    int ex = 0;

    int total() const noexcept { return et + eq + ex; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic: total degree, then t, then q, then x.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.total() <=> b.total(); c != 0) return c;
        if (auto c = a.et <=> b.et; c != 0) return c;
        if (auto c = a.eq <=> b.eq; c != 0) return c;
        return a.ex <=> b.ex;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
        return {a.et + b.et, a.eq + b.eq, a.ex + b.ex};
    }

    Monomial inverse() const noexcept { return {-et, -eq, -ex}; }

    bool is_one() const noexcept { return et == 0 && eq == 0 && ex == 0; }
};

enum class Var { T, Q };

/// Sparse element of Z[t, 1/t, q, 1/q]. Terms are kept sorted by descending
/// monomial with no zero coefficients, so equality is structural.
class LaurentPoly {
public:
    struct Term {
        Monomial mono;
        mpz_class coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPoly() = default;
    LaurentPoly(long c);               // NOLINT(google-explicit-constructor)
    LaurentPoly(const mpz_class& c);   // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const mpz_class& c, const Monomial& m);
    static LaurentPoly monomial(const mpz_class& c, int et, int eq) {
        return monomial(c, Monomial{et, eq, 0});
    }
    static LaurentPoly t(int e = 1) { return monomial(1, e, 0); }
    static LaurentPoly q(int e = 1) { return monomial(1, 0, e); }
    /// Terms in any order; repeated monomials are summed.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Units of the ring are exactly the monomials with coefficient +-1.
    bool is_unit() const noexcept;
    bool is_one() const noexcept;

    mpz_class coefficient(const Monomial& m) const;
    const Term& leading() const;
    const Term& trailing() const;
    /// Componentwise minimum / maximum of exponents. Zero polynomial gives {0,0,0}.
    Monomial min_exponents() const noexcept;
    Monomial max_exponents() const noexcept;
    /// Positive gcd of all coefficients (0 for the zero polynomial).
    mpz_class content() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(LaurentPoly a);

    LaurentPoly times(const Monomial& m) const;
    LaurentPoly times(const mpz_class& c) const;
    /// Exact division of every coefficient by c; throws DomainError if inexact.
    LaurentPoly divided_by(const mpz_class& c) const;
    /// Negative exponents are allowed only for units.
    LaurentPoly pow(int e) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    std::vector<Term> terms_;

    void normalize();
};

/// Parses sums and products of integers, t, q, parentheses and integer powers.
/// Multiplication may be implicit (`2t^2q`). Throws ParseError.
LaurentPoly parse_poly(std::string_view text);

/// c with a = b*c, or nothing when b does not divide a in the Laurent ring.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Exact evaluation; t and q must be nonzero.
mpq_class eval_rational(const LaurentPoly& p, const mpq_class& t, const mpq_class& q);

/// Substitution where both images are units (+-monomials), so the result
/// stays a Laurent polynomial.
LaurentPoly substitute_units(const LaurentPoly& p, const LaurentPoly& t_image,
                             const LaurentPoly& q_image);

} // namespace braidrep

#endif

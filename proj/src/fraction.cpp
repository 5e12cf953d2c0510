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

#include "braidrep/fraction.hpp"

#include "braidrep/error.hpp"

#include <algorithm>
#include <vector>

namespace braidrep {

PolyFraction::PolyFraction(LaurentPoly num) : num_(std::move(num)), den_(1) {}

PolyFraction::PolyFraction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void PolyFraction::canonicalize() {
    if (den_.is_zero()) throw DomainError("zero denominator");
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    // Monomials are units: move the monomial part of den into num.
    Monomial m = den_.min_exponents().inverse();
    den_ = den_.times(m);
    num_ = num_.times(m);

    mpz_class g;
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading().coeff < 0) g = -g;
    if (g != 1) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    if (den_.is_one()) return;
    if (auto quotient = exact_div(num_, den_)) {
        num_ = std::move(*quotient);
        den_ = 1;
    }
}

std::optional<LaurentPoly> PolyFraction::as_polynomial() const {
    if (is_polynomial()) return num_;
    return std::nullopt;
}

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) { return a + (-b); }

PolyFraction operator-(const PolyFraction& a) {
    PolyFraction r = a;
    r.num_ = -r.num_;
    return r;
}

PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

PolyFraction operator/(const PolyFraction& a, const PolyFraction& b) {
    if (b.num_.is_zero()) throw DomainError("division by the zero fraction");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string PolyFraction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

PolyFraction rational_constant(const mpq_class& v) {
    return {LaurentPoly(v.get_num()), LaurentPoly(v.get_den())};
}

namespace {

// powers[k] = base^k for k in [0, n]
std::vector<LaurentPoly> power_table(const LaurentPoly& base, int n) {
    std::vector<LaurentPoly> p;
    p.reserve(static_cast<std::size_t>(n) + 1);
    p.emplace_back(1);
    for (int k = 1; k <= n; ++k) p.push_back(p.back() * base);
    return p;
}

} // namespace

PolyFraction substitute(const LaurentPoly& p, const PolyFraction& t_image,
                        const PolyFraction& q_image) {
    if (p.is_zero()) return {};
    Monomial lo = p.min_exponents(), hi = p.max_exponents();
    if (lo.ex != 0 || hi.ex != 0) throw DomainError("auxiliary variable present in substitution");
    int tlo = std::min(lo.et, 0), thi = std::max(hi.et, 0);
    int qlo = std::min(lo.eq, 0), qhi = std::max(hi.eq, 0);
    if (tlo < 0 && t_image.is_zero()) throw DomainError("negative power of t substituted by 0");
    if (qlo < 0 && q_image.is_zero()) throw DomainError("negative power of q substituted by 0");

    // t^i = a^i / b^i; multiply through by a^{-tlo} b^{thi} (same for q).
    const LaurentPoly &a = t_image.num(), &b = t_image.den();
    const LaurentPoly &c = q_image.num(), &d = q_image.den();
    auto pa = power_table(a, thi - tlo), pb = power_table(b, thi - tlo);
    auto pc = power_table(c, qhi - qlo), pd = power_table(d, qhi - qlo);

    LaurentPoly num;
    for (const auto& term : p.terms()) {
        int i = term.mono.et, j = term.mono.eq;
        num += (pa[i - tlo] * pb[thi - i] * pc[j - qlo] * pd[qhi - j]).times(term.coeff);
    }
    LaurentPoly den = pa[-tlo] * pb[thi] * pc[-qlo] * pd[qhi];
    return {std::move(num), std::move(den)};
}

PolyFraction substitute(const PolyFraction& f, const PolyFraction& t_image,
                        const PolyFraction& q_image) {
    PolyFraction n = substitute(f.num(), t_image, q_image);
    PolyFraction d = substitute(f.den(), t_image, q_image);
    if (d.is_zero())
        throw DomainError("denominator " + f.den().to_string() + " vanishes under the substitution");
    return n / d;
}

mpq_class eval_rational(const PolyFraction& f, const mpq_class& t, const mpq_class& q) {
    mpq_class d = eval_rational(f.den(), t, q);
    if (d == 0) throw DomainError("denominator " + f.den().to_string() + " vanishes at the point");
    return eval_rational(f.num(), t, q) / d;
}

} // namespace braidrep

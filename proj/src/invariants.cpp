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

#include "braidrep/invariants.hpp"

#include "braidrep/error.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/reps.hpp"

namespace braidrep {

namespace {

LaurentPoly det_minus_identity(const PolyMatrix& a) {
    return determinant(a - PolyMatrix::identity(a.rows()));
}

BraidWord full_cycle(int n) {
    std::vector<int> idx;
    for (int i = 1; i < n; ++i) idx.push_back(i);
    return BraidWord::from_indices(n, idx);
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Monomial lo = p.min_exponents();
    LaurentPoly r = p.times(Monomial{-lo.et, -lo.eq, 0});
    // trailing term has the lowest t-degree under the graded order only when
    // no q appears; search explicitly
    const LaurentPoly::Term* low = nullptr;
    for (const auto& term : r.terms())
        if (term.mono.et == 0 && (!low || term.mono.eq < low->mono.eq)) low = &term;
    if (low && sgn(low->coeff) < 0) r = -r;
    return r;
}

} // namespace

AlexanderResult alexander(const BraidWord& w) {
    int n = w.strands();
    if (n < 2) throw RangeError("alexander needs at least 2 strands");
    Representation rho = burau_reduced(n);
    LaurentPoly num = det_minus_identity(image_of_word(rho, w));
    LaurentPoly den = det_minus_identity(image_of_word(rho, full_cycle(n)));
    if (den.is_zero()) throw std::logic_error("alexander: degenerate denominator");
    auto quot = exact_div(num, den);
    if (!quot)
        throw DomainError("alexander: " + num.to_string() + " is not divisible by " +
                          den.to_string() + " (closure is not a knot)");
    return {PolyFraction(num, den), normalize_unit(*quot)};
}

KrammerResult krammer_fraction(const BraidWord& w) {
    int n = w.strands();
    if (n < 2) throw RangeError("krammer needs at least 2 strands");
    Representation k = lk(n);
    LaurentPoly num = det_minus_identity(image_of_word(k, w));
    LaurentPoly den = det_minus_identity(image_of_word(k, full_cycle(n)));
    PolyFraction f(num, den);
    return {f, f.as_polynomial()};
}

CheckReport markov1_test(const BraidWord& w, const std::vector<BraidWord>& conjugators) {
    CheckReport rep{"markov1 " + w.to_string(), {}};
    KrammerResult k = krammer_fraction(w);
    std::optional<LaurentPoly> a;
    try {
        a = alexander(w).normalized;
    } catch (const DomainError&) {
        // links: only the Krammer fraction is compared
    }
    for (const auto& g : conjugators) {
        if (g.strands() != w.strands()) throw RangeError("conjugator strand count mismatch");
        BraidWord c = w.conjugate_by(g);
        KrammerResult kc = krammer_fraction(c);
        bool ok = kc.fraction == k.fraction;
        rep.add("krammer(g w g^-1) = krammer(w), g = [" + g.to_string() + "]", ok,
                ok ? "" : kc.fraction.to_string() + " vs " + k.fraction.to_string());
        if (a) {
            LaurentPoly ac = alexander(c).normalized;
            rep.add("alexander(g w g^-1) = alexander(w), g = [" + g.to_string() + "]", ac == *a,
                    ac == *a ? "" : ac.to_string() + " vs " + a->to_string());
        }
    }
    return rep;
}

Markov2Probe markov2_probe(const BraidWord& w) {
    int n = w.strands();
    BraidWord st = w.with_strands(n + 1).concat(BraidWord::from_indices(n + 1, {n}));
    Markov2Probe p{w, st, krammer_fraction(w), krammer_fraction(st), {}, {}, {}, {}, {}, {}, {}};
    if (!p.k_base.fraction.is_zero()) p.ratio = p.k_stabilized.fraction / p.k_base.fraction;
    p.base_q1 = specialize(p.k_base.fraction, std::nullopt, mpq_class(1));
    p.stabilized_q1 = specialize(p.k_stabilized.fraction, std::nullopt, mpq_class(1));
    p.base_t1 = specialize(p.k_base.fraction, mpq_class(1), std::nullopt);
    p.stabilized_t1 = specialize(p.k_stabilized.fraction, mpq_class(1), std::nullopt);
    p.alexander_base = alexander(w).normalized;
    p.alexander_stabilized = alexander(st).normalized;
    return p;
}

PolyFraction specialize(const PolyFraction& f, const std::optional<mpq_class>& t_value,
                        const std::optional<mpq_class>& q_value) {
    PolyFraction ti = t_value ? rational_constant(*t_value) : PolyFraction(LaurentPoly::t());
    PolyFraction qi = q_value ? rational_constant(*q_value) : PolyFraction(LaurentPoly::q());
    return substitute(f, ti, qi);
}

} // namespace braidrep

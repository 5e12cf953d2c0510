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

#include "braidrep/error.hpp"
#include "braidrep/invariants.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/reps.hpp"
#include "oracles.hpp"
#include "printed.hpp"

#include <doctest.h>

using namespace braidrep;

namespace {
LaurentPoly P(const char* s) { return parse_poly(s); }
const LaurentPoly t = LaurentPoly::t(), q = LaurentPoly::q();
BraidWord W(const char* s, int n) { return parse_word(s, n); }

// Alexander polynomial by the other classical route: (1 - t) det(rho(X) - I)
// over 1 - t^n, evaluated at several rationals; compared up to +-t^k.
bool alexander_matches_pointwise(const BraidWord& w, const LaurentPoly& delta) {
    int n = w.strands();
    LaurentPoly d = determinant(image_of_word(burau_reduced(n, BurauForm::Standard), w) -
                                PolyMatrix::identity(static_cast<std::size_t>(n - 1)));
    mpq_class ratio;
    bool first = true;
    for (int a : {2, 3, 5, 7}) {
        mpq_class t0(a, 3);
        mpq_class lhs = (1 - t0) * eval_rational(d, t0, 1);
        mpq_class tn = 1;
        for (int k = 0; k < n; ++k) tn *= t0;
        mpq_class rhs = (1 - tn) * eval_rational(delta, t0, 1);
        if (rhs == 0) return lhs == 0;
        // lhs / rhs must be +-t0^k for one fixed k
        mpq_class r = lhs / rhs;
        bool found = false;
        for (int k = -12; k <= 12 && !found; ++k) {
            mpq_class p = 1;
            for (int i = 0; i < std::abs(k); ++i) p *= t0;
            if (k < 0) p = 1 / p;
            if (r == p || r == -p) {
                mpq_class s = r / p;
                if (first) {
                    ratio = k * 2 + (s > 0 ? 0 : 1);
                    first = false;
                }
                found = ratio == k * 2 + (s > 0 ? 0 : 1);
            }
        }
        if (!found) return false;
    }
    return true;
}
} // namespace

TEST_SUITE("invariants") {

TEST_CASE("Alexander polynomial examples") {
    CHECK(alexander(W("1 1 1", 2)).normalized == P("t^2 - t + 1"));
    CHECK(alexander(W("1 2 2 2", 3)).normalized == P("t^2 - t + 1"));
    CHECK(alexander(W("1", 2)).normalized == LaurentPoly(1));
    CHECK(alexander(W("1 -2 1 -2", 3)).normalized == P("t^2 - 3t + 1"));
    CHECK(alexander(W("1 1 1 1 1", 2)).normalized == P("t^4 - t^3 + t^2 - t + 1"));
    // split closure: Burau determinant vanishes
    CHECK(alexander(BraidWord(3)).normalized.is_zero());
}

TEST_CASE("Alexander normalization") {
    oracle::Rng rng(41);
    for (int i = 0; i < 40; ++i) {
        BraidWord w = oracle::random_knot_word(rng, rng.uniform(2, 4), 9);
        LaurentPoly a = alexander(w).normalized;
        REQUIRE_FALSE(a.is_zero());
        REQUIRE(a.min_exponents().et == 0);
        REQUIRE(a.trailing().coeff > 0);
        REQUIRE(eval_rational(a, 1, 1) * eval_rational(a, 1, 1) == 1);  // Delta(1) = +-1 for knots
        REQUIRE(alexander_matches_pointwise(w, a));
    }
}

TEST_CASE("Alexander is invariant under both Markov moves") {
    oracle::Rng rng(42);
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < 10; ++i) {
            BraidWord w = oracle::random_knot_word(rng, n, 8);
            BraidWord g = oracle::random_word(rng, n, rng.uniform(1, 4));
            REQUIRE(alexander(w.conjugate_by(g)).normalized == alexander(w).normalized);
            REQUIRE(markov2_probe(w).alexander_equal());
        }
}

TEST_CASE("Krammer fraction on the trefoil") {
    KrammerResult k2 = krammer_fraction(W("1 1 1", 2));
    // the value is Delta(-t^2 q), not Delta(t^2 q)
    CHECK(*k2.collapsed == P("t^4 q^2 + t^2 q + 1"));
    CHECK(k2.fraction == substitute(P("t^2 - t + 1"), PolyFraction(-t * t * q), PolyFraction(q)));
    CHECK(specialize(k2.fraction, mpq_class(1), std::nullopt) == PolyFraction(P("q^2 + q + 1")));
    CHECK(specialize(k2.fraction, std::nullopt, mpq_class(1)) == PolyFraction(P("t^4 + t^2 + 1")));
    KrammerResult k3 = krammer_fraction(W("1 1 1 2", 3));
    CHECK(*k3.collapsed == P("t^6 q^2 + 1"));
    CHECK(specialize(k3.fraction, std::nullopt, mpq_class(1)) == PolyFraction(P("t^6 + 1")));
    CHECK(specialize(k3.fraction, mpq_class(1), std::nullopt) == PolyFraction(P("q^2 + 1")));
    CHECK(krammer_fraction(BraidWord(3)).fraction.is_zero());
}

TEST_CASE("Krammer fraction at n = 2 is Alexander at -t^2 q") {
    for (int e : {1, 3, 5, 7, 9}) {
        std::vector<int> idx(static_cast<std::size_t>(e), 1);
        BraidWord w = BraidWord::from_indices(2, idx);
        PolyFraction want = substitute(alexander(w).normalized, PolyFraction(-t * t * q), PolyFraction(q));
        CHECK(krammer_fraction(w).fraction == want);
    }
}

TEST_CASE("determinants behind the trefoil fraction") {
    Representation k3 = lk(3);
    auto minus_one = std::vector<LaurentPoly>(3, LaurentPoly(-1));
    PolyMatrix b = image_of_word(k3, W("1 2", 3)), a = image_of_word(k3, W("1 1 1 2", 3));
    CHECK(determinant(b - PolyMatrix::identity(3)) == P("t^6 q^2 - 1"));
    CHECK(generalized_char_poly(b, minus_one) == P("t^6 q^2 - 1"));
    CHECK(determinant(a - PolyMatrix::identity(3)) == P("t^12 q^4 - 1"));
    CHECK(generalized_char_poly(a, minus_one) == P("t^12 q^4 - 1"));
    CHECK(generalized_char_poly_cofactor(a, minus_one) == P("t^12 q^4 - 1"));
    // the displayed A(t,q) is the quantized symmetric square image
    CHECK(image_of_word(sym2_quantized(3), W("1 1 1 2", 3)) == oracle::load(printed::trefoil_a));
    CHECK(determinant(oracle::load(printed::trefoil_a) - PolyMatrix::identity(3)) == P("t^12 q^4 - 1"));
}

TEST_CASE("Krammer fraction respects conjugation") {
    oracle::Rng rng(43);
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < 8; ++i) {
            BraidWord w = oracle::random_word(rng, n, rng.uniform(1, 7));
            BraidWord g = oracle::random_word(rng, n, rng.uniform(1, 4));
            REQUIRE(markov1_test(w, {g, BraidWord(n)}).passed());
        }
    CHECK(markov1_test(W("1 1 1 2", 3), {W("2", 3)}).passed());
    CHECK_THROWS_AS(markov1_test(W("1", 2), {W("1", 3)}), RangeError);
}

TEST_CASE("Krammer fraction does not respect stabilization") {
    Markov2Probe p = markov2_probe(W("1 1 1", 2));
    CHECK_FALSE(p.krammer_equal());
    CHECK(p.alexander_equal());
    CHECK(p.stabilized == W("1 1 1 2", 3));
    REQUIRE(p.ratio.has_value());
    CHECK(*p.ratio == PolyFraction(P("t^6 q^2 + 1"), P("t^4 q^2 + t^2 q + 1")));
    CHECK(p.stabilized_q1 == PolyFraction(P("t^6 + 1")));
    CHECK(p.base_q1 == PolyFraction(P("t^4 + t^2 + 1")));
    // t^6 + 1 = (t^2 + 1)(t^4 - t^2 + 1): the factor pairs with Delta(-t^2), not Delta(t^2)
    CHECK(p.stabilized_q1 != PolyFraction(P("t^2 + 1")) * p.base_q1);
    CHECK(p.stabilized_q1 == PolyFraction(P("t^2 + 1")) * PolyFraction(P("t^4 - t^2 + 1")));
}

TEST_CASE("specialization errors") {
    PolyFraction f(P("t + 1"), P("q - 1"));
    CHECK_THROWS_AS(specialize(f, std::nullopt, mpq_class(1)), DomainError);
    CHECK(specialize(f, mpq_class(1), mpq_class(3)) == PolyFraction(LaurentPoly(1)));
}

TEST_CASE("links: Hopf link and split unlink") {
    AlexanderResult hopf = alexander(W("1 1", 2));
    CHECK(hopf.normalized == P("1 - t"));
    CHECK(alexander(W("1 -1", 2)).normalized.is_zero());
}

} // TEST_SUITE invariants

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
#include "braidrep/kernels.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/polymatrix.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace braidrep;

namespace {
LaurentPoly P(const char* s) { return parse_poly(s); }
PolyMatrix M(const std::vector<std::vector<std::string>>& rows) { return PolyMatrix::parse(rows); }
const LaurentPoly t = LaurentPoly::t(), q = LaurentPoly::q();

// strictly upper triangular integer matrix; entries are multiples of 120 so
// every a^k / k! below the nilpotency index stays integral
PolyMatrix random_nilpotent(oracle::Rng& rng, std::size_t n) {
    PolyMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(i, j) = 120 * rng.uniform(-3, 3);
    return a;
}

// brute-force symmetric square: act on e_k e_r + e_r e_k inside V (x) V
PolyMatrix sym2_oracle(const PolyMatrix& a) {
    std::size_t n = a.rows();
    PolyMatrix aa = tensor_product(a, a);
    SymIndex idx(n, 2);
    PolyMatrix out(idx.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
        auto pair = idx.tuples()[c];
        std::vector<LaurentPoly> v(n * n);
        v[pair[0] * n + pair[1]] += 1;
        if (pair[0] != pair[1]) v[pair[1] * n + pair[0]] += 1;
        std::vector<LaurentPoly> w(n * n);
        for (std::size_t i = 0; i < n * n; ++i)
            for (std::size_t j = 0; j < n * n; ++j) w[i] += aa(i, j) * v[j];
        // read coordinates off the e_k (x) e_r slot with k <= r
        for (std::size_t r = 0; r < idx.size(); ++r) {
            auto p = idx.tuples()[r];
            out(r, c) = w[p[0] * n + p[1]];
        }
    }
    return out;
}
} // namespace

TEST_SUITE("polymatrix") {

TEST_CASE("products and direct sums") {
    PolyMatrix a = M({{"-t", "t"}, {"0", "1"}}), b = M({{"1", "0"}, {"1", "-t"}});
    CHECK(a * b * b * b == M({{"t^3-t^2", "-t^4"}, {"t^2-t+1", "-t^3"}}));
    CHECK(a * PolyMatrix::identity(2) == a);
    PolyMatrix ds = direct_sum(PolyMatrix::identity(2), b);
    CHECK(ds.rows() == 4);
    CHECK(ds(3, 2) == LaurentPoly(1));
    CHECK(ds(3, 3) == -t);
    CHECK_THROWS_AS(a * PolyMatrix::identity(3), ShapeError);
    CHECK_THROWS_AS(M({{"1", "2"}, {"3"}}), ShapeError);
}

TEST_CASE("determinant examples") {
    CHECK(determinant(PolyMatrix::identity(5)) == LaurentPoly(1));
    CHECK(determinant(M({{"0", "1"}, {"1", "0"}})) == LaurentPoly(-1));
    CHECK(determinant(M({{"0", "0", "1"}, {"0", "t", "0"}, {"q", "0", "0"}})) == -t * q);
    CHECK(determinant(M({{"1", "t"}, {"t^-1", "1"}})).is_zero());
}

TEST_CASE("Bareiss matches Laplace expansion and rational evaluation") {
    oracle::Rng rng(11);
    oracle::PolyShape s{3, -2, 2, 6, true};
    for (int i = 0; i < 150; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        PolyMatrix a = oracle::random_matrix(rng, n, n, s);
        if (rng.uniform(0, 5) == 0) {
            // force a zero pivot so the row swap path runs
            for (std::size_t j = 0; j < n; ++j) a(0, j) = 0;
            if (n > 1) a(0, n - 1) = t;
        }
        LaurentPoly d = determinant(a);
        REQUIRE(d == oracle::laplace_det(a));
        mpq_class t0 = oracle::random_rational(rng), q0 = oracle::random_rational(rng);
        REQUIRE(eval_rational(d, t0, q0) == oracle::rational_det(oracle::evaluate(a, t0, q0)));
    }
}

TEST_CASE("det(AB) = det(A) det(B) on random 4x4") {
    oracle::Rng rng(12);
    oracle::PolyShape s{2, -1, 1, 4, true};
    int cases = 0;
    for (int i = 0; i < 200; ++i) {
        PolyMatrix a = oracle::random_matrix(rng, 4, 4, s), b = oracle::random_matrix(rng, 4, 4, s);
        REQUIRE(determinant(a * b) == determinant(a) * determinant(b));
        ++cases;
    }
    CHECK(cases >= 200);
}

TEST_CASE("inverse") {
    CHECK(inverse(M({{"-t", "t"}, {"0", "1"}})) == M({{"-t^-1", "1"}, {"0", "1"}}));
    CHECK(inverse(PolyMatrix::identity(3)).is_identity());
    CHECK_THROWS_AS(inverse(M({{"1", "0"}, {"0", "1+t"}})), NotInvertible);
    oracle::Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        // unipotent times a unit diagonal: determinant is a unit
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        PolyMatrix u = exp_nilpotent(random_nilpotent(rng, n));
        std::vector<LaurentPoly> d;
        for (std::size_t k = 0; k < n; ++k) d.push_back(LaurentPoly::monomial(rng.coin() ? 1 : -1, rng.uniform(-2, 2), rng.uniform(-2, 2)));
        PolyMatrix a = u.transposed() * PolyMatrix::diagonal(d) * u;
        REQUIRE((a * inverse(a)).is_identity());
    }
}

TEST_CASE("tensor product") {
    CHECK(tensor_product(PolyMatrix::identity(2), PolyMatrix::identity(2)).is_identity());
    PolyMatrix e = PolyMatrix::unit(2, 0, 1);
    CHECK(tensor_product(e, e) == PolyMatrix::unit(4, 0, 3));
}

TEST_CASE("symmetric and exterior powers") {
    PolyMatrix a = M({{"-t", "t"}, {"0", "1"}});
    // colex basis (1,1),(1,2),(2,2)
    CHECK(sym_power(a, 2) == M({{"t^2", "-2t^2", "t^2"}, {"0", "-t", "t"}, {"0", "0", "1"}}));
    CHECK(sym_power(M({{"1", "1"}, {"0", "1"}}), 3) ==
          M({{"1", "3", "3", "1"}, {"0", "1", "2", "1"}, {"0", "0", "1", "1"}, {"0", "0", "0", "1"}}));
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            PolyMatrix s = sym_power(PolyMatrix::identity(n), m);
            CHECK(s.is_identity());
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), n + m - 1, m);
            CHECK(s.rows() == c.get_ui());
            if (m <= n) {
                PolyMatrix e = ext_power(PolyMatrix::identity(n), m);
                mpz_bin_uiui(c.get_mpz_t(), n, m);
                CHECK(e.is_identity());
                CHECK(e.rows() == c.get_ui());
            }
        }
    oracle::Rng rng(14);
    oracle::PolyShape s{2, -1, 1, 3, true};
    for (int i = 0; i < 40; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(3, 4));
        PolyMatrix x = oracle::random_matrix(rng, n, n, s), y = oracle::random_matrix(rng, n, n, s);
        REQUIRE(sym_power(x * y, 2) == sym_power(x, 2) * sym_power(y, 2));
        REQUIRE(ext_power(x * y, 2) == ext_power(x, 2) * ext_power(y, 2));
        REQUIRE(sym_power(x, 2) == sym2_oracle(x));
        REQUIRE(ext_power(x, n) == PolyMatrix::from_rows({{determinant(x)}}));
    }
    CHECK_THROWS_AS(ext_power(PolyMatrix::identity(2), 3), RangeError);
}

TEST_CASE("basis orders") {
    SymIndex s(3, 2);
    std::vector<std::vector<std::size_t>> colex = {{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}};
    CHECK(s.tuples() == colex);
    ExtIndex e(4, 2);
    std::vector<std::vector<std::size_t>> lex = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(e.tuples() == lex);
}

TEST_CASE("nilpotent exponential") {
    CHECK(exp_nilpotent(PolyMatrix::unit(2, 0, 1)) == M({{"1", "1"}, {"0", "1"}}));
    CHECK(exp_nilpotent(PolyMatrix(3, 3)).is_identity());
    CHECK_THROWS_AS(exp_nilpotent(PolyMatrix::identity(2)), DomainError);
    // (E12 + E23)^2 / 2 is not integral
    CHECK_THROWS_AS(exp_nilpotent(PolyMatrix::unit(3, 0, 1) + PolyMatrix::unit(3, 1, 2)), DomainError);
    oracle::Rng rng(15);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        PolyMatrix a = random_nilpotent(rng, n);
        REQUIRE((exp_nilpotent(a) * exp_nilpotent(-a)).is_identity());
    }
}

TEST_CASE("central symmetry") {
    CHECK(sharp(PolyMatrix::diagonal({t, q, LaurentPoly(1)})) == PolyMatrix::diagonal({LaurentPoly(1), q, t}));
    CHECK(sharp(M({{"1", "1"}, {"0", "1"}})) == M({{"1", "0"}, {"1", "1"}}));
    oracle::Rng rng(16);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        PolyMatrix a = oracle::random_matrix(rng, n, n), b = oracle::random_matrix(rng, n, n);
        REQUIRE(sharp(sharp(a)) == a);
        REQUIRE(sharp(a * b) == sharp(a) * sharp(b));
        PolyMatrix j(n, n);
        for (std::size_t k = 0; k < n; ++k) j(k, n - 1 - k) = 1;
        REQUIRE(sharp(a) == j * a * j);
    }
}

TEST_CASE("generalized characteristic polynomial") {
    std::size_t m = 3;
    LaurentPoly x = t;
    CHECK(generalized_char_poly(PolyMatrix(m, m), {x, x, x}) == x.pow(3));
    oracle::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        PolyMatrix c = oracle::random_matrix(rng, n, n);
        std::vector<LaurentPoly> l;
        for (std::size_t k = 0; k < n; ++k) l.push_back(oracle::random_poly(rng));
        REQUIRE(generalized_char_poly(c, l) == generalized_char_poly_cofactor(c, l));
        REQUIRE(generalized_char_poly(c, l) == oracle::laplace_det(c + PolyMatrix::diagonal(l)));
    }
    CHECK_THROWS_AS(generalized_char_poly(PolyMatrix(2, 2), {t}), ShapeError);
}

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly(PolyMatrix::identity(2)) == CharPoly::from_roots({1, 1}));
    PolyMatrix a = M({{"-t", "t"}, {"0", "1"}});
    CharPoly c = char_poly(a);
    CHECK(c == CharPoly::from_roots({-t, 1}));
    CHECK(c.evaluate(-t).is_zero());
    CHECK(c.degree() == 2);
}

} // TEST_SUITE polymatrix

TEST_SUITE("kernels") {

TEST_CASE("serial and parallel kernels agree bit for bit") {
    oracle::Rng rng(21);
    oracle::PolyShape s{2, -1, 1, 5, true};
    for (int i = 0; i < 25; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        PolyMatrix a = oracle::random_matrix(rng, n, n, s), b = oracle::random_matrix(rng, n, n, s);
        REQUIRE(kernels::serial::multiply(a, b) == kernels::parallel::multiply(a, b));
        REQUIRE(kernels::serial::bareiss_determinant(a) == kernels::parallel::bareiss_determinant(a));
        auto gs = kernels::serial::gauss_jordan(a), gp = kernels::parallel::gauss_jordan(a);
        REQUIRE(gs.singular == gp.singular);
        REQUIRE(gs.pivot == gp.pivot);
        REQUIRE(gs.scaled_inverse == gp.scaled_inverse);
        if (!gs.singular) REQUIRE(a * gs.scaled_inverse == PolyMatrix::identity(n).scaled(gs.pivot));
    }
}

TEST_CASE("backend switch") {
    auto before = kernels::default_backend();
    kernels::set_default_backend(kernels::Backend::Serial);
    CHECK(kernels::default_backend() == kernels::Backend::Serial);
    kernels::set_default_backend(before);
    PolyMatrix a = M({{"t", "1"}, {"q", "2"}});
    CHECK(determinant(a, kernels::Backend::Serial) == determinant(a, kernels::Backend::Parallel));
}

} // TEST_SUITE kernels

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

#include "braidrep/reps.hpp"

#include "braidrep/error.hpp"
#include "braidrep/qcomb.hpp"

#include <sstream>

namespace braidrep {

namespace {

using LP = LaurentPoly;

LP t_() { return LP::t(); }
LP minus_t() { return -LP::t(); }

void require_strands(int n, int min, const char* what) {
    if (n < min)
        throw RangeError(std::string(what) + " needs at least " + std::to_string(min) +
                         " strands, got " + std::to_string(n));
}

PolyMatrix I(std::size_t n) { return PolyMatrix::identity(n); }

std::string mat_detail(const PolyMatrix& got, const PolyMatrix& want) {
    return "got\n" + got.to_string() + "expected\n" + want.to_string();
}

} // namespace

// ---------------------------------------------------------------- Burau

Representation burau_unreduced(int n) {
    require_strands(n, 2, "burau");
    std::size_t d = static_cast<std::size_t>(n);
    PolyMatrix block = PolyMatrix::from_rows({{1 - t_(), t_()}, {1, 0}});
    std::vector<PolyMatrix> gens;
    for (std::size_t i = 1; i < d; ++i) gens.push_back(direct_sum({I(i - 1), block, I(d - i - 1)}));
    return Representation(n, std::move(gens), "burau(n=" + std::to_string(n) + ")");
}

Representation burau_reduced(int n, BurauForm form) {
    require_strands(n, 2, "reduced-burau");
    std::string label = "reduced-burau(n=" + std::to_string(n) + ", " +
                        (form == BurauForm::Standard ? "standard" : "conjugated") + ")";
    if (n == 2) return Representation(2, {PolyMatrix::from_rows({{minus_t()}})}, label);

    std::size_t d = static_cast<std::size_t>(n) - 1;
    PolyMatrix first, last, mid;
    if (form == BurauForm::Standard) {
        first = PolyMatrix::from_rows({{minus_t(), 0}, {-1, 1}});
        last = PolyMatrix::from_rows({{1, minus_t()}, {0, minus_t()}});
        mid = PolyMatrix::from_rows({{1, minus_t(), 0}, {0, minus_t(), 0}, {0, -1, 1}});
    } else {
        first = PolyMatrix::from_rows({{minus_t(), t_()}, {0, 1}});
        last = PolyMatrix::from_rows({{1, 0}, {1, minus_t()}});
        mid = PolyMatrix::from_rows({{1, 0, 0}, {1, minus_t(), t_()}, {0, 0, 1}});
    }
    std::vector<PolyMatrix> gens;
    gens.push_back(direct_sum(first, I(d - 2)));
    for (std::size_t i = 2; i + 1 < static_cast<std::size_t>(n); ++i)
        gens.push_back(direct_sum({I(i - 2), mid, I(d - i - 1)}));
    gens.push_back(direct_sum(I(d - 2), last));
    return Representation(n, std::move(gens), label);
}

// ---------------------------------------------------- Lawrence-Krammer

std::vector<std::pair<int, int>> lk_basis(int n) {
    std::vector<std::pair<int, int>> b;
    for (int k = 2; k <= n; ++k)
        for (int j = 1; j < k; ++j) b.emplace_back(j, k);
    return b;
}

namespace {

std::size_t lk_pos(int j, int k) {
    return static_cast<std::size_t>((k - 1) * (k - 2) / 2 + (j - 1));
}

// Image of F_{j,k} under sigma_i as (coefficient, j', k') triples.
std::vector<std::tuple<LP, int, int>> lk_action(int i, int j, int k, LkNotation nt) {
    const LP t = LP::t(), q = LP::q();
    // The Bigelow table is the new one with the roles of the variables moved.
    const LP a = nt == LkNotation::New ? t : q;
    if (i == j && i == k - 1) {
        if (nt == LkNotation::New) return {{q * t * t, j, k}};
        return {{-(t * q * q), j, k}};
    }
    if (i == j - 1) return {{a, i, k}, {a * (a - 1), i, j}, {1 - a, j, k}};
    if (i == j) return {{1, j + 1, k}};
    if (i == k - 1) {
        LP tail = nt == LkNotation::New ? t * (t - 1) * q : q * (1 - q) * t;
        return {{a, j, i}, {1 - a, j, k}, {tail, i, k}};
    }
    if (i == k) return {{1, j, k + 1}};
    return {{1, j, k}};
}

} // namespace

Representation lk(int n, LkNotation notation) {
    require_strands(n, 2, "lk");
    auto basis = lk_basis(n);
    std::size_t d = basis.size();
    std::vector<PolyMatrix> gens;
    for (int i = 1; i < n; ++i) {
        PolyMatrix g(d, d);
        for (std::size_t col = 0; col < d; ++col) {
            auto [j, k] = basis[col];
            for (auto& [c, a, b] : lk_action(i, j, k, notation)) g(lk_pos(a, b), col) += c;
        }
        gens.push_back(std::move(g));
    }
    std::string label = std::string(notation == LkNotation::New ? "lk" : "lk-orig") +
                        "(n=" + std::to_string(n) + ")";
    return Representation(n, std::move(gens), label);
}

// --------------------------------------------- quantized symmetric square

PolyMatrix quantize_sym2(const PolyMatrix& s2) {
    PolyMatrix r = s2;
    const LP two(2), one_q = 1 + LP::q();
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) {
            if (r(i, j) == two)
                r(i, j) = one_q;
            else if (r(i, j) == -two)
                r(i, j) = -one_q;
        }
    return r;
}

PolyMatrix sym2_scaling(std::size_t m, std::size_t k) {
    if (k < 1 || k > m) throw RangeError("sym2_scaling: index out of range");
    SymIndex idx(m, 2);
    PolyMatrix d = I(idx.size());
    std::size_t p = idx.index_of({k - 1, k - 1});
    d(p, p) = LP::q();
    return d;
}

Representation sym2_quantized(int n) {
    require_strands(n, 3, "sym2q");
    std::size_t m = static_cast<std::size_t>(n) - 1;
    auto S2 = [](const PolyMatrix& a) { return sym_power(a, 2); };
    auto Q = [&](const PolyMatrix& a) { return quantize_sym2(S2(a)); };
    auto diag_t = [&](std::size_t k) {
        PolyMatrix d = I(m);
        d(k - 1, k - 1) = minus_t();
        return S2(d);
    };
    auto E = [&](std::size_t i, std::size_t j) { return PolyMatrix::unit(m, i - 1, j - 1); };

    std::vector<PolyMatrix> gens;
    gens.push_back(diag_t(1) * Q(I(m) - E(1, 2)) * sym2_scaling(m, 1));
    for (std::size_t k = 2; k < m; ++k)
        gens.push_back(Q(I(m) + E(k, k - 1)) * diag_t(k) * Q(I(m) - E(k, k + 1)) *
                       sym2_scaling(m, k));
    gens.push_back(Q(I(m) + E(m, m - 1)) * sym2_scaling(m, m) * diag_t(m));
    return Representation(n, std::move(gens), "sym2q(n=" + std::to_string(n) + ")");
}

ChangeOfBasis change_of_basis(int n) {
    require_strands(n, 3, "change_of_basis");
    std::size_t m = static_cast<std::size_t>(n) - 1;
    SymIndex idx(m, 2);
    std::size_t d = idx.size();
    auto at = [&](std::size_t i, std::size_t j) { return idx.index_of({i, j}); };

    PolyMatrix c_inv(d, d), c(d, d);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            std::size_t col = at(i, j);
            for (std::size_t k = i; k <= j; ++k)
                for (std::size_t r = k; r <= j; ++r) c_inv(at(k, r), col) = 1;
            if (j == i) {
                c(at(i, i), col) = 1;
            } else if (j == i + 1) {
                c(at(i, i), col) = -1;
                c(at(i, j), col) = 1;
                c(at(j, j), col) = -1;
            } else {
                c(at(i, j - 1), col) += -1;
                c(at(i + 1, j - 1), col) += 1;
                c(at(i, j), col) += 1;
                c(at(i + 1, j), col) += -1;
            }
        }
    return {std::move(c), std::move(c_inv)};
}

ChangeOfBasis change_of_basis_blocks(int n) {
    require_strands(n, 3, "change_of_basis_blocks");
    std::size_t m = static_cast<std::size_t>(n) - 1;
    std::size_t d = m * (m + 1) / 2;
    // group r (1-based) holds the pairs (., r) and starts at r(r-1)/2
    auto start = [](std::size_t r) { return r * (r - 1) / 2; };
    PolyMatrix c_inv(d, d), c(d, d);
    for (std::size_t k = 1; k <= m; ++k) {
        // E block (k, r) = (L_k, 0) with L_k lower all-ones, for every r >= k
        for (std::size_t r = k; r <= m; ++r)
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b <= a; ++b) c_inv(start(k) + a, start(r) + b) = 1;
        // C: diagonal block I - e_k (e_k the lower shift), superdiagonal block -(I - e_k) padded
        for (std::size_t a = 0; a < k; ++a) {
            c(start(k) + a, start(k) + a) = 1;
            if (a > 0) c(start(k) + a, start(k) + a - 1) = -1;
            if (k < m) {
                c(start(k) + a, start(k + 1) + a) = -1;
                if (a > 0) c(start(k) + a, start(k + 1) + a - 1) = 1;
            }
        }
    }
    return {std::move(c), std::move(c_inv)};
}

CheckReport verify_lk_equivalence(int n) {
    require_strands(n, 3, "lk-equivalence");
    CheckReport rep{"lk-equivalence n=" + std::to_string(n), {}};
    auto [c, c_inv] = change_of_basis(n);
    rep.add("C C^-1 = I", (c * c_inv).is_identity());
    Representation s = sym2_quantized(n);
    Representation k = lk(n, LkNotation::New);
    for (int r = 1; r < n; ++r) {
        PolyMatrix lhs = c * s.generator(r) * c_inv;
        bool ok = lhs == k.generator(r);
        rep.add("s" + std::to_string(r) + ": C sym2q C^-1 = lk", ok,
                ok ? "" : mat_detail(lhs, k.generator(r)));
    }
    return rep;
}

// ----------------------------------------------------------- q-Pascal

namespace {

LP qsub(const LP& p, const LP& qv) { return substitute_units(p, LP::t(), qv); }

void require_unit(const LP& v, const char* what) {
    if (!v.is_unit()) throw DomainError(std::string(what) + " must be a unit (+-monomial)");
}

} // namespace

PolyMatrix qpascal_sigma1(int n, const LP& qv) {
    if (n < 1) throw RangeError("q-Pascal matrices need n >= 1");
    require_unit(qv, "q value");
    std::size_t d = static_cast<std::size_t>(n) + 1;
    PolyMatrix r(d, d);
    for (int k = 0; k <= n; ++k)
        for (int m = k; m <= n; ++m)
            r(static_cast<std::size_t>(k), static_cast<std::size_t>(m)) =
                qsub(q_binomial(n - k, n - m), qv);
    return r;
}

PolyMatrix qpascal_sigma2(int n, const LP& qv) {
    if (n < 1) throw RangeError("q-Pascal matrices need n >= 1");
    require_unit(qv, "q value");
    std::size_t d = static_cast<std::size_t>(n) + 1;
    LP qinv = qv.pow(-1);
    PolyMatrix r(d, d);
    for (int k = 0; k <= n; ++k)
        for (int m = 0; m <= k; ++m) {
            int s = k - m;
            LP v = qinv.pow(s * (s - 1) / 2) * qsub(q_binomial(k, m), qinv);
            r(static_cast<std::size_t>(k), static_cast<std::size_t>(m)) = s % 2 ? -v : v;
        }
    return r;
}

PolyMatrix qpascal_d(int n, const LP& qv) {
    if (n < 1) throw RangeError("q-Pascal matrices need n >= 1");
    require_unit(qv, "q value");
    std::vector<LP> d;
    for (int r = 0; r <= n; ++r) d.push_back(qv.pow(r * (r - 1) / 2));
    return PolyMatrix::diagonal(d);
}

LambdaSpec LambdaSpec::parse(std::string_view text) {
    LambdaSpec s;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start);
        try {
            s.entries.push_back(parse_poly(piece));
        } catch (const ParseError& e) {
            throw ParseError(std::string("lambda entry ") + std::to_string(s.entries.size()) +
                                 ": " + e.what(),
                             start + e.position());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return s;
}

LambdaSpec LambdaSpec::identity(int n) {
    return LambdaSpec{std::vector<LP>(static_cast<std::size_t>(n) + 1, LP(1))};
}

LambdaSpec LambdaSpec::burau(int n) {
    LambdaSpec s;
    for (int r = 0; r <= n; ++r) s.entries.push_back(minus_t().pow(n - r));
    return s;
}

std::string LambdaSpec::violation() const {
    if (entries.size() < 2) return "need at least two entries";
    for (std::size_t r = 0; r < entries.size(); ++r)
        if (!entries[r].is_unit())
            return "entry " + std::to_string(r) + " (" + entries[r].to_string() +
                   ") is not a unit";
    std::size_t n = entries.size() - 1;
    LP c = entries[0] * entries[n];
    for (std::size_t r = 1; r <= n; ++r) {
        LP v = entries[r] * entries[n - r];
        if (v != c)
            return "lambda_" + std::to_string(r) + " lambda_" + std::to_string(n - r) + " = " +
                   v.to_string() + " differs from lambda_0 lambda_" + std::to_string(n) + " = " +
                   c.to_string();
    }
    return {};
}

void LambdaSpec::validate() const {
    std::string v = violation();
    if (!v.empty()) throw DomainError("invalid lambda: " + v);
}

PolyMatrix LambdaSpec::matrix() const { return PolyMatrix::diagonal(entries); }

namespace {

std::string lambda_label(const LambdaSpec& l) {
    std::string s;
    for (std::size_t i = 0; i < l.entries.size(); ++i)
        s += (i ? "," : "") + l.entries[i].to_string();
    return s;
}

std::pair<PolyMatrix, PolyMatrix> qpascal_pair(const LambdaSpec& l, const LP& qv) {
    if (l.entries.size() < 2) throw DomainError("invalid lambda: need at least two entries");
    for (const auto& e : l.entries) require_unit(e, "lambda entry");
    int n = l.n();
    PolyMatrix d = qpascal_d(n, qv), lam = l.matrix();
    return {qpascal_sigma1(n, qv) * sharp(d) * lam, sharp(lam) * d * qpascal_sigma2(n, qv)};
}

} // namespace

Representation qpascal_rep(const LambdaSpec& lambda, const LP& qv) {
    lambda.validate();
    return qpascal_rep_unchecked(lambda, qv);
}

Representation qpascal_rep_unchecked(const LambdaSpec& lambda, const LP& qv) {
    auto [s1, s2] = qpascal_pair(lambda, qv);
    return Representation(3, {s1, s2},
                          "qpascal(dim=" + std::to_string(lambda.n()) + ", lambda=" +
                              lambda_label(lambda) + ")");
}

Representation qpascal_t_form(const LambdaSpec& lambda, const LP& qv) {
    lambda.validate();
    auto [s1, s2] = qpascal_pair(lambda, qv);
    return Representation(3, {sharp(s2), sharp(s1)},
                          "qpascal-t(dim=" + std::to_string(lambda.n()) + ", lambda=" +
                              lambda_label(lambda) + ")");
}

// ------------------------------------------------------- Lie algebras

Sl2Module sl2_module(int m) {
    if (m < 0) throw RangeError("sl2 module needs m >= 0");
    std::size_t d = static_cast<std::size_t>(m) + 1;
    Sl2Module s{PolyMatrix(d, d), PolyMatrix(d, d), PolyMatrix(d, d)};
    for (std::size_t r = 0; r < d; ++r) {
        s.h(r, r) = LP(static_cast<long>(m) - 2 * static_cast<long>(r));
        if (r + 1 < d) {
            s.x(r, r + 1) = LP(static_cast<long>(m) - static_cast<long>(r));
            s.y(r + 1, r) = LP(static_cast<long>(r) + 1);
        }
    }
    return s;
}

LieData natural_gl(int n) {
    if (n < 1) throw RangeError("natural_gl needs n >= 1");
    std::size_t d = static_cast<std::size_t>(n);
    LieData l;
    for (std::size_t k = 0; k < d; ++k) l.e_diag.push_back(PolyMatrix::unit(d, k, k));
    for (std::size_t k = 0; k + 1 < d; ++k) {
        l.x.push_back(PolyMatrix::unit(d, k, k + 1));
        l.y.push_back(PolyMatrix::unit(d, k + 1, k));
    }
    return l;
}

LieData sl2_symmetric_power(int m) {
    if (m < 1) throw RangeError("symmetric power needs m >= 1");
    LieData base = natural_gl(2), l;
    auto lift = [m](const PolyMatrix& a) { return sym_power_derivation(a, static_cast<std::size_t>(m)); };
    for (const auto& e : base.e_diag) l.e_diag.push_back(lift(e));
    l.x.push_back(lift(base.x[0]));
    l.y.push_back(lift(base.y[0]));
    return l;
}

namespace {

PolyMatrix exp_s(const PolyMatrix& e) {
    if (!e.is_square()) throw ShapeError("weight matrix must be square");
    std::vector<LP> d;
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) {
            const LP& v = e(i, j);
            if (i != j && !v.is_zero()) throw DomainError("weight matrix is not diagonal");
            if (i == j) {
                if (!v.is_constant() && !v.is_zero())
                    throw DomainError("weight matrix must have integer diagonal");
                mpz_class w = v.is_zero() ? mpz_class(0) : v.coefficient(Monomial{});
                if (!w.fits_sint_p()) throw DomainError("weight too large");
                d.push_back(minus_t().pow(static_cast<int>(w.get_si())));
            }
        }
    return PolyMatrix::diagonal(d);
}

} // namespace

Representation braid_from_lie_rep(const LieData& data) {
    std::size_t n = data.e_diag.size();
    if (n < 1 || data.x.size() + 1 != n || data.y.size() + 1 != n)
        throw ShapeError("Lie data needs n weights and n-1 X and Y images");
    std::vector<PolyMatrix> ex, ey, es;
    for (const auto& x : data.x) ex.push_back(exp_nilpotent(-x));
    for (const auto& y : data.y) ey.push_back(exp_nilpotent(y));
    for (const auto& e : data.e_diag) es.push_back(exp_s(e));

    std::vector<PolyMatrix> gens;
    if (n == 1) {
        gens.push_back(es[0]);
    } else {
        gens.push_back(es[0] * ex[0]);
        for (std::size_t k = 1; k + 1 < n; ++k) gens.push_back(ey[k - 1] * es[k] * ex[k]);
        gens.push_back(ey[n - 2] * es[n - 1]);
    }
    return Representation(static_cast<int>(n) + 1, std::move(gens),
                          "lie(n=" + std::to_string(n) + ", dim=" +
                              std::to_string(es[0].rows()) + ")");
}

// ------------------------------------------------------- verifications

CheckReport verify_spectrum(int n) {
    require_strands(n, 2, "spectrum");
    CheckReport rep{"spectrum n=" + std::to_string(n), {}};
    std::size_t minus = static_cast<std::size_t>(n) - 2;
    std::size_t ones = (static_cast<std::size_t>(n) - 1) * (static_cast<std::size_t>(n) - 2) / 2;
    auto roots = [&](const LP& first) {
        std::vector<LP> r{first};
        r.insert(r.end(), minus, minus_t());
        r.insert(r.end(), ones, LP(1));
        return CharPoly::from_roots(r);
    };
    CharPoly got = char_poly(lk(n).generator(1));
    CharPoly want = roots(LP::q() * LP::t(2));
    rep.add("char_poly(lk(s1)) = (x - q t^2)(x + t)^" + std::to_string(minus) + "(x - 1)^" +
                std::to_string(ones),
            got == want, got == want ? "" : got.to_string());
    if (n >= 3) {
        CharPoly g2 = char_poly(sym_power(burau_reduced(n).generator(1), 2));
        CharPoly w2 = roots(LP::t(2));
        rep.add("char_poly(S^2(rho(s1))) = (x - t^2)(x + t)^" + std::to_string(minus) +
                    "(x - 1)^" + std::to_string(ones),
                g2 == w2, g2 == w2 ? "" : g2.to_string());
    }
    return rep;
}

CheckReport verify_bigelow_bridge(int n) {
    require_strands(n, 2, "bigelow bridge");
    CheckReport rep{"bigelow bridge n=" + std::to_string(n), {}};
    Representation b = lk(n, LkNotation::Bigelow), k = lk(n, LkNotation::New);
    for (int r = 1; r < n; ++r) {
        PolyMatrix s = substitute_units(b.generator(r), -LP::q(), LP::t());
        bool ok = s == k.generator(r);
        rep.add("s" + std::to_string(r) + ": lk-orig(t -> -q, q -> t) = lk", ok,
                ok ? "" : mat_detail(s, k.generator(r)));
    }
    return rep;
}

PolyMatrix cyclic_shift(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = (j + 1) % n;
    return permutation_matrix(perm);
}

PolyMatrix embed_last(const PolyMatrix& x) { return direct_sum(x, I(1)); }

CheckReport verify_stability(int n) {
    require_strands(n, 3, "stability");
    CheckReport rep{"stability n=" + std::to_string(n), {}};
    Representation small = burau_reduced(n), big = burau_reduced(n + 1);
    PolyMatrix j = cyclic_shift(static_cast<std::size_t>(n)), j_inv = j.transposed();
    for (int k = 2; k < n; ++k) {
        PolyMatrix lhs = j * embed_last(small.generator(k)) * j_inv;
        bool ok = lhs == big.generator(k + 1);
        rep.add("J i(rho_" + std::to_string(n) + "(s" + std::to_string(k) + ")) J^-1 = rho_" +
                    std::to_string(n + 1) + "(s" + std::to_string(k + 1) + ")",
                ok, ok ? "" : mat_detail(lhs, big.generator(k + 1)));
    }
    PolyMatrix lhs1 = j * embed_last(small.generator(1)) * j_inv;
    bool differs = lhs1 != big.generator(2);
    rep.add("control: J i(rho_" + std::to_string(n) + "(s1)) J^-1 differs from rho_" +
                std::to_string(n + 1) + "(s2)",
            differs);
    return rep;
}

PolyMatrix antidiagonal(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = n - 1 - j;
    return permutation_matrix(perm);
}

CheckReport verify_ext_square_identity() {
    CheckReport rep{"ext-square", {}};
    Representation conj = burau_reduced(4, BurauForm::Conjugated);
    Representation std4 = burau_reduced(4, BurauForm::Standard);
    PolyMatrix s3 = antidiagonal(3);
    for (int k = 1; k <= 3; ++k) {
        PolyMatrix lhs = ext_power(conj.generator(k), 2);
        PolyMatrix rhs =
            (s3 * substitute_units(std4.generator(k), LP::t(-1), LP::q()) * s3).scaled(minus_t());
        bool ok = lhs == rhs;
        rep.add("s" + std::to_string(k) + ": ext^2 rho_4 = -t S3 rho_4^std(1/t) S3", ok,
                ok ? "" : mat_detail(lhs, rhs));
    }
    CharPoly ext = char_poly(ext_power(conj.generator(1), 2));
    CharPoly base = char_poly(conj.generator(1));
    CharPoly ext_want = CharPoly::from_roots({minus_t(), minus_t(), 1});
    CharPoly base_want = CharPoly::from_roots({minus_t(), 1, 1});
    rep.add("char_poly(ext^2 rho_4(s1)) = (x + t)^2 (x - 1)", ext == ext_want, ext.to_string());
    rep.add("char_poly(rho_4(s1)) = (x + t)(x - 1)^2", base == base_want, base.to_string());
    rep.add("the two characteristic polynomials differ", ext != base);
    return rep;
}

CheckReport verify_humphry(int max_dim) {
    if (max_dim < 1) throw RangeError("humphry needs dim >= 1");
    CheckReport rep{"humphry", {}};
    PolyMatrix u = PolyMatrix::from_rows({{1, 1}, {0, 1}});
    for (int m = 1; m <= max_dim; ++m) {
        std::string ms = std::to_string(m);
        PolyMatrix p1 = qpascal_sigma1(m, 1), p2 = qpascal_sigma2(m, 1);
        rep.add("S^" + ms + "([[1,1],[0,1]]) = sigma1(1," + ms + ")",
                sym_power(u, static_cast<std::size_t>(m)) == p1);
        Sl2Module s = sl2_module(m);
        LieData l = sl2_symmetric_power(m);
        rep.add("dim " + std::to_string(m + 1) + ": derivation action matches X, Y, H",
                l.x[0] == s.x && l.y[0] == s.y && l.e_diag[0] - l.e_diag[1] == s.h);
        rep.add("exp(X) = sigma1(1," + ms + ")", exp_nilpotent(s.x) == p1);
        rep.add("exp(-Y) = sigma2(1," + ms + ")", exp_nilpotent(-s.y) == p2);
    }
    return rep;
}

} // namespace braidrep

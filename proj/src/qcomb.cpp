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

#include "braidrep/qcomb.hpp"

#include "braidrep/error.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace braidrep {

LaurentPoly q_natural(int n, BracketKind form) {
    if (n < 0) throw RangeError("q_natural needs n >= 0");
    std::vector<LaurentPoly::Term> terms;
    for (int i = 0; i < n; ++i) {
        int e = form == BracketKind::Paren ? i : n - 1 - 2 * i;
        terms.push_back({Monomial{0, e, 0}, 1});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_factorial(int n, BracketKind form) {
    if (n < 0) throw RangeError("q_factorial needs n >= 0");
    LaurentPoly r = 1;
    for (int i = 2; i <= n; ++i) r *= q_natural(i, form);
    return r;
}

namespace {

// Row-by-row table of the q-Pascal triangle, shared across calls.
LaurentPoly paren_binomial(int n, int k) {
    static std::mutex mu;
    static std::vector<std::vector<LaurentPoly>> rows{{LaurentPoly(1)}};
    std::lock_guard lock(mu);
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        int m = static_cast<int>(rows.size());
        std::vector<LaurentPoly> row(static_cast<std::size_t>(m) + 1);
        row[0] = 1;
        row[static_cast<std::size_t>(m)] = 1;
        for (int j = 1; j < m; ++j)
            row[static_cast<std::size_t>(j)] =
                prev[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(j)].times(Monomial{0, j, 0});
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace

LaurentPoly q_binomial(int n, int k, BracketKind form) {
    if (n < 0 || k < 0 || k > n) return {};
    if (form == BracketKind::Paren) return paren_binomial(n, k);
    // [n k] = q^{-k(n-k)} (n k)_{q^2}
    return substitute_units(paren_binomial(n, k), LaurentPoly::t(), LaurentPoly::q(2))
        .times(Monomial{0, -k * (n - k), 0});
}

LaurentPoly q_pochhammer(const LaurentPoly& a, int n) {
    if (n < 0) throw RangeError("q_pochhammer needs n >= 0");
    LaurentPoly r = 1;
    for (int k = 0; k < n; ++k) r *= LaurentPoly(1) - a.times(Monomial{0, k, 0});
    return r;
}

} // namespace braidrep

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

#ifndef BRAIDREP_INVARIANTS_HPP
#define BRAIDREP_INVARIANTS_HPP

#include "braidrep/braid.hpp"
#include "braidrep/fraction.hpp"
#include "braidrep/report.hpp"

#include <optional>
#include <vector>

namespace braidrep {

struct AlexanderResult {
    PolyFraction raw_fraction;
    /// Lowest t-degree 0, lowest coefficient positive. Zero for split closures.
    LaurentPoly normalized;
};

/// det(rho(w) - I) / det(rho(s1 .. s_{n-1}) - I) with reduced Burau rho.
/// Throws DomainError if the division is not exact.
AlexanderResult alexander(const BraidWord& w);

struct KrammerResult {
    PolyFraction fraction;
    std::optional<LaurentPoly> collapsed;
};

/// det(lk(w) - I) / det(lk(s1 .. s_{n-1}) - I), kept as a fraction.
KrammerResult krammer_fraction(const BraidWord& w);

/// Both invariants of g w g^{-1} against those of w, one item per conjugator.
CheckReport markov1_test(const BraidWord& w, const std::vector<BraidWord>& conjugators);

struct Markov2Probe {
    BraidWord base;
    BraidWord stabilized;  // w s_n on n+1 strands
    KrammerResult k_base, k_stabilized;
    /// k_stabilized / k_base; empty when k_base vanishes.
    std::optional<PolyFraction> ratio;
    PolyFraction base_q1, stabilized_q1, base_t1, stabilized_t1;
    LaurentPoly alexander_base, alexander_stabilized;

    bool krammer_equal() const { return k_base.fraction == k_stabilized.fraction; }
    bool alexander_equal() const { return alexander_base == alexander_stabilized; }
};

/// Data only; nothing here is expected to hold or fail.
Markov2Probe markov2_probe(const BraidWord& w);

/// Substitutes the given values (the other variable is left alone).
/// Throws DomainError when the denominator vanishes.
PolyFraction specialize(const PolyFraction& f, const std::optional<mpq_class>& t_value,
                        const std::optional<mpq_class>& q_value);

} // namespace braidrep

#endif

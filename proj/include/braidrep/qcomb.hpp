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

#ifndef BRAIDREP_QCOMB_HPP
#define BRAIDREP_QCOMB_HPP

#include "braidrep/laurent.hpp"

namespace braidrep {

/// Paren: (n)_q = 1 + q + ... + q^{n-1}.
/// Bracket: the balanced form [n]_q = q^{1-n} + q^{3-n} + ... + q^{n-1}.
enum class BracketKind { Paren, Bracket };

LaurentPoly q_natural(int n, BracketKind form = BracketKind::Paren);
LaurentPoly q_factorial(int n, BracketKind form = BracketKind::Paren);
/// Gaussian binomial via the q-Pascal recurrence; 0 when k is outside [0, n].
LaurentPoly q_binomial(int n, int k, BracketKind form = BracketKind::Paren);
/// (a; q)_n = prod_{k<n} (1 - a q^k).
LaurentPoly q_pochhammer(const LaurentPoly& a, int n);

} // namespace braidrep

#endif

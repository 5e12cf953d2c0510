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

#ifndef BRAIDREP_FORMAT_HPP
#define BRAIDREP_FORMAT_HPP

#include "braidrep/fraction.hpp"
#include "braidrep/polymatrix.hpp"
#include "braidrep/report.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace braidrep {

enum class OutputFormat { Text, Json, Latex };

/// "text", "json" or "latex"; throws RangeError otherwise.
OutputFormat parse_format(std::string_view name);

/// Bumped whenever a JSON layout changes.
inline constexpr int kJsonSchema = 1;

/// [{"c": .., "et": .., "eq": ..}, ...] in canonical term order. Coefficients
/// that do not fit in 64 bits are written as decimal strings.
nlohmann::ordered_json to_json(const LaurentPoly& p);
/// Array of rows.
nlohmann::ordered_json to_json(const PolyMatrix& m);
nlohmann::ordered_json to_json(const PolyFraction& f);
nlohmann::ordered_json to_json(const CheckReport& r);

/// Inverse of to_json for polynomials.
LaurentPoly poly_from_json(const nlohmann::ordered_json& j);

/// e.g. `t^{4}q^{2}-t^{2}q+1`.
std::string to_latex(const LaurentPoly& p);
std::string to_latex(const PolyFraction& f);
/// \left(\begin{smallmatrix} .. \end{smallmatrix}\right)
std::string to_latex(const PolyMatrix& m);

/// One `PASS label` / `FAIL label` line per item, failure details indented,
/// then a summary line.
std::string to_text(const CheckReport& r);

} // namespace braidrep

#endif

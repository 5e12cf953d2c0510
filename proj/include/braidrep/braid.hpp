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

#ifndef BRAIDREP_BRAID_HPP
#define BRAIDREP_BRAID_HPP

#include "braidrep/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

class Representation;

/// Word in the Artin generators of B_n. No normal form is maintained.
class BraidWord {
public:
    struct Letter {
        int index;  ///< 1 .. strands-1
        int sign;   ///< +1 or -1

        friend bool operator==(const Letter&, const Letter&) = default;
    };

    explicit BraidWord(int strands);
    BraidWord(int strands, std::vector<Letter> letters);
    /// Signed indices, e.g. {1, -2, 3}.
    static BraidWord from_indices(int strands, const std::vector<int>& signed_indices);

    int strands() const noexcept { return strands_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    BraidWord inverse() const;
    /// this followed by other.
    BraidWord concat(const BraidWord& other) const;
    /// g w g^{-1}.
    BraidWord conjugate_by(const BraidWord& g) const;
    /// Cancels adjacent s_i s_i^{-1} pairs until none remain.
    BraidWord free_reduced() const;
    /// Same letters viewed in B_m, m >= strands.
    BraidWord with_strands(int m) const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

    /// Signed-integer form, e.g. `1 -2 3`; empty word renders as "".
    std::string to_string() const;

private:
    int strands_;
    std::vector<Letter> letters_;
};

/// Accepts `1 -2 3` and `s1 s2^-1 s1^3`. ParseError on malformed tokens,
/// RangeError on indices outside [1, strands-1].
BraidWord parse_word(std::string_view text, int strands);

/// Checks s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} and far commutation exactly.
CheckReport check_braid_relations(const Representation& rep);

} // namespace braidrep

#endif

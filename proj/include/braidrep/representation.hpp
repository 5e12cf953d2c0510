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

#ifndef BRAIDREP_REPRESENTATION_HPP
#define BRAIDREP_REPRESENTATION_HPP

#include "braidrep/braid.hpp"
#include "braidrep/polymatrix.hpp"

#include <string>
#include <vector>

namespace braidrep {

/// Images of s_1 .. s_{n-1} and their exact inverses.
class Representation {
public:
    /// Inverses are computed; throws NotInvertible for non-unit determinants.
    Representation(int strands, std::vector<PolyMatrix> generators, std::string label);
    /// Inverses supplied by the caller are checked against the generators.
    Representation(int strands, std::vector<PolyMatrix> generators, std::vector<PolyMatrix> inverses,
                   std::string label);

    int strands() const noexcept { return strands_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<PolyMatrix>& generators() const noexcept { return gens_; }
    const std::vector<PolyMatrix>& inverses() const noexcept { return invs_; }
    /// 1-based generator index.
    const PolyMatrix& generator(int i) const;
    const PolyMatrix& inverse_generator(int i) const;

private:
    int strands_;
    std::size_t dim_;
    std::vector<PolyMatrix> gens_;
    std::vector<PolyMatrix> invs_;
    std::string label_;

    void check_shapes();
};

/// Ordered product of generator images (inverse images for negative letters).
PolyMatrix image_of_word(const Representation& rep, const BraidWord& w);

} // namespace braidrep

#endif

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

#include "braidrep/representation.hpp"

#include "braidrep/error.hpp"
#include "braidrep/linalg.hpp"

namespace braidrep {

Representation::Representation(int strands, std::vector<PolyMatrix> generators, std::string label)
    : strands_(strands), dim_(0), gens_(std::move(generators)), label_(std::move(label)) {
    check_shapes();
    invs_.reserve(gens_.size());
    for (const auto& g : gens_) invs_.push_back(inverse(g));
}

Representation::Representation(int strands, std::vector<PolyMatrix> generators,
                               std::vector<PolyMatrix> inverses, std::string label)
    : strands_(strands), dim_(0), gens_(std::move(generators)), invs_(std::move(inverses)),
      label_(std::move(label)) {
    check_shapes();
    if (invs_.size() != gens_.size()) throw ShapeError("one inverse per generator required");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (invs_[i].rows() != dim_ || invs_[i].cols() != dim_) throw ShapeError("inverse has wrong shape");
        if (!(gens_[i] * invs_[i]).is_identity())
            throw NotInvertible("supplied inverse of generator " + std::to_string(i + 1) + " is wrong");
    }
}

void Representation::check_shapes() {
    if (strands_ < 2) throw RangeError("a representation needs at least 2 strands");
    if (gens_.size() != static_cast<std::size_t>(strands_ - 1))
        throw ShapeError("expected " + std::to_string(strands_ - 1) + " generator images");
    dim_ = gens_.front().rows();
    for (const auto& g : gens_)
        if (!g.is_square() || g.rows() != dim_) throw ShapeError("generator images must be square of equal size");
}

const PolyMatrix& Representation::generator(int i) const {
    if (i < 1 || i >= strands_) throw RangeError("generator index out of range");
    return gens_[static_cast<std::size_t>(i - 1)];
}

const PolyMatrix& Representation::inverse_generator(int i) const {
    if (i < 1 || i >= strands_) throw RangeError("generator index out of range");
    return invs_[static_cast<std::size_t>(i - 1)];
}

PolyMatrix image_of_word(const Representation& rep, const BraidWord& w) {
    if (w.strands() != rep.strands())
        throw RangeError("word on " + std::to_string(w.strands()) + " strands applied to a representation of B_" +
                         std::to_string(rep.strands()));
    PolyMatrix m = PolyMatrix::identity(rep.dim());
    for (const auto& l : w.letters())
        m = m * (l.sign > 0 ? rep.generator(l.index) : rep.inverse_generator(l.index));
    return m;
}

} // namespace braidrep

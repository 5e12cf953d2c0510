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

#include "braidrep/braid.hpp"

#include "braidrep/error.hpp"
#include "braidrep/representation.hpp"

#include <cctype>
#include <cstdlib>

namespace braidrep {

namespace {

void check_letter(int strands, int index, std::size_t pos, bool positional) {
    if (index < 1 || index >= strands) {
        std::string msg = "generator index " + std::to_string(index) + " outside [1, " +
                          std::to_string(strands - 1) + "] for " + std::to_string(strands) + " strands";
        if (positional) msg += " at position " + std::to_string(pos);
        throw RangeError(msg);
    }
}

} // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
    if (strands < 2) throw RangeError("a braid needs at least 2 strands");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : BraidWord(strands) {
    for (const auto& l : letters) {
        check_letter(strands, l.index, 0, false);
        if (l.sign != 1 && l.sign != -1) throw RangeError("letter sign must be +1 or -1");
    }
    letters_ = std::move(letters);
}

BraidWord BraidWord::from_indices(int strands, const std::vector<int>& signed_indices) {
    std::vector<Letter> ls;
    ls.reserve(signed_indices.size());
    for (int v : signed_indices) {
        if (v == 0) throw RangeError("generator index 0");
        ls.push_back({std::abs(v), v > 0 ? 1 : -1});
    }
    return BraidWord(strands, std::move(ls));
}

BraidWord BraidWord::inverse() const {
    BraidWord r(strands_);
    r.letters_.assign(letters_.rbegin(), letters_.rend());
    for (auto& l : r.letters_) l.sign = -l.sign;
    return r;
}

BraidWord BraidWord::concat(const BraidWord& other) const {
    if (other.strands_ != strands_) throw RangeError("strand count mismatch in concatenation");
    BraidWord r = *this;
    r.letters_.insert(r.letters_.end(), other.letters_.begin(), other.letters_.end());
    return r;
}

BraidWord BraidWord::conjugate_by(const BraidWord& g) const {
    if (g.strands_ != strands_) throw RangeError("strand count mismatch in conjugation");
    return g.concat(*this).concat(g.inverse());
}

BraidWord BraidWord::free_reduced() const {
    BraidWord r(strands_);
    for (const auto& l : letters_) {
        if (!r.letters_.empty() && r.letters_.back().index == l.index && r.letters_.back().sign == -l.sign)
            r.letters_.pop_back();
        else
            r.letters_.push_back(l);
    }
    return r;
}

BraidWord BraidWord::with_strands(int m) const {
    if (m < strands_) throw RangeError("cannot drop strands from a word");
    return BraidWord(m, letters_);
}

std::string BraidWord::to_string() const {
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        s += std::to_string(l.sign * l.index);
    }
    return s;
}

BraidWord parse_word(std::string_view text, int strands) {
    BraidWord w(strands);
    std::vector<BraidWord::Letter> letters;
    std::size_t i = 0;
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    auto read_int = [&](std::size_t& p, long& v) {
        std::size_t b = p;
        v = 0;
        while (p < text.size() && is_digit(text[p])) {
            v = v * 10 + (text[p] - '0');
            if (v > 1000000) throw ParseError("number too large", b);
            ++p;
        }
        return p > b;
    };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        long index = 0;
        long power = 1;
        if (text[i] == 's' || text[i] == 'S') {
            ++i;
            if (!read_int(i, index)) throw ParseError("expected generator index after 's'", i);
            if (i < text.size() && text[i] == '^') {
                ++i;
                int sgn = 1;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    sgn = text[i] == '-' ? -1 : 1;
                    ++i;
                }
                if (!read_int(i, power)) throw ParseError("expected exponent after '^'", i);
                power *= sgn;
            }
        } else {
            int sgn = 1;
            if (text[i] == '-' || text[i] == '+') {
                sgn = text[i] == '-' ? -1 : 1;
                ++i;
            }
            if (!read_int(i, index)) throw ParseError("malformed braid letter", start);
            power = sgn;
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError(std::string("unexpected '") + text[i] + "' in braid word", i);
        check_letter(strands, static_cast<int>(index), start, true);
        int sign = power < 0 ? -1 : 1;
        for (long k = 0; k < std::labs(power); ++k) letters.push_back({static_cast<int>(index), sign});
    }
    return BraidWord(strands, std::move(letters));
}

CheckReport check_braid_relations(const Representation& rep) {
    CheckReport r;
    r.title = "braid relations for " + rep.label();
    int n = rep.strands();
    for (int i = 1; i + 1 < n; ++i) {
        const PolyMatrix& a = rep.generator(i);
        const PolyMatrix& b = rep.generator(i + 1);
        PolyMatrix diff = a * b * a - b * a * b;
        bool ok = diff.is_zero();
        r.add("s" + std::to_string(i) + " s" + std::to_string(i + 1) + " s" + std::to_string(i) + " = s" +
                  std::to_string(i + 1) + " s" + std::to_string(i) + " s" + std::to_string(i + 1),
              ok, ok ? std::string{} : diff.to_string());
    }
    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            const PolyMatrix& a = rep.generator(i);
            const PolyMatrix& b = rep.generator(j);
            PolyMatrix diff = a * b - b * a;
            bool ok = diff.is_zero();
            r.add("s" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j) + " s" +
                      std::to_string(i),
                  ok, ok ? std::string{} : diff.to_string());
        }
    }
    return r;
}

} // namespace braidrep

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

#ifndef BRAIDREP_REPORT_HPP
#define BRAIDREP_REPORT_HPP

#include <string>
#include <vector>

namespace braidrep {

struct CheckItem {
    std::string label;
    bool passed = false;
    std::string detail;
};

/// Outcome of a verification suite: one item per identity checked.
struct CheckReport {
    std::string title;
    std::vector<CheckItem> items;

    void add(std::string label, bool ok, std::string detail = {}) {
        items.push_back({std::move(label), ok, std::move(detail)});
    }
    void append(const CheckReport& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
    bool passed() const noexcept {
        for (const auto& i : items)
            if (!i.passed) return false;
        return true;
    }
    std::size_t failures() const noexcept {
        std::size_t n = 0;
        for (const auto& i : items) n += i.passed ? 0 : 1;
        return n;
    }
};

} // namespace braidrep

#endif

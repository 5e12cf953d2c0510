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

#ifndef BRAIDREP_ERROR_HPP
#define BRAIDREP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidrep {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is the 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

/// Raised when a determinant is not a unit of the Laurent ring.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// Division by zero, non-unit powers, non-nilpotent exponentials and similar.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace braidrep

#endif

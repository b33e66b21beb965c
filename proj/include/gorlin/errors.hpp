/*
 * Copyright 2026 The gorlin authors
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

#ifndef GORLIN_ERRORS_HPP
#define GORLIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gorlin {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: ring mismatch, bad coefficient file, duplicate entries, ...
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// Degree constraint violated (contraction past degree zero, wrong pairing degree).
class DegreeError : public Error {
public:
    explicit DegreeError(const std::string& what) : Error(what) {}
};

/// Matrix shape constraint violated (non-square determinant/adjoint input).
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Request exceeds the supported symbolic size.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

/// The catalecticant determinant vanishes, so no linear resolution exists.
class DegenerateInverseSystem : public Error {
public:
    explicit DegenerateInverseSystem(const std::string& what) : Error(what) {}
};

} // namespace gorlin

#endif // GORLIN_ERRORS_HPP

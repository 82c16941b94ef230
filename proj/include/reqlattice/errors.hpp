// Copyright 2026 The reqlattice Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace reqlattice {

/// Base of every error raised by the engine. `code()` is a stable
/// machine-readable token (e.g. "DANGLING_REF"); `subject()` names the
/// offending id, path or field when one exists.
class Error : public std::runtime_error {
 public:
    Error(std::string code, std::string subject, const std::string& message);

    const std::string& code() const noexcept { return code_; }
    const std::string& subject() const noexcept { return subject_; }

 private:
    std::string code_;
    std::string subject_;
};

/// Malformed syntax. Line and column are 1-based.
class ParseError : public Error {
 public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

 private:
    std::size_t line_;
    std::size_t column_;
};

class ValidationError : public Error {
 public:
    using Error::Error;
};

/// A refinement cycle. `cycle()` holds a witness path whose last element
/// refines the first.
class CycleError : public Error {
 public:
    explicit CycleError(std::vector<std::string> cycle);

    const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
    std::vector<std::string> cycle_;
};

class RoleMismatchError : public Error {
 public:
    RoleMismatchError(const std::string& a, const std::string& b);
};

class UnknownIdError : public Error {
 public:
    explicit UnknownIdError(const std::string& id);
};

class PartitionMismatchError : public Error {
 public:
    explicit PartitionMismatchError(const std::string& detail);
};

class EmptyAspectError : public Error {
 public:
    explicit EmptyAspectError(const std::string& aspect);
};

class MissingAdoptedByError : public Error {
 public:
    explicit MissingAdoptedByError(const std::string& target);
};

class UnknownTargetError : public Error {
 public:
    explicit UnknownTargetError(const std::string& target);
};

class DegenerateMatrixError : public Error {
 public:
    explicit DegenerateMatrixError(const std::string& detail);
};

class UnknownRequirementError : public Error {
 public:
    explicit UnknownRequirementError(const std::string& id);
};

class IoError : public Error {
 public:
    IoError(const std::string& path, const std::string& detail);
};

}  // namespace reqlattice

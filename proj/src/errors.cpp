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

#include "reqlattice/errors.hpp"

#include <utility>

namespace reqlattice {

namespace {

std::string joinCycle(const std::vector<std::string>& cycle) {
    std::string out;
    for (const auto& id : cycle) {
        out += id;
        out += " -> ";
    }
    if (!cycle.empty()) out += cycle.front();
    return out;
}

}  // namespace

Error::Error(std::string code, std::string subject, const std::string& message)
    : std::runtime_error(message), code_(std::move(code)), subject_(std::move(subject)) {}

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error("PARSE", std::move(source),
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

CycleError::CycleError(std::vector<std::string> cycle)
    : Error("REFINEMENT_CYCLE", cycle.empty() ? std::string() : cycle.front(),
            "refinement cycle: " + joinCycle(cycle)),
      cycle_(std::move(cycle)) {}

RoleMismatchError::RoleMismatchError(const std::string& a, const std::string& b)
    : Error("ROLE_MISMATCH", a, "cannot compare '" + a + "' with '" + b + "': role or kind differs") {}

UnknownIdError::UnknownIdError(const std::string& id)
    : Error("UNKNOWN_ID", id, "unknown id '" + id + "'") {}

PartitionMismatchError::PartitionMismatchError(const std::string& detail)
    : Error("PARTITION_MISMATCH", "", detail) {}

EmptyAspectError::EmptyAspectError(const std::string& aspect)
    : Error("EMPTY_ASPECT", aspect, "no " + aspect + " source items to classify") {}

MissingAdoptedByError::MissingAdoptedByError(const std::string& target)
    : Error("MISSING_ADOPTED_BY", target,
            "modify of general item '" + target + "' requires an adoptedBy list") {}

UnknownTargetError::UnknownTargetError(const std::string& target)
    : Error("UNKNOWN_TARGET", target, "change target '" + target + "' does not exist") {}

DegenerateMatrixError::DegenerateMatrixError(const std::string& detail)
    : Error("DEGENERATE_MATRIX", "", detail) {}

UnknownRequirementError::UnknownRequirementError(const std::string& id)
    : Error("UNKNOWN_REQUIREMENT", id, "requirement '" + id + "' is not part of the conflict set") {}

IoError::IoError(const std::string& path, const std::string& detail)
    : Error("IO", path, path + ": " + detail) {}

}  // namespace reqlattice

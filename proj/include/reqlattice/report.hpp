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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "reqlattice/change.hpp"
#include "reqlattice/optimizer.hpp"
#include "reqlattice/partition.hpp"
#include "reqlattice/relations.hpp"
#include "reqlattice/topsis.hpp"

namespace reqlattice {

inline constexpr std::string_view kToolName = "reqlattice";

/// {tool, formatVersion, reportType, body}
nlohmann::json envelope(std::string_view reportType, nlohmann::json body);

/// Two-space indented dump with a trailing newline.
std::string dumpReport(const nlohmann::json& report);

nlohmann::json toJson(const Finding& finding);
nlohmann::json toJson(const std::vector<Finding>& findings);
nlohmann::json toJson(const LevelSelection& level);
nlohmann::json toJson(const Partition& partition);
nlohmann::json toJson(const ScenarioClass& scenario);
nlohmann::json toJson(const Conflict& conflict);
nlohmann::json toJson(const std::vector<Conflict>& conflicts);

enum class Emit { min, star, both };
nlohmann::json toJson(const OptimizedView& view, Emit emit = Emit::both);
nlohmann::json toJson(const GlobalView& view, Emit emit = Emit::both);

nlohmann::json toJson(const ChangeRecord& record);
nlohmann::json toJson(const ImpactReport& report);
nlohmann::json toJson(const ReuseHint& hint);

nlohmann::json toJson(const DecisionMatrix& matrix);
nlohmann::json toJson(const Ranking& ranking);

}  // namespace reqlattice

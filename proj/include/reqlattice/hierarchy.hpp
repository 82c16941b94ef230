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
#include <vector>

#include "reqlattice/model.hpp"

namespace reqlattice {

/// The jurisdictions analyzed as the flat S_1..S_N at one level. Each
/// frontier node stands in for itself plus everything it inherits.
struct LevelSelection {
    Level level = Level::national;
    std::vector<std::string> frontier;

    friend bool operator==(const LevelSelection&, const LevelSelection&) = default;
};

/// All jurisdictions at `level`, sorted by id. The frontier may be empty.
LevelSelection selectLevel(const Corpus& corpus, Level level);

/// Requirements attached to `node` or one of its ancestors, minus ancestor
/// requirements that are refined by a requirement attached strictly nearer
/// to `node`. Throws UnknownIdError for an unknown node.
IdSet effectiveRequirements(const Corpus& corpus, const std::string& node);

/// As effectiveRequirements(), for source items.
IdSet effectiveSources(const Corpus& corpus, const std::string& node);

/// Overloads reusing a precomputed refinementClosure(corpus.relations.refines).
IdSet effectiveRequirements(const Corpus& corpus, const std::string& node, const PairSet& closure);
IdSet effectiveSources(const Corpus& corpus, const std::string& node, const PairSet& closure);

/// Tree-shape findings: LEVEL_ORDER, ORPHAN_STATE, ORG_WITHOUT_ANCESTOR,
/// DANGLING_PARENT, PARENT_CYCLE. Never throws.
std::vector<Finding> validateHierarchy(const Corpus& corpus);

}  // namespace reqlattice

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

#include <map>
#include <string>
#include <vector>

#include "reqlattice/hierarchy.hpp"
#include "reqlattice/model.hpp"
#include "reqlattice/relations.hpp"

namespace reqlattice {

/// Maximal elements (R*) plus, for each dropped id, the lexicographically
/// smallest element of the input that refines it.
struct RedundancyResult {
    IdSet strongest;
    std::map<std::string, std::string> removed;

    friend bool operator==(const RedundancyResult&, const RedundancyResult&) = default;
};

RedundancyResult removeRedundant(const IdSet& ids, const RelationSet& relations);
/// Minimal elements (R^min): the weakest versions, the floor a system must meet.
IdSet minimalBaseline(const IdSet& ids, const RelationSet& relations);

/// Corpus overloads; throw UnknownIdError for ids that are not requirements.
RedundancyResult removeRedundant(const IdSet& ids, const Corpus& corpus);
IdSet minimalBaseline(const IdSet& ids, const Corpus& corpus);

struct OptimizedView {
    std::string scope;
    IdSet input;
    IdSet strongest;
    IdSet baseline;
    std::map<std::string, std::string> removed;

    friend bool operator==(const OptimizedView&, const OptimizedView&) = default;
};

OptimizedView optimizeSet(const IdSet& ids, const Corpus& corpus, std::string scope);

struct KindView {
    RequirementKind kind = RequirementKind::functional;
    std::map<std::string, OptimizedView> perJurisdiction;
    OptimizedView global;

    friend bool operator==(const KindView&, const KindView&) = default;
};

/// Optimized per-kind views for every frontier node and for the global union,
/// plus the conflicts inside that union (the TOPSIS input).
struct GlobalView {
    LevelSelection level;
    std::vector<KindView> kinds;  // legalBased, culturalBased, functional
    std::vector<Conflict> conflicts;

    const KindView& forKind(RequirementKind kind) const;
    /// Requirements taking part in at least one conflict.
    IdSet conflictSet() const;

    friend bool operator==(const GlobalView&, const GlobalView&) = default;
};

GlobalView globalView(const Corpus& corpus, const LevelSelection& level);
GlobalView globalView(const Corpus& corpus);

}  // namespace reqlattice

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
#include <optional>
#include <string>
#include <vector>

#include "reqlattice/hierarchy.hpp"
#include "reqlattice/model.hpp"

namespace reqlattice {

/// General/specific decomposition of one role and aspect over the frontier
/// of a level selection (LG / LS_i, CG / CS_i, RLG / RLS_i, ...).
struct Partition {
    Role role = Role::source;
    Aspect aspect = Aspect::legal;
    LevelSelection level;

    /// Items of this role/aspect visible at each frontier node (L_i, R_i, ...).
    std::map<std::string, IdSet> members;
    /// Union of the general items, each jurisdiction keeping its own id.
    IdSet general;
    /// conceptKey -> the per-jurisdiction ids grouped under it.
    std::map<std::string, IdSet> generalConcepts;
    /// Frontier node -> its specific items. Every frontier node has an entry.
    std::map<std::string, IdSet> specific;

    /// Fingerprint of the corpus the partition was computed from.
    std::string corpusFingerprint;

    /// Conventional name of the general set ("LG", "RCG", ...) or of the
    /// specific set of `node` ("LS[au]", "RFS[de]", ...).
    std::string setName(const std::optional<std::string>& node = std::nullopt) const;

    /// Names of every set that holds `id`, sorted; empty when absent.
    std::vector<std::string> setsContaining(const std::string& id) const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Throws ValidationError EMPTY_FRONTIER when no jurisdiction sits at the
/// selected level.
Partition partitionSources(const Corpus& corpus, SourceKind kind, const LevelSelection& level);
Partition partitionRequirements(const Corpus& corpus, RequirementKind kind, const LevelSelection& level);

/// National-level shorthands.
Partition partitionSources(const Corpus& corpus, SourceKind kind);
Partition partitionRequirements(const Corpus& corpus, RequirementKind kind);

/// Every partition of a corpus at one level.
struct PartitionSet {
    Partition legalSources;
    Partition culturalSources;
    Partition legalRequirements;
    Partition culturalRequirements;
    Partition functionalRequirements;

    const Partition& forRequirementKind(RequirementKind kind) const;
    const Partition& forSourceKind(SourceKind kind) const;

    friend bool operator==(const PartitionSet&, const PartitionSet&) = default;
};

PartitionSet partitionAll(const Corpus& corpus, const LevelSelection& level);

/// Elaboration discipline over legal and cultural requirements:
///  GENERAL_REQ_SPECIFIC_SOURCE (error): a general requirement derived from
///    a source outside the general source set;
///  SPECIFIC_REQ_FOREIGN_SOURCE (error): a specific requirement of node i
///    derived from a source not visible at i;
///  SPECIFIC_REQ_NO_SPECIFIC_SOURCE (warning): a specific requirement of
///    node i with no source in the specific source set of i.
/// Throws PartitionMismatchError when the partitions were not computed from
/// this corpus (or not from one level selection).
std::vector<Finding> checkElaboration(const Corpus& corpus, const PartitionSet& partitions);

/// NO_CROSS_CONTRADICTION warning for each specific item that has no
/// derived contradiction with a specific item of another frontier node.
std::vector<Finding> checkSpecificContradictionCondition(const Corpus& corpus, const Partition& partition);

/// COMPONENT_SCOPE warnings for components whose scope disagrees with where
/// their requirements sit in the partitions.
std::vector<Finding> checkComponentScopes(const Corpus& corpus, const PartitionSet& partitions);

enum class ScenarioOption { disjoint, identicalGeneral, partialOverlap };
std::string_view toString(ScenarioOption option);

struct ScenarioClass {
    Aspect aspect = Aspect::legal;
    ScenarioOption option = ScenarioOption::partialOverlap;
    std::string note;

    friend bool operator==(const ScenarioClass&, const ScenarioClass&) = default;
};

/// Disjoint when nothing is general, IdenticalGeneral when nothing is
/// specific, PartialOverlap otherwise. Throws EmptyAspectError when the
/// partition holds no items at all.
ScenarioClass classifyScenario(const Partition& sourcePartition);

}  // namespace reqlattice

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
#include <utility>
#include <vector>

#include "reqlattice/corpus_io.hpp"
#include "reqlattice/model.hpp"
#include "reqlattice/partition.hpp"

namespace reqlattice {

/// How a change moved a requirement between general and specific sets.
///  specStaysSpec  (1a) a specific requirement stays specific;
///  specToGeneral  (1b) a specific requirement becomes identical to every
///                      counterpart and is promoted to the general set;
///  genStaysGen    (2a) a general requirement changes everywhere;
///  genSplits      (2b) a general requirement changes for some adopters only.
/// Adds, removals and source edits get their own codes.
enum class CaseCode { specStaysSpec, specToGeneral, genStaysGen, genSplits, add, remove, sourceChange };

/// "SPEC_STAYS_SPEC", "SPEC_TO_GENERAL", ...
std::string_view toString(CaseCode code);
/// "1a", "1b", "2a", "2b"; empty for the other codes.
std::string_view caseLabel(CaseCode code);
bool isModifyCase(CaseCode code);

/// `from`/`to` list set names ("RLS[au]", "RLG", ...) joined by commas;
/// "-" stands for no set, "merged:<id>" for an id folded into `<id>`.
struct Migration {
    std::string id;
    std::string from;
    std::string to;

    friend auto operator<=>(const Migration&, const Migration&) = default;
};

enum class ComponentStatus { mustChange, unchanged, reusable };
std::string_view toString(ComponentStatus status);

struct ComponentImpact {
    std::string component;
    ComponentStatus status = ComponentStatus::unchanged;

    friend bool operator==(const ComponentImpact&, const ComponentImpact&) = default;
};

struct ChangeRecord {
    ChangeKind op = ChangeKind::modify;
    std::string target;
    CaseCode caseCode = CaseCode::specStaysSpec;
    std::vector<Migration> migrations;
    IdSet affected;
    std::vector<ComponentImpact> componentImpact;

    /// 1b: the jurisdiction of the promoted requirement and, for every other
    /// jurisdiction, the id kept as its representative of the concept.
    std::optional<std::string> promotingJurisdiction;
    std::map<std::string, std::string> counterparts;

    /// 2a/2b: the adopt and keep branches (together: the whole frontier).
    IdSet adopters;
    IdSet keepers;

    /// Elaboration findings touching the changed item after the change.
    std::vector<Finding> findings;

    friend bool operator==(const ChangeRecord&, const ChangeRecord&) = default;
};

struct ImpactReport {
    std::string label;
    std::vector<ChangeRecord> perOp;
    std::string partitionsBefore;
    std::string partitionsAfter;

    friend bool operator==(const ImpactReport&, const ImpactReport&) = default;
};

/// Stable digest of every set in a partition set.
std::string partitionFingerprint(const PartitionSet& partitions);

/// Applies one op to `corpus` and classifies it against `partitions`
/// (which must be current for `corpus`). Returns the revalidated corpus.
/// Throws MissingAdoptedByError, UnknownTargetError, ValidationError.
std::pair<Corpus, ChangeRecord> applyChange(const Corpus& corpus, const ChangeOp& op, const PartitionSet& partitions);

/// Classification only; the corpus is not modified.
ChangeRecord classifyChange(const Corpus& corpus, const ChangeOp& op, const PartitionSet& partitions);

/// Applies ops in order, recomputing partitions before each one. Any error
/// propagates and leaves the caller's corpus untouched.
std::pair<Corpus, ImpactReport> applyChangeSet(const Corpus& corpus, const ChangeSet& changes,
                                               const LevelSelection& level);
std::pair<Corpus, ImpactReport> applyChangeSet(const Corpus& corpus, const ChangeSet& changes);

struct ReuseHint {
    std::string component;
    std::string forJurisdiction;
    std::string fromJurisdiction;
    std::string counterpart;
    std::string promoted;

    friend auto operator<=>(const ReuseHint&, const ReuseHint&) = default;
};

/// For every 1b promotion: components of other jurisdictions implementing
/// the promoted concept's counterparts, offered to the promoting jurisdiction.
std::vector<ReuseHint> reuseHints(const ImpactReport& report, const Corpus& corpus);

}  // namespace reqlattice

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

/// Transitive closure of `refines`, keeping only pairs whose endpoints are
/// both in `ids`. Paths may pass through elements outside `ids`.
/// Throws CycleError with a witness when some element would refine itself.
PairSet refinementClosure(const RelationSet& relations, const IdSet& ids);

/// Closure over every endpoint mentioned in `refines`.
PairSet refinementClosure(const PairSet& refines);

/// Declared contradictions closed under strengthening: if contr(x, y) and
/// x' refines x then contr(x', y), symmetrically on y. Self pairs that the
/// rule would produce (an element refining both sides of a contradiction)
/// are not part of the result; see inconsistentRefiners().
PairSet deriveContradictions(const RelationSet& relations);

/// Elements that refine both sides of some declared contradiction.
IdSet inconsistentRefiners(const RelationSet& relations);

/// Same concept key and same content hash. Jurisdiction is ignored.
/// Throws RoleMismatchError when the kinds differ.
bool semanticallyIdentical(const SourceItem& a, const SourceItem& b);
bool semanticallyIdentical(const Requirement& a, const Requirement& b);

/// Id-based variant; throws UnknownIdError or RoleMismatchError.
bool semanticallyIdentical(const Corpus& corpus, const std::string& a, const std::string& b);

enum class ConflictOrigin { explicitPair, derived };
std::string_view toString(ConflictOrigin origin);

struct Conflict {
    IdPair pair;
    ConflictOrigin origin = ConflictOrigin::explicitPair;

    friend bool operator==(const Conflict&, const Conflict&) = default;
};

/// Every derived contradiction with both endpoints in `scope`, sorted by pair.
/// Throws UnknownIdError for scope ids that are not requirements.
std::vector<Conflict> findConflicts(const Corpus& corpus, const IdSet& scope);

}  // namespace reqlattice

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

#include "reqlattice/model.hpp"

namespace reqlattice {

/// Checks every structural invariant of a corpus and throws a
/// ValidationError for the first violation, scanning sections in file order
/// (jurisdictions, sources, requirements, relations, components).
///
/// Codes: DUPLICATE_ID, ID_MISMATCH, EMPTY_FIELD, DANGLING_REF,
/// LEVEL_VIOLATION, PARENT_CYCLE, DUPLICATE_CONCEPT, KIND_MISMATCH,
/// ROLE_MISMATCH, FUNCTIONAL_DERIVED, DERIVATION_SCOPE, SELF_CONTRADICTION,
/// REFINEMENT_CYCLE, CONTRADICTORY_REFINEMENT.
void validateCorpus(const Corpus& corpus);

}  // namespace reqlattice

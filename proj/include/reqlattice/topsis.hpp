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
#include <string_view>
#include <vector>

#include "reqlattice/hierarchy.hpp"
#include "reqlattice/model.hpp"

namespace reqlattice {

enum class Direction { benefit, cost };
std::string_view toString(Direction direction);
std::optional<Direction> parseDirection(std::string_view text);

struct Criterion {
    std::string id;
    double weight = 0.0;  // normalized; all weights sum to 1
    Direction direction = Direction::benefit;

    friend bool operator==(const Criterion&, const Criterion&) = default;
};

/// Rows are alternatives, columns are criteria.
struct DecisionMatrix {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    std::vector<double> originalWeights;
    std::vector<std::vector<double>> values;

    friend bool operator==(const DecisionMatrix&, const DecisionMatrix&) = default;
};

/// Checks shapes and finiteness, then normalizes `criteria` weights to sum
/// to 1 (the raw weights are kept in originalWeights).
/// Throws ValidationError: MATRIX_SHAPE, NON_FINITE, NEGATIVE_WEIGHT,
/// ZERO_WEIGHTS, DUPLICATE_ID.
DecisionMatrix makeDecisionMatrix(std::vector<std::string> alternatives, std::vector<Criterion> criteria,
                                  std::vector<std::vector<double>> values);

struct RankedAlternative {
    std::string id;
    double closeness = 0.0;

    friend bool operator==(const RankedAlternative&, const RankedAlternative&) = default;
};

struct Ranking {
    std::vector<RankedAlternative> order;
    /// Zero-variance criteria that took no part in the ranking.
    std::vector<std::string> droppedCriteria;

    friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Classical TOPSIS: vector normalization, weighting, ideal/anti-ideal by
/// direction, Euclidean distances, closeness d-/(d+ + d-). Sorted by
/// descending closeness, ties by alternative id.
/// A single alternative scores 1.0. Throws DegenerateMatrixError when no
/// criterion is left after dropping zero-variance columns.
Ranking rankAlternatives(const DecisionMatrix& matrix);

struct AlternativeScores {
    std::string id;
    std::map<std::string, double> satisfies;

    friend bool operator==(const AlternativeScores&, const AlternativeScores&) = default;
};

struct CriterionOverride {
    std::optional<double> weight;
    std::optional<Direction> direction;

    friend bool operator==(const CriterionOverride&, const CriterionOverride&) = default;
};

/// Contents of a .reqalts.json file.
struct AlternativesFile {
    std::vector<AlternativeScores> alternatives;
    std::map<std::string, CriterionOverride> criteria;

    friend bool operator==(const AlternativesFile&, const AlternativesFile&) = default;
};

AlternativesFile parseAlternatives(std::string_view text, const std::string& sourceName = "<memory>");

/// One benefit criterion per conflicting requirement (sorted by id) with
/// equal default weights; missing scores are 0. Throws
/// UnknownRequirementError for scores or overrides outside `conflictSet`.
DecisionMatrix buildConflictMatrix(const IdSet& conflictSet, const std::vector<AlternativeScores>& alternatives,
                                   const std::map<std::string, CriterionOverride>& overrides = {});

/// Same, with the conflict set taken from the corpus' global view.
DecisionMatrix buildConflictMatrix(const Corpus& corpus, const std::vector<AlternativeScores>& alternatives,
                                   const std::map<std::string, CriterionOverride>& overrides = {});
DecisionMatrix buildConflictMatrix(const Corpus& corpus, const LevelSelection& level,
                                   const std::vector<AlternativeScores>& alternatives,
                                   const std::map<std::string, CriterionOverride>& overrides = {});

}  // namespace reqlattice

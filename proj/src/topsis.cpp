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

#include "reqlattice/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "reqlattice/errors.hpp"
#include "reqlattice/optimizer.hpp"

namespace reqlattice {

std::string_view toString(Direction direction) {
    return direction == Direction::benefit ? "benefit" : "cost";
}

std::optional<Direction> parseDirection(std::string_view text) {
    if (text == "benefit") return Direction::benefit;
    if (text == "cost") return Direction::cost;
    return std::nullopt;
}

DecisionMatrix makeDecisionMatrix(std::vector<std::string> alternatives, std::vector<Criterion> criteria,
                                  std::vector<std::vector<double>> values) {
    if (values.size() != alternatives.size())
        throw ValidationError("MATRIX_SHAPE", "", "matrix has " + std::to_string(values.size()) + " rows for " +
                                                      std::to_string(alternatives.size()) + " alternatives");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].size() != criteria.size())
            throw ValidationError("MATRIX_SHAPE", alternatives[i], "row length does not match the criteria count");
        for (double v : values[i]) {
            if (!std::isfinite(v)) throw ValidationError("NON_FINITE", alternatives[i], "non-finite matrix value");
        }
    }
    IdSet seenAlternatives;
    for (const auto& id : alternatives) {
        if (!seenAlternatives.insert(id).second) throw ValidationError("DUPLICATE_ID", id, "duplicate alternative id");
    }
    IdSet seenCriteria;
    for (const auto& c : criteria) {
        if (!seenCriteria.insert(c.id).second) throw ValidationError("DUPLICATE_ID", c.id, "duplicate criterion id");
        if (!std::isfinite(c.weight) || c.weight < 0.0)
            throw ValidationError("NEGATIVE_WEIGHT", c.id, "weights must be finite and nonnegative");
    }

    DecisionMatrix m;
    m.alternatives = std::move(alternatives);
    m.values = std::move(values);
    const double total = std::accumulate(criteria.begin(), criteria.end(), 0.0,
                                         [](double sum, const Criterion& c) { return sum + c.weight; });
    if (!criteria.empty() && total <= 0.0) throw ValidationError("ZERO_WEIGHTS", "", "weights sum to zero");
    for (auto& c : criteria) {
        m.originalWeights.push_back(c.weight);
        c.weight /= total;
    }
    m.criteria = std::move(criteria);
    return m;
}

Ranking rankAlternatives(const DecisionMatrix& m) {
    const std::size_t rows = m.alternatives.size();
    const std::size_t cols = m.criteria.size();
    if (rows == 0) throw DegenerateMatrixError("no alternatives to rank");
    if (cols == 0) throw DegenerateMatrixError("no criteria: the conflict set is empty");

    Ranking ranking;
    if (rows == 1) {
        ranking.order.push_back({m.alternatives.front(), 1.0});
        return ranking;
    }

    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < cols; ++j) {
        bool constant = true;
        for (std::size_t i = 1; i < rows && constant; ++i) constant = m.values[i][j] == m.values[0][j];
        if (constant) {
            ranking.droppedCriteria.push_back(m.criteria[j].id);
        } else {
            kept.push_back(j);
        }
    }
    if (kept.empty()) throw DegenerateMatrixError("every criterion has zero variance");

    // weighted normalized matrix, column by column
    std::vector<std::vector<double>> weighted(rows, std::vector<double>(kept.size()));
    std::vector<double> ideal(kept.size());
    std::vector<double> antiIdeal(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
        const std::size_t j = kept[k];
        double sumSquares = 0.0;
        for (std::size_t i = 0; i < rows; ++i) sumSquares += m.values[i][j] * m.values[i][j];
        const double norm = std::sqrt(sumSquares);
        double lo = 0.0;
        double hi = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            const double v = m.criteria[j].weight * m.values[i][j] / norm;
            weighted[i][k] = v;
            lo = i == 0 ? v : std::min(lo, v);
            hi = i == 0 ? v : std::max(hi, v);
        }
        const bool benefit = m.criteria[j].direction == Direction::benefit;
        ideal[k] = benefit ? hi : lo;
        antiIdeal[k] = benefit ? lo : hi;
    }

    for (std::size_t i = 0; i < rows; ++i) {
        double toIdeal = 0.0;
        double toAnti = 0.0;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            toIdeal += (weighted[i][k] - ideal[k]) * (weighted[i][k] - ideal[k]);
            toAnti += (weighted[i][k] - antiIdeal[k]) * (weighted[i][k] - antiIdeal[k]);
        }
        toIdeal = std::sqrt(toIdeal);
        toAnti = std::sqrt(toAnti);
        const double denom = toIdeal + toAnti;
        // denom is 0 only when every kept column is constant after weighting (zero weights)
        ranking.order.push_back({m.alternatives[i], denom > 0.0 ? toAnti / denom : 0.5});
    }
    std::stable_sort(ranking.order.begin(), ranking.order.end(), [](const auto& a, const auto& b) {
        if (a.closeness != b.closeness) return a.closeness > b.closeness;
        return a.id < b.id;
    });
    return ranking;
}

namespace {

using nlohmann::json;

[[noreturn]] void altsError(const std::string& code, const std::string& subject, const std::string& message) {
    throw ValidationError(code, subject, subject + ": " + message);
}

void onlyKeys(const json& node, const std::string& label, std::initializer_list<std::string_view> allowed) {
    if (!node.is_object()) altsError("SCHEMA", label, "expected an object");
    for (const auto& [key, _] : node.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            altsError("UNKNOWN_FIELD", label, "unknown field '" + key + "'");
    }
}

double number(const json& node, const std::string& label) {
    if (!node.is_number()) altsError("SCHEMA", label, "expected a number");
    const double v = node.get<double>();
    if (!std::isfinite(v)) altsError("NON_FINITE", label, "non-finite number");
    return v;
}

}  // namespace

AlternativesFile parseAlternatives(std::string_view text, const std::string& sourceName) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
        const auto lastBreak = text.substr(0, offset).rfind('\n');
        std::size_t column = lastBreak == std::string_view::npos ? offset + 1 : offset - lastBreak;
        throw ParseError(sourceName, line, column, e.what());
    }
    onlyKeys(doc, "alternatives file", {"formatVersion", "alternatives", "criteria"});
    if (auto it = doc.find("formatVersion"); it != doc.end() && (!it->is_number_integer() || it->get<int>() != 1))
        altsError("UNSUPPORTED_VERSION", "alternatives file", "formatVersion must be 1");

    AlternativesFile file;
    auto alts = doc.find("alternatives");
    if (alts == doc.end() || !alts->is_array())
        altsError("MISSING_FIELD", "alternatives file", "an 'alternatives' array is required");
    for (std::size_t i = 0; i < alts->size(); ++i) {
        const json& node = (*alts)[i];
        std::string label = "alternatives[" + std::to_string(i) + "]";
        onlyKeys(node, label, {"id", "satisfies"});
        auto id = node.find("id");
        if (id == node.end() || !id->is_string()) altsError("MISSING_FIELD", label, "missing string 'id'");
        AlternativeScores scores{id->get<std::string>(), {}};
        if (auto sat = node.find("satisfies"); sat != node.end()) {
            if (!sat->is_object()) altsError("SCHEMA", scores.id, "'satisfies' must map requirement ids to numbers");
            for (const auto& [req, value] : sat->items()) scores.satisfies[req] = number(value, scores.id + "." + req);
        }
        file.alternatives.push_back(std::move(scores));
    }
    if (auto crit = doc.find("criteria"); crit != doc.end()) {
        if (!crit->is_object()) altsError("SCHEMA", "criteria", "expected an object keyed by requirement id");
        for (const auto& [req, node] : crit->items()) {
            onlyKeys(node, req, {"weight", "direction"});
            CriterionOverride override;
            if (auto w = node.find("weight"); w != node.end()) override.weight = number(*w, req + ".weight");
            if (auto d = node.find("direction"); d != node.end()) {
                if (!d->is_string() || !parseDirection(d->get<std::string>()))
                    altsError("SCHEMA", req, "direction must be 'benefit' or 'cost'");
                override.direction = parseDirection(d->get<std::string>());
            }
            file.criteria.emplace(req, override);
        }
    }
    return file;
}

DecisionMatrix buildConflictMatrix(const IdSet& conflictSet, const std::vector<AlternativeScores>& alternatives,
                                   const std::map<std::string, CriterionOverride>& overrides) {
    for (const auto& [req, _] : overrides) {
        if (!conflictSet.contains(req)) throw UnknownRequirementError(req);
    }
    std::vector<Criterion> criteria;
    for (const auto& req : conflictSet) {
        Criterion c{req, 1.0, Direction::benefit};
        if (auto it = overrides.find(req); it != overrides.end()) {
            if (it->second.weight) c.weight = *it->second.weight;
            if (it->second.direction) c.direction = *it->second.direction;
        }
        criteria.push_back(std::move(c));
    }
    std::vector<std::string> ids;
    std::vector<std::vector<double>> values;
    for (const auto& alt : alternatives) {
        for (const auto& [req, _] : alt.satisfies) {
            if (!conflictSet.contains(req)) throw UnknownRequirementError(req);
        }
        std::vector<double> row;
        for (const auto& c : criteria) {
            auto it = alt.satisfies.find(c.id);
            row.push_back(it == alt.satisfies.end() ? 0.0 : it->second);
        }
        ids.push_back(alt.id);
        values.push_back(std::move(row));
    }
    return makeDecisionMatrix(std::move(ids), std::move(criteria), std::move(values));
}

DecisionMatrix buildConflictMatrix(const Corpus& corpus, const LevelSelection& level,
                                   const std::vector<AlternativeScores>& alternatives,
                                   const std::map<std::string, CriterionOverride>& overrides) {
    return buildConflictMatrix(globalView(corpus, level).conflictSet(), alternatives, overrides);
}

DecisionMatrix buildConflictMatrix(const Corpus& corpus, const std::vector<AlternativeScores>& alternatives,
                                   const std::map<std::string, CriterionOverride>& overrides) {
    return buildConflictMatrix(corpus, selectLevel(corpus, Level::national), alternatives, overrides);
}

}  // namespace reqlattice

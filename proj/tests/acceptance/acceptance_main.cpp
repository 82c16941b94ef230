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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Tolerances are fixed below.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "reqlattice/change.hpp"
#include "reqlattice/cli.hpp"
#include "reqlattice/corpus_io.hpp"
#include "reqlattice/errors.hpp"
#include "reqlattice/optimizer.hpp"
#include "reqlattice/partition.hpp"
#include "reqlattice/relations.hpp"
#include "reqlattice/topsis.hpp"
#include "reqlattice/validation.hpp"

using namespace reqlattice;
using namespace reqlattice::testing;

namespace {

constexpr double kTopsisTolerance = 1e-9;
constexpr double kScalingTolerance = 1e-12;
constexpr double kPartitionBudgetSeconds = 5.0;

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && pass) {
            pass = false;
            detail = what;
        }
    }
};

constexpr RequirementKind kReqKinds[] = {RequirementKind::legalBased, RequirementKind::culturalBased,
                                         RequirementKind::functional};

// 1. Partitions are a disjoint cover and agree with the per-concept oracle.
Verdict partitionCriterion() {
    Verdict v;
    Rng rng(1001);
    const auto start = std::chrono::steady_clock::now();
    for (int round = 0; round < 200 && v.pass; ++round) {
        const Corpus c = randomCorpus(rng, CorpusShape{});
        const IdSet nodes = jurisdictionIds(c);
        auto check = [&](const Partition& p, const std::vector<OracleItem>& items) {
            const OraclePartition expected = perConceptPartition(items, nodes);
            v.require(p.general == expected.general && p.specific == expected.specific,
                      "oracle mismatch in round " + std::to_string(round));
            IdSet all;
            for (const auto& item : items) all.insert(item.id);
            IdSet covered = p.general;
            for (const auto& [node, ids] : p.specific) {
                for (const auto& id : ids) {
                    v.require(!p.general.contains(id), "overlap in round " + std::to_string(round));
                    v.require(covered.insert(id).second, "id in two specific sets");
                }
            }
            v.require(covered == all, "not a cover in round " + std::to_string(round));
        };
        for (auto kind : kReqKinds) check(partitionRequirements(c, kind), oracleItems(c, kind));
        for (auto kind : {SourceKind::legal, SourceKind::cultural}) check(partitionSources(c, kind), oracleItems(c, kind));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(seconds < kPartitionBudgetSeconds, "took " + std::to_string(seconds) + " s");
    if (v.pass) v.detail = "200 corpora in " + std::to_string(seconds) + " s";
    return v;
}

// 2. Two requirements, one refining the other.
Verdict redundancyExampleCriterion() {
    Verdict v;
    RelationSet rel;
    rel.addRefinement("r1", "r2");
    const auto result = removeRedundant({"r1", "r2"}, rel);
    v.require(result.strongest == IdSet{"r1"}, "strongest set is not {r1}");
    v.require(result.removed == std::map<std::string, std::string>{{"r2", "r1"}}, "removal map is not {r2 -> r1}");
    v.require(minimalBaseline({"r1", "r2"}, rel) == IdSet{"r2"}, "baseline is not {r2}");
    return v;
}

// 3. R* and R^min are antichains, fixed points, and the exhaustive extremes.
Verdict posetCriterion() {
    Verdict v;
    Rng rng(1003);
    for (int round = 0; round < 200 && v.pass; ++round) {
        const int n = uniform(rng, 1, 15);
        RelationSet rel;
        rel.refines = randomDag(rng, n, 0.2);
        const IdSet ids = nodeIds(n);
        const PairSet closure = warshallClosure(rel.refines, ids);
        const auto star = removeRedundant(ids, rel).strongest;
        const auto floor = minimalBaseline(ids, rel);
        v.require(star == bruteMaximal(ids, closure), "R* differs from the maximal elements");
        v.require(floor == bruteMinimal(ids, closure), "R^min differs from the minimal elements");
        v.require(removeRedundant(star, rel).strongest == star, "R* is not a fixed point");
        v.require(minimalBaseline(floor, rel) == floor, "R^min is not a fixed point");
        for (const auto& a : star)
            for (const auto& b : star) v.require(!closure.contains({a, b}), "R* is not an antichain");
        for (const auto& a : floor)
            for (const auto& b : floor) v.require(!closure.contains({a, b}), "R^min is not an antichain");
    }
    return v;
}

// 4. Random modifications fall into exactly one case with consistent detail.
Verdict changeCriterion() {
    Verdict v;
    Rng rng(1004);
    CorpusShape shape;
    shape.refinements = false;
    shape.maxConcepts = 8;
    shape.maxPerCell = 1;
    int done = 0;
    int counts[4] = {0, 0, 0, 0};
    while (done < 500 && v.pass) {
        const Corpus c = randomCorpus(rng, shape);
        if (c.requirements.empty()) continue;
        const auto level = selectLevel(c, Level::national);
        const PartitionSet ps = partitionAll(c, level);

        auto it = c.requirements.begin();
        std::advance(it, uniform(rng, 0, static_cast<int>(c.requirements.size()) - 1));
        const Requirement& target = it->second;
        // half the time copy a counterpart's hash, which may trigger a promotion
        std::vector<std::string> hashes;
        for (const auto& [id, r] : c.requirements)
            if (r.kind == target.kind && r.conceptKey == target.conceptKey && r.id != target.id) hashes.push_back(r.contentHash);
        ItemPayload payload;
        payload.contentHash = !hashes.empty() && chance(rng, 0.5)
                                  ? hashes[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(hashes.size()) - 1))]
                                  : "h" + std::to_string(uniform(rng, 0, 3));
        ChangeOp op{ChangeKind::modify, target.id, payload, std::nullopt};
        const Partition& before = ps.forRequirementKind(target.kind);
        const bool wasGeneral = before.general.contains(target.id);
        if (wasGeneral) {
            IdSet adopters;
            for (const auto& node : level.frontier)
                if (chance(rng, 0.5)) adopters.insert(node);
            if (adopters.empty()) adopters.insert(level.frontier.front());
            op.adoptedBy = adopters;
        }

        ChangeRecord record;
        Corpus after;
        try {
            std::tie(after, record) = applyChange(c, op, ps);
        } catch (const Error& e) {
            v.require(false, std::string("unexpected error ") + e.code());
            break;
        }
        ++done;
        v.require(classifyChange(c, op, ps) == record, "classifyChange disagrees with applyChange");
        v.require(isModifyCase(record.caseCode), "modify produced a non-modify case");
        ++counts[static_cast<int>(record.caseCode)];
        const IdSet frontier(level.frontier.begin(), level.frontier.end());
        switch (record.caseCode) {
            case CaseCode::specStaysSpec:
                v.require(!wasGeneral, "1a on a general target");
                v.require(!partitionRequirements(after, target.kind, level).general.contains(target.id),
                          "1a target is general after repartition");
                break;
            case CaseCode::specToGeneral: {
                v.require(!wasGeneral, "1b on a general target");
                const Partition fresh = partitionRequirements(after, target.kind, level);
                v.require(fresh.general.contains(target.id) && fresh.generalConcepts.contains(target.conceptKey),
                          "1b concept not general after repartition");
                break;
            }
            case CaseCode::genStaysGen:
            case CaseCode::genSplits: {
                v.require(wasGeneral, "2a/2b on a specific target");
                IdSet joined = record.adopters;
                for (const auto& k : record.keepers) {
                    v.require(!record.adopters.contains(k), "adopt and keep branches overlap");
                    joined.insert(k);
                }
                v.require(joined == frontier, "adopt and keep branches do not cover the frontier");
                v.require((record.caseCode == CaseCode::genSplits) == !record.keepers.empty(),
                          "2a/2b does not match the keep branch");
                break;
            }
            default:
                break;
        }
    }
    if (v.pass) {
        std::ostringstream os;
        os << "1a=" << counts[0] << " 1b=" << counts[1] << " 2a=" << counts[2] << " 2b=" << counts[3];
        v.detail = os.str();
        v.require(counts[0] > 0 && counts[1] > 0 && counts[2] > 0 && counts[3] > 0, "a case was never exercised");
    }
    return v;
}

// 5. The three scenario options.
Verdict scenarioCriterion() {
    Verdict v;
    auto classify = [](bool shared, bool distinct) {
        CorpusBuilder b;
        b.jurisdiction("au").jurisdiction("de");
        if (shared) {
            b.source("L-au-consent", SourceKind::legal, "au", "consent", "h-opt-in");
            b.source("L-de-consent", SourceKind::legal, "de", "consent", "h-opt-in");
        }
        if (distinct) {
            b.source("L-au-retention", SourceKind::legal, "au", "retention", "h-7y");
            b.source("L-de-retention", SourceKind::legal, "de", "retention", "h-10y");
        }
        return classifyScenario(partitionSources(b.build(), SourceKind::legal)).option;
    };
    v.require(classify(false, true) == ScenarioOption::disjoint, "disjoint fixture misclassified");
    v.require(classify(true, false) == ScenarioOption::identicalGeneral, "identical fixture misclassified");
    v.require(classify(true, true) == ScenarioOption::partialOverlap, "overlap fixture misclassified");
    return v;
}

// 6. TOPSIS against frozen reference values, the ideal row, and column scaling.
Verdict topsisCriterion() {
    Verdict v;
    const auto m = makeDecisionMatrix({"A1", "A2", "A3"},
                                      {{"c1", 0.5, Direction::benefit}, {"c2", 0.3, Direction::benefit},
                                       {"c3", 0.2, Direction::cost}},
                                      {{250, 16, 12}, {200, 16, 8}, {300, 32, 16}});
    const std::map<std::string, double> expected{
        {"A1", 0.32682596634694326367}, {"A2", 0.30747910062519557301}, {"A3", 0.69252089937480442699}};
    const Ranking r = rankAlternatives(m);
    for (const auto& entry : r.order)
        v.require(std::abs(entry.closeness - expected.at(entry.id)) <= kTopsisTolerance, "reference closeness for " + entry.id);
    v.require(r.order.size() == 3 && r.order[0].id == "A3" && r.order[1].id == "A1" && r.order[2].id == "A2",
              "reference order");

    Rng rng(1006);
    std::uniform_real_distribution<double> value(0.1, 10.0);
    for (int round = 0; round < 100 && v.pass; ++round) {
        const int rows = uniform(rng, 2, 6);
        const int cols = uniform(rng, 1, 5);
        std::vector<std::string> alts;
        std::vector<Criterion> crit;
        std::vector<std::vector<double>> values(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) alts.push_back("a" + std::to_string(i));
        for (int j = 0; j < cols; ++j)
            crit.push_back({"c" + std::to_string(j), value(rng), chance(rng, 0.5) ? Direction::benefit : Direction::cost});
        for (auto& row : values)
            for (int j = 0; j < cols; ++j) row.push_back(value(rng));
        const auto base = rankAlternatives(makeDecisionMatrix(alts, crit, values));

        auto scaled = values;
        for (int j = 0; j < cols; ++j) {
            const double factor = value(rng) * 10.0;
            for (auto& row : scaled) row[static_cast<std::size_t>(j)] *= factor;
        }
        const auto rescaled = rankAlternatives(makeDecisionMatrix(alts, crit, scaled));
        for (std::size_t i = 0; i < base.order.size(); ++i) {
            v.require(base.order[i].id == rescaled.order[i].id ||
                          std::abs(base.order[i].closeness - rescaled.order[i].closeness) <= kScalingTolerance,
                      "scaling changed the order");
            double other = -1.0;
            for (const auto& e : rescaled.order)
                if (e.id == base.order[i].id) other = e.closeness;
            v.require(std::abs(other - base.order[i].closeness) <= kScalingTolerance, "scaling changed a closeness");
        }

        std::vector<double> ideal;
        for (int j = 0; j < cols; ++j) {
            double best = values[0][static_cast<std::size_t>(j)];
            for (const auto& row : values) {
                const double x = row[static_cast<std::size_t>(j)];
                best = crit[static_cast<std::size_t>(j)].direction == Direction::benefit ? std::max(best, x) : std::min(best, x);
            }
            ideal.push_back(best);
        }
        values.push_back(ideal);
        alts.push_back("ideal");
        const auto withIdeal = rankAlternatives(makeDecisionMatrix(alts, crit, values));
        v.require(withIdeal.order[0].closeness == 1.0, "top closeness is not exactly 1.0");
        for (const auto& e : withIdeal.order)
            if (e.id == "ideal") v.require(e.closeness == 1.0, "ideal row is not exactly 1.0");
    }
    return v;
}

// 7. Canonical round trip, and byte-identical CLI reports across runs.
Verdict roundTripCriterion() {
    Verdict v;
    Rng rng(1007);
    CorpusShape shape;
    shape.fancyText = true;
    const auto scratch = std::filesystem::temp_directory_path() / "reqlattice-acceptance-roundtrip.json";
    for (int round = 0; round < 100 && v.pass; ++round) {
        const Corpus c = randomCorpus(rng, shape);
        saveCorpus(c, scratch);
        const Corpus back = loadCorpus(scratch);
        v.require(back == c, "round trip changed the corpus");
        v.require(serializeCorpus(back) == readFile(scratch), "serialization is not idempotent");
    }
    std::filesystem::remove(scratch);
    const std::string corpus = dataFile("worked-example.reqcorpus.json").string();
    const std::vector<std::vector<std::string>> commands = {
        {"validate"}, {"partition"}, {"scenario"}, {"optimize"}, {"conflicts"}, {"hierarchy"},
        {"change", "--changes", dataFile("worked-example.reqchange.json").string()},
        {"rank", "--alternatives", dataFile("worked-example.reqalts.json").string()},
    };
    for (auto args : commands) {
        args.insert(args.begin() + 1, {"--corpus", corpus, "--format", "json"});
        std::ostringstream out1, out2, err;
        const int code1 = cli::run(args, out1, err);
        const int code2 = cli::run(args, out2, err);
        v.require(code1 == 0 && code2 == 0, args[0] + " failed");
        v.require(out1.str() == out2.str() && !out1.str().empty(), args[0] + " output differs between runs");
    }
    return v;
}

// 8. Derived contradictions equal the naive fixpoint.
Verdict contradictionCriterion() {
    Verdict v;
    Rng rng(1008);
    for (int round = 0; round < 100 && v.pass; ++round) {
        const int n = uniform(rng, 2, 20);
        RelationSet rel;
        rel.refines = randomDag(rng, n, 0.12);
        for (int e = 0; e < uniform(rng, 1, 4); ++e) {
            const auto a = "n" + std::to_string(uniform(rng, 0, n - 1));
            const auto b = "n" + std::to_string(uniform(rng, 0, n - 1));
            if (a != b) rel.addContradiction(a, b);
        }
        v.require(deriveContradictions(rel) == contradictionFixpoint(rel), "mismatch in round " + std::to_string(round));
    }
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"1 partition cover matches oracle", partitionCriterion},
        {"2 refined pair keeps the stronger", redundancyExampleCriterion},
        {"3 strongest and baseline sets", posetCriterion},
        {"4 change case classification", changeCriterion},
        {"5 scenario options", scenarioCriterion},
        {"6 topsis reference and invariance", topsisCriterion},
        {"7 round trip and stable reports", roundTripCriterion},
        {"8 contradiction derivation", contradictionCriterion},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        if (!v.pass) ++failures;
        std::cout << (v.pass ? "PASS " : "FAIL ") << name;
        if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}

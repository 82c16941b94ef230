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

#include <algorithm>

#include "fixtures.hpp"
#include "reqlattice/change.hpp"
#include "reqlattice/errors.hpp"
#include "reqlattice/partition.hpp"
#include "unit.hpp"

using namespace reqlattice;
using namespace reqlattice::testing;

namespace {

PartitionSet nationalPartitions(const Corpus& c) {
    return partitionAll(c, selectLevel(c, Level::national));
}

ChangeOp modifyHash(const std::string& target, const std::string& hash,
                    std::optional<IdSet> adoptedBy = std::nullopt) {
    ItemPayload payload;
    payload.contentHash = hash;
    return {ChangeKind::modify, target, payload, std::move(adoptedBy)};
}

ComponentStatus statusOf(const ChangeRecord& record, const std::string& component) {
    for (const auto& entry : record.componentImpact)
        if (entry.component == component) return entry.status;
    FAIL("component not in impact list: " << component);
    return ComponentStatus::unchanged;
}

bool hasComponent(const ChangeRecord& record, const std::string& component) {
    return std::any_of(record.componentImpact.begin(), record.componentImpact.end(),
                       [&](const ComponentImpact& e) { return e.component == component; });
}

std::string errorCode(const Corpus& c, const ChangeOp& op) {
    try {
        (void)applyChange(c, op, nationalPartitions(c));
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("case labels") {
    CHECK(caseLabel(CaseCode::specStaysSpec) == "1a");
    CHECK(caseLabel(CaseCode::genSplits) == "2b");
    CHECK(caseLabel(CaseCode::add).empty());
    CHECK(isModifyCase(CaseCode::genStaysGen));
    CHECK_FALSE(isModifyCase(CaseCode::sourceChange));
    CHECK(toString(CaseCode::specToGeneral) == "SPEC_TO_GENERAL");
    CHECK(toString(ComponentStatus::reusable) == "reusable");
}

TEST_CASE("a specific requirement that stays specific") {
    const Corpus c = workedExample();
    const auto [next, record] = applyChange(c, modifyHash("R-au-greeting", "h-greet-nickname"), nationalPartitions(c));
    CHECK(record.caseCode == CaseCode::specStaysSpec);
    CHECK(record.affected == IdSet{"au"});
    CHECK(record.migrations.empty());
    CHECK(statusOf(record, "comp-greet-au") == ComponentStatus::mustChange);
    CHECK_FALSE(hasComponent(record, "comp-greet-de"));
    CHECK(next.requirements.at("R-au-greeting").contentHash == "h-greet-nickname");
    CHECK(c.requirements.at("R-au-greeting").contentHash == "h-greet-first-name");
}

TEST_CASE("a specific requirement promoted to general") {
    const Corpus c = workedExample();
    const auto [next, record] = applyChange(c, modifyHash("R-au-retain", "h-keep-10y"), nationalPartitions(c));
    CHECK(record.caseCode == CaseCode::specToGeneral);
    CHECK(record.affected == IdSet{"au", "de"});
    CHECK(record.promotingJurisdiction == "au");
    CHECK(record.counterparts == std::map<std::string, std::string>{{"de", "R-de-retain"}});
    CHECK(statusOf(record, "comp-retain-au") == ComponentStatus::mustChange);
    CHECK(statusOf(record, "comp-retain-de") == ComponentStatus::reusable);
    CHECK(record.migrations == std::vector<Migration>{{"R-au-retain", "RLS[au]", "RLG"},
                                                      {"R-de-retain", "RLS[de]", "RLG"}});
    CHECK(nationalPartitions(next).legalRequirements.generalConcepts.contains("record-retention"));
}

TEST_CASE("promotion folds identical duplicates into one representative") {
    const Corpus c = CorpusBuilder()
                         .jurisdiction("au")
                         .jurisdiction("de")
                         .legal("A1", "au", "k", "h1")
                         .legal("D1", "de", "k", "h2")
                         .legal("D2", "de", "k", "h2")
                         .legal("D3", "de", "other", "x")
                         .refines("D3", "D2")
                         .component("comp-d2", {"D2"}, ComponentScope::specific("de"))
                         .build();
    const auto [next, record] = applyChange(c, modifyHash("A1", "h2"), nationalPartitions(c));
    CHECK(record.caseCode == CaseCode::specToGeneral);
    CHECK(record.counterparts.at("de") == "D1");
    CHECK_FALSE(next.requirements.contains("D2"));
    CHECK(next.components.at("comp-d2").implements == IdSet{"D1"});
    CHECK(next.relations.refines == PairSet{{"D3", "D1"}});
    CHECK(statusOf(record, "comp-d2") == ComponentStatus::reusable);
    const auto merged = std::find_if(record.migrations.begin(), record.migrations.end(),
                                     [](const Migration& m) { return m.id == "D2"; });
    REQUIRE(merged != record.migrations.end());
    CHECK(merged->from == "RLS[de]");
    CHECK(merged->to == "merged:D1");
}

TEST_CASE("a general requirement changed everywhere") {
    const Corpus c = workedExample();
    const auto [next, record] =
        applyChange(c, modifyHash("R-au-consent", "h-capture-granular", IdSet{"au", "de"}), nationalPartitions(c));
    CHECK(record.caseCode == CaseCode::genStaysGen);
    CHECK(record.keepers.empty());
    CHECK(record.adopters == IdSet{"au", "de"});
    CHECK(next.requirements.at("R-de-consent").contentHash == "h-capture-granular");
    CHECK(statusOf(record, "comp-consent") == ComponentStatus::mustChange);
    CHECK(record.migrations.empty());
}

TEST_CASE("a general requirement split by adopters") {
    const Corpus c = workedExample();
    const auto [next, record] =
        applyChange(c, modifyHash("R-de-consent", "h-capture-granular", IdSet{"de"}), nationalPartitions(c));
    CHECK(record.caseCode == CaseCode::genSplits);
    CHECK(record.adopters == IdSet{"de"});
    CHECK(record.keepers == IdSet{"au"});
    CHECK(next.requirements.at("R-au-consent").contentHash == "h-capture-checkbox");
    CHECK(next.requirements.at("R-de-consent").contentHash == "h-capture-granular");
    // the shared component implements both sides; the adopting side wins
    CHECK(statusOf(record, "comp-consent") == ComponentStatus::mustChange);
    CHECK(record.migrations == std::vector<Migration>{{"R-au-consent", "RLG", "RLS[au]"},
                                                      {"R-de-consent", "RLG", "RLS[de]"}});
    REQUIRE(record.findings.size() == 1);
    CHECK(record.findings[0].code == "SPECIFIC_REQ_NO_SPECIFIC_SOURCE");
    CHECK(record.findings[0].subject == "R-de-consent");
}

TEST_CASE("keepers keep their components unchanged") {
    const Corpus c = CorpusBuilder()
                         .jurisdiction("au")
                         .jurisdiction("de")
                         .legal("A", "au", "k", "h")
                         .legal("D", "de", "k", "h")
                         .component("comp-a", {"A"})
                         .component("comp-d", {"D"})
                         .build();
    const auto record = classifyChange(c, modifyHash("A", "h2", IdSet{"au"}), nationalPartitions(c));
    CHECK(record.caseCode == CaseCode::genSplits);
    CHECK(statusOf(record, "comp-a") == ComponentStatus::mustChange);
    CHECK(statusOf(record, "comp-d") == ComponentStatus::unchanged);
}

TEST_CASE("modify errors") {
    const Corpus c = workedExample();
    CHECK_THROWS_AS((void)applyChange(c, modifyHash("R-au-consent", "h"), nationalPartitions(c)),
                    MissingAdoptedByError);
    CHECK_THROWS_AS((void)applyChange(c, modifyHash("ghost", "h"), nationalPartitions(c)), UnknownTargetError);
    CHECK(errorCode(c, modifyHash("R-au-consent", "h", IdSet{"fr"})) == "ADOPTER_NOT_IN_FRONTIER");

    ItemPayload staticFlag;
    staticFlag.isStatic = true;
    CHECK(errorCode(c, {ChangeKind::modify, "R-au-retain", staticFlag, std::nullopt}) == "FIELD_NOT_APPLICABLE");
    ItemPayload derivation;
    derivation.derivedFrom = IdSet{};
    CHECK(errorCode(c, {ChangeKind::modify, "L-au-retention", derivation, std::nullopt}) == "FIELD_NOT_APPLICABLE");
    ItemPayload badSource;
    badSource.derivedFrom = IdSet{"L-de-retention"};
    CHECK(errorCode(c, {ChangeKind::modify, "R-au-retain", badSource, std::nullopt}) == "DERIVATION_SCOPE");
}

TEST_CASE("a modify target must be visible at the level") {
    const Corpus c = CorpusBuilder()
                         .jurisdiction("au")
                         .jurisdiction("nsw", Level::state, "au")
                         .jurisdiction("acme", Level::organisational, "nsw")
                         .legal("R-acme", "acme", "k", "h")
                         .build();
    try {
        (void)applyChange(c, modifyHash("R-acme", "h2"), partitionAll(c, selectLevel(c, Level::state)));
        FAIL("expected TARGET_OUTSIDE_LEVEL");
    } catch (const ValidationError& e) {
        CHECK(e.code() == "TARGET_OUTSIDE_LEVEL");
    }
}

TEST_CASE("add and remove") {
    const Corpus c = workedExample();
    ItemPayload p;
    p.kind = "functional";
    p.jurisdiction = "de";
    p.conceptKey = "dark-mode";
    p.text = "The UI shall offer a dark theme.";
    const auto [added, addRecord] = applyChange(c, {ChangeKind::add, "R-de-dark", p, std::nullopt}, nationalPartitions(c));
    CHECK(addRecord.caseCode == CaseCode::add);
    CHECK(addRecord.affected == IdSet{"de"});
    CHECK(addRecord.migrations == std::vector<Migration>{{"R-de-dark", "-", "RFS[de]"}});
    CHECK(added.requirements.contains("R-de-dark"));

    const auto [removed, removeRecord] =
        applyChange(c, {ChangeKind::remove, "R-de-greeting", std::nullopt, std::nullopt}, nationalPartitions(c));
    CHECK(removeRecord.caseCode == CaseCode::remove);
    CHECK(removeRecord.affected == IdSet{"de"});
    CHECK(removed.relations.contradicts.empty());
    CHECK(removed.components.at("comp-greet-de").implements.empty());
    CHECK(statusOf(removeRecord, "comp-greet-de") == ComponentStatus::mustChange);

    // removing a source still referenced by derivedFrom leaves a dangling reference
    try {
        (void)applyChange(c, {ChangeKind::remove, "L-au-consent", std::nullopt, std::nullopt}, nationalPartitions(c));
        FAIL("expected DANGLING_REF");
    } catch (const ValidationError& e) {
        CHECK(e.code() == "DANGLING_REF");
    }
}

TEST_CASE("the worked change set") {
    const Corpus c = workedExample();
    const ChangeSet cs = loadChangeSet(dataFile("worked-example.reqchange.json"), c);
    const auto [after, report] = applyChangeSet(c, cs);
    REQUIRE(report.perOp.size() == 3);
    CHECK(report.perOp[0].caseCode == CaseCode::sourceChange);
    CHECK(report.perOp[0].migrations == std::vector<Migration>{{"L-au-retention", "LS[au]", "LG"},
                                                               {"L-de-retention", "LS[de]", "LG"}});
    CHECK(report.perOp[1].caseCode == CaseCode::specToGeneral);
    CHECK(report.perOp[2].caseCode == CaseCode::genSplits);
    CHECK(report.partitionsBefore == partitionFingerprint(nationalPartitions(c)));
    CHECK(report.partitionsAfter == partitionFingerprint(nationalPartitions(after)));
    CHECK(report.partitionsBefore != report.partitionsAfter);

    // the expected end state, written out set by set
    const auto ps = nationalPartitions(after);
    CHECK(ps.legalSources.general == IdSet{"L-au-consent", "L-au-retention", "L-de-consent", "L-de-retention"});
    CHECK(ps.legalSources.specific == std::map<std::string, IdSet>{{"au", {}}, {"de", {}}});
    CHECK(ps.culturalSources.general.empty());
    CHECK(ps.culturalSources.specific ==
          std::map<std::string, IdSet>{{"au", {"C-au-address"}}, {"de", {"C-de-address"}}});
    CHECK(ps.legalRequirements.general == IdSet{"R-au-retain", "R-de-retain"});
    CHECK(ps.legalRequirements.specific ==
          std::map<std::string, IdSet>{{"au", {"R-au-consent"}}, {"de", {"R-de-consent"}}});
    CHECK(ps.culturalRequirements.specific ==
          std::map<std::string, IdSet>{{"au", {"R-au-greeting"}}, {"de", {"R-de-greeting"}}});
    CHECK(ps.functionalRequirements.general == IdSet{"R-au-export", "R-de-export"});

    const auto hints = reuseHints(report, after);
    REQUIRE(hints.size() == 1);
    CHECK(hints[0].component == "comp-retain-de");
    CHECK(hints[0].forJurisdiction == "au");
    CHECK(hints[0].fromJurisdiction == "de");
    CHECK(hints[0].counterpart == "R-de-retain");
    CHECK(hints[0].promoted == "R-au-retain");
}

TEST_CASE("an empty change set changes nothing") {
    const Corpus c = workedExample();
    const auto [after, report] = applyChangeSet(c, ChangeSet{"noop", {}});
    CHECK(after == c);
    CHECK(report.perOp.empty());
    CHECK(report.partitionsBefore == report.partitionsAfter);
    CHECK(reuseHints(report, after).empty());
}

TEST_CASE("a failing op leaves the input corpus untouched") {
    const Corpus c = workedExample();
    ChangeSet cs{"bad", {modifyHash("R-au-retain", "h-keep-10y"), modifyHash("R-au-consent", "h")}};
    CHECK_THROWS_AS((void)applyChangeSet(c, cs), MissingAdoptedByError);
    CHECK(c == workedExample());
}

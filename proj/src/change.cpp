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

#include "reqlattice/change.hpp"

#include <algorithm>

#include "reqlattice/digest.hpp"
#include "reqlattice/errors.hpp"
#include "reqlattice/validation.hpp"

namespace reqlattice {

std::string_view toString(CaseCode code) {
    switch (code) {
        case CaseCode::specStaysSpec: return "SPEC_STAYS_SPEC";
        case CaseCode::specToGeneral: return "SPEC_TO_GENERAL";
        case CaseCode::genStaysGen: return "GEN_STAYS_GEN";
        case CaseCode::genSplits: return "GEN_SPLITS";
        case CaseCode::add: return "ADD";
        case CaseCode::remove: return "REMOVE";
        case CaseCode::sourceChange: return "SOURCE_CHANGE";
    }
    return "?";
}

std::string_view caseLabel(CaseCode code) {
    switch (code) {
        case CaseCode::specStaysSpec: return "1a";
        case CaseCode::specToGeneral: return "1b";
        case CaseCode::genStaysGen: return "2a";
        case CaseCode::genSplits: return "2b";
        default: return "";
    }
}

bool isModifyCase(CaseCode code) {
    return !caseLabel(code).empty();
}

std::string_view toString(ComponentStatus status) {
    switch (status) {
        case ComponentStatus::mustChange: return "mustChange";
        case ComponentStatus::unchanged: return "unchanged";
        case ComponentStatus::reusable: return "reusable";
    }
    return "?";
}

namespace {

const Partition* allPartitions(const PartitionSet& ps, std::size_t index) {
    const Partition* parts[] = {&ps.legalSources, &ps.culturalSources, &ps.legalRequirements,
                                &ps.culturalRequirements, &ps.functionalRequirements};
    return index < 5 ? parts[index] : nullptr;
}

}  // namespace

std::string partitionFingerprint(const PartitionSet& partitions) {
    std::string text;
    for (std::size_t i = 0; const Partition* p = allPartitions(partitions, i); ++i) {
        text += p->setName() + ":";
        for (const auto& id : p->general) text += id + ",";
        for (const auto& [node, ids] : p->specific) {
            text += ";" + p->setName(node) + ":";
            for (const auto& id : ids) text += id + ",";
        }
        text += "\n";
    }
    return sha256Hex(text);
}

namespace {

using Placement = std::map<std::string, std::string>;

Placement placementOf(const PartitionSet& partitions) {
    std::map<std::string, std::vector<std::string>> names;
    for (std::size_t i = 0; const Partition* p = allPartitions(partitions, i); ++i) {
        for (const auto& id : p->general) names[id].push_back(p->setName());
        for (const auto& [node, ids] : p->specific) {
            for (const auto& id : ids) names[id].push_back(p->setName(node));
        }
    }
    Placement placement;
    for (auto& [id, list] : names) {
        std::sort(list.begin(), list.end());
        std::string joined;
        for (const auto& name : list) joined += (joined.empty() ? "" : ",") + name;
        placement.emplace(id, std::move(joined));
    }
    return placement;
}

std::vector<Migration> diffPlacement(const Placement& before, const Placement& after,
                                     const std::map<std::string, std::string>& merged) {
    IdSet ids;
    for (const auto& [id, _] : before) ids.insert(id);
    for (const auto& [id, _] : after) ids.insert(id);
    std::vector<Migration> migrations;
    for (const auto& id : ids) {
        auto b = before.find(id);
        auto a = after.find(id);
        std::string from = b == before.end() ? "-" : b->second;
        std::string to = a == after.end() ? "-" : a->second;
        if (auto m = merged.find(id); m != merged.end()) to = "merged:" + m->second;
        if (from != to) migrations.push_back({id, std::move(from), std::move(to)});
    }
    return migrations;
}

const Partition& partitionOfItem(const Corpus& corpus, const PartitionSet& ps, const std::string& id) {
    if (const auto* s = corpus.findSource(id)) return ps.forSourceKind(s->kind);
    return ps.forRequirementKind(corpus.requirements.at(id).kind);
}

IdSet nodesHolding(const Partition& p, const std::string& id) {
    IdSet nodes;
    for (const auto& [node, ids] : p.members) {
        if (ids.contains(id)) nodes.insert(node);
    }
    return nodes;
}

[[noreturn]] void notApplicable(const std::string& target, const char* field) {
    throw ValidationError("FIELD_NOT_APPLICABLE", target,
                          "'" + target + "': payload field '" + field + "' does not apply to this item");
}

void applyContent(std::string& conceptKey, std::string& contentHash, std::string& text, const ItemPayload& p) {
    if (p.conceptKey) conceptKey = *p.conceptKey;
    if (p.text) text = *p.text;
    if (p.contentHash) {
        contentHash = *p.contentHash;
    } else if (p.text) {
        contentHash = contentHashOf(text);
    }
}

void applyToRequirement(Requirement& r, const ItemPayload& p, bool withDerivation) {
    if (p.isStatic) notApplicable(r.id, "isStatic");
    applyContent(r.conceptKey, r.contentHash, r.text, p);
    if (withDerivation && p.derivedFrom) r.derivedFrom = *p.derivedFrom;
}

void applyToSource(SourceItem& s, const ItemPayload& p) {
    if (p.derivedFrom) notApplicable(s.id, "derivedFrom");
    applyContent(s.conceptKey, s.contentHash, s.text, p);
    if (p.isStatic) s.isStatic = *p.isStatic;
}

void addItem(Corpus& corpus, const ChangeOp& op) {
    const ItemPayload& p = *op.payload;
    if (corpus.roleOf(op.target)) {
        throw ValidationError("TARGET_EXISTS", op.target, "'" + op.target + "': add target already exists");
    }
    if (auto kind = parseSourceKind(*p.kind)) {
        if (p.derivedFrom) notApplicable(op.target, "derivedFrom");
        SourceItem s{op.target, *kind, *p.jurisdiction, *p.conceptKey, "", *p.text, p.isStatic.value_or(false)};
        s.contentHash = p.contentHash.value_or(contentHashOf(s.text));
        corpus.sources.emplace(s.id, std::move(s));
        return;
    }
    if (p.isStatic) notApplicable(op.target, "isStatic");
    Requirement r{op.target, *parseRequirementKind(*p.kind), *p.jurisdiction, *p.conceptKey, "",
                  p.derivedFrom.value_or(IdSet{}), *p.text};
    r.contentHash = p.contentHash.value_or(contentHashOf(r.text));
    corpus.requirements.emplace(r.id, std::move(r));
}

// Rewrites every reference to `from`; with an empty `to` the references are dropped.
void redirectReferences(Corpus& corpus, const std::string& from, const std::string& to) {
    auto rewrite = [&](const PairSet& pairs, bool unordered) {
        PairSet out;
        for (auto [a, b] : pairs) {
            if (a == from) a = to;
            if (b == from) b = to;
            if (a.empty() || b.empty() || a == b) continue;
            out.insert(unordered ? unorderedPair(std::move(a), std::move(b)) : IdPair{std::move(a), std::move(b)});
        }
        return out;
    };
    corpus.relations.refines = rewrite(corpus.relations.refines, false);
    corpus.relations.contradicts = rewrite(corpus.relations.contradicts, true);
    for (auto& [_, component] : corpus.components) {
        if (component.implements.erase(from) != 0 && !to.empty()) component.implements.insert(to);
    }
}

class ImpactCollector {
 public:
    void note(const Corpus& corpus, const IdSet& requirements, ComponentStatus status) {
        for (const auto& [id, component] : corpus.components) {
            const bool touches = std::any_of(requirements.begin(), requirements.end(),
                                             [&](const std::string& r) { return component.implements.contains(r); });
            if (!touches) continue;
            auto [it, inserted] = statuses_.emplace(id, status);
            if (!inserted && rank(status) > rank(it->second)) it->second = status;
        }
    }

    std::vector<ComponentImpact> result() const {
        std::vector<ComponentImpact> out;
        for (const auto& [id, status] : statuses_) out.push_back({id, status});
        return out;
    }

 private:
    static int rank(ComponentStatus status) {
        switch (status) {
            case ComponentStatus::mustChange: return 3;
            case ComponentStatus::reusable: return 2;
            case ComponentStatus::unchanged: return 1;
        }
        return 0;
    }

    std::map<std::string, ComponentStatus> statuses_;
};

struct Outcome {
    Corpus corpus;
    ChangeRecord record;
    std::map<std::string, std::string> merged;
    IdSet changedRequirements;
};

IdSet frontierSet(const LevelSelection& level) {
    return {level.frontier.begin(), level.frontier.end()};
}

void modifySpecific(Outcome& out, const Corpus& corpus, const ChangeOp& op, const Partition& before) {
    const Requirement& original = corpus.requirements.at(op.target);
    applyToRequirement(out.corpus.requirements.at(op.target), *op.payload, true);
    validateCorpus(out.corpus);
    out.changedRequirements.insert(op.target);

    const Partition after = partitionRequirements(out.corpus, original.kind, before.level);
    ImpactCollector impact;
    impact.note(corpus, {op.target}, ComponentStatus::mustChange);

    if (!after.general.contains(op.target)) {
        out.record.caseCode = CaseCode::specStaysSpec;
        for (const auto& [node, ids] : before.specific) {
            if (ids.contains(op.target)) out.record.affected.insert(node);
        }
        out.record.componentImpact = impact.result();
        return;
    }

    out.record.caseCode = CaseCode::specToGeneral;
    out.record.affected = frontierSet(before.level);
    out.record.promotingJurisdiction = original.jurisdiction;

    // One representative per owning jurisdiction; identical duplicates fold into it.
    const Requirement& promoted = out.corpus.requirements.at(op.target);
    std::map<std::string, std::vector<std::string>> byOwner;
    for (const auto& id : after.generalConcepts.at(promoted.conceptKey)) {
        byOwner[out.corpus.requirements.at(id).jurisdiction].push_back(id);
    }
    IdSet representatives;
    for (auto& [owner, ids] : byOwner) {
        const bool ownsTarget = std::find(ids.begin(), ids.end(), op.target) != ids.end();
        const std::string rep = ownsTarget ? op.target : ids.front();
        representatives.insert(rep);
        if (owner != original.jurisdiction) out.record.counterparts.emplace(owner, rep);
        for (const auto& id : ids) {
            if (id == rep) continue;
            out.merged.emplace(id, rep);
            redirectReferences(out.corpus, id, rep);
            out.corpus.requirements.erase(id);
        }
    }
    if (!out.merged.empty()) validateCorpus(out.corpus);

    IdSet reusable;
    for (const auto& [owner, rep] : out.record.counterparts) reusable.insert(rep);
    impact.note(out.corpus, reusable, ComponentStatus::reusable);
    out.record.componentImpact = impact.result();
}

void modifyGeneral(Outcome& out, const Corpus& corpus, const ChangeOp& op, const Partition& before) {
    if (!op.adoptedBy) throw MissingAdoptedByError(op.target);
    const IdSet frontier = frontierSet(before.level);
    for (const auto& j : *op.adoptedBy) {
        if (!frontier.contains(j)) {
            throw ValidationError("ADOPTER_NOT_IN_FRONTIER", op.target,
                                  "'" + op.target + "': adopter '" + j + "' is not a jurisdiction at level " +
                                      std::string(toString(before.level.level)));
        }
    }
    const Requirement& original = corpus.requirements.at(op.target);
    const IdSet& group = before.generalConcepts.at(original.conceptKey);

    out.record.adopters = *op.adoptedBy;
    for (const auto& node : frontier) {
        if (!out.record.adopters.contains(node)) out.record.keepers.insert(node);
    }
    auto counterpartsOf = [&](const IdSet& nodes) {
        IdSet ids;
        for (const auto& node : nodes) {
            for (const auto& id : group) {
                if (before.members.at(node).contains(id)) ids.insert(id);
            }
        }
        return ids;
    };
    const IdSet adoptIds = counterpartsOf(out.record.adopters);
    const IdSet keepIds = counterpartsOf(out.record.keepers);
    for (const auto& id : adoptIds) {
        if (keepIds.contains(id)) {
            throw ValidationError("SHARED_COUNTERPART", id,
                                  "'" + id + "' is inherited by both adopting and keeping jurisdictions");
        }
    }
    for (const auto& id : adoptIds) {
        applyToRequirement(out.corpus.requirements.at(id), *op.payload, id == op.target);
    }
    validateCorpus(out.corpus);
    out.changedRequirements = adoptIds;

    out.record.caseCode = out.record.keepers.empty() ? CaseCode::genStaysGen : CaseCode::genSplits;
    out.record.affected = frontier;
    ImpactCollector impact;
    impact.note(corpus, adoptIds, ComponentStatus::mustChange);
    impact.note(corpus, keepIds, ComponentStatus::unchanged);
    out.record.componentImpact = impact.result();
}

Outcome applyOp(const Corpus& corpus, const ChangeOp& op, const PartitionSet& partitions) {
    const LevelSelection& level = partitions.legalSources.level;
    Outcome out{corpus, {}, {}, {}};
    out.record.op = op.op;
    out.record.target = op.target;

    switch (op.op) {
        case ChangeKind::add: {
            addItem(out.corpus, op);
            validateCorpus(out.corpus);
            out.record.caseCode = CaseCode::add;
            if (out.corpus.requirements.contains(op.target)) out.changedRequirements.insert(op.target);
            break;
        }
        case ChangeKind::remove: {
            if (!corpus.roleOf(op.target)) throw UnknownTargetError(op.target);
            out.record.caseCode = CaseCode::remove;
            out.record.affected = nodesHolding(partitionOfItem(corpus, partitions, op.target), op.target);
            if (corpus.requirements.contains(op.target)) {
                ImpactCollector impact;
                impact.note(corpus, {op.target}, ComponentStatus::mustChange);
                out.record.componentImpact = impact.result();
            }
            redirectReferences(out.corpus, op.target, "");
            out.corpus.sources.erase(op.target);
            out.corpus.requirements.erase(op.target);
            validateCorpus(out.corpus);
            break;
        }
        case ChangeKind::modify: {
            const auto role = corpus.roleOf(op.target);
            if (!role) throw UnknownTargetError(op.target);
            if (!op.payload) throw ValidationError("MISSING_PAYLOAD", op.target, "modify requires a payload");
            if (*role == Role::source) {
                applyToSource(out.corpus.sources.at(op.target), *op.payload);
                validateCorpus(out.corpus);
                out.record.caseCode = CaseCode::sourceChange;
                out.record.affected = nodesHolding(partitionOfItem(corpus, partitions, op.target), op.target);
                for (const auto& [id, r] : out.corpus.requirements) {
                    if (r.derivedFrom.contains(op.target)) out.changedRequirements.insert(id);
                }
                break;
            }
            const Partition& before = partitions.forRequirementKind(corpus.requirements.at(op.target).kind);
            if (before.general.contains(op.target)) {
                modifyGeneral(out, corpus, op, before);
            } else if (!nodesHolding(before, op.target).empty()) {
                modifySpecific(out, corpus, op, before);
            } else {
                throw ValidationError("TARGET_OUTSIDE_LEVEL", op.target,
                                      "'" + op.target + "' is not visible at level " +
                                          std::string(toString(level.level)));
            }
            break;
        }
    }

    const PartitionSet after = partitionAll(out.corpus, level);
    if (op.op == ChangeKind::add) {
        out.record.affected = nodesHolding(partitionOfItem(out.corpus, after, op.target), op.target);
    }
    out.record.migrations = diffPlacement(placementOf(partitions), placementOf(after), out.merged);
    for (auto& finding : checkElaboration(out.corpus, after)) {
        if (out.changedRequirements.contains(finding.subject)) out.record.findings.push_back(std::move(finding));
    }
    return out;
}

}  // namespace

std::pair<Corpus, ChangeRecord> applyChange(const Corpus& corpus, const ChangeOp& op, const PartitionSet& partitions) {
    Outcome out = applyOp(corpus, op, partitions);
    return {std::move(out.corpus), std::move(out.record)};
}

ChangeRecord classifyChange(const Corpus& corpus, const ChangeOp& op, const PartitionSet& partitions) {
    return applyOp(corpus, op, partitions).record;
}

std::pair<Corpus, ImpactReport> applyChangeSet(const Corpus& corpus, const ChangeSet& changes,
                                               const LevelSelection& level) {
    validateChangeSet(changes, corpus);
    ImpactReport report;
    report.label = changes.label;
    Corpus current = corpus;
    PartitionSet partitions = partitionAll(current, level);
    report.partitionsBefore = partitionFingerprint(partitions);
    for (const auto& op : changes.ops) {
        auto [next, record] = applyChange(current, op, partitions);
        current = std::move(next);
        report.perOp.push_back(std::move(record));
        partitions = partitionAll(current, level);
    }
    report.partitionsAfter = partitionFingerprint(partitions);
    return {std::move(current), std::move(report)};
}

std::pair<Corpus, ImpactReport> applyChangeSet(const Corpus& corpus, const ChangeSet& changes) {
    return applyChangeSet(corpus, changes, selectLevel(corpus, Level::national));
}

std::vector<ReuseHint> reuseHints(const ImpactReport& report, const Corpus& corpus) {
    std::set<ReuseHint> hints;
    for (const auto& record : report.perOp) {
        if (record.caseCode != CaseCode::specToGeneral || !record.promotingJurisdiction) continue;
        for (const auto& [owner, counterpart] : record.counterparts) {
            for (const auto& [id, component] : corpus.components) {
                if (!component.implements.contains(counterpart)) continue;
                hints.insert({id, *record.promotingJurisdiction, owner, counterpart, record.target});
            }
        }
    }
    return {hints.begin(), hints.end()};
}

}  // namespace reqlattice

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

#include "reqlattice/partition.hpp"

#include <algorithm>

#include "reqlattice/corpus_io.hpp"
#include "reqlattice/errors.hpp"
#include "reqlattice/relations.hpp"

namespace reqlattice {

namespace {

struct Signature {
    const std::string* conceptKey;
    const std::string* contentHash;
};

Partition decompose(Role role, Aspect aspect, const LevelSelection& level,
                    std::map<std::string, IdSet> members, const std::map<std::string, Signature>& signatures,
                    std::string fingerprint) {
    if (level.frontier.empty()) {
        throw ValidationError("EMPTY_FRONTIER", std::string(toString(level.level)),
                              "no jurisdiction at level '" + std::string(toString(level.level)) + "'");
    }
    Partition p;
    p.role = role;
    p.aspect = aspect;
    p.level = level;
    p.members = std::move(members);
    p.corpusFingerprint = std::move(fingerprint);

    // conceptKey -> frontier nodes holding it, and the ids/hashes seen
    struct ConceptInfo {
        IdSet nodes;
        IdSet ids;
        std::set<std::string> hashes;
    };
    std::map<std::string, ConceptInfo> concepts;
    for (const auto& node : level.frontier) {
        for (const auto& id : p.members[node]) {
            const Signature& sig = signatures.at(id);
            ConceptInfo& info = concepts[*sig.conceptKey];
            info.nodes.insert(node);
            info.ids.insert(id);
            info.hashes.insert(*sig.contentHash);
        }
    }

    for (const auto& [conceptKey, info] : concepts) {
        if (info.nodes.size() == level.frontier.size() && info.hashes.size() == 1) {
            p.general.insert(info.ids.begin(), info.ids.end());
            p.generalConcepts[conceptKey] = info.ids;
        }
    }
    for (const auto& node : level.frontier) {
        IdSet& specific = p.specific[node];
        for (const auto& id : p.members[node]) {
            if (!p.general.contains(id)) specific.insert(id);
        }
    }
    return p;
}

std::string generalPrefix(Role role, Aspect aspect) {
    const char letter = aspect == Aspect::legal ? 'L' : aspect == Aspect::cultural ? 'C' : 'F';
    return (role == Role::requirement ? std::string("R") : std::string()) + letter;
}

}  // namespace

std::string Partition::setName(const std::optional<std::string>& node) const {
    const std::string prefix = generalPrefix(role, aspect);
    return node ? prefix + "S[" + *node + "]" : prefix + "G";
}

std::vector<std::string> Partition::setsContaining(const std::string& id) const {
    std::vector<std::string> names;
    if (general.contains(id)) names.push_back(setName());
    for (const auto& [node, ids] : specific) {
        if (ids.contains(id)) names.push_back(setName(node));
    }
    return names;
}

Partition partitionSources(const Corpus& corpus, SourceKind kind, const LevelSelection& level) {
    const PairSet closure = refinementClosure(corpus.relations.refines);
    std::map<std::string, IdSet> members;
    std::map<std::string, Signature> signatures;
    for (const auto& node : level.frontier) {
        IdSet& visible = members[node];
        for (const auto& id : effectiveSources(corpus, node, closure)) {
            const SourceItem& s = corpus.sources.at(id);
            if (s.kind != kind) continue;
            visible.insert(id);
            signatures.emplace(id, Signature{&s.conceptKey, &s.contentHash});
        }
    }
    return decompose(Role::source, aspectOf(kind), level, std::move(members), signatures, corpusFingerprint(corpus));
}

Partition partitionRequirements(const Corpus& corpus, RequirementKind kind, const LevelSelection& level) {
    const PairSet closure = refinementClosure(corpus.relations.refines);
    std::map<std::string, IdSet> members;
    std::map<std::string, Signature> signatures;
    for (const auto& node : level.frontier) {
        IdSet& visible = members[node];
        for (const auto& id : effectiveRequirements(corpus, node, closure)) {
            const Requirement& r = corpus.requirements.at(id);
            if (r.kind != kind) continue;
            visible.insert(id);
            signatures.emplace(id, Signature{&r.conceptKey, &r.contentHash});
        }
    }
    return decompose(Role::requirement, aspectOf(kind), level, std::move(members), signatures,
                     corpusFingerprint(corpus));
}

Partition partitionSources(const Corpus& corpus, SourceKind kind) {
    return partitionSources(corpus, kind, selectLevel(corpus, Level::national));
}

Partition partitionRequirements(const Corpus& corpus, RequirementKind kind) {
    return partitionRequirements(corpus, kind, selectLevel(corpus, Level::national));
}

const Partition& PartitionSet::forRequirementKind(RequirementKind kind) const {
    switch (kind) {
        case RequirementKind::legalBased: return legalRequirements;
        case RequirementKind::culturalBased: return culturalRequirements;
        case RequirementKind::functional: return functionalRequirements;
    }
    return functionalRequirements;
}

const Partition& PartitionSet::forSourceKind(SourceKind kind) const {
    return kind == SourceKind::legal ? legalSources : culturalSources;
}

PartitionSet partitionAll(const Corpus& corpus, const LevelSelection& level) {
    return {partitionSources(corpus, SourceKind::legal, level),
            partitionSources(corpus, SourceKind::cultural, level),
            partitionRequirements(corpus, RequirementKind::legalBased, level),
            partitionRequirements(corpus, RequirementKind::culturalBased, level),
            partitionRequirements(corpus, RequirementKind::functional, level)};
}

namespace {

void expectShape(const Partition& p, Role role, Aspect aspect, const std::string& fingerprint,
                 const LevelSelection& level) {
    if (p.role != role || p.aspect != aspect)
        throw PartitionMismatchError("partition " + p.setName() + " passed where " +
                                     generalPrefix(role, aspect) + "G was expected");
    if (p.corpusFingerprint != fingerprint)
        throw PartitionMismatchError("partition " + p.setName() + " was computed from a different corpus");
    if (!(p.level == level))
        throw PartitionMismatchError("partition " + p.setName() + " uses a different level selection");
}

void elaborationFindings(const Corpus& corpus, const Partition& sources, const Partition& requirements,
                         std::vector<Finding>& out) {
    for (const auto& id : requirements.general) {
        for (const auto& src : corpus.requirements.at(id).derivedFrom) {
            if (sources.general.contains(src)) continue;
            out.push_back({"GENERAL_REQ_SPECIFIC_SOURCE", Severity::error, id, corpus.requirements.at(id).jurisdiction,
                           "general requirement '" + id + "' is derived from '" + src + "', which is not in " +
                               sources.setName()});
        }
    }
    for (const auto& [node, ids] : requirements.specific) {
        const IdSet& visible = sources.members.at(node);
        const IdSet& specificSources = sources.specific.at(node);
        for (const auto& id : ids) {
            const IdSet& derived = corpus.requirements.at(id).derivedFrom;
            for (const auto& src : derived) {
                if (!visible.contains(src)) {
                    out.push_back({"SPECIFIC_REQ_FOREIGN_SOURCE", Severity::error, id, node,
                                   "requirement '" + id + "' in " + requirements.setName(node) + " is derived from '" +
                                       src + "', which is not a source of '" + node + "'"});
                }
            }
            const bool anySpecific = std::any_of(derived.begin(), derived.end(),
                                                 [&](const std::string& src) { return specificSources.contains(src); });
            if (!anySpecific) {
                out.push_back({"SPECIFIC_REQ_NO_SPECIFIC_SOURCE", Severity::warning, id, node,
                               "requirement '" + id + "' in " + requirements.setName(node) +
                                   " is not derived from any item of " + sources.setName(node)});
            }
        }
    }
}

}  // namespace

std::vector<Finding> checkElaboration(const Corpus& corpus, const PartitionSet& partitions) {
    const std::string fingerprint = corpusFingerprint(corpus);
    const LevelSelection& level = partitions.legalSources.level;
    expectShape(partitions.legalSources, Role::source, Aspect::legal, fingerprint, level);
    expectShape(partitions.culturalSources, Role::source, Aspect::cultural, fingerprint, level);
    expectShape(partitions.legalRequirements, Role::requirement, Aspect::legal, fingerprint, level);
    expectShape(partitions.culturalRequirements, Role::requirement, Aspect::cultural, fingerprint, level);
    expectShape(partitions.functionalRequirements, Role::requirement, Aspect::functional, fingerprint, level);

    std::vector<Finding> findings;
    elaborationFindings(corpus, partitions.legalSources, partitions.legalRequirements, findings);
    elaborationFindings(corpus, partitions.culturalSources, partitions.culturalRequirements, findings);
    std::sort(findings.begin(), findings.end());
    return findings;
}

std::vector<Finding> checkSpecificContradictionCondition(const Corpus& corpus, const Partition& partition) {
    const PairSet derived = deriveContradictions(corpus.relations);
    std::vector<Finding> warnings;
    for (const auto& [node, ids] : partition.specific) {
        for (const auto& x : ids) {
            bool found = false;
            for (const auto& [other, otherIds] : partition.specific) {
                if (other == node) continue;
                found = std::any_of(otherIds.begin(), otherIds.end(), [&](const std::string& y) {
                    return x != y && derived.contains(unorderedPair(x, y));
                });
                if (found) break;
            }
            if (!found) {
                warnings.push_back({"NO_CROSS_CONTRADICTION", Severity::warning, x, node,
                                    "'" + x + "' in " + partition.setName(node) +
                                        " contradicts no specific item of another jurisdiction"});
            }
        }
    }
    std::sort(warnings.begin(), warnings.end());
    return warnings;
}

std::vector<Finding> checkComponentScopes(const Corpus& corpus, const PartitionSet& partitions) {
    const Partition* reqParts[] = {&partitions.legalRequirements, &partitions.culturalRequirements,
                                   &partitions.functionalRequirements};
    std::vector<Finding> warnings;
    for (const auto& [id, component] : corpus.components) {
        for (const auto& req : component.implements) {
            const Partition& part = *reqParts[static_cast<int>(aspectOf(corpus.requirements.at(req).kind))];
            if (component.scope.isGeneral()) {
                if (!part.general.contains(req)) {
                    warnings.push_back({"COMPONENT_SCOPE", Severity::warning, id, "",
                                        "general component '" + id + "' implements '" + req + "', which is not in " +
                                            part.setName()});
                }
                continue;
            }
            const std::string& node = *component.scope.jurisdiction;
            auto it = part.specific.find(node);
            if (it == part.specific.end() || !it->second.contains(req)) {
                warnings.push_back({"COMPONENT_SCOPE", Severity::warning, id, node,
                                    "component '" + id + "' scoped to '" + node + "' implements '" + req +
                                        "', which is not in " + part.setName(node)});
            }
        }
    }
    std::sort(warnings.begin(), warnings.end());
    return warnings;
}

std::string_view toString(ScenarioOption option) {
    switch (option) {
        case ScenarioOption::disjoint: return "Disjoint";
        case ScenarioOption::identicalGeneral: return "IdenticalGeneral";
        case ScenarioOption::partialOverlap: return "PartialOverlap";
    }
    return "?";
}

ScenarioClass classifyScenario(const Partition& sourcePartition) {
    const bool anySpecific = std::any_of(sourcePartition.specific.begin(), sourcePartition.specific.end(),
                                         [](const auto& entry) { return !entry.second.empty(); });
    const std::string aspect(toString(sourcePartition.aspect));
    if (sourcePartition.general.empty() && !anySpecific) throw EmptyAspectError(aspect);

    ScenarioClass result{sourcePartition.aspect, ScenarioOption::partialOverlap, {}};
    if (sourcePartition.general.empty()) {
        result.option = ScenarioOption::disjoint;
        result.note = "no " + aspect +
                      " item is shared by all jurisdictions; this is rare in practice, so every specific "
                      "requirement set deserves a careful review";
    } else if (!anySpecific) {
        result.option = ScenarioOption::identicalGeneral;
        result.note = "every " + aspect +
                      " item is shared by all jurisdictions; one system built on the general requirements "
                      "serves all of them, provided those requirements are static";
    } else {
        result.note = "shared and jurisdiction-specific " + aspect +
                      " items coexist; components for the general requirements can be kept apart from the "
                      "per-jurisdiction ones";
    }
    return result;
}

}  // namespace reqlattice

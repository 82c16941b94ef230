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

#include "reqlattice/optimizer.hpp"

#include "reqlattice/errors.hpp"

namespace reqlattice {

RedundancyResult removeRedundant(const IdSet& ids, const RelationSet& relations) {
    const PairSet closure = refinementClosure(relations, ids);
    RedundancyResult result;
    for (const auto& [stronger, weaker] : closure) {
        // closure is sorted by the stronger id, so the first hit is the smallest witness
        result.removed.try_emplace(weaker, stronger);
    }
    for (const auto& id : ids) {
        if (!result.removed.contains(id)) result.strongest.insert(id);
    }
    return result;
}

IdSet minimalBaseline(const IdSet& ids, const RelationSet& relations) {
    const PairSet closure = refinementClosure(relations, ids);
    IdSet refinesSomething;
    for (const auto& pair : closure) refinesSomething.insert(pair.first);
    IdSet baseline;
    for (const auto& id : ids) {
        if (!refinesSomething.contains(id)) baseline.insert(id);
    }
    return baseline;
}

namespace {

void requireRequirements(const IdSet& ids, const Corpus& corpus) {
    for (const auto& id : ids) {
        if (!corpus.requirements.contains(id)) throw UnknownIdError(id);
    }
}

}  // namespace

RedundancyResult removeRedundant(const IdSet& ids, const Corpus& corpus) {
    requireRequirements(ids, corpus);
    return removeRedundant(ids, corpus.relations);
}

IdSet minimalBaseline(const IdSet& ids, const Corpus& corpus) {
    requireRequirements(ids, corpus);
    return minimalBaseline(ids, corpus.relations);
}

OptimizedView optimizeSet(const IdSet& ids, const Corpus& corpus, std::string scope) {
    auto redundancy = removeRedundant(ids, corpus);
    return {std::move(scope), ids, std::move(redundancy.strongest), minimalBaseline(ids, corpus),
            std::move(redundancy.removed)};
}

const KindView& GlobalView::forKind(RequirementKind kind) const {
    for (const auto& view : kinds) {
        if (view.kind == kind) return view;
    }
    throw Error("MISSING_KIND", std::string(toString(kind)), "global view lacks a kind");
}

IdSet GlobalView::conflictSet() const {
    IdSet ids;
    for (const auto& c : conflicts) {
        ids.insert(c.pair.first);
        ids.insert(c.pair.second);
    }
    return ids;
}

GlobalView globalView(const Corpus& corpus, const LevelSelection& level) {
    const PairSet closure = refinementClosure(corpus.relations.refines);
    std::map<std::string, IdSet> visible;
    for (const auto& node : level.frontier) visible[node] = effectiveRequirements(corpus, node, closure);

    GlobalView view;
    view.level = level;
    IdSet everything;
    for (auto kind : {RequirementKind::legalBased, RequirementKind::culturalBased, RequirementKind::functional}) {
        const std::string prefix = kind == RequirementKind::legalBased      ? "RL"
                                   : kind == RequirementKind::culturalBased ? "RC"
                                                                            : "RF";
        KindView kindView;
        kindView.kind = kind;
        IdSet unionOfKind;
        for (const auto& [node, ids] : visible) {
            IdSet ofKind;
            for (const auto& id : ids) {
                if (corpus.requirements.at(id).kind == kind) ofKind.insert(id);
            }
            unionOfKind.insert(ofKind.begin(), ofKind.end());
            kindView.perJurisdiction.emplace(node, optimizeSet(ofKind, corpus, prefix + "[" + node + "]"));
        }
        kindView.global = optimizeSet(unionOfKind, corpus, prefix);
        everything.insert(unionOfKind.begin(), unionOfKind.end());
        view.kinds.push_back(std::move(kindView));
    }
    view.conflicts = findConflicts(corpus, everything);
    return view;
}

GlobalView globalView(const Corpus& corpus) {
    return globalView(corpus, selectLevel(corpus, Level::national));
}

}  // namespace reqlattice

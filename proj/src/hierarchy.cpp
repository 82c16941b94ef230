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

#include "reqlattice/hierarchy.hpp"

#include <algorithm>
#include <map>

#include "reqlattice/errors.hpp"
#include "reqlattice/relations.hpp"

namespace reqlattice {

LevelSelection selectLevel(const Corpus& corpus, Level level) {
    LevelSelection selection{level, {}};
    for (const auto& [id, j] : corpus.jurisdictions) {
        if (j.level == level) selection.frontier.push_back(id);
    }
    return selection;
}

namespace {

// Distance from `node` along the parent chain: 0 for the node itself.
std::map<std::string, int> chainDistances(const Corpus& corpus, const std::string& node) {
    if (!corpus.jurisdictions.contains(node)) throw UnknownIdError(node);
    std::map<std::string, int> distance{{node, 0}};
    int d = 0;
    for (const auto& ancestor : corpus.ancestors(node)) distance.emplace(ancestor, ++d);
    return distance;
}

template <typename Items>
IdSet shadowedUnion(const Items& items, const std::map<std::string, int>& distance, const PairSet& closure) {
    std::map<std::string, int> collected;
    for (const auto& [id, item] : items) {
        if (auto it = distance.find(item.jurisdiction); it != distance.end()) collected.emplace(id, it->second);
    }
    IdSet result;
    for (const auto& [id, d] : collected) {
        const bool shadowed = std::any_of(collected.begin(), collected.end(), [&](const auto& other) {
            return other.second < d && closure.contains({other.first, id});
        });
        if (!shadowed) result.insert(id);
    }
    return result;
}

}  // namespace

IdSet effectiveRequirements(const Corpus& corpus, const std::string& node, const PairSet& closure) {
    return shadowedUnion(corpus.requirements, chainDistances(corpus, node), closure);
}

IdSet effectiveSources(const Corpus& corpus, const std::string& node, const PairSet& closure) {
    return shadowedUnion(corpus.sources, chainDistances(corpus, node), closure);
}

IdSet effectiveRequirements(const Corpus& corpus, const std::string& node) {
    return effectiveRequirements(corpus, node, refinementClosure(corpus.relations.refines));
}

IdSet effectiveSources(const Corpus& corpus, const std::string& node) {
    return effectiveSources(corpus, node, refinementClosure(corpus.relations.refines));
}

std::vector<Finding> validateHierarchy(const Corpus& corpus) {
    std::vector<Finding> findings;
    auto add = [&](std::string code, const std::string& id, std::string message) {
        findings.push_back({std::move(code), Severity::error, id, id, std::move(message)});
    };

    for (const auto& [id, node] : corpus.jurisdictions) {
        // Cycle check walks raw parent links, since ancestors() stops at repeats.
        IdSet seen{id};
        for (auto parent = node.parent; parent;) {
            if (!seen.insert(*parent).second) {
                if (*parent == id) add("PARENT_CYCLE", id, "jurisdiction '" + id + "' is its own ancestor");
                break;
            }
            const Jurisdiction* next = corpus.findJurisdiction(*parent);
            if (next == nullptr) break;
            parent = next->parent;
        }

        const Jurisdiction* parent = node.parent ? corpus.findJurisdiction(*node.parent) : nullptr;
        if (node.parent && parent == nullptr) {
            add("DANGLING_PARENT", id, "parent '" + *node.parent + "' of '" + id + "' does not exist");
            continue;
        }
        switch (node.level) {
            case Level::national:
                if (parent != nullptr) add("LEVEL_ORDER", id, "national jurisdiction '" + id + "' must not have a parent");
                break;
            case Level::state:
                if (parent == nullptr) {
                    add("ORPHAN_STATE", id, "state '" + id + "' has no national parent");
                } else if (parent->level != Level::national) {
                    add("LEVEL_ORDER", id, "state '" + id + "' must sit under a national jurisdiction, not '" +
                                               parent->id + "' (" + std::string(toString(parent->level)) + ")");
                }
                break;
            case Level::organisational:
                if (parent == nullptr) {
                    add("ORG_WITHOUT_ANCESTOR", id, "organisation '" + id + "' has no state or national ancestor");
                } else if (parent->level == Level::organisational) {
                    add("LEVEL_ORDER", id, "organisation '" + id + "' must sit under a state or national jurisdiction, not '" +
                                               parent->id + "' (organisational)");
                }
                break;
        }
    }
    return findings;
}

}  // namespace reqlattice

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

#include "reqlattice/relations.hpp"

#include <algorithm>
#include <map>

#include "reqlattice/errors.hpp"

namespace reqlattice {

namespace {

using Adjacency = std::map<std::string, std::vector<std::string>>;

Adjacency buildAdjacency(const PairSet& refines) {
    Adjacency adj;
    for (const auto& [stronger, weaker] : refines) {
        adj[stronger].push_back(weaker);
        adj.try_emplace(weaker);
    }
    return adj;  // PairSet order keeps each successor list sorted
}

// Iterative three-colour DFS; throws on the first back edge found in
// lexicographic traversal order, so the witness is deterministic.
void checkAcyclic(const Adjacency& adj) {
    enum class Colour { white, grey, black };
    std::map<std::string, Colour> colour;
    for (const auto& [node, _] : adj) colour[node] = Colour::white;

    for (const auto& [root, _] : adj) {
        if (colour[root] != Colour::white) continue;
        std::vector<std::pair<std::string, std::size_t>> stack{{root, 0}};
        colour[root] = Colour::grey;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            const auto& succ = adj.at(node);
            if (next == succ.size()) {
                colour[node] = Colour::black;
                stack.pop_back();
                continue;
            }
            const std::string& child = succ[next++];
            if (colour[child] == Colour::grey) {
                std::vector<std::string> cycle;
                auto it = std::find_if(stack.begin(), stack.end(),
                                       [&](const auto& frame) { return frame.first == child; });
                for (; it != stack.end(); ++it) cycle.push_back(it->first);
                throw CycleError(std::move(cycle));
            }
            if (colour[child] == Colour::white) {
                colour[child] = Colour::grey;
                stack.emplace_back(child, 0);
            }
        }
    }
}

}  // namespace

PairSet refinementClosure(const PairSet& refines) {
    const Adjacency adj = buildAdjacency(refines);
    checkAcyclic(adj);

    PairSet closure;
    for (const auto& [origin, _] : adj) {
        IdSet seen;
        std::vector<std::string> work(adj.at(origin).begin(), adj.at(origin).end());
        while (!work.empty()) {
            std::string node = std::move(work.back());
            work.pop_back();
            if (!seen.insert(node).second) continue;
            for (const auto& succ : adj.at(node)) work.push_back(succ);
        }
        for (const auto& target : seen) closure.emplace(origin, target);
    }
    return closure;
}

PairSet refinementClosure(const RelationSet& relations, const IdSet& ids) {
    PairSet restricted;
    for (const auto& pair : refinementClosure(relations.refines)) {
        if (ids.contains(pair.first) && ids.contains(pair.second)) restricted.insert(pair);
    }
    return restricted;
}

namespace {

// weaker id -> every element that refines it, including itself.
std::map<std::string, IdSet> refinerSets(const PairSet& closure) {
    std::map<std::string, IdSet> refiners;
    for (const auto& [stronger, weaker] : closure) refiners[weaker].insert(stronger);
    return refiners;
}

IdSet withRefiners(const std::map<std::string, IdSet>& refiners, const std::string& id) {
    IdSet out{id};
    if (auto it = refiners.find(id); it != refiners.end()) out.insert(it->second.begin(), it->second.end());
    return out;
}

}  // namespace

PairSet deriveContradictions(const RelationSet& relations) {
    const auto refiners = refinerSets(refinementClosure(relations.refines));
    PairSet derived;
    for (const auto& [x, y] : relations.contradicts) {
        const IdSet left = withRefiners(refiners, x);
        const IdSet right = withRefiners(refiners, y);
        for (const auto& a : left) {
            for (const auto& b : right) {
                if (a != b) derived.insert(unorderedPair(a, b));
            }
        }
    }
    return derived;
}

IdSet inconsistentRefiners(const RelationSet& relations) {
    const auto refiners = refinerSets(refinementClosure(relations.refines));
    IdSet bad;
    for (const auto& [x, y] : relations.contradicts) {
        const IdSet left = withRefiners(refiners, x);
        for (const auto& b : withRefiners(refiners, y)) {
            if (left.contains(b)) bad.insert(b);
        }
    }
    return bad;
}

bool semanticallyIdentical(const SourceItem& a, const SourceItem& b) {
    if (a.kind != b.kind) throw RoleMismatchError(a.id, b.id);
    return a.conceptKey == b.conceptKey && a.contentHash == b.contentHash;
}

bool semanticallyIdentical(const Requirement& a, const Requirement& b) {
    if (a.kind != b.kind) throw RoleMismatchError(a.id, b.id);
    return a.conceptKey == b.conceptKey && a.contentHash == b.contentHash;
}

bool semanticallyIdentical(const Corpus& corpus, const std::string& a, const std::string& b) {
    const auto roleA = corpus.roleOf(a);
    if (!roleA) throw UnknownIdError(a);
    const auto roleB = corpus.roleOf(b);
    if (!roleB) throw UnknownIdError(b);
    if (*roleA != *roleB) throw RoleMismatchError(a, b);
    if (*roleA == Role::source) return semanticallyIdentical(corpus.sources.at(a), corpus.sources.at(b));
    return semanticallyIdentical(corpus.requirements.at(a), corpus.requirements.at(b));
}

std::string_view toString(ConflictOrigin origin) {
    return origin == ConflictOrigin::explicitPair ? "explicit" : "derived";
}

std::vector<Conflict> findConflicts(const Corpus& corpus, const IdSet& scope) {
    for (const auto& id : scope) {
        if (!corpus.requirements.contains(id)) throw UnknownIdError(id);
    }
    std::vector<Conflict> conflicts;
    for (const auto& pair : deriveContradictions(corpus.relations)) {
        if (!scope.contains(pair.first) || !scope.contains(pair.second)) continue;
        const auto origin = corpus.relations.contradicts.contains(pair) ? ConflictOrigin::explicitPair
                                                                         : ConflictOrigin::derived;
        conflicts.push_back({pair, origin});
    }
    return conflicts;
}

}  // namespace reqlattice

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

#include "reqlattice/validation.hpp"

#include <algorithm>
#include <tuple>

#include "reqlattice/errors.hpp"
#include "reqlattice/hierarchy.hpp"
#include "reqlattice/relations.hpp"

namespace reqlattice {

namespace {

[[noreturn]] void fail(const std::string& code, const std::string& id, const std::string& message) {
    throw ValidationError(code, id, id.empty() ? message : "'" + id + "': " + message);
}

template <typename Map>
void checkKeys(const Map& items, const char* what) {
    for (const auto& [key, item] : items) {
        if (item.id.empty()) fail("EMPTY_FIELD", key, std::string(what) + " id is empty");
        if (key != item.id) fail("ID_MISMATCH", key, std::string(what) + " stored under key of a different id");
    }
}

void checkJurisdictions(const Corpus& corpus) {
    checkKeys(corpus.jurisdictions, "jurisdiction");
    for (const auto& finding : validateHierarchy(corpus)) {
        if (finding.code == "DANGLING_PARENT") fail("DANGLING_REF", finding.subject, finding.message);
        if (finding.code == "PARENT_CYCLE") fail("PARENT_CYCLE", finding.subject, finding.message);
        fail("LEVEL_VIOLATION", finding.subject, finding.code + ": " + finding.message);
    }
}

bool sameOrAncestor(const Corpus& corpus, const std::string& owner, const std::string& candidate) {
    if (owner == candidate) return true;
    const auto chain = corpus.ancestors(owner);
    return std::find(chain.begin(), chain.end(), candidate) != chain.end();
}

void checkSources(const Corpus& corpus) {
    checkKeys(corpus.sources, "source");
    std::set<std::tuple<std::string, std::string, SourceKind>> seen;
    for (const auto& [id, s] : corpus.sources) {
        if (corpus.requirements.contains(id)) fail("DUPLICATE_ID", id, "id used by both a source and a requirement");
        if (!corpus.jurisdictions.contains(s.jurisdiction))
            fail("DANGLING_REF", id, "unknown jurisdiction '" + s.jurisdiction + "'");
        if (s.conceptKey.empty()) fail("EMPTY_FIELD", id, "conceptKey is empty");
        if (s.contentHash.empty()) fail("EMPTY_FIELD", id, "contentHash is empty");
        if (!seen.emplace(s.jurisdiction, s.conceptKey, s.kind).second) {
            fail("DUPLICATE_CONCEPT", id,
                 "second " + std::string(toString(s.kind)) + " source for concept '" + s.conceptKey +
                     "' in jurisdiction '" + s.jurisdiction + "'");
        }
    }
}

void checkRequirements(const Corpus& corpus) {
    checkKeys(corpus.requirements, "requirement");
    for (const auto& [id, r] : corpus.requirements) {
        if (!corpus.jurisdictions.contains(r.jurisdiction))
            fail("DANGLING_REF", id, "unknown jurisdiction '" + r.jurisdiction + "'");
        if (r.conceptKey.empty()) fail("EMPTY_FIELD", id, "conceptKey is empty");
        if (r.contentHash.empty()) fail("EMPTY_FIELD", id, "contentHash is empty");
        if (r.kind == RequirementKind::functional && !r.derivedFrom.empty())
            fail("FUNCTIONAL_DERIVED", id, "functional requirements cannot be derived from sources");
        for (const auto& src : r.derivedFrom) {
            const SourceItem* s = corpus.findSource(src);
            if (s == nullptr) fail("DANGLING_REF", id, "derivedFrom references unknown source '" + src + "'");
            if (aspectOf(s->kind) != aspectOf(r.kind)) {
                fail("KIND_MISMATCH", id,
                     std::string(toString(r.kind)) + " requirement derived from " +
                         std::string(toString(s->kind)) + " source '" + src + "'");
            }
            if (!sameOrAncestor(corpus, r.jurisdiction, s->jurisdiction)) {
                fail("DERIVATION_SCOPE", id,
                     "source '" + src + "' belongs to '" + s->jurisdiction +
                         "', which is neither the requirement's jurisdiction nor an ancestor");
            }
        }
    }
}

void checkPair(const Corpus& corpus, const IdPair& pair, const char* relation) {
    const auto roleA = corpus.roleOf(pair.first);
    if (!roleA) fail("DANGLING_REF", pair.first, std::string(relation) + " references unknown id");
    const auto roleB = corpus.roleOf(pair.second);
    if (!roleB) fail("DANGLING_REF", pair.second, std::string(relation) + " references unknown id");
    if (*roleA != *roleB)
        fail("ROLE_MISMATCH", pair.first, std::string(relation) + " pair with '" + pair.second + "' crosses roles");
    if (corpus.aspectOfItem(pair.first) != corpus.aspectOfItem(pair.second))
        fail("KIND_MISMATCH", pair.first, std::string(relation) + " pair with '" + pair.second + "' crosses kinds");
}

void checkRelations(const Corpus& corpus) {
    for (const auto& pair : corpus.relations.refines) checkPair(corpus, pair, "refines");
    for (const auto& pair : corpus.relations.contradicts) {
        checkPair(corpus, pair, "contradicts");
        if (pair.first == pair.second) fail("SELF_CONTRADICTION", pair.first, "item contradicts itself");
    }
    try {
        (void)refinementClosure(corpus.relations.refines);
    } catch (const CycleError& e) {
        fail("REFINEMENT_CYCLE", e.subject(), e.what());
    }
    if (const auto bad = inconsistentRefiners(corpus.relations); !bad.empty()) {
        fail("CONTRADICTORY_REFINEMENT", *bad.begin(), "refines both sides of a contradiction");
    }
}

void checkComponents(const Corpus& corpus) {
    checkKeys(corpus.components, "component");
    for (const auto& [id, c] : corpus.components) {
        for (const auto& req : c.implements) {
            if (!corpus.requirements.contains(req)) fail("DANGLING_REF", id, "implements unknown requirement '" + req + "'");
        }
        if (c.scope.jurisdiction && !corpus.jurisdictions.contains(*c.scope.jurisdiction))
            fail("DANGLING_REF", id, "scope names unknown jurisdiction '" + *c.scope.jurisdiction + "'");
    }
}

}  // namespace

void validateCorpus(const Corpus& corpus) {
    checkJurisdictions(corpus);
    checkSources(corpus);
    checkRequirements(corpus);
    checkRelations(corpus);
    checkComponents(corpus);
}

}  // namespace reqlattice

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

#include "reqlattice/model.hpp"

#include <algorithm>

namespace reqlattice {

std::string_view toString(Level level) {
    switch (level) {
        case Level::national: return "national";
        case Level::state: return "state";
        case Level::organisational: return "organisational";
    }
    return "?";
}

std::string_view toString(SourceKind kind) {
    return kind == SourceKind::legal ? "legal" : "cultural";
}

std::string_view toString(RequirementKind kind) {
    switch (kind) {
        case RequirementKind::legalBased: return "legalBased";
        case RequirementKind::culturalBased: return "culturalBased";
        case RequirementKind::functional: return "functional";
    }
    return "?";
}

std::string_view toString(Role role) {
    return role == Role::source ? "source" : "requirement";
}

std::string_view toString(Aspect aspect) {
    switch (aspect) {
        case Aspect::legal: return "legal";
        case Aspect::cultural: return "cultural";
        case Aspect::functional: return "functional";
    }
    return "?";
}

std::string_view toString(Severity severity) {
    return severity == Severity::warning ? "warning" : "error";
}

std::optional<Level> parseLevel(std::string_view text) {
    if (text == "national") return Level::national;
    if (text == "state") return Level::state;
    if (text == "organisational" || text == "org") return Level::organisational;
    return std::nullopt;
}

std::optional<SourceKind> parseSourceKind(std::string_view text) {
    if (text == "legal") return SourceKind::legal;
    if (text == "cultural") return SourceKind::cultural;
    return std::nullopt;
}

std::optional<RequirementKind> parseRequirementKind(std::string_view text) {
    if (text == "legalBased") return RequirementKind::legalBased;
    if (text == "culturalBased") return RequirementKind::culturalBased;
    if (text == "functional") return RequirementKind::functional;
    return std::nullopt;
}

Aspect aspectOf(SourceKind kind) {
    return kind == SourceKind::legal ? Aspect::legal : Aspect::cultural;
}

Aspect aspectOf(RequirementKind kind) {
    switch (kind) {
        case RequirementKind::legalBased: return Aspect::legal;
        case RequirementKind::culturalBased: return Aspect::cultural;
        case RequirementKind::functional: return Aspect::functional;
    }
    return Aspect::functional;
}

int levelRank(Level level) {
    switch (level) {
        case Level::national: return 0;
        case Level::state: return 1;
        case Level::organisational: return 2;
    }
    return 0;
}

IdPair unorderedPair(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

void RelationSet::addRefinement(std::string stronger, std::string weaker) {
    refines.emplace(std::move(stronger), std::move(weaker));
}

void RelationSet::addContradiction(std::string a, std::string b) {
    contradicts.insert(unorderedPair(std::move(a), std::move(b)));
}

const Jurisdiction* Corpus::findJurisdiction(const std::string& id) const {
    auto it = jurisdictions.find(id);
    return it == jurisdictions.end() ? nullptr : &it->second;
}

const SourceItem* Corpus::findSource(const std::string& id) const {
    auto it = sources.find(id);
    return it == sources.end() ? nullptr : &it->second;
}

const Requirement* Corpus::findRequirement(const std::string& id) const {
    auto it = requirements.find(id);
    return it == requirements.end() ? nullptr : &it->second;
}

std::optional<Role> Corpus::roleOf(const std::string& id) const {
    if (sources.contains(id)) return Role::source;
    if (requirements.contains(id)) return Role::requirement;
    return std::nullopt;
}

std::optional<Aspect> Corpus::aspectOfItem(const std::string& id) const {
    if (const auto* s = findSource(id)) return aspectOf(s->kind);
    if (const auto* r = findRequirement(id)) return aspectOf(r->kind);
    return std::nullopt;
}

std::vector<std::string> Corpus::ancestors(const std::string& jurisdictionId) const {
    std::vector<std::string> chain;
    const Jurisdiction* node = findJurisdiction(jurisdictionId);
    while (node != nullptr && node->parent) {
        const std::string& parent = *node->parent;
        if (parent == jurisdictionId ||
            std::find(chain.begin(), chain.end(), parent) != chain.end()) {
            break;
        }
        const Jurisdiction* next = findJurisdiction(parent);
        if (next == nullptr) break;
        chain.push_back(parent);
        node = next;
    }
    return chain;
}

}  // namespace reqlattice

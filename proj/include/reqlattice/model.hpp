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

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reqlattice {

enum class Level { national, state, organisational };
enum class SourceKind { legal, cultural };
enum class RequirementKind { legalBased, culturalBased, functional };

/// Which side of the model an id lives on. Relations never cross roles.
enum class Role { source, requirement };

/// The three requirement families; sources only use legal and cultural.
enum class Aspect { legal, cultural, functional };

std::string_view toString(Level level);
std::string_view toString(SourceKind kind);
std::string_view toString(RequirementKind kind);
std::string_view toString(Role role);
std::string_view toString(Aspect aspect);

std::optional<Level> parseLevel(std::string_view text);
std::optional<SourceKind> parseSourceKind(std::string_view text);
std::optional<RequirementKind> parseRequirementKind(std::string_view text);

Aspect aspectOf(SourceKind kind);
Aspect aspectOf(RequirementKind kind);

/// Depth in the jurisdiction tree implied by the level alone.
int levelRank(Level level);

struct Jurisdiction {
    std::string id;
    std::string name;
    Level level = Level::national;
    std::optional<std::string> parent;

    friend bool operator==(const Jurisdiction&, const Jurisdiction&) = default;
};

struct SourceItem {
    std::string id;
    SourceKind kind = SourceKind::legal;
    std::string jurisdiction;
    std::string conceptKey;
    std::string contentHash;
    std::string text;
    bool isStatic = false;

    friend bool operator==(const SourceItem&, const SourceItem&) = default;
};

struct Requirement {
    std::string id;
    RequirementKind kind = RequirementKind::functional;
    std::string jurisdiction;
    std::string conceptKey;
    std::string contentHash;
    std::set<std::string> derivedFrom;
    std::string text;

    friend bool operator==(const Requirement&, const Requirement&) = default;
};

using IdPair = std::pair<std::string, std::string>;
using PairSet = std::set<IdPair>;
using IdSet = std::set<std::string>;

/// Unordered pairs are stored with first < second.
IdPair unorderedPair(std::string a, std::string b);

struct RelationSet {
    /// (a, b): a refines b, i.e. a is the stronger statement.
    PairSet refines;
    /// Unordered, canonicalized through unorderedPair().
    PairSet contradicts;

    void addRefinement(std::string stronger, std::string weaker);
    void addContradiction(std::string a, std::string b);

    friend bool operator==(const RelationSet&, const RelationSet&) = default;
};

/// Either general or bound to one jurisdiction.
struct ComponentScope {
    std::optional<std::string> jurisdiction;

    bool isGeneral() const { return !jurisdiction.has_value(); }
    static ComponentScope general() { return {}; }
    static ComponentScope specific(std::string jurisdictionId) { return {std::move(jurisdictionId)}; }

    friend bool operator==(const ComponentScope&, const ComponentScope&) = default;
};

struct Component {
    std::string id;
    IdSet implements;
    ComponentScope scope;

    friend bool operator==(const Component&, const Component&) = default;
};

/// The whole modeled universe. Maps are keyed by id, which keeps every
/// traversal in lexicographic order.
struct Corpus {
    std::map<std::string, Jurisdiction> jurisdictions;
    std::map<std::string, SourceItem> sources;
    std::map<std::string, Requirement> requirements;
    RelationSet relations;
    std::map<std::string, Component> components;

    const Jurisdiction* findJurisdiction(const std::string& id) const;
    const SourceItem* findSource(const std::string& id) const;
    const Requirement* findRequirement(const std::string& id) const;

    /// Role of a source or requirement id; nullopt when unknown.
    std::optional<Role> roleOf(const std::string& id) const;
    /// Aspect of a source or requirement id; nullopt when unknown.
    std::optional<Aspect> aspectOfItem(const std::string& id) const;

    /// Parent chain of a jurisdiction, nearest first, excluding the node.
    /// Stops at a missing parent or a repeated node.
    std::vector<std::string> ancestors(const std::string& jurisdictionId) const;

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class Severity { warning, error };
std::string_view toString(Severity severity);

/// A non-fatal observation produced by the checkers.
struct Finding {
    std::string code;
    Severity severity = Severity::warning;
    std::string subject;
    std::string jurisdiction;
    std::string message;

    friend auto operator<=>(const Finding&, const Finding&) = default;
};

}  // namespace reqlattice

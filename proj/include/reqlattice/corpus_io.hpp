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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqlattice/model.hpp"

namespace reqlattice {

inline constexpr int kFormatVersion = 1;

// ---------------------------------------------------------------------------
// Corpus files (.reqcorpus.json)

/// Parses and fully validates a corpus document. Items without an explicit
/// contentHash receive contentHashOf(text).
/// Throws ParseError (with line/column) or ValidationError.
Corpus parseCorpus(std::string_view text, const std::string& sourceName = "<memory>");

/// Throws IoError when the file cannot be read, otherwise as parseCorpus().
Corpus loadCorpus(const std::filesystem::path& path);

/// Canonical form: keys sorted, arrays sorted by id, pairs sorted,
/// two-space indentation, trailing newline.
std::string serializeCorpus(const Corpus& corpus);

void saveCorpus(const Corpus& corpus, const std::filesystem::path& path);

/// SHA-256 of the canonical serialization.
std::string corpusFingerprint(const Corpus& corpus);

// ---------------------------------------------------------------------------
// Change sets (.reqchange.json)

enum class ChangeKind { add, remove, modify };
std::string_view toString(ChangeKind kind);

/// New content for an add or modify. Only the fields present are applied.
/// `kind` holds a source kind ("legal", "cultural") or a requirement kind
/// ("legalBased", "culturalBased", "functional"); it decides the role of an
/// added item and may not appear on a modify.
struct ItemPayload {
    std::optional<std::string> kind;
    std::optional<std::string> jurisdiction;
    std::optional<std::string> conceptKey;
    std::optional<std::string> contentHash;
    std::optional<std::string> text;
    std::optional<IdSet> derivedFrom;
    std::optional<bool> isStatic;

    friend bool operator==(const ItemPayload&, const ItemPayload&) = default;
};

struct ChangeOp {
    ChangeKind op = ChangeKind::modify;
    std::string target;
    std::optional<ItemPayload> payload;
    std::optional<IdSet> adoptedBy;

    friend bool operator==(const ChangeOp&, const ChangeOp&) = default;
};

struct ChangeSet {
    std::string label;
    std::vector<ChangeOp> ops;

    friend bool operator==(const ChangeSet&, const ChangeSet&) = default;
};

/// Parses a change set and checks its internal consistency
/// (DUPLICATE_TARGET, MISSING_PAYLOAD, IMMUTABLE_FIELD, EMPTY_ADOPTED_BY).
ChangeSet parseChangeSet(std::string_view text, const std::string& sourceName = "<memory>");
ChangeSet loadChangeSet(const std::filesystem::path& path);

/// Checks a change set against the corpus it will be applied to:
/// UNKNOWN_TARGET, TARGET_EXISTS, UNKNOWN_JURISDICTION.
void validateChangeSet(const ChangeSet& changes, const Corpus& corpus);

/// loadChangeSet() followed by validateChangeSet().
ChangeSet loadChangeSet(const std::filesystem::path& path, const Corpus& corpus);

std::string serializeChangeSet(const ChangeSet& changes);

// ---------------------------------------------------------------------------

/// Whole-file read; throws IoError.
std::string readFile(const std::filesystem::path& path);

/// Whole-file write; throws IoError.
void writeFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace reqlattice

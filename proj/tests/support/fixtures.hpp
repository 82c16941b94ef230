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
#include <string>

#include "reqlattice/corpus_io.hpp"
#include "reqlattice/model.hpp"

namespace reqlattice::testing {

inline std::filesystem::path dataFile(const std::string& name) {
    return std::filesystem::path(REQLATTICE_DATA_DIR) / name;
}

inline Corpus workedExample() {
    return loadCorpus(dataFile("worked-example.reqcorpus.json"));
}

/// Fluent construction of small corpora. Nothing is validated until the
/// caller asks for it.
class CorpusBuilder {
 public:
    CorpusBuilder& jurisdiction(const std::string& id, Level level = Level::national,
                                std::optional<std::string> parent = std::nullopt) {
        c_.jurisdictions[id] = {id, id, level, std::move(parent)};
        return *this;
    }
    CorpusBuilder& source(const std::string& id, SourceKind kind, const std::string& j, const std::string& key,
                          const std::string& hash) {
        c_.sources[id] = {id, kind, j, key, hash, id + " text", false};
        return *this;
    }
    CorpusBuilder& requirement(const std::string& id, RequirementKind kind, const std::string& j,
                               const std::string& key, const std::string& hash, IdSet derivedFrom = {}) {
        c_.requirements[id] = {id, kind, j, key, hash, std::move(derivedFrom), id + " text"};
        return *this;
    }
    CorpusBuilder& legal(const std::string& id, const std::string& j, const std::string& key, const std::string& hash,
                         IdSet derivedFrom = {}) {
        return requirement(id, RequirementKind::legalBased, j, key, hash, std::move(derivedFrom));
    }
    CorpusBuilder& refines(const std::string& stronger, const std::string& weaker) {
        c_.relations.addRefinement(stronger, weaker);
        return *this;
    }
    CorpusBuilder& contradicts(const std::string& a, const std::string& b) {
        c_.relations.addContradiction(a, b);
        return *this;
    }
    CorpusBuilder& component(const std::string& id, IdSet implements,
                             ComponentScope scope = ComponentScope::general()) {
        c_.components[id] = {id, std::move(implements), std::move(scope)};
        return *this;
    }
    Corpus build() const { return c_; }

 private:
    Corpus c_;
};

}  // namespace reqlattice::testing

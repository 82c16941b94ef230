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

#include "reqlattice/corpus_io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "reqlattice/digest.hpp"
#include "reqlattice/errors.hpp"
#include "reqlattice/validation.hpp"

namespace reqlattice {

using nlohmann::json;

namespace {

json parseJson(std::string_view text, const std::string& sourceName) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and may point one past the end
        const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string message = e.what();
        if (auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
        throw ParseError(sourceName, line, column, message);
    }
}

[[noreturn]] void schemaError(const std::string& code, const std::string& subject, const std::string& message) {
    throw ValidationError(code, subject, subject + ": " + message);
}

// Strict view of one JSON object: unknown keys are rejected up front and
// every accessor reports the object's label on failure.
class ObjectReader {
 public:
    ObjectReader(const json& node, std::string label, std::initializer_list<std::string_view> allowed)
        : node_(node), label_(std::move(label)) {
        if (!node_.is_object()) schemaError("SCHEMA", label_, "expected an object");
        for (const auto& [key, _] : node_.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                schemaError("UNKNOWN_FIELD", label_, "unknown field '" + key + "'");
        }
    }

    void relabel(std::string label) { label_ = std::move(label); }
    const std::string& label() const { return label_; }

    const json* find(const std::string& key) const {
        auto it = node_.find(key);
        return it == node_.end() ? nullptr : &*it;
    }

    std::string string(const std::string& key) const {
        const json* value = find(key);
        if (value == nullptr) schemaError("MISSING_FIELD", label_, "missing field '" + key + "'");
        if (!value->is_string()) schemaError("SCHEMA", label_, "field '" + key + "' must be a string");
        return value->get<std::string>();
    }

    std::optional<std::string> optionalString(const std::string& key) const {
        if (find(key) == nullptr) return std::nullopt;
        return string(key);
    }

    std::optional<bool> optionalBool(const std::string& key) const {
        const json* value = find(key);
        if (value == nullptr) return std::nullopt;
        if (!value->is_boolean()) schemaError("SCHEMA", label_, "field '" + key + "' must be a boolean");
        return value->get<bool>();
    }

    std::optional<IdSet> optionalIdSet(const std::string& key) const {
        const json* value = find(key);
        if (value == nullptr) return std::nullopt;
        if (!value->is_array()) schemaError("SCHEMA", label_, "field '" + key + "' must be an array of strings");
        IdSet ids;
        for (const auto& element : *value) {
            if (!element.is_string()) schemaError("SCHEMA", label_, "field '" + key + "' must be an array of strings");
            ids.insert(element.get<std::string>());
        }
        return ids;
    }

    const json& array(const std::string& key, bool required) const {
        static const json kEmpty = json::array();
        const json* value = find(key);
        if (value == nullptr) {
            if (required) schemaError("MISSING_FIELD", label_, "missing field '" + key + "'");
            return kEmpty;
        }
        if (!value->is_array()) schemaError("SCHEMA", label_, "field '" + key + "' must be an array");
        return *value;
    }

 private:
    const json& node_;
    std::string label_;
};

void checkVersion(const ObjectReader& top) {
    const json* version = top.find("formatVersion");
    if (version == nullptr) schemaError("MISSING_FIELD", top.label(), "missing field 'formatVersion'");
    if (!version->is_number_integer() || version->get<long long>() != kFormatVersion)
        schemaError("UNSUPPORTED_VERSION", top.label(), "formatVersion must be 1");
}

std::string indexed(const std::string& section, std::size_t index) {
    return section + "[" + std::to_string(index) + "]";
}

template <typename Item>
void insertUnique(std::map<std::string, Item>& items, Item item) {
    std::string id = item.id;
    if (!items.emplace(id, std::move(item)).second) schemaError("DUPLICATE_ID", id, "duplicate id");
}

Jurisdiction readJurisdiction(const json& node, std::size_t index) {
    ObjectReader in(node, indexed("jurisdictions", index), {"id", "name", "level", "parent"});
    Jurisdiction j;
    j.id = in.string("id");
    in.relabel(j.id);
    j.name = in.string("name");
    const std::string level = in.string("level");
    const auto parsed = parseLevel(level);
    if (!parsed || level == "org") schemaError("SCHEMA", j.id, "unknown level '" + level + "'");
    j.level = *parsed;
    j.parent = in.optionalString("parent");
    return j;
}

SourceItem readSource(const json& node, std::size_t index) {
    ObjectReader in(node, indexed("sources", index),
                    {"id", "kind", "jurisdiction", "conceptKey", "contentHash", "text", "isStatic"});
    SourceItem s;
    s.id = in.string("id");
    in.relabel(s.id);
    const std::string kind = in.string("kind");
    const auto parsed = parseSourceKind(kind);
    if (!parsed) schemaError("SCHEMA", s.id, "unknown source kind '" + kind + "'");
    s.kind = *parsed;
    s.jurisdiction = in.string("jurisdiction");
    s.conceptKey = in.string("conceptKey");
    s.text = in.string("text");
    s.contentHash = in.optionalString("contentHash").value_or(contentHashOf(s.text));
    s.isStatic = in.optionalBool("isStatic").value_or(false);
    return s;
}

Requirement readRequirement(const json& node, std::size_t index) {
    ObjectReader in(node, indexed("requirements", index),
                    {"id", "kind", "jurisdiction", "conceptKey", "contentHash", "derivedFrom", "text"});
    Requirement r;
    r.id = in.string("id");
    in.relabel(r.id);
    const std::string kind = in.string("kind");
    const auto parsed = parseRequirementKind(kind);
    if (!parsed) schemaError("SCHEMA", r.id, "unknown requirement kind '" + kind + "'");
    r.kind = *parsed;
    r.jurisdiction = in.string("jurisdiction");
    r.conceptKey = in.string("conceptKey");
    r.text = in.string("text");
    r.contentHash = in.optionalString("contentHash").value_or(contentHashOf(r.text));
    r.derivedFrom = in.optionalIdSet("derivedFrom").value_or(IdSet{});
    return r;
}

ComponentScope parseScope(const std::string& text, const std::string& owner) {
    if (text == "general") return ComponentScope::general();
    static constexpr std::string_view kPrefix = "specific:";
    if (text.size() > kPrefix.size() && text.compare(0, kPrefix.size(), kPrefix) == 0)
        return ComponentScope::specific(text.substr(kPrefix.size()));
    schemaError("SCHEMA", owner, "scope must be 'general' or 'specific:<jurisdiction>'");
}

std::string scopeText(const ComponentScope& scope) {
    return scope.isGeneral() ? "general" : "specific:" + *scope.jurisdiction;
}

Component readComponent(const json& node, std::size_t index) {
    ObjectReader in(node, indexed("components", index), {"id", "implements", "scope"});
    Component c;
    c.id = in.string("id");
    in.relabel(c.id);
    c.implements = in.optionalIdSet("implements").value_or(IdSet{});
    c.scope = parseScope(in.string("scope"), c.id);
    return c;
}

PairSet readPairs(const json& pairs, const std::string& label, bool unordered) {
    PairSet out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const json& p = pairs[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            schemaError("SCHEMA", indexed(label, i), "expected a pair of ids");
        std::string a = p[0].get<std::string>();
        std::string b = p[1].get<std::string>();
        out.insert(unordered ? unorderedPair(std::move(a), std::move(b)) : IdPair{std::move(a), std::move(b)});
    }
    return out;
}

json pairsJson(const PairSet& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back(json::array({a, b}));
    return out;
}

json idsJson(const IdSet& ids) {
    json out = json::array();
    for (const auto& id : ids) out.push_back(id);
    return out;
}

std::string dumpCanonical(const json& doc) {
    return doc.dump(2, ' ', false, json::error_handler_t::strict) + "\n";
}

}  // namespace

Corpus parseCorpus(std::string_view text, const std::string& sourceName) {
    const json doc = parseJson(text, sourceName);
    ObjectReader top(doc, "corpus",
                     {"formatVersion", "jurisdictions", "sources", "requirements", "relations", "components"});
    checkVersion(top);

    Corpus corpus;
    const json& jurisdictions = top.array("jurisdictions", true);
    for (std::size_t i = 0; i < jurisdictions.size(); ++i) insertUnique(corpus.jurisdictions, readJurisdiction(jurisdictions[i], i));
    const json& sources = top.array("sources", false);
    for (std::size_t i = 0; i < sources.size(); ++i) insertUnique(corpus.sources, readSource(sources[i], i));
    const json& requirements = top.array("requirements", false);
    for (std::size_t i = 0; i < requirements.size(); ++i)
        insertUnique(corpus.requirements, readRequirement(requirements[i], i));
    if (const json* relations = top.find("relations")) {
        ObjectReader rel(*relations, "relations", {"refines", "contradicts"});
        corpus.relations.refines = readPairs(rel.array("refines", false), "refines", false);
        corpus.relations.contradicts = readPairs(rel.array("contradicts", false), "contradicts", true);
    }
    const json& components = top.array("components", false);
    for (std::size_t i = 0; i < components.size(); ++i) insertUnique(corpus.components, readComponent(components[i], i));

    validateCorpus(corpus);
    return corpus;
}

Corpus loadCorpus(const std::filesystem::path& path) {
    return parseCorpus(readFile(path), path.string());
}

std::string serializeCorpus(const Corpus& corpus) {
    json doc;
    doc["formatVersion"] = kFormatVersion;

    json& jurisdictions = doc["jurisdictions"] = json::array();
    for (const auto& [id, j] : corpus.jurisdictions) {
        json node{{"id", j.id}, {"name", j.name}, {"level", toString(j.level)}};
        if (j.parent) node["parent"] = *j.parent;
        jurisdictions.push_back(std::move(node));
    }
    json& sources = doc["sources"] = json::array();
    for (const auto& [id, s] : corpus.sources) {
        sources.push_back({{"id", s.id},
                           {"kind", toString(s.kind)},
                           {"jurisdiction", s.jurisdiction},
                           {"conceptKey", s.conceptKey},
                           {"contentHash", s.contentHash},
                           {"text", s.text},
                           {"isStatic", s.isStatic}});
    }
    json& requirements = doc["requirements"] = json::array();
    for (const auto& [id, r] : corpus.requirements) {
        requirements.push_back({{"id", r.id},
                                {"kind", toString(r.kind)},
                                {"jurisdiction", r.jurisdiction},
                                {"conceptKey", r.conceptKey},
                                {"contentHash", r.contentHash},
                                {"derivedFrom", idsJson(r.derivedFrom)},
                                {"text", r.text}});
    }
    doc["relations"] = {{"refines", pairsJson(corpus.relations.refines)},
                        {"contradicts", pairsJson(corpus.relations.contradicts)}};
    json& components = doc["components"] = json::array();
    for (const auto& [id, c] : corpus.components) {
        components.push_back({{"id", c.id}, {"implements", idsJson(c.implements)}, {"scope", scopeText(c.scope)}});
    }
    return dumpCanonical(doc);
}

void saveCorpus(const Corpus& corpus, const std::filesystem::path& path) {
    writeFile(path, serializeCorpus(corpus));
}

std::string corpusFingerprint(const Corpus& corpus) {
    return sha256Hex(serializeCorpus(corpus));
}

std::string_view toString(ChangeKind kind) {
    switch (kind) {
        case ChangeKind::add: return "add";
        case ChangeKind::remove: return "remove";
        case ChangeKind::modify: return "modify";
    }
    return "?";
}

namespace {

ItemPayload readPayload(const json& node, const std::string& label) {
    ObjectReader in(node, label,
                    {"kind", "jurisdiction", "conceptKey", "contentHash", "text", "derivedFrom", "isStatic"});
    ItemPayload p;
    p.kind = in.optionalString("kind");
    if (p.kind && !parseSourceKind(*p.kind) && !parseRequirementKind(*p.kind))
        schemaError("SCHEMA", label, "unknown kind '" + *p.kind + "'");
    p.jurisdiction = in.optionalString("jurisdiction");
    p.conceptKey = in.optionalString("conceptKey");
    p.contentHash = in.optionalString("contentHash");
    p.text = in.optionalString("text");
    p.derivedFrom = in.optionalIdSet("derivedFrom");
    p.isStatic = in.optionalBool("isStatic");
    return p;
}

bool isEmpty(const ItemPayload& p) {
    return p == ItemPayload{};
}

void checkOp(const ChangeOp& op) {
    const std::string& t = op.target;
    switch (op.op) {
        case ChangeKind::add:
            if (!op.payload) schemaError("MISSING_PAYLOAD", t, "add requires a payload");
            if (!op.payload->kind || !op.payload->jurisdiction || !op.payload->conceptKey || !op.payload->text)
                schemaError("MISSING_FIELD", t, "add payload needs kind, jurisdiction, conceptKey and text");
            break;
        case ChangeKind::modify:
            if (!op.payload || isEmpty(*op.payload)) schemaError("MISSING_PAYLOAD", t, "modify requires a non-empty payload");
            if (op.payload->kind || op.payload->jurisdiction)
                schemaError("IMMUTABLE_FIELD", t, "modify cannot change kind or jurisdiction");
            break;
        case ChangeKind::remove:
            if (op.payload) schemaError("SCHEMA", t, "remove takes no payload");
            break;
    }
    if (op.adoptedBy && op.adoptedBy->empty()) schemaError("EMPTY_ADOPTED_BY", t, "adoptedBy must not be empty");
    if (op.adoptedBy && op.op != ChangeKind::modify) schemaError("SCHEMA", t, "adoptedBy is only valid on modify");
}

}  // namespace

ChangeSet parseChangeSet(std::string_view text, const std::string& sourceName) {
    const json doc = parseJson(text, sourceName);
    ObjectReader top(doc, "changeSet", {"formatVersion", "label", "ops"});
    if (top.find("formatVersion") != nullptr) checkVersion(top);

    ChangeSet changes;
    changes.label = top.string("label");
    const json& ops = top.array("ops", true);
    IdSet targets;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        ObjectReader in(ops[i], indexed("ops", i), {"op", "target", "payload", "adoptedBy"});
        ChangeOp op;
        const std::string kind = in.string("op");
        if (kind == "add") {
            op.op = ChangeKind::add;
        } else if (kind == "remove") {
            op.op = ChangeKind::remove;
        } else if (kind == "modify") {
            op.op = ChangeKind::modify;
        } else {
            schemaError("SCHEMA", in.label(), "unknown op '" + kind + "'");
        }
        op.target = in.string("target");
        in.relabel(op.target);
        if (const json* payload = in.find("payload")) op.payload = readPayload(*payload, op.target);
        op.adoptedBy = in.optionalIdSet("adoptedBy");
        checkOp(op);
        if (!targets.insert(op.target).second) schemaError("DUPLICATE_TARGET", op.target, "target appears in more than one op");
        changes.ops.push_back(std::move(op));
    }
    return changes;
}

ChangeSet loadChangeSet(const std::filesystem::path& path) {
    return parseChangeSet(readFile(path), path.string());
}

void validateChangeSet(const ChangeSet& changes, const Corpus& corpus) {
    for (const auto& op : changes.ops) {
        const bool exists = corpus.roleOf(op.target).has_value();
        if (op.op == ChangeKind::add && exists) schemaError("TARGET_EXISTS", op.target, "add target already exists");
        if (op.op != ChangeKind::add && !exists) schemaError("UNKNOWN_TARGET", op.target, "target does not exist");
        if (op.adoptedBy) {
            for (const auto& j : *op.adoptedBy) {
                if (!corpus.jurisdictions.contains(j))
                    schemaError("UNKNOWN_JURISDICTION", op.target, "adoptedBy names unknown jurisdiction '" + j + "'");
            }
        }
    }
}

ChangeSet loadChangeSet(const std::filesystem::path& path, const Corpus& corpus) {
    ChangeSet changes = loadChangeSet(path);
    validateChangeSet(changes, corpus);
    return changes;
}

std::string serializeChangeSet(const ChangeSet& changes) {
    json doc{{"formatVersion", kFormatVersion}, {"label", changes.label}, {"ops", json::array()}};
    for (const auto& op : changes.ops) {
        json node{{"op", toString(op.op)}, {"target", op.target}};
        if (op.payload) {
            json payload = json::object();
            const ItemPayload& p = *op.payload;
            if (p.kind) payload["kind"] = *p.kind;
            if (p.jurisdiction) payload["jurisdiction"] = *p.jurisdiction;
            if (p.conceptKey) payload["conceptKey"] = *p.conceptKey;
            if (p.contentHash) payload["contentHash"] = *p.contentHash;
            if (p.text) payload["text"] = *p.text;
            if (p.derivedFrom) payload["derivedFrom"] = idsJson(*p.derivedFrom);
            if (p.isStatic) payload["isStatic"] = *p.isStatic;
            node["payload"] = std::move(payload);
        }
        if (op.adoptedBy) node["adoptedBy"] = idsJson(*op.adoptedBy);
        doc["ops"].push_back(std::move(node));
    }
    return dumpCanonical(doc);
}

std::string readFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError(path.string(), "read failed");
    return buffer.str();
}

void writeFile(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path.string(), "cannot open for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace reqlattice

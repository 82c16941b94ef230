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

#include "reqlattice/report.hpp"

#include "reqlattice/corpus_io.hpp"

namespace reqlattice {

using nlohmann::json;

namespace {

json ids(const IdSet& set) {
    json out = json::array();
    for (const auto& id : set) out.push_back(id);
    return out;
}

}  // namespace

json envelope(std::string_view reportType, json body) {
    return {{"tool", kToolName}, {"formatVersion", kFormatVersion}, {"reportType", reportType}, {"body", std::move(body)}};
}

std::string dumpReport(const json& report) {
    return report.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

json toJson(const Finding& f) {
    json out{{"code", f.code}, {"severity", toString(f.severity)}, {"subject", f.subject}, {"message", f.message}};
    if (!f.jurisdiction.empty()) out["jurisdiction"] = f.jurisdiction;
    return out;
}

json toJson(const std::vector<Finding>& findings) {
    json out = json::array();
    for (const auto& f : findings) out.push_back(toJson(f));
    return out;
}

json toJson(const LevelSelection& level) {
    json frontier = json::array();
    for (const auto& id : level.frontier) frontier.push_back(id);
    return {{"level", toString(level.level)}, {"frontier", std::move(frontier)}};
}

json toJson(const Partition& p) {
    json specific = json::object();
    for (const auto& [node, set] : p.specific) specific[node] = ids(set);
    json concepts = json::object();
    for (const auto& [key, set] : p.generalConcepts) concepts[key] = ids(set);
    return {{"role", toString(p.role)},
            {"aspect", toString(p.aspect)},
            {"generalSet", p.setName()},
            {"general", ids(p.general)},
            {"generalConcepts", std::move(concepts)},
            {"specific", std::move(specific)}};
}

json toJson(const ScenarioClass& s) {
    return {{"aspect", toString(s.aspect)}, {"option", toString(s.option)}, {"note", s.note}};
}

json toJson(const Conflict& c) {
    return {{"pair", json::array({c.pair.first, c.pair.second})}, {"origin", toString(c.origin)}};
}

json toJson(const std::vector<Conflict>& conflicts) {
    json out = json::array();
    for (const auto& c : conflicts) out.push_back(toJson(c));
    return out;
}

json toJson(const OptimizedView& view, Emit emit) {
    json out{{"scope", view.scope}, {"input", ids(view.input)}};
    if (emit != Emit::min) {
        out["strongest"] = ids(view.strongest);
        json removed = json::object();
        for (const auto& [id, witness] : view.removed) removed[id] = witness;
        out["removed"] = std::move(removed);
    }
    if (emit != Emit::star) out["baseline"] = ids(view.baseline);
    return out;
}

json toJson(const GlobalView& view, Emit emit) {
    json kinds = json::array();
    for (const auto& k : view.kinds) {
        json per = json::object();
        for (const auto& [node, v] : k.perJurisdiction) per[node] = toJson(v, emit);
        kinds.push_back({{"kind", toString(k.kind)}, {"global", toJson(k.global, emit)}, {"perJurisdiction", std::move(per)}});
    }
    return {{"selection", toJson(view.level)}, {"kinds", std::move(kinds)}, {"conflicts", toJson(view.conflicts)}};
}

json toJson(const ChangeRecord& r) {
    json migrations = json::array();
    for (const auto& m : r.migrations) migrations.push_back({{"id", m.id}, {"from", m.from}, {"to", m.to}});
    json components = json::array();
    for (const auto& c : r.componentImpact) components.push_back({{"component", c.component}, {"status", toString(c.status)}});
    json out{{"op", toString(r.op)},
             {"target", r.target},
             {"caseCode", toString(r.caseCode)},
             {"migrations", std::move(migrations)},
             {"affected", ids(r.affected)},
             {"componentImpact", std::move(components)},
             {"findings", toJson(r.findings)}};
    if (const auto label = caseLabel(r.caseCode); !label.empty()) out["case"] = label;
    if (r.promotingJurisdiction) {
        out["promotingJurisdiction"] = *r.promotingJurisdiction;
        json counterparts = json::object();
        for (const auto& [owner, id] : r.counterparts) counterparts[owner] = id;
        out["counterparts"] = std::move(counterparts);
    }
    if (r.caseCode == CaseCode::genStaysGen || r.caseCode == CaseCode::genSplits) {
        out["adopters"] = ids(r.adopters);
        out["keepers"] = ids(r.keepers);
    }
    return out;
}

json toJson(const ImpactReport& report) {
    json ops = json::array();
    for (const auto& r : report.perOp) ops.push_back(toJson(r));
    return {{"label", report.label},
            {"partitionsBefore", report.partitionsBefore},
            {"partitionsAfter", report.partitionsAfter},
            {"ops", std::move(ops)}};
}

json toJson(const ReuseHint& h) {
    return {{"component", h.component},
            {"forJurisdiction", h.forJurisdiction},
            {"fromJurisdiction", h.fromJurisdiction},
            {"counterpart", h.counterpart},
            {"promoted", h.promoted}};
}

json toJson(const DecisionMatrix& m) {
    json criteria = json::array();
    for (std::size_t j = 0; j < m.criteria.size(); ++j) {
        criteria.push_back({{"id", m.criteria[j].id},
                            {"weight", m.criteria[j].weight},
                            {"originalWeight", m.originalWeights[j]},
                            {"direction", toString(m.criteria[j].direction)}});
    }
    json rows = json::array();
    for (std::size_t i = 0; i < m.alternatives.size(); ++i) rows.push_back({{"id", m.alternatives[i]}, {"values", m.values[i]}});
    return {{"criteria", std::move(criteria)}, {"alternatives", std::move(rows)}};
}

json toJson(const Ranking& ranking) {
    json order = json::array();
    std::size_t rank = 0;
    for (const auto& r : ranking.order) order.push_back({{"rank", ++rank}, {"id", r.id}, {"closeness", r.closeness}});
    return {{"ranking", std::move(order)}, {"droppedCriteria", ranking.droppedCriteria}};
}

}  // namespace reqlattice

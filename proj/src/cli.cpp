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

#include "reqlattice/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reqlattice/change.hpp"
#include "reqlattice/corpus_io.hpp"
#include "reqlattice/errors.hpp"
#include "reqlattice/hierarchy.hpp"
#include "reqlattice/optimizer.hpp"
#include "reqlattice/partition.hpp"
#include "reqlattice/report.hpp"
#include "reqlattice/topsis.hpp"

namespace reqlattice::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string corpus;
    std::string level = "national";
    std::string format = "text";
    bool strict = false;
    std::string out;
    std::string emit = "both";
    std::string changes;
    std::string alternatives;
};

struct Result {
    std::string reportType;
    json body;
    std::string text;
    int code = kSuccess;
};

class Style {
 public:
    explicit Style(bool color) : color_(color) {}

    std::string heading(const std::string& s) const { return wrap("1", s); }
    std::string warning(const std::string& s) const { return wrap("33", s); }
    std::string error(const std::string& s) const { return wrap("31", s); }
    std::string good(const std::string& s) const { return wrap("32", s); }

    std::string severity(const Finding& f) const {
        const std::string tag(toString(f.severity));
        return f.severity == Severity::error ? error(tag) : warning(tag);
    }

 private:
    std::string wrap(const char* code, const std::string& s) const {
        return color_ ? "\x1b[" + std::string(code) + "m" + s + "\x1b[0m" : s;
    }

    bool color_;
};

bool colorFromEnvironment() {
    const char* value = std::getenv("REQLATTICE_COLOR");
    return value != nullptr && std::string(value) == "1";
}

std::string joined(const IdSet& ids) {
    if (ids.empty()) return "(none)";
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
    return out;
}

void renderFindings(std::ostream& os, const Style& style, const std::vector<Finding>& findings) {
    for (const auto& f : findings) os << "  [" << style.severity(f) << "] " << f.code << ": " << f.message << "\n";
}

void renderConflicts(std::ostream& os, const std::vector<Conflict>& conflicts) {
    if (conflicts.empty()) os << "  (none)\n";
    for (const auto& c : conflicts)
        os << "  " << c.pair.first << " <-> " << c.pair.second << "  (" << toString(c.origin) << ")\n";
}

bool hasError(const std::vector<Finding>& findings) {
    return std::any_of(findings.begin(), findings.end(), [](const Finding& f) { return f.severity == Severity::error; });
}

LevelSelection levelOf(const Corpus& corpus, const Options& opt) {
    return selectLevel(corpus, *parseLevel(opt.level));
}

std::vector<Finding> contradictionCondition(const Corpus& corpus, const PartitionSet& parts) {
    auto warnings = checkSpecificContradictionCondition(corpus, parts.legalSources);
    auto cultural = checkSpecificContradictionCondition(corpus, parts.culturalSources);
    warnings.insert(warnings.end(), cultural.begin(), cultural.end());
    return warnings;
}

IdSet analyzedRequirements(const Corpus& corpus, const LevelSelection& level) {
    IdSet all;
    for (const auto& node : level.frontier) {
        const IdSet visible = effectiveRequirements(corpus, node);
        all.insert(visible.begin(), visible.end());
    }
    return all;
}

Result cmdValidate(const Options& opt, const Style& style) {
    const Corpus corpus = loadCorpus(opt.corpus);
    const LevelSelection level = levelOf(corpus, opt);
    const PartitionSet parts = partitionAll(corpus, level);

    std::vector<Finding> findings = validateHierarchy(corpus);
    for (auto&& extra : {checkElaboration(corpus, parts), checkComponentScopes(corpus, parts)}) {
        findings.insert(findings.end(), extra.begin(), extra.end());
    }
    const auto condition = contradictionCondition(corpus, parts);
    const auto conflicts = findConflicts(corpus, analyzedRequirements(corpus, level));

    Result result{"validate", {}, {}, kSuccess};
    if (hasError(findings)) {
        result.code = kInvalidInput;
    } else if (opt.strict && (!condition.empty() || !conflicts.empty())) {
        result.code = kStrictFindings;
    }
    const char* status = result.code == kSuccess ? "ok" : result.code == kInvalidInput ? "invalid" : "strict-failure";
    result.body = {{"status", status},
                   {"selection", toJson(level)},
                   {"counts",
                    {{"jurisdictions", corpus.jurisdictions.size()},
                     {"sources", corpus.sources.size()},
                     {"requirements", corpus.requirements.size()},
                     {"components", corpus.components.size()}}},
                   {"fingerprint", corpusFingerprint(corpus)},
                   {"findings", toJson(findings)},
                   {"contradictionCondition", toJson(condition)},
                   {"conflicts", toJson(conflicts)}};

    std::ostringstream os;
    os << style.heading("Corpus " + opt.corpus) << "\n"
       << "  " << corpus.jurisdictions.size() << " jurisdictions, " << corpus.sources.size() << " sources, "
       << corpus.requirements.size() << " requirements, " << corpus.components.size() << " components\n"
       << "  level " << toString(level.level) << ": " << level.frontier.size() << " jurisdictions analyzed\n";
    if (!findings.empty()) {
        os << style.heading("Findings") << "\n";
        renderFindings(os, style, findings);
    }
    if (!condition.empty()) {
        os << style.heading("Specific items without a cross-jurisdiction contradiction") << "\n";
        renderFindings(os, style, condition);
    }
    os << style.heading("Conflicts") << "\n";
    renderConflicts(os, conflicts);
    os << "status: " << (result.code == kSuccess ? style.good(status) : style.error(status)) << "\n";
    result.text = os.str();
    return result;
}

void renderPartition(std::ostream& os, const Style& style, const Partition& p) {
    os << style.heading(std::string(toString(p.role)) + "s / " + std::string(toString(p.aspect))) << "\n";
    os << "  " << p.setName() << ":";
    if (p.generalConcepts.empty()) os << " (empty)";
    os << "\n";
    for (const auto& [key, ids] : p.generalConcepts) os << "    " << key << ": " << joined(ids) << "\n";
    for (const auto& [node, ids] : p.specific) os << "  " << p.setName(node) << ": " << joined(ids) << "\n";
}

Result cmdPartition(const Options& opt, const Style& style) {
    const Corpus corpus = loadCorpus(opt.corpus);
    const LevelSelection level = levelOf(corpus, opt);
    const PartitionSet parts = partitionAll(corpus, level);
    const auto elaboration = checkElaboration(corpus, parts);
    const auto condition = contradictionCondition(corpus, parts);

    Result result{"partition", {}, {}, kSuccess};
    if (opt.strict && !condition.empty()) result.code = kStrictFindings;
    result.body = {{"selection", toJson(level)},
                   {"partitions",
                    {toJson(parts.legalSources), toJson(parts.culturalSources), toJson(parts.legalRequirements),
                     toJson(parts.culturalRequirements), toJson(parts.functionalRequirements)}},
                   {"elaboration", toJson(elaboration)},
                   {"contradictionCondition", toJson(condition)}};

    std::ostringstream os;
    for (const Partition* p : {&parts.legalSources, &parts.culturalSources, &parts.legalRequirements,
                               &parts.culturalRequirements, &parts.functionalRequirements}) {
        renderPartition(os, style, *p);
    }
    if (!elaboration.empty()) {
        os << style.heading("Elaboration") << "\n";
        renderFindings(os, style, elaboration);
    }
    if (!condition.empty()) {
        os << style.heading("Specific items without a cross-jurisdiction contradiction") << "\n";
        renderFindings(os, style, condition);
    }
    result.text = os.str();
    return result;
}

Result cmdScenario(const Options& opt, const Style& style) {
    const Corpus corpus = loadCorpus(opt.corpus);
    const LevelSelection level = levelOf(corpus, opt);
    Result result{"scenario", {{"selection", toJson(level)}, {"scenarios", json::array()}}, {}, kSuccess};
    std::ostringstream os;
    for (auto kind : {SourceKind::legal, SourceKind::cultural}) {
        const Partition p = partitionSources(corpus, kind, level);
        try {
            const ScenarioClass scenario = classifyScenario(p);
            result.body["scenarios"].push_back(toJson(scenario));
            os << style.heading(std::string(toString(kind))) << ": " << toString(scenario.option) << "\n  "
               << scenario.note << "\n";
        } catch (const EmptyAspectError& e) {
            result.body["scenarios"].push_back({{"aspect", toString(aspectOf(kind))}, {"error", e.code()}});
            os << style.heading(std::string(toString(kind))) << ": " << style.warning("no items") << "\n";
        }
    }
    result.text = os.str();
    return result;
}

Emit parseEmit(const std::string& text) {
    if (text == "min") return Emit::min;
    if (text == "star") return Emit::star;
    return Emit::both;
}

Result cmdOptimize(const Options& opt, const Style& style) {
    const Corpus corpus = loadCorpus(opt.corpus);
    const LevelSelection level = levelOf(corpus, opt);
    const GlobalView view = globalView(corpus, level);
    const Emit emit = parseEmit(opt.emit);

    Result result{"optimize", toJson(view, emit), {}, kSuccess};
    result.body["emit"] = opt.emit;
    if (opt.strict && !view.conflicts.empty()) result.code = kStrictFindings;

    std::ostringstream os;
    auto renderView = [&](const OptimizedView& v) {
        os << "  " << v.scope << "\n";
        if (emit != Emit::min) {
            os << "    strongest: " << joined(v.strongest) << "\n";
            for (const auto& [id, witness] : v.removed) os << "    removed " << id << " (refined by " << witness << ")\n";
        }
        if (emit != Emit::star) os << "    baseline:  " << joined(v.baseline) << "\n";
    };
    for (const auto& k : view.kinds) {
        os << style.heading(std::string(toString(k.kind))) << "\n";
        renderView(k.global);
        for (const auto& [node, v] : k.perJurisdiction) renderView(v);
    }
    os << style.heading("Conflicts in the global set") << "\n";
    renderConflicts(os, view.conflicts);
    result.text = os.str();
    return result;
}

Result cmdConflicts(const Options& opt, const Style& style) {
    const Corpus corpus = loadCorpus(opt.corpus);
    const LevelSelection level = levelOf(corpus, opt);
    const auto conflicts = findConflicts(corpus, analyzedRequirements(corpus, level));
    Result result{"conflicts",
                  {{"selection", toJson(level)}, {"count", conflicts.size()}, {"conflicts", toJson(conflicts)}},
                  {},
                  kSuccess};
    if (opt.strict && !conflicts.empty()) result.code = kStrictFindings;
    std::ostringstream os;
    os << style.heading("Conflicts (" + std::to_string(conflicts.size()) + ")") << "\n";
    renderConflicts(os, conflicts);
    result.text = os.str();
    return result;
}

Result cmdChange(const Options& opt, const Style& style) {
    const Corpus corpus = loadCorpus(opt.corpus);
    const ChangeSet changes = loadChangeSet(opt.changes, corpus);
    const LevelSelection level = levelOf(corpus, opt);
    const auto [updated, report] = applyChangeSet(corpus, changes, level);
    const auto hints = reuseHints(report, updated);
    if (!opt.out.empty()) saveCorpus(updated, opt.out);

    Result result{"impact", toJson(report), {}, kSuccess};
    result.body["selection"] = toJson(level);
    result.body["reuseHints"] = json::array();
    for (const auto& h : hints) result.body["reuseHints"].push_back(toJson(h));

    std::ostringstream os;
    os << style.heading("Change set '" + report.label + "'") << " (" << report.perOp.size() << " ops)\n";
    for (const auto& r : report.perOp) {
        os << "  " << toString(r.op) << " " << r.target << ": " << toString(r.caseCode);
        if (const auto label = caseLabel(r.caseCode); !label.empty()) os << " (" << label << ")";
        os << "\n    affected: " << joined(r.affected) << "\n";
        for (const auto& m : r.migrations) os << "    " << m.id << ": " << m.from << " -> " << m.to << "\n";
        for (const auto& c : r.componentImpact) os << "    component " << c.component << ": " << toString(c.status) << "\n";
        if (r.caseCode == CaseCode::genSplits) {
            os << "    adopt new version: " << joined(r.adopters) << "\n    keep old version: " << joined(r.keepers) << "\n";
        }
        renderFindings(os, style, r.findings);
    }
    if (!hints.empty()) {
        os << style.heading("Reuse hints") << "\n";
        for (const auto& h : hints) {
            os << "  " << h.component << " (" << h.fromJurisdiction << ", implements " << h.counterpart
               << ") can serve " << h.forJurisdiction << " for " << h.promoted << "\n";
        }
    }
    result.text = os.str();
    return result;
}

Result cmdHierarchy(const Options& opt, const Style& style) {
    const Corpus corpus = loadCorpus(opt.corpus);
    const LevelSelection level = levelOf(corpus, opt);
    const auto findings = validateHierarchy(corpus);
    Result result{"hierarchy", {{"selection", toJson(level)}, {"findings", toJson(findings)}, {"nodes", json::array()}}, {}, kSuccess};
    if (hasError(findings)) result.code = kInvalidInput;

    std::ostringstream os;
    os << style.heading("Level " + std::string(toString(level.level))) << "\n";
    for (const auto& node : level.frontier) {
        const Jurisdiction& j = corpus.jurisdictions.at(node);
        const IdSet reqs = effectiveRequirements(corpus, node);
        const IdSet srcs = effectiveSources(corpus, node);
        json chain = json::array();
        for (const auto& a : corpus.ancestors(node)) chain.push_back(a);
        json entry{{"id", node}, {"name", j.name}, {"ancestors", std::move(chain)}, {"effectiveRequirements", reqs},
                   {"effectiveSources", srcs}};
        result.body["nodes"].push_back(std::move(entry));
        os << "  " << node << " (" << j.name << ")\n"
           << "    requirements: " << joined(reqs) << "\n"
           << "    sources:      " << joined(srcs) << "\n";
    }
    renderFindings(os, style, findings);
    result.text = os.str();
    return result;
}

Result cmdRank(const Options& opt, const Style& style) {
    const Corpus corpus = loadCorpus(opt.corpus);
    const LevelSelection level = levelOf(corpus, opt);
    const AlternativesFile alts = parseAlternatives(readFile(opt.alternatives), opt.alternatives);
    const DecisionMatrix matrix = buildConflictMatrix(corpus, level, alts.alternatives, alts.criteria);
    const Ranking ranking = rankAlternatives(matrix);

    Result result{"ranking", toJson(ranking), {}, kSuccess};
    result.body["selection"] = toJson(level);
    result.body["matrix"] = toJson(matrix);

    std::ostringstream os;
    os << style.heading("TOPSIS ranking over " + std::to_string(matrix.criteria.size()) + " conflicting requirements")
       << "\n";
    std::size_t rank = 0;
    for (const auto& r : ranking.order) {
        std::ostringstream closeness;
        closeness.precision(6);
        closeness << std::fixed << r.closeness;
        os << "  " << ++rank << ". " << r.id << "  " << closeness.str() << "\n";
    }
    for (const auto& dropped : ranking.droppedCriteria) {
        os << "  " << style.warning("dropped") << " zero-variance criterion " << dropped << "\n";
    }
    result.text = os.str();
    return result;
}

void addCommonOptions(CLI::App* cmd, Options& opt) {
    cmd->add_option("--corpus", opt.corpus, "Corpus file (.reqcorpus.json)")->required();
    cmd->add_option("--level", opt.level, "Analysis level")
        ->check(CLI::IsMember({"national", "state", "org", "organisational"}));
    cmd->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--strict", opt.strict, "Treat conflicts and contradiction-condition warnings as failures");
    cmd->add_option("--out", opt.out, "Write the report (for 'change': the new corpus) to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Requirements analysis across jurisdictions", "reqlattice"};
    app.require_subcommand(1, 1);
    Options opt;

    using Handler = std::function<Result(const Options&, const Style&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* description, Handler handler) {
        CLI::App* cmd = app.add_subcommand(name, description);
        addCommonOptions(cmd, opt);
        commands.emplace_back(cmd, std::move(handler));
        return cmd;
    };
    add("validate", "Validate a corpus and report findings", cmdValidate);
    add("partition", "General/specific decomposition of sources and requirements", cmdPartition);
    add("scenario", "Classify legal and cultural sources as disjoint, identical or overlapping", cmdScenario);
    add("optimize", "Strongest and baseline requirement sets", cmdOptimize)
        ->add_option("--emit", opt.emit, "Which optimized sets to report")
        ->check(CLI::IsMember({"min", "star", "both"}));
    add("conflicts", "Declared and derived requirement conflicts", cmdConflicts);
    add("change", "Apply a change set and classify its impact", cmdChange)
        ->add_option("--changes", opt.changes, "Change set file (.reqchange.json)")
        ->required();
    add("hierarchy", "Frontier and effective requirements at a level", cmdHierarchy);
    add("rank", "Rank conflict resolutions with TOPSIS", cmdRank)
        ->add_option("--alternatives", opt.alternatives, "Alternatives file (.reqalts.json)")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInvalidInput;
    }

    const Style style(colorFromEnvironment() && opt.format == "text");
    for (const auto& [cmd, handler] : commands) {
        if (!cmd->parsed()) continue;
        try {
            const Result result = handler(opt, style);
            const std::string rendered =
                opt.format == "json" ? dumpReport(envelope(result.reportType, result.body)) : result.text;
            if (!opt.out.empty() && cmd->get_name() != "change") {
                writeFile(opt.out, rendered);
            } else {
                out << rendered;
            }
            return result.code;
        } catch (const IoError& e) {
            err << "io error: " << e.what() << "\n";
            return kIoFailure;
        } catch (const ParseError& e) {
            err << "parse error: " << e.subject() << ": " << e.what() << "\n";
            return kInvalidInput;
        } catch (const Error& e) {
            err << "error [" << e.code() << "]: " << e.what() << "\n";
            return kInvalidInput;
        }
    }
    return kInvalidInput;
}

}  // namespace reqlattice::cli

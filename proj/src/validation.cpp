#include "qm/validation.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <json.hpp>

namespace qm {

const char* to_string(Severity s) {
    switch (s) {
        case Severity::info: return "INFO";
        case Severity::warning: return "WARNING";
        case Severity::error: return "ERROR";
    }
    return "INFO";
}

std::optional<Severity> parse_severity(std::string_view text) {
    if (text == "info" || text == "INFO") return Severity::info;
    if (text == "warning" || text == "WARNING") return Severity::warning;
    if (text == "error" || text == "ERROR") return Severity::error;
    return std::nullopt;
}

bool at_least(Severity s, Severity threshold) {
    return static_cast<int>(s) >= static_cast<int>(threshold);
}

namespace {

// Sort group: fact-side findings first, then activity-side, then model-level.
struct Keyed {
    int group;
    std::string path;
    Diagnostic diagnostic;
};

void add(std::vector<Keyed>& out, int group, std::string path, std::string code,
         Severity severity, std::string subject, std::string message) {
    out.push_back(Keyed{group, std::move(path),
                        Diagnostic{std::move(code), severity, std::move(subject),
                                   std::move(message)}});
}

bool subtree_attributed(const FactNode& node) {
    if (!node.attributed.empty()) return true;
    for (const auto& child : node.children)
        if (subtree_attributed(child)) return true;
    return false;
}

}  // namespace

std::vector<Diagnostic> check(const QualityModel& model) {
    std::vector<Keyed> found;

    std::set<TupleRef> sources;
    std::set<TupleRef> targets;
    for (const auto& impact : model.impacts) {
        sources.insert(impact.source);
        targets.insert(impact.target);
    }

    std::set<std::string, std::less<>> attached;

    for_each_fact(model, [&](const FactNode& node, const Path& path) {
        for (const auto& attribution : node.attributed) {
            attached.insert(attribution.attribute);
            TupleRef tuple{path, attribution.attribute};
            if (!sources.count(tuple))
                add(found, 0, path.str(), "W001", Severity::warning, tuple.str(),
                    "attributed fact tuple has no outgoing impact");
        }
        if (!subtree_attributed(node))
            add(found, 0, path.str(), "W002", Severity::warning, path.str(),
                "inert fact: neither this node nor any descendant carries an attribute");
    });

    for_each_activity(model, [&](const ActivityNode& node, const Path& path) {
        for (const auto& attribute : node.attributed) {
            attached.insert(attribute);
            TupleRef tuple{path, attribute};
            if (!targets.count(tuple))
                add(found, 1, path.str(), "W003", Severity::warning, tuple.str(),
                    "attributed activity tuple is never targeted by an impact");
        }
    });

    for (const auto& attr : model.attributes) {
        if (!attached.count(attr.name))
            add(found, 2, attr.name, "W004", Severity::warning, attr.name,
                "declared attribute is attached to no node");
    }

    for (const auto& impact : model.impacts) {
        if (impact.rationale.empty()) {
            std::string subject = impact.source.str() + " -> " + impact.target.str();
            add(found, 2, impact.source.node.str(), "W005", Severity::warning, subject,
                "impact has no rationale");
        }
    }

    for (const auto& goal : model.goals) {
        if (goal.basis.empty())
            add(found, 2, goal.name, "I101", Severity::info, goal.name,
                "goal has an empty basis; goal reports for it will be empty");
    }

    for (const auto& attr : model.attributes) {
        if (attr.applies_to == Applicability::fact) continue;
        bool reachable = false;
        for (const auto& goal : model.goals)
            for (const auto& basis : goal.basis) reachable = reachable || basis == attr.name;
        if (!reachable)
            add(found, 2, attr.name, "I102", Severity::info, attr.name,
                "activity attribute is in no goal's basis; goal reports never see it");
    }

    std::stable_sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) {
        return std::tie(a.group, a.path, a.diagnostic.code, a.diagnostic.subject) <
               std::tie(b.group, b.path, b.diagnostic.code, b.diagnostic.subject);
    });

    std::vector<Diagnostic> out;
    out.reserve(found.size());
    for (auto& keyed : found) out.push_back(std::move(keyed.diagnostic));
    return out;
}

std::string render_text(const std::vector<Diagnostic>& diagnostics) {
    std::string out;
    for (const auto& d : diagnostics) {
        out += d.code;
        out += ' ';
        out += to_string(d.severity);
        out += ' ';
        out += d.subject;
        out += ": ";
        out += d.message;
        out += '\n';
    }
    return out;
}

std::string render_records(const std::vector<Diagnostic>& diagnostics) {
    std::string out;
    for (const auto& d : diagnostics) {
        nlohmann::json record{{"code", d.code},
                              {"severity", to_string(d.severity)},
                              {"subject", d.subject},
                              {"message", d.message}};
        out += record.dump();
        out += '\n';
    }
    return out;
}

}  // namespace qm

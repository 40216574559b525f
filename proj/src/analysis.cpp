#include "qm/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>
#include <utility>

#include <json.hpp>

namespace qm {

namespace {

std::vector<std::string> goals_reached(const QualityModel& model, const std::string& attribute) {
    std::vector<std::string> names;
    for (const auto& goal : model.goals)
        for (const auto& basis : goal.basis)
            if (basis == attribute) names.push_back(goal.name);
    return names;
}

bool impact_before(const Impact& a, const Impact& b) {
    return std::tie(a.source.node, a.source.attribute, a.target.node, a.target.attribute) <
           std::tie(b.source.node, b.source.attribute, b.target.node, b.target.attribute);
}

std::string render_impact_line(const Impact& impact) {
    std::string out = impact.source.str();
    out += " -> ";
    out += impact.target.str();
    out += ' ';
    out += to_symbol(impact.direction);
    out += " weight ";
    out += format_decimal(impact.weight);
    return out;
}

}  // namespace

TraceResult trace_fact(const QualityModel& model, const Path& fact_ref) {
    TraceResult result;
    RefLookup lookup = resolve_ref(model, Tree::fact, fact_ref);
    if (!lookup.ok()) {
        result.error = lookup.error;
        return result;
    }
    std::vector<TraceEntry> entries;
    for (const auto& impact : model.impacts) {
        if (!impact.source.node.starts_with(*lookup.path)) continue;
        entries.push_back(TraceEntry{impact, goals_reached(model, impact.target.attribute)});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const TraceEntry& a, const TraceEntry& b) {
                         return impact_before(a.impact, b.impact);
                     });
    result.entries = std::move(entries);
    return result;
}

GoalReportResult goal_report(const QualityModel& model, std::string_view goal_name) {
    GoalReportResult result;
    const GoalDef* goal = model.find_goal(goal_name);
    if (!goal) {
        result.error = "unknown goal '" + std::string(goal_name) + "'";
        return result;
    }
    GoalReport report;
    report.goal = goal->name;
    report.basis = goal->basis;
    if (goal->basis.empty()) {
        report.note = "goal '" + goal->name + "' has an empty basis; nothing to report";
        result.report = std::move(report);
        return result;
    }
    for (const auto& impact : model.impacts) {
        bool in_basis = false;
        for (const auto& basis : goal->basis)
            in_basis = in_basis || basis == impact.target.attribute;
        if (in_basis) report.entries.push_back(impact);
    }
    std::stable_sort(report.entries.begin(), report.entries.end(), impact_before);
    result.report = std::move(report);
    return result;
}

namespace {

using TupleKey = std::pair<std::string, std::string>;  // (path string, attribute)

struct Bindings {
    std::map<TupleKey, double> facts;
    std::map<TupleKey, double> activities;  // FREQUENCY weights
    std::string error;

    bool ok() const { return error.empty(); }
};

Bindings resolve_bindings(const QualityModel& model, const Assessment& assessment) {
    Bindings out;
    for (const auto& binding : assessment.bindings) {
        RefLookup fact_side = resolve_ref(model, Tree::fact, binding.node);
        bool is_fact = false;
        Path resolved;
        if (fact_side.ok()) {
            const FactNode* node = resolve_fact(model, *fact_side.path);
            if (node->find_attribution(binding.attribute)) {
                is_fact = true;
                resolved = *fact_side.path;
            }
        }
        if (!is_fact) {
            RefLookup activity_side = resolve_ref(model, Tree::activity, binding.node);
            const ActivityNode* node =
                activity_side.ok() ? resolve_activity(model, *activity_side.path) : nullptr;
            if (node && node->has_attribute(binding.attribute)) {
                if (binding.attribute != "FREQUENCY") {
                    out.error = "binding '" + binding.node.str() + " | " + binding.attribute +
                                "' targets an activity attribute; only fact tuples and "
                                "activity FREQUENCY weights are consumed";
                    return out;
                }
                resolved = *activity_side.path;
            } else if (fact_side.ok()) {
                out.error = "fact '" + fact_side.path->str() + "' does not carry attribute '" +
                            binding.attribute + "'";
                return out;
            } else if (node) {
                out.error = "activity '" + activity_side.path->str() +
                            "' does not carry attribute '" + binding.attribute + "'";
                return out;
            } else {
                out.error = "unresolvable binding '" + binding.node.str() + " | " +
                            binding.attribute + "': " + fact_side.error;
                return out;
            }
        }

        auto& side = is_fact ? out.facts : out.activities;
        TupleKey key{resolved.str(), binding.attribute};
        if (!side.emplace(key, binding.value).second) {
            out.error = "duplicate binding for '" + key.first + " | " + key.second + "'";
            return out;
        }
    }
    return out;
}

struct Evaluator {
    const QualityModel& model;
    const Bindings& bindings;
    std::map<TupleKey, double> tuple_totals;
    EvaluationReport report;

    void run() {
        for (const auto& impact : model.impacts) {
            double assessed = 0.0;
            auto it = bindings.facts.find(
                TupleKey{impact.source.node.str(), impact.source.attribute});
            if (it != bindings.facts.end()) assessed = it->second;
            double sign = impact.direction == Direction::positive ? 1.0 : -1.0;
            tuple_totals[TupleKey{impact.target.node.str(), impact.target.attribute}] +=
                sign * impact.weight * assessed;
        }

        for_each_activity(model, [&](const ActivityNode& node, const Path& path) {
            for (const auto& attribute : node.attributed)
                report.tuple_scores.push_back(
                    ScoredTuple{path, attribute, tuple_score(path, attribute)});
        });
        std::sort(report.tuple_scores.begin(), report.tuple_scores.end(),
                  [](const ScoredTuple& a, const ScoredTuple& b) {
                      return std::tie(a.node, a.attribute) < std::tie(b.node, b.attribute);
                  });

        for (const auto& attr : model.attributes) {
            if (attr.applies_to == Applicability::fact || attr.name == "FREQUENCY") continue;
            Path prefix;
            for (const auto& root : model.activity_roots) roll_up(root, prefix, attr.name);
        }
        std::sort(report.node_scores.begin(), report.node_scores.end(),
                  [](const ScoredTuple& a, const ScoredTuple& b) {
                      return std::tie(a.node, a.attribute) < std::tie(b.node, b.attribute);
                  });

        for (const auto& goal : model.goals) {
            double total = 0.0;
            std::size_t count = 0;
            for (const auto& root : model.activity_roots) {
                Path path{std::vector<std::string>{root.name}};
                for (const auto& attribute : goal.basis) {
                    total += find_node_score(path, attribute);
                    ++count;
                }
            }
            report.goal_scores.push_back(
                GoalScore{goal.name, count == 0 ? 0.0 : total / (double)count});
        }
    }

    double tuple_score(const Path& path, const std::string& attribute) const {
        auto it = tuple_totals.find(TupleKey{path.str(), attribute});
        return it == tuple_totals.end() ? 0.0 : it->second;
    }

    double frequency_weight(const ActivityNode& node, const Path& path) const {
        if (!node.has_attribute("FREQUENCY")) return 1.0;
        auto it = bindings.activities.find(TupleKey{path.str(), "FREQUENCY"});
        return it == bindings.activities.end() ? 1.0 : it->second;
    }

    double roll_up(const ActivityNode& node, Path& prefix, const std::string& attribute) {
        prefix.segments.push_back(node.name);
        double weight = frequency_weight(node, prefix);
        double numerator = weight * tuple_score(prefix, attribute);
        double denominator = weight;
        for (const auto& child : node.children) {
            Path child_path = prefix;
            child_path.segments.push_back(child.name);
            double child_weight = frequency_weight(child, child_path);
            numerator += child_weight * roll_up(child, prefix, attribute);
            denominator += child_weight;
        }
        double score = denominator == 0.0 ? 0.0 : numerator / denominator;
        report.node_scores.push_back(ScoredTuple{prefix, attribute, score});
        prefix.segments.pop_back();
        return score;
    }

    double find_node_score(const Path& path, const std::string& attribute) const {
        for (const auto& scored : report.node_scores)
            if (scored.node == path && scored.attribute == attribute) return scored.value;
        return 0.0;
    }
};

}  // namespace

EvaluateResult evaluate(const QualityModel& model, const Assessment& assessment) {
    EvaluateResult result;
    Bindings bindings = resolve_bindings(model, assessment);
    if (!bindings.ok()) {
        result.error = bindings.error;
        return result;
    }
    Evaluator evaluator{model, bindings, {}, {}};
    evaluator.run();
    result.report = std::move(evaluator.report);
    return result;
}

std::string render_trace(const std::vector<TraceEntry>& entries) {
    std::string out;
    for (const auto& entry : entries) {
        out += render_impact_line(entry.impact);
        out += "; goals: ";
        if (entry.goal_names.empty()) {
            out += "(none)";
        } else {
            for (std::size_t i = 0; i < entry.goal_names.size(); ++i) {
                if (i) out += ", ";
                out += entry.goal_names[i];
            }
        }
        out += '\n';
    }
    return out;
}

std::string render_goal_report(const GoalReport& report) {
    std::string out = "goal ";
    out += report.goal;
    for (std::size_t i = 0; i < report.basis.size(); ++i) {
        out += i ? ", " : " = ";
        out += report.basis[i];
    }
    out += '\n';
    if (!report.note.empty()) {
        out += "note: ";
        out += report.note;
        out += '\n';
        return out;
    }
    for (const auto& impact : report.entries) {
        out += render_impact_line(impact);
        out += '\n';
    }
    return out;
}

namespace {

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

void render_scored_section(const char* header, const std::vector<ScoredTuple>& rows,
                           std::string& out) {
    out += header;
    out += '\n';
    std::size_t width = 0;
    for (const auto& row : rows)
        width = std::max(width, TupleRef{row.node, row.attribute}.str().size());
    for (const auto& row : rows) {
        std::string label = TupleRef{row.node, row.attribute}.str();
        out += "  ";
        out += label;
        out.append(width - label.size() + 2, ' ');
        out += fixed6(row.value);
        out += '\n';
    }
}

}  // namespace

std::string render_evaluation_text(const EvaluationReport& report) {
    std::string out;
    render_scored_section("tuple scores", report.tuple_scores, out);
    render_scored_section("node scores", report.node_scores, out);
    out += "goal scores\n";
    std::size_t width = 0;
    for (const auto& goal : report.goal_scores) width = std::max(width, goal.goal.size());
    for (const auto& goal : report.goal_scores) {
        out += "  ";
        out += goal.goal;
        out.append(width - goal.goal.size() + 2, ' ');
        out += fixed6(goal.value);
        out += '\n';
    }
    return out;
}

std::string render_evaluation_records(const EvaluationReport& report) {
    nlohmann::json doc;
    auto scored = [](const std::vector<ScoredTuple>& rows) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& row : rows)
            list.push_back({{"node", row.node.str()},
                            {"attribute", row.attribute},
                            {"value", row.value}});
        return list;
    };
    doc["tuple_scores"] = scored(report.tuple_scores);
    doc["node_scores"] = scored(report.node_scores);
    nlohmann::json goals = nlohmann::json::array();
    for (const auto& goal : report.goal_scores)
        goals.push_back({{"goal", goal.goal}, {"value", goal.value}});
    doc["goal_scores"] = goals;
    return doc.dump(2) + "\n";
}

}  // namespace qm

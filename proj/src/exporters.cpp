#include "qm/exporters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <tuple>

#include "qm/dsl.hpp"

namespace qm {

namespace {

std::vector<std::string> goals_reached(const QualityModel& model, const std::string& attribute) {
    std::vector<std::string> names;
    for (const auto& goal : model.goals)
        for (const auto& basis : goal.basis)
            if (basis == attribute) names.push_back(goal.name);
    return names;
}

void append_goal_names(const QualityModel& model, const std::string& attribute,
                       std::string& out) {
    std::vector<std::string> names = goals_reached(model, attribute);
    if (names.empty()) {
        out += "(none)";
        return;
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
}

bool impact_before(const Impact& a, const Impact& b) {
    return std::tie(a.source.node, a.source.attribute, a.target.node, a.target.attribute) <
           std::tie(b.source.node, b.source.attribute, b.target.node, b.target.attribute);
}

// Human checklist form, "[Font Face | CONSISTENCY]".
std::string spaced_tuple(const std::string& node, const std::string& attribute) {
    return "[" + node + " | " + attribute + "]";
}

}  // namespace

ExportResult export_guideline(const QualityModel& model, const std::optional<Path>& scope) {
    ExportResult result;
    Path scope_path;
    if (scope) {
        RefLookup lookup = resolve_ref(model, Tree::fact, *scope);
        if (!lookup.ok()) {
            result.error = lookup.error;
            return result;
        }
        scope_path = *lookup.path;
    }

    std::string out = "# Guideline: " + model.name + "\n";
    for_each_fact(model, [&](const FactNode& node, const Path& path) {
        if (scope && !path.starts_with(scope_path)) return;
        std::vector<Impact> rules;
        for (const auto& impact : model.impacts)
            if (impact.source.node == path) rules.push_back(impact);
        if (rules.empty()) return;
        std::stable_sort(rules.begin(), rules.end(), impact_before);

        out += "\n## " + path.str() + "\n\n";
        for (const auto& impact : rules) {
            out += "- Ensure " + impact.source.attribute + " of " + node.name;
            out += impact.direction == Direction::positive ? " — benefits " : " — harms ";
            out += impact.target.node.str() + " (" + impact.target.attribute + "); goals: ";
            append_goal_names(model, impact.target.attribute, out);
            out += '\n';
            if (!impact.rationale.empty()) out += "  rationale: " + impact.rationale + "\n";
        }
    });
    result.text = std::move(out);
    return result;
}

std::string export_checklist(const QualityModel& model, const AssessFilter& filter) {
    std::string out = "# Checklist: " + model.name + "\n";
    if (!(filter == AssessFilter{})) {
        out += "filter:";
        bool first = true;
        for (Assessability mode :
             {Assessability::automatic, Assessability::semi, Assessability::manual}) {
            if (!filter.allows(mode)) continue;
            out += first ? " " : ", ";
            out += to_keyword(mode);
            first = false;
        }
        if (first) out += " (none)";
        out += '\n';
    }
    out += '\n';

    struct Row {
        Path path;
        std::string leaf;
        FactAttribution attribution;
    };
    std::vector<Row> rows;
    for_each_fact(model, [&](const FactNode& node, const Path& path) {
        for (const auto& attribution : node.attributed)
            if (filter.allows(attribution.assessability))
                rows.push_back(Row{path, node.name, attribution});
    });
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.path, a.attribution.attribute) <
               std::tie(b.path, b.attribution.attribute);
    });

    for (const auto& row : rows) {
        out += "- [ ] " + spaced_tuple(row.leaf, row.attribution.attribute);
        out += " (" + std::string(to_keyword(row.attribution.assessability)) + ") — ";
        out += row.path.str() + "; impacts: ";
        std::vector<std::string> targets;
        for (const auto& impact : model.impacts)
            if (impact.source.node == row.path &&
                impact.source.attribute == row.attribution.attribute)
                targets.push_back(
                    spaced_tuple(impact.target.node.str(), impact.target.attribute));
        std::sort(targets.begin(), targets.end());
        if (targets.empty()) {
            out += "(none)";
        } else {
            for (std::size_t i = 0; i < targets.size(); ++i) {
                if (i) out += ", ";
                out += targets[i];
            }
        }
        out += '\n';
    }
    return out;
}

std::string export_glossary(const QualityModel& model) {
    struct Entry {
        std::string display;
        std::string description;
    };

    std::map<std::string, int> leaf_count;
    for_each_fact(model,
                  [&](const FactNode& node, const Path&) { ++leaf_count[node.name]; });
    for_each_activity(model,
                      [&](const ActivityNode& node, const Path&) { ++leaf_count[node.name]; });

    std::vector<Entry> entries;
    auto display_name = [&](const std::string& leaf, const Path& path) {
        return leaf_count[leaf] > 1 ? path.str() : leaf;
    };
    for_each_fact(model, [&](const FactNode& node, const Path& path) {
        entries.push_back(Entry{display_name(node.name, path), node.description});
    });
    for_each_activity(model, [&](const ActivityNode& node, const Path& path) {
        entries.push_back(Entry{display_name(node.name, path), node.description});
    });
    for (const auto& attr : model.attributes)
        entries.push_back(Entry{attr.name, attr.description});

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.display, a.description) < std::tie(b.display, b.description);
    });

    std::string out = "# Glossary: " + model.name + "\n\n";
    for (const auto& entry : entries) {
        out += entry.display + " — ";
        out += entry.description.empty() ? "(no description)" : entry.description;
        out += '\n';
    }
    return out;
}

namespace {

std::string dot_quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string edge_weight(double weight) {
    if (std::isfinite(weight) && weight == std::floor(weight)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.1f", weight);
        return buf;
    }
    return format_decimal(weight);
}

template <typename Node>
void graph_tree(const char* prefix, const Node& node, const Path& path, std::string& out) {
    std::string id = std::string(prefix) + ":" + path.str();
    out += "  " + dot_quote(id) + " [label=" + dot_quote(node.name) + "];\n";
    if (path.segments.size() > 1) {
        Path parent = path;
        parent.segments.pop_back();
        out += "  " + dot_quote(std::string(prefix) + ":" + parent.str()) + " -> " +
               dot_quote(id) + " [style=solid];\n";
    }
}

void graph_tuple(const std::string& owner_id, const std::string& attribute, std::string& out) {
    std::string id = owner_id + "|" + attribute;
    out += "  " + dot_quote(id) + " [label=" + dot_quote(attribute) + ", shape=ellipse];\n";
    out += "  " + dot_quote(owner_id) + " -> " + dot_quote(id) + " [style=dotted];\n";
}

}  // namespace

std::string export_graph(const QualityModel& model) {
    std::string out = "digraph " + dot_quote(model.name) + " {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=box];\n";

    for_each_fact(model, [&](const FactNode& node, const Path& path) {
        graph_tree("fact", node, path, out);
        for (const auto& attribution : node.attributed)
            graph_tuple("fact:" + path.str(), attribution.attribute, out);
    });
    for_each_activity(model, [&](const ActivityNode& node, const Path& path) {
        graph_tree("activity", node, path, out);
        for (const auto& attribute : node.attributed)
            graph_tuple("activity:" + path.str(), attribute, out);
    });

    for (const auto& impact : model.impacts) {
        std::string source = "fact:" + impact.source.node.str() + "|" + impact.source.attribute;
        std::string target =
            "activity:" + impact.target.node.str() + "|" + impact.target.attribute;
        out += "  " + dot_quote(source) + " -> " + dot_quote(target) + " [style=dashed, label=" +
               dot_quote(std::string(to_symbol(impact.direction)) + " " +
                         edge_weight(impact.weight)) +
               "];\n";
    }

    out += "}\n";
    return out;
}

GeneratorRegistry GeneratorRegistry::with_builtins() {
    GeneratorRegistry registry;
    registry.register_generator(GeneratorSpec{
        "guideline", "review guideline with one rule per impact, grouped by fact",
        [](const QualityModel& model, const ExportOptions& options) {
            return export_guideline(model, options.scope);
        }});
    registry.register_generator(GeneratorSpec{
        "checklist", "assessment checklist of attributed fact tuples",
        [](const QualityModel& model, const ExportOptions& options) {
            return ExportResult{export_checklist(model, options.assess), {}};
        }});
    registry.register_generator(GeneratorSpec{
        "glossary", "alphabetical listing of facts, activities, and attributes",
        [](const QualityModel& model, const ExportOptions&) {
            return ExportResult{export_glossary(model), {}};
        }});
    registry.register_generator(GeneratorSpec{
        "graph", "DOT digraph of both trees and all impacts",
        [](const QualityModel& model, const ExportOptions&) {
            return ExportResult{export_graph(model), {}};
        }});
    return registry;
}

GeneratorRegistry::RegisterResult GeneratorRegistry::register_generator(GeneratorSpec spec) {
    for (const auto& existing : generators_)
        if (existing.name == spec.name)
            return RegisterResult{false, "duplicate generator '" + spec.name + "'"};
    generators_.push_back(std::move(spec));
    return RegisterResult{};
}

ExportResult GeneratorRegistry::run(std::string_view name, const QualityModel& model,
                                    const ExportOptions& options) const {
    for (const auto& generator : generators_)
        if (generator.name == name) return generator.produce(model, options);
    ExportResult result;
    result.error = "unknown generator '" + std::string(name) + "'";
    return result;
}

std::vector<std::string> GeneratorRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(generators_.size());
    for (const auto& generator : generators_) out.push_back(generator.name);
    return out;
}

}  // namespace qm

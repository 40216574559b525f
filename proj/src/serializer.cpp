#include <charconv>
#include <string>
#include <system_error>

#include "dsl_internal.hpp"
#include "qm/dsl.hpp"
#include "qm/model.hpp"

namespace qm {

std::string format_decimal(double value) {
    char buf[64];
    auto shortest = std::to_chars(buf, buf + sizeof(buf), value);
    std::string out(buf, shortest.ptr);
    if (out.find('e') == std::string::npos && out.find('E') == std::string::npos) return out;
    // The grammar has no exponent form; re-render tiny values as plain decimals.
    auto fixed = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
    if (fixed.ec != std::errc{}) return out;
    return std::string(buf, fixed.ptr);
}

namespace {

void render_path(const Path& path, std::string& out) {
    for (std::size_t i = 0; i < path.segments.size(); ++i) {
        if (i) out += '/';
        out += detail::render_name(path.segments[i]);
    }
}

void render_tuple(const TupleRef& tuple, std::string& out) {
    out += '[';
    render_path(tuple.node, out);
    out += '|';
    out += tuple.attribute;
    out += ']';
}

void render_fact(const FactNode& node, int depth, std::string& out) {
    out.append(2 * depth, ' ');
    out += "fact ";
    out += detail::render_name(node.name);
    if (!node.description.empty()) {
        out += ' ';
        out += detail::quote_string(node.description);
    }
    if (node.attributed.empty() && node.children.empty()) {
        out += '\n';
        return;
    }
    out += " {\n";
    for (const auto& attribution : node.attributed) {
        out.append(2 * depth + 2, ' ');
        out += "has ";
        out += attribution.attribute;
        out += " assess ";
        out += to_keyword(attribution.assessability);
        out += '\n';
    }
    for (const auto& child : node.children) render_fact(child, depth + 1, out);
    out.append(2 * depth, ' ');
    out += "}\n";
}

void render_activity(const ActivityNode& node, int depth, std::string& out) {
    out.append(2 * depth, ' ');
    out += "activity ";
    out += detail::render_name(node.name);
    if (!node.description.empty()) {
        out += ' ';
        out += detail::quote_string(node.description);
    }
    if (node.attributed.empty() && node.children.empty()) {
        out += '\n';
        return;
    }
    out += " {\n";
    for (const auto& attribute : node.attributed) {
        out.append(2 * depth + 2, ' ');
        out += "has ";
        out += attribute;
        out += '\n';
    }
    for (const auto& child : node.children) render_activity(child, depth + 1, out);
    out.append(2 * depth, ' ');
    out += "}\n";
}

}  // namespace

std::string serialize(const QualityModel& model) {
    std::string out = "model ";
    out += detail::quote_string(model.name);
    if (!model.description.empty()) {
        out += ' ';
        out += detail::quote_string(model.description);
    }
    out += '\n';

    std::string section;
    auto flush = [&] {
        if (section.empty()) return;
        out += '\n';
        out += section;
        section.clear();
    };

    for (const auto& attr : model.attributes) {
        section += "attribute ";
        section += attr.name;
        if (attr.applies_to != Applicability::both) {
            section += " on ";
            section += to_keyword(attr.applies_to);
        }
        if (!attr.description.empty()) {
            section += ' ';
            section += detail::quote_string(attr.description);
        }
        section += '\n';
    }
    flush();

    for (const auto& root : model.activity_roots) render_activity(root, 0, section);
    flush();

    for (const auto& root : model.fact_roots) render_fact(root, 0, section);
    flush();

    for (const auto& impact : model.impacts) {
        section += "impact ";
        render_tuple(impact.source, section);
        section += " -> ";
        render_tuple(impact.target, section);
        section += ' ';
        section += to_symbol(impact.direction);
        if (impact.weight != 1.0) {
            section += " weight ";
            section += format_decimal(impact.weight);
        }
        if (!impact.rationale.empty()) {
            section += ' ';
            section += detail::quote_string(impact.rationale);
        }
        section += '\n';
    }
    flush();

    for (const auto& goal : model.goals) {
        section += "goal ";
        section += goal.name;
        for (std::size_t i = 0; i < goal.basis.size(); ++i) {
            section += i ? ", " : " = ";
            section += goal.basis[i];
        }
        if (!goal.description.empty()) {
            section += ' ';
            section += detail::quote_string(goal.description);
        }
        section += '\n';
    }
    flush();

    return out;
}

}  // namespace qm

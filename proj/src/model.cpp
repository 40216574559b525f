#include "qm/model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qm {

const char* to_keyword(Assessability a) {
    switch (a) {
        case Assessability::automatic: return "auto";
        case Assessability::semi: return "semi";
        case Assessability::manual: return "manual";
    }
    return "manual";
}

const char* to_keyword(Applicability a) {
    switch (a) {
        case Applicability::fact: return "facts";
        case Applicability::activity: return "activities";
        case Applicability::both: return "both";
    }
    return "both";
}

const char* to_symbol(Direction d) {
    return d == Direction::positive ? "+" : "-";
}

const char* to_string(Tree t) {
    return t == Tree::fact ? "fact" : "activity";
}

Path Path::split(std::string_view text) {
    Path path;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t slash = text.find('/', start);
        if (slash == std::string_view::npos) {
            path.segments.emplace_back(text.substr(start));
            break;
        }
        path.segments.emplace_back(text.substr(start, slash - start));
        start = slash + 1;
    }
    return path;
}

std::string Path::str() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i) out += '/';
        out += segments[i];
    }
    return out;
}

bool Path::starts_with(const Path& prefix) const {
    if (prefix.segments.size() > segments.size()) return false;
    for (std::size_t i = 0; i < prefix.segments.size(); ++i)
        if (segments[i] != prefix.segments[i]) return false;
    return true;
}

std::string TupleRef::str() const {
    return "[" + node.str() + "|" + attribute + "]";
}

const FactAttribution* FactNode::find_attribution(std::string_view attribute) const {
    for (const auto& a : attributed)
        if (a.attribute == attribute) return &a;
    return nullptr;
}

bool ActivityNode::has_attribute(std::string_view attribute) const {
    return std::find(attributed.begin(), attributed.end(), attribute) != attributed.end();
}

const AttributeDef* QualityModel::find_attribute(std::string_view name) const {
    for (const auto& a : attributes)
        if (a.name == name) return &a;
    return nullptr;
}

const GoalDef* QualityModel::find_goal(std::string_view name) const {
    for (const auto& g : goals)
        if (g.name == name) return &g;
    return nullptr;
}

ModelStats stats(const QualityModel& model) {
    ModelStats s;
    s.attributes = model.attributes.size();
    s.impacts = model.impacts.size();
    s.goals = model.goals.size();
    for_each_fact(model, [&](const FactNode& node, const Path&) {
        ++s.facts;
        s.attributed_facts += node.attributed.size();
    });
    for_each_activity(model, [&](const ActivityNode& node, const Path&) {
        ++s.activities;
        s.attributed_activities += node.attributed.size();
    });
    return s;
}

std::string ResolveError::message() const {
    std::string out = "no ";
    out += to_string(tree);
    out += " at path '" + requested.str() + "'";
    if (!nearest.empty()) out += " (nearest resolvable prefix: '" + nearest.str() + "')";
    return out;
}

namespace {

template <typename Node>
const Node* resolve_in(const std::vector<Node>& roots, Tree tree, const Path& path,
                       ResolveError* error) {
    const std::vector<Node>* level = &roots;
    const Node* current = nullptr;
    Path matched;
    for (const auto& segment : path.segments) {
        const Node* next = nullptr;
        for (const auto& candidate : *level) {
            if (candidate.name == segment) {
                next = &candidate;
                break;
            }
        }
        if (!next) {
            if (error) *error = ResolveError{tree, path, matched};
            return nullptr;
        }
        matched.segments.push_back(segment);
        current = next;
        level = &next->children;
    }
    if (!current && error) *error = ResolveError{tree, path, matched};
    return current;
}

template <typename Node>
RefLookup resolve_ref_in(const std::vector<Node>& roots, Tree tree, const Path& ref) {
    RefLookup result;
    if (ref.empty() || ref.segments.front().empty()) {
        result.error = std::string("empty ") + to_string(tree) + " path";
        return result;
    }
    ResolveError err;
    if (resolve_in(roots, tree, ref, &err)) {
        result.path = ref;
        return result;
    }
    if (ref.segments.size() == 1) {
        // Leaf-name shorthand: unique match anywhere in the tree.
        std::vector<Path> matches;
        Path prefix;
        for (const auto& root : roots) {
            detail::walk_tree(root, prefix, [&](const Node& node, const Path& at) {
                if (node.name == ref.segments.front()) matches.push_back(at);
            });
        }
        if (matches.size() == 1) {
            result.path = matches.front();
            return result;
        }
        if (matches.size() > 1) {
            result.error = std::string("ambiguous ") + to_string(tree) + " name '" +
                           ref.segments.front() + "' (matches ";
            for (std::size_t i = 0; i < matches.size(); ++i) {
                if (i) result.error += ", ";
                result.error += matches[i].str();
            }
            result.error += "); use a full path";
            return result;
        }
    }
    result.error = std::string("unresolvable ") + to_string(tree) + " path '" + ref.str() + "'";
    if (!err.nearest.empty())
        result.error += " (nearest resolvable prefix: '" + err.nearest.str() + "')";
    return result;
}

}  // namespace

const FactNode* resolve_fact(const QualityModel& model, const Path& path, ResolveError* error) {
    return resolve_in(model.fact_roots, Tree::fact, path, error);
}

const ActivityNode* resolve_activity(const QualityModel& model, const Path& path,
                                     ResolveError* error) {
    return resolve_in(model.activity_roots, Tree::activity, path, error);
}

RefLookup resolve_ref(const QualityModel& model, Tree tree, const Path& ref) {
    if (tree == Tree::fact) return resolve_ref_in(model.fact_roots, tree, ref);
    return resolve_ref_in(model.activity_roots, tree, ref);
}

AddImpactResult add_impact(const QualityModel& model, const TupleRef& source,
                           const TupleRef& target, Direction direction, double weight,
                           std::string rationale) {
    AddImpactResult result;
    auto fail = [&](AddImpactStatus status, std::string message) {
        result.status = status;
        result.message = std::move(message);
        return result;
    };

    if (!(weight > 0.0) || weight > 1.0)
        return fail(AddImpactStatus::invalid_weight, "impact weight must lie in (0, 1]");

    ResolveError err;
    const FactNode* fact = resolve_fact(model, source.node, &err);
    if (!fact) return fail(AddImpactStatus::source_not_found, err.message());
    if (!fact->find_attribution(source.attribute))
        return fail(AddImpactStatus::source_attribute_not_attached,
                    "fact '" + source.node.str() + "' does not carry attribute '" +
                        source.attribute + "'");

    const ActivityNode* activity = resolve_activity(model, target.node, &err);
    if (!activity) return fail(AddImpactStatus::target_not_found, err.message());
    if (!activity->has_attribute(target.attribute))
        return fail(AddImpactStatus::target_attribute_not_attached,
                    "activity '" + target.node.str() + "' does not carry attribute '" +
                        target.attribute + "'");

    for (const auto& impact : model.impacts) {
        if (impact.source == source && impact.target == target)
            return fail(AddImpactStatus::duplicate_impact,
                        "duplicate impact " + source.str() + " -> " + target.str());
    }

    QualityModel updated = model;
    updated.impacts.push_back(Impact{source, target, direction, weight, std::move(rationale)});
    result.model = std::move(updated);
    return result;
}

}  // namespace qm

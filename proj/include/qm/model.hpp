#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Core data model: a two-dimensional quality model made of a fact tree, an
// activity tree, attribute definitions, signed impacts between attributed
// tuples, and goal definitions over activity attributes. Models are plain
// values; once built they are treated as immutable and can be shared across
// threads freely.

namespace qm {

enum class Tree { fact, activity };

enum class Applicability { fact, activity, both };

enum class Assessability { automatic, semi, manual };

enum class Direction { positive, negative };

const char* to_keyword(Assessability a);
const char* to_keyword(Applicability a);
const char* to_symbol(Direction d);
const char* to_string(Tree t);

// Root-first node address, rendered "A/B/C". Node names never contain '/'.
struct Path {
    std::vector<std::string> segments;

    Path() = default;
    explicit Path(std::vector<std::string> segs) : segments(std::move(segs)) {}

    static Path split(std::string_view text);

    std::string str() const;
    bool empty() const { return segments.empty(); }
    bool starts_with(const Path& prefix) const;

    bool operator==(const Path&) const = default;
    auto operator<=>(const Path&) const = default;
};

struct AttributeDef {
    std::string name;
    Applicability applies_to = Applicability::both;
    std::string description;

    bool operator==(const AttributeDef&) const = default;
};

struct FactAttribution {
    std::string attribute;
    Assessability assessability = Assessability::manual;

    bool operator==(const FactAttribution&) const = default;
};

struct FactNode {
    std::string name;
    std::string description;
    std::vector<FactAttribution> attributed;
    std::vector<FactNode> children;

    const FactAttribution* find_attribution(std::string_view attribute) const;

    bool operator==(const FactNode&) const = default;
};

struct ActivityNode {
    std::string name;
    std::string description;
    std::vector<std::string> attributed;
    std::vector<ActivityNode> children;

    bool has_attribute(std::string_view attribute) const;

    bool operator==(const ActivityNode&) const = default;
};

// A (node, attribute) pair, rendered "[A/B|ATTR]". The unit impacts connect.
struct TupleRef {
    Path node;
    std::string attribute;

    std::string str() const;

    bool operator==(const TupleRef&) const = default;
    auto operator<=>(const TupleRef&) const = default;
};

struct Impact {
    TupleRef source;  // fact side
    TupleRef target;  // activity side
    Direction direction = Direction::positive;
    double weight = 1.0;  // in (0, 1]
    std::string rationale;

    bool operator==(const Impact&) const = default;
};

struct GoalDef {
    std::string name;
    std::vector<std::string> basis;  // activity attribute names; may be empty
    std::string description;

    bool operator==(const GoalDef&) const = default;
};

struct QualityModel {
    std::string name;
    std::string description;
    std::vector<AttributeDef> attributes;
    std::vector<FactNode> fact_roots;
    std::vector<ActivityNode> activity_roots;
    std::vector<Impact> impacts;
    std::vector<GoalDef> goals;

    const AttributeDef* find_attribute(std::string_view name) const;
    const GoalDef* find_goal(std::string_view name) const;

    bool operator==(const QualityModel&) const = default;
};

struct ModelStats {
    std::size_t facts = 0;
    std::size_t activities = 0;
    std::size_t attributes = 0;
    std::size_t attributed_facts = 0;       // (fact, attribute) pairs
    std::size_t attributed_activities = 0;  // (activity, attribute) pairs
    std::size_t impacts = 0;
    std::size_t goals = 0;

    bool operator==(const ModelStats&) const = default;
};

ModelStats stats(const QualityModel& model);

// Strict full-path lookup. Never matches by bare leaf name.
struct ResolveError {
    Tree tree = Tree::fact;
    Path requested;
    Path nearest;  // longest resolvable prefix, possibly empty

    std::string message() const;
};

const FactNode* resolve_fact(const QualityModel& model, const Path& path,
                             ResolveError* error = nullptr);
const ActivityNode* resolve_activity(const QualityModel& model, const Path& path,
                                     ResolveError* error = nullptr);

// Reference lookup used by the DSL, analysis, and the CLI: an exact full path
// wins; otherwise a single-segment reference matches a node by leaf name when
// that name is unique in the tree. Failure and ambiguity produce a message
// suitable for end users.
struct RefLookup {
    std::optional<Path> path;
    std::string error;  // empty on success

    bool ok() const { return path.has_value(); }
};

RefLookup resolve_ref(const QualityModel& model, Tree tree, const Path& ref);

enum class AddImpactStatus {
    ok,
    source_not_found,
    target_not_found,
    source_attribute_not_attached,
    target_attribute_not_attached,
    duplicate_impact,
    invalid_weight,
};

struct AddImpactResult {
    AddImpactStatus status = AddImpactStatus::ok;
    std::string message;  // empty on success
    std::optional<QualityModel> model;

    bool ok() const { return status == AddImpactStatus::ok; }
};

// Returns a copy of the model with the impact appended. Source and target must
// be existing attributed tuples; duplicates (same source and target) are
// rejected; weight must lie in (0, 1].
AddImpactResult add_impact(const QualityModel& model, const TupleRef& source,
                           const TupleRef& target, Direction direction, double weight = 1.0,
                           std::string rationale = {});

namespace detail {

template <typename Node, typename Fn>
void walk_tree(const Node& node, Path& prefix, Fn&& fn) {
    prefix.segments.push_back(node.name);
    fn(node, const_cast<const Path&>(prefix));
    for (const auto& child : node.children) walk_tree(child, prefix, fn);
    prefix.segments.pop_back();
}

}  // namespace detail

// Preorder traversal over all facts (or activities) with the full path of
// each node.
template <typename Fn>
void for_each_fact(const QualityModel& model, Fn&& fn) {
    Path prefix;
    for (const auto& root : model.fact_roots) detail::walk_tree(root, prefix, fn);
}

template <typename Fn>
void for_each_activity(const QualityModel& model, Fn&& fn) {
    Path prefix;
    for (const auto& root : model.activity_roots) detail::walk_tree(root, prefix, fn);
}

}  // namespace qm

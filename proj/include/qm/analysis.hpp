#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qm/dsl.hpp"
#include "qm/model.hpp"

// Read-only analyses over a model: impact tracing, per-goal reporting, and
// quantified evaluation against an assessment.

namespace qm {

struct TraceEntry {
    Impact impact;
    std::vector<std::string> goal_names;  // goals whose basis contains the target attribute

    bool operator==(const TraceEntry&) const = default;
};

struct TraceResult {
    std::optional<std::vector<TraceEntry>> entries;
    std::string error;

    bool ok() const { return entries.has_value(); }
};

// All impacts whose source lies at `fact_ref` or below, ordered by
// (source path, target path). The reference may be a full path or a unique
// leaf name.
TraceResult trace_fact(const QualityModel& model, const Path& fact_ref);

struct GoalReport {
    std::string goal;
    std::vector<std::string> basis;
    std::vector<Impact> entries;  // impacts whose target attribute is in the basis
    std::string note;             // set when the basis is empty

    bool operator==(const GoalReport&) const = default;
};

struct GoalReportResult {
    std::optional<GoalReport> report;
    std::string error;

    bool ok() const { return report.has_value(); }
};

GoalReportResult goal_report(const QualityModel& model, std::string_view goal_name);

struct ScoredTuple {
    Path node;
    std::string attribute;
    double value = 0.0;

    bool operator==(const ScoredTuple&) const = default;
};

struct GoalScore {
    std::string goal;
    double value = 0.0;

    bool operator==(const GoalScore&) const = default;
};

// Scores are linear in the assessment values:
//   tuple score  = sum over impacts targeting the tuple of
//                  sign * weight * assessment(source), unassessed sources = 0
//   node score   = frequency-weighted mean of the node's own tuple score and
//                  its children's node scores; a node's weight is its assessed
//                  FREQUENCY value when present, else 1
//   goal score   = mean of the root node scores over the goal's basis
// FREQUENCY itself is never scored; it only weights the roll-up.
struct EvaluationReport {
    std::vector<ScoredTuple> tuple_scores;  // attributed activity tuples, sorted by (path, attr)
    std::vector<ScoredTuple> node_scores;   // every activity node x scorable attribute
    std::vector<GoalScore> goal_scores;     // in goal declaration order

    bool operator==(const EvaluationReport&) const = default;
};

struct EvaluateResult {
    std::optional<EvaluationReport> report;
    std::string error;

    bool ok() const { return report.has_value(); }
};

// Bindings name fact tuples (degree of satisfaction) or activity FREQUENCY
// tuples (roll-up weights); anything else is an error.
EvaluateResult evaluate(const QualityModel& model, const Assessment& assessment);

// One line per entry, ending with "; goals: <names>".
std::string render_trace(const std::vector<TraceEntry>& entries);

std::string render_goal_report(const GoalReport& report);

// Aligned three-section table with six-decimal scores.
std::string render_evaluation_text(const EvaluationReport& report);

// Single JSON document carrying all three score sections.
std::string render_evaluation_records(const EvaluationReport& report);

}  // namespace qm

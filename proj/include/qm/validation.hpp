#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qm/model.hpp"

// Advisory well-formedness checks over parsed models. Structural breakage is
// already rejected by the parser, so everything here is WARNING or INFO and
// carries a stable code that tools may match on.

namespace qm {

enum class Severity { info, warning, error };

const char* to_string(Severity s);
std::optional<Severity> parse_severity(std::string_view text);

// True when `s` is at least as severe as `threshold`.
bool at_least(Severity s, Severity threshold);

struct Diagnostic {
    std::string code;  // W001..W005, I101, I102
    Severity severity = Severity::warning;
    std::string subject;  // node path, tuple, impact, attribute, or goal name
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

// Deterministically ordered: fact-side findings, then activity-side, then
// model-level ones; within a group by subject path, then code.
//
//   W001  attributed fact tuple with no outgoing impact
//   W002  fact whose subtree carries no attribute at all ("inert fact")
//   W003  attributed activity tuple never targeted by an impact
//   W004  declared attribute attached to no node
//   W005  impact without a rationale
//   I101  goal with an empty basis
//   I102  activity attribute in no goal's basis
std::vector<Diagnostic> check(const QualityModel& model);

// One line per diagnostic: "CODE SEVERITY subject: message".
std::string render_text(const std::vector<Diagnostic>& diagnostics);

// One JSON object per line with the four fields.
std::string render_records(const std::vector<Diagnostic>& diagnostics);

}  // namespace qm

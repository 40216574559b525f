#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qm/model.hpp"

// Textual model language (.qmm) and assessment files (.qma). Parsing returns
// either a structurally valid model or the complete list of positioned
// errors; serialization emits the canonical form, which parses back to a
// structurally identical model.

namespace qm {

struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based, in bytes
    int length = 0;
};

struct ParseError {
    SourceSpan span;
    std::string expected;  // what was required at the span, or a full problem statement
    std::string found;     // offending text; empty when `expected` stands alone

    std::string message() const;
};

struct ParseResult {
    std::optional<QualityModel> model;
    std::vector<ParseError> errors;

    bool ok() const { return model.has_value(); }
};

// Parses a model file. Reference errors (undeclared attributes, unresolvable
// or duplicate impact endpoints, duplicate sibling names) are parse-time
// failures, so a returned model always satisfies the structural invariants.
ParseResult parse(std::string_view text);

// Same, with the standard attribute/goal prelude made available to the model.
ParseResult parse_with_prelude(std::string_view text);

// The standard prelude: the built-in fact and activity attributes plus the
// four usage goals. A statement fragment, not a complete model file.
std::string_view prelude_text();

// Canonical text form: attribute definitions, then activities, facts,
// impacts, goals; 2-space indentation; names quoted only when needed.
// Deterministic, and parse(serialize(m)) == m for every valid model.
std::string serialize(const QualityModel& model);

// Shortest decimal rendering that parses back to exactly the same value.
std::string format_decimal(double value);

// External degree-of-satisfaction values for attributed tuples, in [0, 1].
// Node references may use leaf-name shorthand; they are resolved against a
// model at evaluation time, not here.
struct Assessment {
    struct Binding {
        Path node;
        std::string attribute;
        double value = 0.0;

        bool operator==(const Binding&) const = default;
    };

    std::vector<Binding> bindings;

    bool operator==(const Assessment&) const = default;
};

struct AssessmentParseResult {
    std::optional<Assessment> assessment;
    std::vector<ParseError> errors;

    bool ok() const { return assessment.has_value(); }
};

// Line format: `<node-path> | <ATTRIBUTE> = <decimal in [0,1]>`, `#` comments.
AssessmentParseResult parse_assessment(std::string_view text);

}  // namespace qm

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qm/model.hpp"

// Deterministic document generators: identical model and options yield
// byte-identical output, so every format is golden-file testable. Additional
// generators plug in through GeneratorRegistry.

namespace qm {

struct AssessFilter {
    bool automatic = true;
    bool semi = true;
    bool manual = true;

    bool allows(Assessability a) const {
        switch (a) {
            case Assessability::automatic: return automatic;
            case Assessability::semi: return semi;
            case Assessability::manual: return manual;
        }
        return true;
    }

    bool operator==(const AssessFilter&) const = default;
};

struct ExportOptions {
    std::optional<Path> scope;  // guideline: restrict to one fact subtree
    AssessFilter assess;        // checklist: assessability filter
};

struct ExportResult {
    std::optional<std::string> text;
    std::string error;

    bool ok() const { return text.has_value(); }
};

// Review guideline: one rule per impact, grouped under fact-path headings in
// depth-first order. With a scope, only impacts from that subtree appear.
ExportResult export_guideline(const QualityModel& model,
                              const std::optional<Path>& scope = std::nullopt);

// Review checklist: one checkbox per attributed fact tuple passing the
// assessability filter, sorted by path, citing the impacted activities.
std::string export_checklist(const QualityModel& model, const AssessFilter& filter = {});

// Alphabetical listing of every fact, activity, and attribute with its
// description. Leaf names are used unless ambiguous, then full paths.
std::string export_glossary(const QualityModel& model);

// DOT digraph: solid tree edges, dotted tuple attachments, dashed impact
// edges labeled with sign and weight. Node identifiers are full paths.
std::string export_graph(const QualityModel& model);

struct GeneratorSpec {
    std::string name;
    std::string summary;
    std::function<ExportResult(const QualityModel&, const ExportOptions&)> produce;
};

class GeneratorRegistry {
  public:
    struct RegisterResult {
        bool ok = true;
        std::string error;
    };

    // Registry preloaded with guideline, checklist, glossary, and graph.
    static GeneratorRegistry with_builtins();

    RegisterResult register_generator(GeneratorSpec spec);
    ExportResult run(std::string_view name, const QualityModel& model,
                     const ExportOptions& options) const;
    std::vector<std::string> names() const;  // registration order

  private:
    std::vector<GeneratorSpec> generators_;
};

}  // namespace qm

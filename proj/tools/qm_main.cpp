#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qm/analysis.hpp"
#include "qm/dsl.hpp"
#include "qm/exporters.hpp"
#include "qm/model.hpp"
#include "qm/validation.hpp"

// Exit codes: 0 ok, 1 diagnostics at the deny threshold or an analysis error,
// 2 usage or parse errors.

namespace {

constexpr int exit_ok = 0;
constexpr int exit_findings = 1;
constexpr int exit_usage = 2;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return buffer.str();
}

struct ModelArgs {
    std::string model_path;
    bool no_prelude = false;
    std::string out_path;
};

void add_model_args(CLI::App* cmd, ModelArgs& args) {
    cmd->add_option("model", args.model_path, "model file (.qmm)")->required();
    cmd->add_flag("--no-prelude", args.no_prelude,
                  "do not preload the standard attribute/goal prelude");
    cmd->add_option("--out", args.out_path, "write output to a file instead of stdout");
}

// Returns exit_ok and fills `model`, or prints why and returns the exit code.
int load_model(const ModelArgs& args, qm::QualityModel& model) {
    std::optional<std::string> text = read_file(args.model_path);
    if (!text) {
        std::fprintf(stderr, "cannot read '%s'\n", args.model_path.c_str());
        return exit_usage;
    }
    qm::ParseResult parsed =
        args.no_prelude ? qm::parse(*text) : qm::parse_with_prelude(*text);
    if (!parsed.ok()) {
        for (const auto& error : parsed.errors)
            std::fprintf(stderr, "%s:%s\n", args.model_path.c_str(), error.message().c_str());
        return exit_usage;
    }
    model = std::move(*parsed.model);
    return exit_ok;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return exit_ok;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "cannot write '%s'\n", out_path.c_str());
        return exit_usage;
    }
    out << text;
    out.flush();
    if (!out) {
        std::fprintf(stderr, "cannot write '%s'\n", out_path.c_str());
        return exit_usage;
    }
    return exit_ok;
}

int run_check(const ModelArgs& args, const std::string& deny, const std::string& format) {
    std::optional<qm::Severity> threshold = qm::parse_severity(deny);
    if (!threshold) {
        std::fprintf(stderr, "invalid --deny severity '%s'\n", deny.c_str());
        return exit_usage;
    }
    if (format != "text" && format != "records") {
        std::fprintf(stderr, "invalid --format '%s' (expected text or records)\n",
                     format.c_str());
        return exit_usage;
    }
    qm::QualityModel model;
    if (int code = load_model(args, model)) return code;
    std::vector<qm::Diagnostic> diagnostics = qm::check(model);
    std::string rendered = format == "records" ? qm::render_records(diagnostics)
                                               : qm::render_text(diagnostics);
    if (int code = emit(rendered, args.out_path)) return code;
    for (const auto& diagnostic : diagnostics)
        if (qm::at_least(diagnostic.severity, *threshold)) return exit_findings;
    return exit_ok;
}

int run_stats(const ModelArgs& args) {
    qm::QualityModel model;
    if (int code = load_model(args, model)) return code;
    qm::ModelStats counts = qm::stats(model);
    std::string out;
    auto line = [&out](const char* name, std::size_t value) {
        out += name;
        out += ": ";
        out += std::to_string(value);
        out += '\n';
    };
    line("facts", counts.facts);
    line("activities", counts.activities);
    line("attributes", counts.attributes);
    line("attributed_facts", counts.attributed_facts);
    line("attributed_activities", counts.attributed_activities);
    line("impacts", counts.impacts);
    line("goals", counts.goals);
    return emit(out, args.out_path);
}

int run_trace(const ModelArgs& args, const std::string& fact_path) {
    qm::QualityModel model;
    if (int code = load_model(args, model)) return code;
    qm::TraceResult result = qm::trace_fact(model, qm::Path::split(fact_path));
    if (!result.ok()) {
        std::fprintf(stderr, "%s\n", result.error.c_str());
        return exit_findings;
    }
    return emit(qm::render_trace(*result.entries), args.out_path);
}

int run_goal(const ModelArgs& args, const std::string& goal_name) {
    qm::QualityModel model;
    if (int code = load_model(args, model)) return code;
    qm::GoalReportResult result = qm::goal_report(model, goal_name);
    if (!result.ok()) {
        std::fprintf(stderr, "%s\n", result.error.c_str());
        return exit_findings;
    }
    return emit(qm::render_goal_report(*result.report), args.out_path);
}

int run_eval(const ModelArgs& args, const std::string& assessment_path,
             const std::string& format) {
    if (format != "text" && format != "records") {
        std::fprintf(stderr, "invalid --format '%s' (expected text or records)\n",
                     format.c_str());
        return exit_usage;
    }
    qm::QualityModel model;
    if (int code = load_model(args, model)) return code;
    std::optional<std::string> text = read_file(assessment_path);
    if (!text) {
        std::fprintf(stderr, "cannot read '%s'\n", assessment_path.c_str());
        return exit_usage;
    }
    qm::AssessmentParseResult parsed = qm::parse_assessment(*text);
    if (!parsed.ok()) {
        for (const auto& error : parsed.errors)
            std::fprintf(stderr, "%s:%s\n", assessment_path.c_str(), error.message().c_str());
        return exit_usage;
    }
    qm::EvaluateResult result = qm::evaluate(model, *parsed.assessment);
    if (!result.ok()) {
        std::fprintf(stderr, "%s\n", result.error.c_str());
        return exit_findings;
    }
    std::string rendered = format == "records"
                               ? qm::render_evaluation_records(*result.report)
                               : qm::render_evaluation_text(*result.report);
    return emit(rendered, args.out_path);
}

int run_export(const ModelArgs& args, const std::string& format, const std::string& scope,
               const std::vector<std::string>& assess_filter) {
    qm::GeneratorRegistry registry = qm::GeneratorRegistry::with_builtins();
    bool known = false;
    for (const auto& name : registry.names()) known = known || name == format;
    if (!known) {
        std::fprintf(stderr, "unknown generator '%s'\n", format.c_str());
        return exit_usage;
    }

    qm::ExportOptions options;
    if (!scope.empty()) options.scope = qm::Path::split(scope);
    if (!assess_filter.empty()) {
        options.assess = qm::AssessFilter{false, false, false};
        for (const auto& mode : assess_filter) {
            if (mode == "auto") {
                options.assess.automatic = true;
            } else if (mode == "semi") {
                options.assess.semi = true;
            } else if (mode == "manual") {
                options.assess.manual = true;
            } else {
                std::fprintf(stderr,
                             "invalid --assess-filter value '%s' (expected auto, semi, manual)\n",
                             mode.c_str());
                return exit_usage;
            }
        }
    }

    qm::QualityModel model;
    if (int code = load_model(args, model)) return code;
    qm::ExportResult result = registry.run(format, model, options);
    if (!result.ok()) {
        std::fprintf(stderr, "%s\n", result.error.c_str());
        return exit_findings;
    }
    return emit(*result.text, args.out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quality meta-model toolkit: check, analyze, and export .qmm models"};
    app.require_subcommand(1);

    ModelArgs check_args;
    std::string check_deny = "error";
    std::string check_format = "text";
    CLI::App* check = app.add_subcommand("check", "run well-formedness diagnostics");
    add_model_args(check, check_args);
    check->add_option("--deny", check_deny, "fail (exit 1) at this severity or above");
    check->add_option("--format", check_format, "text or records");

    ModelArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "print model counters");
    add_model_args(stats, stats_args);

    ModelArgs trace_args;
    std::string trace_path;
    CLI::App* trace = app.add_subcommand("trace", "list impacts from a fact subtree");
    add_model_args(trace, trace_args);
    trace->add_option("fact", trace_path, "fact path or unique leaf name")->required();

    ModelArgs goal_args;
    std::string goal_name;
    CLI::App* goal = app.add_subcommand("goal", "list impacts reaching a goal");
    add_model_args(goal, goal_args);
    goal->add_option("goal", goal_name, "goal name")->required();

    ModelArgs eval_args;
    std::string eval_assessment;
    std::string eval_format = "text";
    CLI::App* eval = app.add_subcommand("eval", "score the model against an assessment");
    add_model_args(eval, eval_args);
    eval->add_option("assessment", eval_assessment, "assessment file (.qma)")->required();
    eval->add_option("--format", eval_format, "text or records");

    ModelArgs export_args;
    std::string export_format;
    std::string export_scope;
    std::vector<std::string> export_assess;
    CLI::App* exporter = app.add_subcommand("export", "generate a review document");
    add_model_args(exporter, export_args);
    exporter->add_option("--format", export_format, "guideline, checklist, glossary, or graph")
        ->required();
    exporter->add_option("--scope", export_scope, "restrict guideline to one fact subtree");
    exporter
        ->add_option("--assess-filter", export_assess,
                     "checklist assessability filter (auto, semi, manual)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (check->parsed()) return run_check(check_args, check_deny, check_format);
    if (stats->parsed()) return run_stats(stats_args);
    if (trace->parsed()) return run_trace(trace_args, trace_path);
    if (goal->parsed()) return run_goal(goal_args, goal_name);
    if (eval->parsed()) return run_eval(eval_args, eval_assessment, eval_format);
    if (exporter->parsed()) return run_export(export_args, export_format, export_scope,
                                              export_assess);
    return exit_usage;
}

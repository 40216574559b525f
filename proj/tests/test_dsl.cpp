#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qm/dsl.hpp"
#include "qm/model.hpp"
#include "random_model.hpp"

using namespace qm;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool any_error_contains(const std::vector<ParseError>& errors, const std::string& needle) {
    for (const auto& error : errors)
        if (error.message().find(needle) != std::string::npos) return true;
    return false;
}

std::string first_error(const std::vector<ParseError>& errors) {
    return errors.empty() ? std::string() : errors[0].message();
}

const char* kSmallModel =
    "model \"M\"\n"
    "attribute DURATION on activities\n"
    "activity Reading { has DURATION }\n"
    "attribute CONSISTENCY on facts\n"
    "fact \"Font Face\" { has CONSISTENCY assess auto }\n"
    "impact [\"Font Face\"|CONSISTENCY] -> [Reading|DURATION] +\n";

}  // namespace

TEST_SUITE("dsl.parse") {
    TEST_CASE("single impact model parses into resolved tuples") {
        ParseResult result = parse(kSmallModel);
        REQUIRE_MESSAGE(result.ok(), first_error(result.errors));
        const QualityModel& model = *result.model;

        CHECK(model.name == "M");
        ModelStats counted = stats(model);
        CHECK(counted.facts == 1);
        CHECK(counted.activities == 1);
        CHECK(counted.impacts == 1);

        REQUIRE(model.fact_roots.size() == 1);
        CHECK(model.fact_roots[0].name == "Font Face");
        REQUIRE(model.fact_roots[0].attributed.size() == 1);
        CHECK(model.fact_roots[0].attributed[0].attribute == "CONSISTENCY");
        CHECK(model.fact_roots[0].attributed[0].assessability == Assessability::automatic);

        REQUIRE(model.impacts.size() == 1);
        const Impact& impact = model.impacts[0];
        CHECK(impact.source.str() == "[Font Face|CONSISTENCY]");
        CHECK(impact.target.str() == "[Reading|DURATION]");
        CHECK(impact.direction == Direction::positive);
        CHECK(impact.weight == 1.0);
        CHECK(impact.rationale.empty());
    }

    TEST_CASE("bare header yields an empty model") {
        ParseResult result = parse("model \"Empty\"");
        REQUIRE(result.ok());
        ModelStats counted = stats(*result.model);
        CHECK(counted.facts == 0);
        CHECK(counted.activities == 0);
        CHECK(counted.impacts == 0);
        CHECK(counted.attributes == 0);
        CHECK(counted.goals == 0);
    }

    TEST_CASE("impact endpoints must resolve") {
        ParseResult result = parse(
            "model \"M\"\n"
            "attribute EXISTENCE on facts\n"
            "attribute DURATION on activities\n"
            "activity A { has DURATION }\n"
            "fact F { has EXISTENCE assess auto }\n"
            "impact [Ghost|EXISTENCE] -> [A|DURATION] +\n");
        CHECK_FALSE(result.ok());
        CHECK(any_error_contains(result.errors, "unresolvable fact path 'Ghost'"));
    }

    TEST_CASE("leaf shorthand resolves and ambiguity is rejected") {
        const char* text =
            "model \"M\"\n"
            "attribute EXISTENCE on facts\n"
            "attribute DURATION on activities\n"
            "activity Use { activity Reading { has DURATION } }\n"
            "fact Outer { fact Leaf { has EXISTENCE assess auto } }\n"
            "impact [Leaf|EXISTENCE] -> [Reading|DURATION] +\n";
        ParseResult result = parse(text);
        REQUIRE(result.ok());
        CHECK(result.model->impacts[0].source.node.str() == "Outer/Leaf");
        CHECK(result.model->impacts[0].target.node.str() == "Use/Reading");

        ParseResult ambiguous = parse(
            "model \"M\"\n"
            "attribute EXISTENCE on facts\n"
            "attribute DURATION on activities\n"
            "activity A { has DURATION }\n"
            "fact X { fact Leaf { has EXISTENCE assess auto } }\n"
            "fact Y { fact Leaf { has EXISTENCE assess auto } }\n"
            "impact [Leaf|EXISTENCE] -> [A|DURATION] +\n");
        CHECK_FALSE(ambiguous.ok());
        CHECK(any_error_contains(ambiguous.errors,
                                 "ambiguous fact name 'Leaf' (matches X/Leaf, Y/Leaf); use a full path"));
    }

    TEST_CASE("weights parse and out-of-range weights are rejected") {
        const char* frame =
            "model \"M\"\n"
            "attribute EXISTENCE on facts\n"
            "attribute DURATION on activities\n"
            "activity A { has DURATION }\n"
            "fact F { has EXISTENCE assess auto }\n";

        ParseResult weighted =
            parse(std::string(frame) + "impact [F|EXISTENCE] -> [A|DURATION] - weight 0.25 \"why\"\n");
        REQUIRE(weighted.ok());
        CHECK(weighted.model->impacts[0].direction == Direction::negative);
        CHECK(weighted.model->impacts[0].weight == 0.25);
        CHECK(weighted.model->impacts[0].rationale == "why");

        for (const char* bad : {"0", "0.0", "1.5", "2"}) {
            ParseResult result = parse(std::string(frame) + "impact [F|EXISTENCE] -> [A|DURATION] + weight " +
                                       bad + "\n");
            CHECK_FALSE(result.ok());
            CHECK(any_error_contains(result.errors, "impact weight must lie in (0, 1]"));
        }

        ParseResult missing_sign = parse(std::string(frame) + "impact [F|EXISTENCE] -> [A|DURATION]\n");
        CHECK_FALSE(missing_sign.ok());
        CHECK(any_error_contains(missing_sign.errors, "'+' or '-' after the impact target"));

        ParseResult duplicate =
            parse(std::string(frame) + "impact [F|EXISTENCE] -> [A|DURATION] +\n" +
                  "impact [F|EXISTENCE] -> [A|DURATION] - weight 0.5\n");
        CHECK_FALSE(duplicate.ok());
        CHECK(any_error_contains(duplicate.errors,
                                 "duplicate impact [F|EXISTENCE] -> [A|DURATION]"));
    }

    TEST_CASE("header discipline") {
        ParseResult missing = parse("attribute A on facts\n");
        CHECK_FALSE(missing.ok());
        REQUIRE(!missing.errors.empty());
        CHECK(missing.errors[0].message() == "1:1: expected a 'model' header");

        ParseResult duplicate = parse("model \"A\"\nmodel \"B\"\n");
        CHECK_FALSE(duplicate.ok());
        CHECK(any_error_contains(duplicate.errors, "duplicate 'model' header"));

        ParseResult late = parse("attribute A on facts\nmodel \"B\"\n");
        CHECK_FALSE(late.ok());
        CHECK(any_error_contains(late.errors, "the 'model' header must be the first statement"));
    }

    TEST_CASE("declaration and attachment rules") {
        ParseResult lowercase = parse("model \"M\"\nattribute bad on facts\n");
        CHECK_FALSE(lowercase.ok());
        CHECK(any_error_contains(lowercase.errors,
                                 "attribute name 'bad' must be uppercase (A-Z, 0-9, '_')"));

        ParseResult redeclared = parse("model \"M\"\nattribute A\nattribute A on facts\n");
        CHECK_FALSE(redeclared.ok());
        CHECK(any_error_contains(redeclared.errors, "attribute 'A' is already declared"));

        ParseResult undeclared = parse("model \"M\"\nfact F { has GHOST }\n");
        CHECK_FALSE(undeclared.ok());
        CHECK(any_error_contains(undeclared.errors, "is not declared"));

        ParseResult misapplied =
            parse("model \"M\"\nattribute DURATION on activities\nfact F { has DURATION }\n");
        CHECK_FALSE(misapplied.ok());
        CHECK(any_error_contains(misapplied.errors, "does not apply to facts"));

        ParseResult reattached = parse(
            "model \"M\"\nattribute E on facts\nfact F { has E assess auto\nhas E assess semi }\n");
        CHECK_FALSE(reattached.ok());
        CHECK(any_error_contains(reattached.errors, "is already attached to this node"));

        ParseResult sibling = parse("model \"M\"\nfact F\nfact F\n");
        CHECK_FALSE(sibling.ok());
        CHECK(any_error_contains(sibling.errors, "duplicate fact name 'F'"));

        ParseResult crosstree = parse("model \"M\"\nfact F { activity A }\n");
        CHECK_FALSE(crosstree.ok());
        CHECK(any_error_contains(crosstree.errors, "a fact block cannot contain activities"));

        ParseResult assess_on_activity =
            parse("model \"M\"\nattribute D on activities\nactivity A { has D assess auto }\n");
        CHECK_FALSE(assess_on_activity.ok());
        CHECK(any_error_contains(assess_on_activity.errors,
                                 "'assess' applies only to fact attributions"));
    }

    TEST_CASE("goal rules") {
        ParseResult factual = parse(
            "model \"M\"\nattribute E on facts\ngoal G = E\n");
        CHECK_FALSE(factual.ok());
        CHECK(any_error_contains(factual.errors,
                                 "does not apply to activities (goal bases list activity attributes)"));

        ParseResult twice = parse(
            "model \"M\"\nattribute D on activities\ngoal G = D, D\n");
        CHECK_FALSE(twice.ok());
        CHECK(any_error_contains(twice.errors, "is listed twice in goal"));

        ParseResult redeclared = parse("model \"M\"\ngoal G\ngoal G\n");
        CHECK_FALSE(redeclared.ok());
        CHECK(any_error_contains(redeclared.errors, "goal 'G' is already declared"));

        ParseResult empty_basis = parse("model \"M\"\ngoal G \"nothing yet\"\n");
        REQUIRE(empty_basis.ok());
        REQUIRE(empty_basis.model->goals.size() == 1);
        CHECK(empty_basis.model->goals[0].basis.empty());
        CHECK(empty_basis.model->goals[0].description == "nothing yet");
    }

    TEST_CASE("keyword names require quotes and the hint says so") {
        ParseResult result = parse("model \"M\"\nfact impact\n");
        CHECK_FALSE(result.ok());
        REQUIRE(!result.errors.empty());
        CHECK(result.errors[0].message() ==
              "2:6: expected a fact name (quote the name to reuse a keyword), found 'impact'");

        ParseResult quoted = parse("model \"M\"\nfact \"impact\"\n");
        REQUIRE(quoted.ok());
        CHECK(quoted.model->fact_roots[0].name == "impact");
    }

    TEST_CASE("name validity is enforced on quoted names") {
        for (const char* bad : {"\"a/b\"", "\"a|b\"", "\"a=b\"", "\"a#b\"", "\"\"", "\" padded \""}) {
            ParseResult result = parse(std::string("model \"M\"\nfact ") + bad + "\n");
            CHECK_FALSE(result.ok());
            CHECK(any_error_contains(result.errors, "invalid fact name"));
        }
    }

    TEST_CASE("lexer failures carry positions and abort the parse") {
        ParseResult unterminated = parse("model \"M\nfact F\n");
        CHECK_FALSE(unterminated.ok());
        CHECK(any_error_contains(unterminated.errors, "unterminated string literal"));

        ParseResult escape = parse("model \"a\\q\"\n");
        CHECK_FALSE(escape.ok());
        CHECK(any_error_contains(escape.errors, "unknown escape sequence '\\q'"));

        ParseResult number = parse("model \"M\"\nimpact [F|A] -> [G|B] + weight 2.\n");
        CHECK_FALSE(number.ok());
        CHECK(any_error_contains(number.errors, "malformed number (digits must follow '.')"));

        ParseResult stray = parse("model \"M\"\n^\n");
        CHECK_FALSE(stray.ok());
        CHECK(any_error_contains(stray.errors, "unexpected character '^'"));
        REQUIRE(!stray.errors.empty());
        CHECK(stray.errors[0].span.line == 2);
        CHECK(stray.errors[0].span.column == 1);
    }

    TEST_CASE("recovery reports several independent errors in one pass") {
        ParseResult result = parse(
            "model \"M\"\n"
            "attribute bad on facts\n"
            "fact F { has GHOST }\n"
            "goal g\n");
        CHECK_FALSE(result.ok());
        CHECK(any_error_contains(result.errors, "must be uppercase"));
        CHECK(any_error_contains(result.errors, "is not declared"));
        CHECK(any_error_contains(result.errors, "goal name 'g' must be uppercase"));
        CHECK(result.errors.size() >= 3);
    }

    TEST_CASE("comments and blank lines are ignored") {
        ParseResult result = parse(
            "# heading\n"
            "model \"M\" # trailing\n"
            "\n"
            "  # indented comment\n"
            "fact F \"uses # freely inside strings\"\n");
        REQUIRE(result.ok());
        CHECK(result.model->fact_roots[0].description == "uses # freely inside strings");
    }

    TEST_CASE("prelude merges under user statements") {
        ParseResult result = parse_with_prelude(
            "model \"M\"\n"
            "activity Drive { has FREQUENCY }\n"
            "fact Gear { has GUARDEDNESS assess semi }\n");
        REQUIRE(result.ok());
        CHECK(result.model->name == "M");
        CHECK(result.model->find_attribute("GUARDEDNESS") != nullptr);
        CHECK(result.model->find_goal("EFFICIENCY") != nullptr);
        CHECK(stats(*result.model).attributes == 17);

        ParseResult redeclared = parse_with_prelude("model \"M\"\nattribute DURATION\n");
        CHECK_FALSE(redeclared.ok());
        CHECK(any_error_contains(redeclared.errors, "attribute 'DURATION' is already declared"));

        ParseResult plain = parse("model \"M\"\nfact F { has GUARDEDNESS }\n");
        CHECK_FALSE(plain.ok());  // without the prelude the vocabulary is empty
    }

    TEST_CASE("prelude text matches the shipped corpus file byte for byte") {
        std::string shipped = slurp(std::string(QM_CORPUS_DIR) + "/prelude.qmm");
        CHECK(std::string(prelude_text()) == shipped);
    }

    TEST_CASE("prelude declares the standard vocabulary") {
        // The prelude has no model header of its own; observe it through a merge.
        ParseResult merged = parse_with_prelude("model \"P\"\n");
        REQUIRE(merged.ok());
        const QualityModel& model = *merged.model;

        int fact_side = 0;
        int activity_side = 0;
        for (const auto& attribute : model.attributes) {
            if (attribute.applies_to == Applicability::fact) ++fact_side;
            if (attribute.applies_to == Applicability::activity) ++activity_side;
        }
        CHECK(fact_side == 12);
        CHECK(activity_side == 5);
        CHECK(model.attributes.size() == 17);

        for (const char* name :
             {"EXISTENCE", "RELEVANCE", "UNAMBIGUOUSNESS", "SIMPLICITY", "STANDARD_CONFORMITY",
              "EXPECTATION_CONFORMITY", "INTERNAL_CONSISTENCY", "EXTERNAL_CONSISTENCY",
              "CONTROLLABILITY", "CUSTOMIZABILITY", "GUARDEDNESS", "ADAPTABILITY"}) {
            const AttributeDef* def = model.find_attribute(name);
            REQUIRE_MESSAGE(def != nullptr, name);
            CHECK(def->applies_to == Applicability::fact);
        }
        for (const char* name :
             {"FREQUENCY", "DURATION", "PHYSICAL_STRESS", "COGNITIVE_LOAD", "PROBABILITY_OF_ERROR"}) {
            const AttributeDef* def = model.find_attribute(name);
            REQUIRE_MESSAGE(def != nullptr, name);
            CHECK(def->applies_to == Applicability::activity);
        }

        REQUIRE(model.goals.size() == 4);
        CHECK(model.goals[0].name == "EFFECTIVENESS");
        CHECK(model.goals[0].basis == std::vector<std::string>{"PROBABILITY_OF_ERROR"});
        CHECK(model.goals[1].name == "EFFICIENCY");
        CHECK(model.goals[1].basis ==
              std::vector<std::string>{"DURATION", "PHYSICAL_STRESS", "COGNITIVE_LOAD"});
        CHECK(model.goals[2].name == "SATISFACTION");
        CHECK(model.goals[2].basis.empty());
        CHECK(model.goals[3].name == "SAFETY");
        CHECK(model.goals[3].basis.empty());
    }
}

TEST_SUITE("dsl.serialize") {
    TEST_CASE("empty model renders as a bare header") {
        QualityModel model;
        model.name = "Empty";
        CHECK(serialize(model) == "model \"Empty\"\n");
    }

    TEST_CASE("names with spaces are quoted") {
        QualityModel model;
        model.name = "Dialogue Management";
        CHECK(serialize(model) == "model \"Dialogue Management\"\n");
    }

    TEST_CASE("canonical layout: sections, indentation, quoting, defaults") {
        const char* messy =
            "model   \"Demo\"   \"a demo\"\n"
            "goal SPEED = DURATION \"go fast\"\n"
            "fact Base \"roots\" {\n"
            "    has EXISTENCE assess manual\n"
            "  fact \"Sub One\" \"leaf\" { has EXISTENCE assess auto\n"
            "      has TRICKY }\n"
            "}\n"
            "attribute EXISTENCE on facts \"there\"\n"
            "attribute DURATION on activities\n"
            "attribute TRICKY on both\n"
            "activity \"Main Flow\" { has DURATION\n activity Step }\n"
            "impact [\"Sub One\"|EXISTENCE] -> [\"Main Flow\"|DURATION] - weight 0.25 \"less is more\"\n"
            "impact [Base|EXISTENCE] -> [\"Main Flow\"|DURATION] +\n"
            "goal HOLLOW\n";

        const char* canonical =
            "model \"Demo\" \"a demo\"\n"
            "\n"
            "attribute EXISTENCE on facts \"there\"\n"
            "attribute DURATION on activities\n"
            "attribute TRICKY\n"
            "\n"
            "activity \"Main Flow\" {\n"
            "  has DURATION\n"
            "  activity Step\n"
            "}\n"
            "\n"
            "fact Base \"roots\" {\n"
            "  has EXISTENCE assess manual\n"
            "  fact \"Sub One\" \"leaf\" {\n"
            "    has EXISTENCE assess auto\n"
            "    has TRICKY assess manual\n"
            "  }\n"
            "}\n"
            "\n"
            "impact [Base/\"Sub One\"|EXISTENCE] -> [\"Main Flow\"|DURATION] - weight 0.25 \"less is more\"\n"
            "impact [Base|EXISTENCE] -> [\"Main Flow\"|DURATION] +\n"
            "\n"
            "goal SPEED = DURATION \"go fast\"\n"
            "goal HOLLOW\n";

        ParseResult result = parse(messy);
        REQUIRE_MESSAGE(result.ok(), first_error(result.errors));
        CHECK(serialize(*result.model) == canonical);
        CHECK(serialize(*result.model) == serialize(*result.model));
    }

    TEST_CASE("string escapes survive quoting") {
        QualityModel model;
        model.name = "say \"stop\" \\ now";
        model.description = "line\nbreak\tand tab";
        std::string text = serialize(model);
        CHECK(text == "model \"say \\\"stop\\\" \\\\ now\" \"line\\nbreak\\tand tab\"\n");
        ParseResult result = parse(text);
        REQUIRE(result.ok());
        CHECK(result.model->name == model.name);
        CHECK(result.model->description == model.description);
    }

    TEST_CASE("decimal rendering is shortest and exponent-free") {
        CHECK(format_decimal(1.0) == "1");
        CHECK(format_decimal(0.5) == "0.5");
        CHECK(format_decimal(0.25) == "0.25");
        CHECK(format_decimal(0.123) == "0.123");
        CHECK(format_decimal(1e-7) == "0.0000001");
        CHECK(format_decimal(0.1 + 0.2) == "0.30000000000000004");

        std::mt19937 rng(20260816);
        for (int i = 0; i < 1000; ++i) {
            double value = std::uniform_int_distribution<int>(1, 1000000)(rng) / 1000000.0;
            std::string text = format_decimal(value);
            CHECK(text.find('e') == std::string::npos);
            double back = 0.0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), back);
            REQUIRE(ec == std::errc{});
            REQUIRE(ptr == text.data() + text.size());
            CHECK(back == value);
        }
    }
}

TEST_SUITE("dsl.roundtrip") {
    TEST_CASE("the worked example survives parse after serialize") {
        ParseResult first = parse(kSmallModel);
        REQUIRE(first.ok());
        ParseResult second = parse(serialize(*first.model));
        REQUIRE(second.ok());
        CHECK(qmtest::models_equal(*first.model, *second.model));
        CHECK(*first.model == *second.model);
    }

    TEST_CASE("corpus models round-trip through the canonical form") {
        for (const char* name : {"usability-highlevel.qmm", "iso15005-demo.qmm"}) {
            CAPTURE(name);
            ParseResult first = parse_with_prelude(slurp(std::string(QM_CORPUS_DIR) + "/" + name));
            REQUIRE(first.ok());
            // The canonical text contains the merged vocabulary, so it parses plain.
            ParseResult second = parse(serialize(*first.model));
            REQUIRE(second.ok());
            CHECK(qmtest::models_equal(*first.model, *second.model));
        }
    }

    TEST_CASE("500 random models round-trip structurally") {
        int checked = 0;
        for (unsigned seed = 0; seed < 500; ++seed) {
            std::mt19937 rng(7000 + seed);
            QualityModel model = qmtest::random_model(rng);
            std::string text = serialize(model);
            CAPTURE(seed);
            CAPTURE(text);
            ParseResult reparsed = parse(text);
            REQUIRE_MESSAGE(reparsed.ok(),
                            first_error(reparsed.errors));
            bool equal = qmtest::models_equal(model, *reparsed.model);
            if (!equal) CAPTURE(serialize(*reparsed.model));
            REQUIRE(equal);
            CHECK(serialize(*reparsed.model) == text);  // canonical text is a fixed point
            ++checked;
        }
        CHECK(checked == 500);
    }
}

TEST_SUITE("dsl.assessment") {
    TEST_CASE("bindings parse with paths, attributes, and values") {
        AssessmentParseResult result = parse_assessment(
            "# sample\n"
            "Font Face | CONSISTENCY = 1.0\n"
            "\n"
            "Logical User Interface/Output Data | SIMPLICITY = 0.5  # inline note\n");
        REQUIRE(result.ok());
        REQUIRE(result.assessment->bindings.size() == 2);

        const auto& first = result.assessment->bindings[0];
        CHECK(first.node.segments == std::vector<std::string>{"Font Face"});
        CHECK(first.attribute == "CONSISTENCY");
        CHECK(first.value == 1.0);

        const auto& second = result.assessment->bindings[1];
        CHECK(second.node.segments ==
              std::vector<std::string>{"Logical User Interface", "Output Data"});
        CHECK(second.attribute == "SIMPLICITY");
        CHECK(second.value == 0.5);
    }

    TEST_CASE("out-of-range values are rejected with a line number") {
        AssessmentParseResult result = parse_assessment("X | Y = 1.5\n");
        CHECK_FALSE(result.ok());
        REQUIRE(!result.errors.empty());
        CHECK(result.errors[0].span.line == 1);
        CHECK(result.errors[0].message() == "1:8: value out of range: 1.5 (assessments lie in [0, 1])");
    }

    TEST_CASE("malformed lines, bad names, bad values, duplicates") {
        AssessmentParseResult result = parse_assessment(
        "A | DUR = 0.5\n"
        "just words\n"
        "A | lower = 0.5\n"
        "A | DUR = oops\n"
        "A | DUR = 0.7\n"
        "B | DUR = -0.1\n");
        CHECK_FALSE(result.ok());
        REQUIRE(result.errors.size() == 5);
        CHECK(result.errors[0].span.line == 2);
        CHECK(result.errors[0].message().find("malformed line") != std::string::npos);
        CHECK(result.errors[1].span.line == 3);
        CHECK(result.errors[1].message().find("invalid attribute name 'lower'") != std::string::npos);
        CHECK(result.errors[2].span.line == 4);
        CHECK(result.errors[2].message().find("malformed value 'oops'") != std::string::npos);
        CHECK(result.errors[3].span.line == 5);
        CHECK(result.errors[3].message().find("duplicate binding for 'A | DUR'") != std::string::npos);
        CHECK(result.errors[4].span.line == 6);
        CHECK(result.errors[4].message().find("value out of range") != std::string::npos);
    }

    TEST_CASE("negative zero is normalized") {
        AssessmentParseResult result = parse_assessment("A | DUR = -0\n");
        REQUIRE(result.ok());
        const double value = result.assessment->bindings[0].value;
        CHECK(value == 0.0);
        CHECK_FALSE(std::signbit(value));
    }

    TEST_CASE("empty text is an empty assessment") {
        AssessmentParseResult result = parse_assessment("");
        REQUIRE(result.ok());
        CHECK(result.assessment->bindings.empty());

        AssessmentParseResult comments = parse_assessment("# nothing\n\n# more\n");
        REQUIRE(comments.ok());
        CHECK(comments.assessment->bindings.empty());
    }
}

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsl_internal.hpp"
#include "qm/dsl.hpp"
#include "qm/model.hpp"

namespace qm {

std::string ParseError::message() const {
    std::string out = std::to_string(span.line) + ":" + std::to_string(span.column) + ": ";
    if (found.empty()) {
        out += expected;
    } else {
        out += "expected " + expected + ", found '" + found + "'";
    }
    return out;
}

namespace {

enum class TokKind {
    word,
    string,
    number,
    lbrace,
    rbrace,
    lbracket,
    rbracket,
    slash,
    pipe,
    equals,
    comma,
    arrow,
    plus,
    minus,
    end,
};

struct Token {
    TokKind kind = TokKind::end;
    std::string_view text;  // raw source slice
    std::string value;      // unescaped payload for string tokens
    SourceSpan span;
};

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;
    std::vector<Token>& out;
    std::vector<ParseError>& errors;

    char peek() const { return pos < src.size() ? src[pos] : '\0'; }
    bool done() const { return pos >= src.size(); }

    char take() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }

    void push(TokKind kind, std::size_t start, int start_line, int start_col) {
        Token t;
        t.kind = kind;
        t.text = src.substr(start, pos - start);
        t.span = SourceSpan{start_line, start_col, (int)(pos - start)};
        out.push_back(std::move(t));
    }

    void error(int at_line, int at_col, int length, std::string text) {
        errors.push_back(ParseError{SourceSpan{at_line, at_col, length}, std::move(text), ""});
    }

    void run() {
        while (!done()) {
            std::size_t start = pos;
            int start_line = line;
            int start_col = column;
            char c = take();
            switch (c) {
                case ' ':
                case '\t':
                case '\r':
                case '\n':
                    continue;
                case '#':
                    while (!done() && peek() != '\n') take();
                    continue;
                case '{': push(TokKind::lbrace, start, start_line, start_col); continue;
                case '}': push(TokKind::rbrace, start, start_line, start_col); continue;
                case '[': push(TokKind::lbracket, start, start_line, start_col); continue;
                case ']': push(TokKind::rbracket, start, start_line, start_col); continue;
                case '/': push(TokKind::slash, start, start_line, start_col); continue;
                case '|': push(TokKind::pipe, start, start_line, start_col); continue;
                case '=': push(TokKind::equals, start, start_line, start_col); continue;
                case ',': push(TokKind::comma, start, start_line, start_col); continue;
                case '+': push(TokKind::plus, start, start_line, start_col); continue;
                case '-':
                    if (peek() == '>') {
                        take();
                        push(TokKind::arrow, start, start_line, start_col);
                    } else {
                        push(TokKind::minus, start, start_line, start_col);
                    }
                    continue;
                case '"': lex_string(start, start_line, start_col); continue;
                default: break;
            }
            if (c >= '0' && c <= '9') {
                lex_number(start, start_line, start_col);
                continue;
            }
            if (detail::is_word_start(c)) {
                while (!done() && detail::is_word_char(peek())) take();
                push(TokKind::word, start, start_line, start_col);
                continue;
            }
            error(start_line, start_col, 1,
                  std::string("unexpected character '") + c + "'");
        }
        Token eof;
        eof.kind = TokKind::end;
        eof.span = SourceSpan{line, column, 0};
        out.push_back(std::move(eof));
    }

    void lex_string(std::size_t start, int start_line, int start_col) {
        std::string value;
        while (true) {
            if (done() || peek() == '\n') {
                error(start_line, start_col, (int)(pos - start), "unterminated string literal");
                return;
            }
            char c = take();
            if (c == '"') break;
            if (c == '\\') {
                if (done() || peek() == '\n') {
                    error(start_line, start_col, (int)(pos - start),
                          "unterminated string literal");
                    return;
                }
                int esc_line = line;
                int esc_col = column - 1;
                char e = take();
                switch (e) {
                    case '"': value += '"'; break;
                    case '\\': value += '\\'; break;
                    case 'n': value += '\n'; break;
                    case 't': value += '\t'; break;
                    default:
                        error(esc_line, esc_col, 2,
                              std::string("unknown escape sequence '\\") + e + "'");
                        value += e;
                        break;
                }
                continue;
            }
            value += c;
        }
        Token t;
        t.kind = TokKind::string;
        t.text = src.substr(start, pos - start);
        t.value = std::move(value);
        t.span = SourceSpan{start_line, start_col, (int)(pos - start)};
        out.push_back(std::move(t));
    }

    void lex_number(std::size_t start, int start_line, int start_col) {
        while (!done() && peek() >= '0' && peek() <= '9') take();
        if (peek() == '.') {
            take();
            if (done() || !(peek() >= '0' && peek() <= '9')) {
                error(start_line, start_col, (int)(pos - start),
                      "malformed number (digits must follow '.')");
                return;
            }
            while (!done() && peek() >= '0' && peek() <= '9') take();
        }
        push(TokKind::number, start, start_line, start_col);
    }
};

// Raw syntax statements, turned into a QualityModel in a second phase so that
// declarations may appear in any order.

struct RawHas {
    SourceSpan span;
    std::string attribute;
    Assessability assessability = Assessability::manual;
};

struct RawNode {
    Tree tree = Tree::fact;
    SourceSpan span;
    std::string name;
    std::string description;
    std::vector<RawHas> has;
    std::vector<RawNode> children;
};

struct RawRef {
    SourceSpan span;
    Path path;
    std::string attribute;
    bool ok = false;
};

struct RawImpact {
    RawRef source;
    RawRef target;
    Direction direction = Direction::positive;
    double weight = 1.0;
    SourceSpan weight_span;
    bool explicit_weight = false;
    std::string rationale;
};

struct RawAttribute {
    SourceSpan span;
    std::string name;
    Applicability applies_to = Applicability::both;
    std::string description;
};

struct RawGoal {
    SourceSpan span;
    std::string name;
    std::vector<std::pair<std::string, SourceSpan>> basis;
    std::string description;
};

struct RawFile {
    bool has_header = false;
    std::string model_name;
    std::string model_description;
    std::vector<RawAttribute> attributes;
    std::vector<RawNode> roots;
    std::vector<RawImpact> impacts;
    std::vector<RawGoal> goals;
};

struct Parser {
    const std::vector<Token>& toks;
    std::vector<ParseError>& errors;
    std::size_t pos = 0;
    RawFile file;
    bool saw_statement = false;

    const Token& peek() const { return toks[pos]; }

    const Token& advance() {
        const Token& t = toks[pos];
        if (t.kind != TokKind::end) ++pos;
        return t;
    }

    bool at(TokKind kind) const { return peek().kind == kind; }

    bool at_word(std::string_view word) const {
        return peek().kind == TokKind::word && peek().text == word;
    }

    bool match(TokKind kind) {
        if (!at(kind)) return false;
        advance();
        return true;
    }

    bool match_word(std::string_view word) {
        if (!at_word(word)) return false;
        advance();
        return true;
    }

    static std::string describe(const Token& t) {
        if (t.kind == TokKind::end) return "end of input";
        return std::string(t.text);
    }

    void error_at(const Token& t, std::string expected) {
        errors.push_back(ParseError{t.span, std::move(expected), describe(t)});
    }

    void plain_error(const SourceSpan& span, std::string text) {
        errors.push_back(ParseError{span, std::move(text), ""});
    }

    bool at_statement_keyword() const {
        return at_word("model") || at_word("attribute") || at_word("fact") ||
               at_word("activity") || at_word("impact") || at_word("goal");
    }

    // Panic-mode recovery: drop tokens until the next top-level statement.
    void sync() {
        int depth = 0;
        while (!at(TokKind::end)) {
            if (depth == 0 && at_statement_keyword()) return;
            const Token& t = advance();
            if (t.kind == TokKind::lbrace) ++depth;
            if (t.kind == TokKind::rbrace && depth > 0) --depth;
        }
    }

    struct Name {
        bool ok = false;
        std::string text;
        SourceSpan span;
    };

    // A name is a bare word (keywords excluded) or a quoted string.
    Name parse_name(const char* what) {
        Name name;
        const Token& t = peek();
        name.span = t.span;
        if (t.kind == TokKind::word) {
            if (detail::is_keyword(t.text)) {
                error_at(t, std::string(what) + " (quote the name to reuse a keyword)");
                name.text = std::string(t.text);
                advance();
                return name;
            }
            name.ok = true;
            name.text = std::string(advance().text);
            return name;
        }
        if (t.kind == TokKind::string) {
            if (auto problem = detail::node_name_problem(t.value)) {
                std::string_view noun = what;  // drop the article used by expected-clauses
                if (noun.rfind("a ", 0) == 0) noun.remove_prefix(2);
                if (noun.rfind("an ", 0) == 0) noun.remove_prefix(3);
                plain_error(t.span, "invalid " + std::string(noun) + ": " + *problem);
            } else {
                name.ok = true;
            }
            name.text = advance().value;
            return name;
        }
        error_at(t, what);
        return name;
    }

    void parse_file() {
        while (!at(TokKind::end)) {
            if (at(TokKind::rbrace)) {
                error_at(peek(), "a statement");
                advance();
                continue;
            }
            parse_statement();
        }
    }

    void parse_statement() {
        if (match_word("model")) {
            parse_header();
        } else if (match_word("attribute")) {
            parse_attribute();
        } else if (match_word("fact")) {
            file.roots.push_back(parse_node(Tree::fact));
        } else if (match_word("activity")) {
            file.roots.push_back(parse_node(Tree::activity));
        } else if (match_word("impact")) {
            parse_impact();
        } else if (match_word("goal")) {
            parse_goal();
        } else {
            error_at(peek(), "'model', 'attribute', 'fact', 'activity', 'impact', or 'goal'");
            advance();
            sync();
            return;
        }
        saw_statement = true;
    }

    void parse_header() {
        const Token& kw = toks[pos - 1];
        if (file.has_header) {
            plain_error(kw.span, "duplicate 'model' header");
        } else if (saw_statement) {
            plain_error(kw.span, "the 'model' header must be the first statement");
        }
        Name name = parse_name("model name");
        if (!file.has_header) {
            file.has_header = true;
            file.model_name = name.text;
        }
        if (at(TokKind::string)) {
            std::string desc = advance().value;
            if (!saw_statement || file.model_description.empty())
                file.model_description = std::move(desc);
        }
    }

    void parse_attribute() {
        RawAttribute attr;
        const Token& t = peek();
        attr.span = t.span;
        if (t.kind != TokKind::word || detail::is_keyword(t.text)) {
            error_at(t, "an attribute name");
            sync();
            return;
        }
        attr.name = std::string(advance().text);
        if (match_word("on")) {
            const Token& target = peek();
            if (match_word("facts")) {
                attr.applies_to = Applicability::fact;
            } else if (match_word("activities")) {
                attr.applies_to = Applicability::activity;
            } else if (match_word("both")) {
                attr.applies_to = Applicability::both;
            } else {
                error_at(target, "'facts', 'activities', or 'both' after 'on'");
                sync();
                file.attributes.push_back(std::move(attr));
                return;
            }
        }
        if (at(TokKind::string)) attr.description = advance().value;
        file.attributes.push_back(std::move(attr));
    }

    RawNode parse_node(Tree tree) {
        const char* kw = to_string(tree);
        RawNode node;
        node.tree = tree;
        Name name = parse_name(tree == Tree::fact ? "a fact name" : "an activity name");
        node.name = std::move(name.text);
        node.span = name.span;
        if (at(TokKind::string)) node.description = advance().value;
        if (!match(TokKind::lbrace)) return node;
        while (true) {
            if (match(TokKind::rbrace)) break;
            if (at(TokKind::end)) {
                error_at(peek(), std::string("'}' to close the '") + kw + "' block");
                break;
            }
            if (at_word("has")) {
                advance();
                parse_has(tree, node);
            } else if (match_word(kw)) {
                node.children.push_back(parse_node(tree));
            } else if (at_word(tree == Tree::fact ? "activity" : "fact")) {
                plain_error(peek().span, std::string("a ") + kw + " block cannot contain " +
                                             (tree == Tree::fact ? "activities" : "facts"));
                advance();
                parse_node(tree == Tree::fact ? Tree::activity : Tree::fact);
            } else {
                error_at(peek(), std::string("'has', '") + kw + "', or '}'");
                sync_in_block();
            }
        }
        return node;
    }

    void sync_in_block() {
        int depth = 0;
        while (!at(TokKind::end)) {
            if (depth == 0 &&
                (at_word("has") || at_word("fact") || at_word("activity") || at(TokKind::rbrace)))
                return;
            const Token& t = advance();
            if (t.kind == TokKind::lbrace) ++depth;
            if (t.kind == TokKind::rbrace && depth > 0) --depth;
        }
    }

    void parse_has(Tree tree, RawNode& node) {
        RawHas has;
        const Token& t = peek();
        has.span = t.span;
        if (t.kind != TokKind::word || detail::is_keyword(t.text)) {
            error_at(t, "an attribute name after 'has'");
            return;
        }
        has.attribute = std::string(advance().text);
        if (at_word("assess")) {
            const Token& assess_kw = advance();
            if (tree == Tree::activity)
                plain_error(assess_kw.span,
                            "'assess' applies only to fact attributions");
            const Token& mode = peek();
            if (match_word("auto")) {
                has.assessability = Assessability::automatic;
            } else if (match_word("semi")) {
                has.assessability = Assessability::semi;
            } else if (match_word("manual")) {
                has.assessability = Assessability::manual;
            } else {
                error_at(mode, "'auto', 'semi', or 'manual' after 'assess'");
            }
        }
        node.has.push_back(std::move(has));
    }

    static SourceSpan span_between(const SourceSpan& first, const SourceSpan& last) {
        SourceSpan span = first;
        if (last.line == first.line && last.column >= first.column)
            span.length = last.column + last.length - first.column;
        return span;
    }

    RawRef parse_ref(Tree tree) {
        RawRef ref;
        if (!at(TokKind::lbracket)) {
            error_at(peek(), std::string("'[' opening a ") + to_string(tree) + " reference");
            return ref;
        }
        advance();
        SourceSpan first{};
        SourceSpan last{};
        while (true) {
            Name segment = parse_name(tree == Tree::fact ? "a fact name" : "an activity name");
            if (ref.path.segments.empty()) first = segment.span;
            last = segment.span;
            ref.path.segments.push_back(std::move(segment.text));
            if (!segment.ok && !at(TokKind::slash)) {
                skip_to_rbracket();
                return ref;
            }
            if (!match(TokKind::slash)) break;
        }
        ref.span = span_between(first, last);
        if (!match(TokKind::pipe)) {
            error_at(peek(), "'|' between node path and attribute");
            skip_to_rbracket();
            return ref;
        }
        const Token& attr = peek();
        if (attr.kind != TokKind::word || detail::is_keyword(attr.text)) {
            error_at(attr, "an attribute name");
            skip_to_rbracket();
            return ref;
        }
        ref.attribute = std::string(advance().text);
        if (!match(TokKind::rbracket)) {
            error_at(peek(), "']' closing the reference");
            skip_to_rbracket();
            return ref;
        }
        ref.ok = true;
        return ref;
    }

    void skip_to_rbracket() {
        while (!at(TokKind::end) && !at_statement_keyword()) {
            if (advance().kind == TokKind::rbracket) return;
        }
    }

    void parse_impact() {
        RawImpact impact;
        impact.source = parse_ref(Tree::fact);
        if (!impact.source.ok) {
            sync();
            return;
        }
        if (!match(TokKind::arrow)) {
            error_at(peek(), "'->' between impact source and target");
            sync();
            return;
        }
        impact.target = parse_ref(Tree::activity);
        if (!impact.target.ok) {
            sync();
            return;
        }
        if (match(TokKind::plus)) {
            impact.direction = Direction::positive;
        } else if (match(TokKind::minus)) {
            impact.direction = Direction::negative;
        } else {
            error_at(peek(), "'+' or '-' after the impact target");
            sync();
            return;
        }
        if (match_word("weight")) {
            const Token& value = peek();
            if (value.kind != TokKind::number) {
                error_at(value, "a decimal after 'weight'");
                sync();
                return;
            }
            advance();
            impact.weight_span = value.span;
            impact.explicit_weight = true;
            std::from_chars(value.text.data(), value.text.data() + value.text.size(),
                            impact.weight);
        }
        if (at(TokKind::string)) impact.rationale = advance().value;
        file.impacts.push_back(std::move(impact));
    }

    void parse_goal() {
        RawGoal goal;
        const Token& t = peek();
        goal.span = t.span;
        if (t.kind != TokKind::word || detail::is_keyword(t.text)) {
            error_at(t, "a goal name");
            sync();
            return;
        }
        goal.name = std::string(advance().text);
        if (match(TokKind::equals)) {
            while (true) {
                const Token& attr = peek();
                if (attr.kind != TokKind::word || detail::is_keyword(attr.text)) {
                    error_at(attr, "an attribute name in the goal basis");
                    sync();
                    file.goals.push_back(std::move(goal));
                    return;
                }
                goal.basis.emplace_back(std::string(advance().text), attr.span);
                if (!match(TokKind::comma)) break;
            }
        }
        if (at(TokKind::string)) goal.description = advance().value;
        file.goals.push_back(std::move(goal));
    }
};

struct Builder {
    const RawFile& file;
    std::vector<ParseError>& errors;
    bool require_header;
    QualityModel model;

    void fail(const SourceSpan& span, std::string text) {
        errors.push_back(ParseError{span, std::move(text), ""});
    }

    void build(const QualityModel* seed) {
        if (seed) {
            model.attributes = seed->attributes;
            model.goals = seed->goals;
        }
        if (file.has_header) {
            model.name = file.model_name;
            model.description = file.model_description;
        } else if (require_header) {
            fail(SourceSpan{1, 1, 0}, "expected a 'model' header");
        }
        for (const auto& attr : file.attributes) add_attribute(attr);
        for (const auto& root : file.roots) {
            if (root.tree == Tree::fact) {
                FactNode built = build_fact(root);
                if (!sibling_taken(model.fact_roots, root, "fact"))
                    model.fact_roots.push_back(std::move(built));
            } else {
                ActivityNode built = build_activity(root);
                if (!sibling_taken(model.activity_roots, root, "activity"))
                    model.activity_roots.push_back(std::move(built));
            }
        }
        for (const auto& goal : file.goals) add_goal(goal);
        for (const auto& impact : file.impacts) add_parsed_impact(impact);
    }

    void add_attribute(const RawAttribute& attr) {
        if (!detail::valid_attribute_name(attr.name)) {
            fail(attr.span,
                 "attribute name '" + attr.name + "' must be uppercase (A-Z, 0-9, '_')");
            return;
        }
        if (model.find_attribute(attr.name)) {
            fail(attr.span, "attribute '" + attr.name + "' is already declared");
            return;
        }
        model.attributes.push_back(AttributeDef{attr.name, attr.applies_to, attr.description});
    }

    template <typename Node>
    bool sibling_taken(const std::vector<Node>& siblings, const RawNode& node, const char* kind) {
        for (const auto& sibling : siblings) {
            if (sibling.name == node.name) {
                fail(node.span,
                     std::string("duplicate ") + kind + " name '" + node.name + "'");
                return true;
            }
        }
        return false;
    }

    void check_attribution(const RawHas& has, Applicability side, const char* side_name,
                           bool already_attached) {
        const AttributeDef* def = model.find_attribute(has.attribute);
        if (!def) {
            fail(has.span, "attribute '" + has.attribute + "' is not declared");
        } else if (def->applies_to != Applicability::both && def->applies_to != side) {
            fail(has.span, "attribute '" + has.attribute + "' does not apply to " + side_name);
        }
        if (already_attached)
            fail(has.span, "attribute '" + has.attribute + "' is already attached to this node");
    }

    FactNode build_fact(const RawNode& raw) {
        FactNode node;
        node.name = raw.name;
        node.description = raw.description;
        for (const auto& has : raw.has) {
            check_attribution(has, Applicability::fact, "facts",
                              node.find_attribution(has.attribute) != nullptr);
            if (!node.find_attribution(has.attribute))
                node.attributed.push_back(FactAttribution{has.attribute, has.assessability});
        }
        for (const auto& child : raw.children) {
            FactNode built = build_fact(child);
            if (!sibling_taken(node.children, child, "fact"))
                node.children.push_back(std::move(built));
        }
        return node;
    }

    ActivityNode build_activity(const RawNode& raw) {
        ActivityNode node;
        node.name = raw.name;
        node.description = raw.description;
        for (const auto& has : raw.has) {
            check_attribution(has, Applicability::activity, "activities",
                              node.has_attribute(has.attribute));
            if (!node.has_attribute(has.attribute)) node.attributed.push_back(has.attribute);
        }
        for (const auto& child : raw.children) {
            ActivityNode built = build_activity(child);
            if (!sibling_taken(node.children, child, "activity"))
                node.children.push_back(std::move(built));
        }
        return node;
    }

    void add_goal(const RawGoal& goal) {
        if (!detail::valid_attribute_name(goal.name)) {
            fail(goal.span, "goal name '" + goal.name + "' must be uppercase (A-Z, 0-9, '_')");
            return;
        }
        if (model.find_goal(goal.name)) {
            fail(goal.span, "goal '" + goal.name + "' is already declared");
            return;
        }
        GoalDef def;
        def.name = goal.name;
        def.description = goal.description;
        for (const auto& [attr, span] : goal.basis) {
            const AttributeDef* found = model.find_attribute(attr);
            if (!found) {
                fail(span, "attribute '" + attr + "' is not declared");
                continue;
            }
            if (found->applies_to == Applicability::fact) {
                fail(span, "attribute '" + attr +
                               "' does not apply to activities (goal bases list activity "
                               "attributes)");
                continue;
            }
            bool listed = false;
            for (const auto& existing : def.basis) listed = listed || existing == attr;
            if (listed) {
                fail(span, "attribute '" + attr + "' is listed twice in goal '" + goal.name + "'");
                continue;
            }
            def.basis.push_back(attr);
        }
        model.goals.push_back(std::move(def));
    }

    void add_parsed_impact(const RawImpact& impact) {
        RefLookup source = resolve_ref(model, Tree::fact, impact.source.path);
        if (!source.ok()) {
            fail(impact.source.span, source.error);
            return;
        }
        RefLookup target = resolve_ref(model, Tree::activity, impact.target.path);
        if (!target.ok()) {
            fail(impact.target.span, target.error);
            return;
        }
        const FactNode* fact = resolve_fact(model, *source.path);
        const ActivityNode* activity = resolve_activity(model, *target.path);
        bool usable = true;
        if (!fact->find_attribution(impact.source.attribute)) {
            fail(impact.source.span, "fact '" + source.path->str() +
                                         "' does not carry attribute '" +
                                         impact.source.attribute + "'");
            usable = false;
        }
        if (!activity->has_attribute(impact.target.attribute)) {
            fail(impact.target.span, "activity '" + target.path->str() +
                                         "' does not carry attribute '" +
                                         impact.target.attribute + "'");
            usable = false;
        }
        if (impact.explicit_weight && (!(impact.weight > 0.0) || impact.weight > 1.0)) {
            fail(impact.weight_span, "impact weight must lie in (0, 1]");
            usable = false;
        }
        if (!usable) return;
        TupleRef source_tuple{*source.path, impact.source.attribute};
        TupleRef target_tuple{*target.path, impact.target.attribute};
        for (const auto& existing : model.impacts) {
            if (existing.source == source_tuple && existing.target == target_tuple) {
                fail(impact.source.span,
                     "duplicate impact " + source_tuple.str() + " -> " + target_tuple.str());
                return;
            }
        }
        model.impacts.push_back(Impact{std::move(source_tuple), std::move(target_tuple),
                                       impact.direction, impact.weight, impact.rationale});
    }
};

ParseResult parse_internal(std::string_view text, const QualityModel* seed,
                           bool require_header) {
    ParseResult result;
    std::vector<Token> tokens;
    Lexer lexer{text, 0, 1, 1, tokens, result.errors};
    lexer.run();
    if (!result.errors.empty()) return result;

    Parser parser{tokens, result.errors, 0, RawFile{}, false};
    parser.parse_file();

    Builder builder{parser.file, result.errors, require_header, QualityModel{}};
    builder.build(seed);
    if (result.errors.empty()) result.model = std::move(builder.model);
    return result;
}

const QualityModel& prelude_model() {
    static const QualityModel instance = [] {
        ParseResult parsed = parse_internal(prelude_text(), nullptr, false);
        return parsed.model.value_or(QualityModel{});
    }();
    return instance;
}

}  // namespace

ParseResult parse(std::string_view text) {
    return parse_internal(text, nullptr, true);
}

ParseResult parse_with_prelude(std::string_view text) {
    return parse_internal(text, &prelude_model(), true);
}

AssessmentParseResult parse_assessment(std::string_view text) {
    AssessmentParseResult result;
    Assessment assessment;
    int line_no = 0;
    std::size_t start = 0;

    auto fail = [&](int column, int length, std::string message) {
        result.errors.push_back(
            ParseError{SourceSpan{line_no, column, length}, std::move(message), ""});
    };
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    };

    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(
            start, nl == std::string_view::npos ? text.size() - start : nl - start);
        ++line_no;
        if (nl == std::string_view::npos && line.empty() && start == text.size()) break;

        std::string_view meat = line;
        if (std::size_t hash = meat.find('#'); hash != std::string_view::npos)
            meat = meat.substr(0, hash);
        if (!trim(meat).empty()) {
            std::size_t pipe = meat.find('|');
            std::size_t eq = pipe == std::string_view::npos ? std::string_view::npos
                                                            : meat.find('=', pipe + 1);
            if (pipe == std::string_view::npos || eq == std::string_view::npos) {
                fail(1, (int)line.size(),
                     "malformed line (expected '<node-path> | <ATTRIBUTE> = <value>')");
            } else {
                Assessment::Binding binding;
                bool usable = true;
                std::string_view path_part = trim(meat.substr(0, pipe));
                for (const auto& segment : Path::split(path_part).segments) {
                    std::string_view seg = trim(segment);
                    if (seg.empty()) {
                        fail(1, (int)path_part.size(), "malformed line (empty path segment)");
                        usable = false;
                        break;
                    }
                    binding.node.segments.emplace_back(seg);
                }
                std::string_view attr = trim(meat.substr(pipe + 1, eq - pipe - 1));
                if (usable && !detail::valid_attribute_name(attr)) {
                    fail((int)(pipe + 2), (int)attr.size(),
                         "invalid attribute name '" + std::string(attr) + "'");
                    usable = false;
                }
                binding.attribute = std::string(attr);
                std::string_view value = trim(meat.substr(eq + 1));
                if (usable) {
                    const char* first = value.data();
                    const char* post = first + value.size();
                    auto [ptr, ec] = std::from_chars(first, post, binding.value);
                    if (value.empty() || ec != std::errc{} || ptr != post) {
                        fail((int)(eq + 2), (int)value.size(),
                             "malformed value '" + std::string(value) + "'");
                        usable = false;
                    } else if (binding.value < 0.0 || binding.value > 1.0) {
                        fail((int)(eq + 2), (int)value.size(),
                             "value out of range: " + std::string(value) +
                                 " (assessments lie in [0, 1])");
                        usable = false;
                    } else if (binding.value == 0.0) {
                        binding.value = 0.0;  // normalize a literal "-0"
                    }
                }
                if (usable) {
                    for (const auto& existing : assessment.bindings) {
                        if (existing.node == binding.node &&
                            existing.attribute == binding.attribute) {
                            fail(1, (int)line.size(),
                                 "duplicate binding for '" + binding.node.str() + " | " +
                                     binding.attribute + "'");
                            usable = false;
                            break;
                        }
                    }
                }
                if (usable) assessment.bindings.push_back(std::move(binding));
            }
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }

    if (result.errors.empty()) result.assessment = std::move(assessment);
    return result;
}

}  // namespace qm

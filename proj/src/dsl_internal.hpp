#pragma once

#include <optional>
#include <string>
#include <string_view>

// Shared between the parser and the serializer so that quoting, keyword and
// name rules cannot drift apart.

namespace qm::detail {

inline bool is_keyword(std::string_view word) {
    return word == "model" || word == "attribute" || word == "on" || word == "fact" ||
           word == "activity" || word == "has" || word == "assess" || word == "impact" ||
           word == "goal" || word == "weight";
}

inline bool is_word_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline bool is_word_char(char c) {
    return is_word_start(c) || (c >= '0' && c <= '9');
}

// True when the name can be written without quotes.
inline bool plain_name(std::string_view name) {
    if (name.empty() || is_keyword(name)) return false;
    if (!is_word_start(name.front())) return false;
    for (char c : name)
        if (!is_word_char(c)) return false;
    return true;
}

inline bool valid_attribute_name(std::string_view name) {
    if (name.empty() || !(name.front() >= 'A' && name.front() <= 'Z')) return false;
    for (char c : name)
        if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_')) return false;
    return true;
}

// Names must stay addressable from paths, impact refs, assessment lines and
// line comments, so the involved separator characters are banned outright.
inline std::optional<std::string> node_name_problem(std::string_view name) {
    if (name.empty()) return "name is empty";
    for (char c : name) {
        if (c == '/' || c == '|' || c == '=' || c == '#')
            return std::string("name contains '") + c + "'";
        if ((unsigned char)c < 0x20 || c == 0x7f) return "name contains a control character";
    }
    if (name.front() == ' ' || name.front() == '\t' || name.back() == ' ' || name.back() == '\t')
        return "name has leading or trailing whitespace";
    return std::nullopt;
}

inline std::string quote_string(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

inline std::string render_name(std::string_view name) {
    if (plain_name(name)) return std::string(name);
    return quote_string(name);
}

}  // namespace qm::detail

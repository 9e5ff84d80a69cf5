#include "kbforge/rules.hpp"

namespace kbforge {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

RuleList parse_rules(std::string_view text) {
    RuleList list;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;

        Rule rule;
        if (std::size_t hash = body.find('#'); hash != std::string_view::npos) {
            rule.rationale = std::string(trim(body.substr(hash + 1)));
            body = trim(body.substr(0, hash));
        }

        if (body.substr(0, 6) != "place " ) throw ParseError(line_no, "expected \"place U+XXXX after ...\"");
        body = trim(body.substr(6));

        std::size_t space = body.find(' ');
        if (space == std::string_view::npos) throw ParseError(line_no, "missing anchor list");
        std::string_view target_token = body.substr(0, space);
        std::optional<CodePoint> target = CodePoint::parse(target_token);
        if (!target) throw ParseError(line_no, "malformed codepoint token \"" + std::string(target_token) + "\"");
        rule.target = *target;

        body = trim(body.substr(space));
        if (body.substr(0, 6) != "after " ) throw ParseError(line_no, "expected \"after\" before the anchor list");
        body = trim(body.substr(6));

        while (!body.empty()) {
            std::size_t comma = body.find(',');
            std::string_view token = trim(body.substr(0, comma));
            std::optional<CodePoint> anchor = CodePoint::parse(token);
            if (!anchor) throw ParseError(line_no, "malformed codepoint token \"" + std::string(token) + "\"");
            if (*anchor == rule.target) throw ParseError(line_no, "target cannot anchor itself");
            rule.anchors.push_back(*anchor);
            if (comma == std::string_view::npos) break;
            body = trim(body.substr(comma + 1));
            if (body.empty()) throw ParseError(line_no, "trailing comma in anchor list");
        }
        if (rule.anchors.empty()) throw ParseError(line_no, "empty anchor list");

        list.rules.push_back(std::move(rule));
    }

    return list;
}

}  // namespace kbforge

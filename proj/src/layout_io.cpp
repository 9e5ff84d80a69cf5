#include "kbforge/layout_io.hpp"

#include <array>
#include <vector>

namespace kbforge {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

}  // namespace

Layout parse_layout(std::string_view text) {
    Layout layout;
    std::array<bool, KeyId::kCount> seen{};
    bool header_done = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = strip_cr(text.substr(pos, eol == std::string_view::npos ? eol : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string_view> fields = split_fields(line);
        if (fields.empty()) continue;

        if (!header_done) {
            if (fields.size() != 4 || fields[0] != "layout" || fields[2] != "mode") {
                throw ParseError(line_no, "malformed header, expected \"layout <name> mode <cyrillic|latin>\"");
            }
            std::optional<Mode> mode = parse_mode(fields[3]);
            if (!mode) throw ParseError(line_no, "unknown mode \"" + std::string(fields[3]) + "\"");
            layout.name = std::string(fields[1]);
            layout.mode = *mode;
            header_done = true;
            continue;
        }

        if (fields.size() != 5) {
            throw ParseError(line_no, "expected \"<KEYID> <r1> <r2> <r3> <r4>\", got " +
                                          std::to_string(fields.size()) + " fields");
        }
        std::optional<KeyId> key = KeyId::parse(fields[0]);
        if (!key) throw ParseError(line_no, "unknown KeyId \"" + std::string(fields[0]) + "\"");
        if (seen[static_cast<std::size_t>(key->ordinal())]) {
            throw ParseError(line_no, "duplicate key line for " + std::string(fields[0]));
        }
        seen[static_cast<std::size_t>(key->ordinal())] = true;

        KeyAssignment& assignment = layout.at(*key);
        for (int reg = 1; reg <= 4; ++reg) {
            std::string_view field = fields[static_cast<std::size_t>(reg)];
            if (field == "-") continue;
            std::optional<CodePoint> cp = CodePoint::parse(field);
            if (!cp) throw ParseError(line_no, "malformed codepoint token \"" + std::string(field) + "\"");
            assignment.reg(reg) = *cp;
        }
    }

    if (!header_done) throw ParseError(0, "missing header line");
    return layout;
}

std::string serialize_layout(const Layout& layout) {
    std::string out = "layout " + layout.name + " mode " + std::string(to_string(layout.mode)) + "\n";
    for (KeyId key : key_order()) {
        out += key.name();
        for (int reg = 1; reg <= 4; ++reg) {
            const std::optional<CodePoint>& cp = layout.slot(key, reg);
            out += ' ';
            out += cp ? cp->to_string() : "-";
        }
        out += '\n';
    }
    return out;
}

}  // namespace kbforge

#include "kbforge/emitters.hpp"

#include <array>
#include <vector>

#include "kbforge/layout_io.hpp"

namespace kbforge {

namespace {

// Column offsets of the unicode table: key, cp low, cp high, keysym low,
// keysym high. The importer slices lines at the same offsets.
constexpr std::size_t kColKey = 0;
constexpr std::size_t kColCpLow = 6;
constexpr std::size_t kColCpHigh = 15;
constexpr std::size_t kColKsLow = 24;
constexpr std::size_t kColKsHigh = 48;

void put(std::string& line, std::size_t col, std::string_view text) {
    if (line.size() < col) line.resize(col, ' ');
    line += text;
}

std::string_view rtrim(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string_view slice(std::string_view line, std::size_t from, std::size_t to) {
    if (from >= line.size()) return {};
    std::string_view part = line.substr(from, to - from);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    return rtrim(part);
}

std::optional<CodePoint> parse_table_cell(std::string_view cp_text, std::string_view ks_text, int line_no) {
    if (cp_text.empty()) {
        if (!ks_text.empty()) throw ParseError(line_no, "keysym without codepoint");
        return std::nullopt;
    }
    std::optional<CodePoint> cp = CodePoint::parse(cp_text);
    if (!cp) throw ParseError(line_no, "malformed codepoint token \"" + std::string(cp_text) + "\"");
    if (!ks_text.empty() && keysym_for(*cp) != ks_text) {
        throw ParseError(line_no, "keysym \"" + std::string(ks_text) + "\" does not match " + cp->to_string());
    }
    return cp;
}

bool is_combining(CodePoint cp) {
    return cp.value >= 0x0300 && cp.value <= 0x036F;
}

// What a codepoint looks like inside a diagram cell.
std::string diagram_glyph(const std::optional<CodePoint>& cp) {
    if (!cp) return "";
    if (cp->value == 0x2011) return "/-/";
    if (cp->value == 0x00A0) return "NBSP";
    std::string out;
    if (is_combining(*cp)) append_utf8(out, CodePoint(0x25CC));  // dotted circle
    append_utf8(out, *cp);
    return out;
}

// Display columns of a glyph string: combining marks take none.
std::size_t display_width(std::string_view utf8) {
    std::size_t width = 0;
    for (std::size_t i = 0; i < utf8.size();) {
        unsigned char byte = static_cast<unsigned char>(utf8[i]);
        std::size_t len = byte < 0x80 ? 1 : byte < 0xE0 ? 2 : byte < 0xF0 ? 3 : 4;
        char32_t v = 0;
        if (len == 1) {
            v = byte;
        } else {
            v = byte & (0x7F >> len);
            for (std::size_t k = 1; k < len && i + k < utf8.size(); ++k) {
                v = (v << 6) | (static_cast<unsigned char>(utf8[i + k]) & 0x3F);
            }
        }
        if (!is_combining(CodePoint(v))) ++width;
        i += len;
    }
    return width;
}

std::string center(std::string_view utf8, std::size_t width) {
    std::size_t w = display_width(utf8);
    if (w >= width) return std::string(utf8);
    std::size_t left = (width - w) / 2;
    return std::string(left, ' ') + std::string(utf8) + std::string(width - w - left, ' ');
}

constexpr std::size_t kCellWidth = 5;

struct DiagramRow {
    int first_ordinal;
    int count;
};

constexpr std::array<DiagramRow, 4> kDiagramRows = {{{0, 13}, {13, 12}, {25, 12}, {37, 11}}};

void append_key_row(std::string& out, const Layout& layout, const DiagramRow& row,
                    int upper_reg, int lower_reg) {
    std::string border;
    for (int i = 0; i < row.count; ++i) border += "+" + std::string(kCellWidth, '-');
    border += "+\n";

    std::string upper, lower;
    for (int i = 0; i < row.count; ++i) {
        KeyId key = KeyId::from_ordinal(row.first_ordinal + i);
        upper += "|" + center(diagram_glyph(layout.slot(key, upper_reg)), kCellWidth);
        lower += "|" + center(diagram_glyph(layout.slot(key, lower_reg)), kCellWidth);
    }
    out += border + upper + "|\n" + lower + "|\n" + border;
}

}  // namespace

std::string emit_unicode_table(const Layout& layout) {
    std::string out = "layout " + layout.name + " mode " + std::string(to_string(layout.mode)) + "\n";
    for (KeyId key : key_order()) {
        for (int half = 0; half < 2; ++half) {
            int low = half == 0 ? 1 : 2;   // registers 1/3 on the first row, 2/4 on the second
            int high = half == 0 ? 3 : 4;
            std::string line;
            if (half == 0) put(line, kColKey, key.name());
            const std::optional<CodePoint>& low_cp = layout.slot(key, low);
            const std::optional<CodePoint>& high_cp = layout.slot(key, high);
            if (low_cp) put(line, kColCpLow, low_cp->to_string());
            if (high_cp) put(line, kColCpHigh, high_cp->to_string());
            if (low_cp) put(line, kColKsLow, keysym_for(*low_cp));
            if (high_cp) put(line, kColKsHigh, keysym_for(*high_cp));
            out += rtrim(line);
            out += '\n';
        }
    }
    return out;
}

Layout parse_unicode_table(std::string_view text) {
    Layout layout;
    bool header_done = false;
    std::optional<KeyId> current;
    int half = 0;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (rtrim(line).empty()) continue;

        if (!header_done) {
            Layout header = parse_layout(std::string(line) + "\n");
            layout.name = header.name;
            layout.mode = header.mode;
            header_done = true;
            continue;
        }

        std::string_view key_text = slice(line, kColKey, kColCpLow);
        if (!key_text.empty()) {
            current = KeyId::parse(key_text);
            if (!current) throw ParseError(line_no, "unknown KeyId \"" + std::string(key_text) + "\"");
            half = 0;
        } else if (!current || half != 1) {
            throw ParseError(line_no, "continuation row without a key row");
        }

        int low = half == 0 ? 1 : 2;
        int high = half == 0 ? 3 : 4;
        layout.slot(*current, low) =
            parse_table_cell(slice(line, kColCpLow, kColCpHigh), slice(line, kColKsLow, kColKsHigh), line_no);
        layout.slot(*current, high) =
            parse_table_cell(slice(line, kColCpHigh, kColKsLow), slice(line, kColKsHigh, line.size()), line_no);
        ++half;
    }

    if (!header_done) throw ParseError(0, "missing header line");
    return layout;
}

std::string_view xkb_key_name(KeyId key) {
    static const std::array<std::string, KeyId::kCount> names = [] {
        std::array<std::string, KeyId::kCount> table;
        for (KeyId k : key_order()) {
            std::string_view iso = k.name();
            std::string name;
            if (iso == "SPACE") name = "SPCE";
            else if (iso == "E00") name = "TLDE";
            else if (iso == "C12") name = "BKSL";
            else if (iso == "B00") name = "LSGT";
            else name = "A" + std::string(iso);
            table[static_cast<std::size_t>(k.ordinal())] = name;
        }
        return table;
    }();
    return names[static_cast<std::size_t>(key.ordinal())];
}

namespace {

void append_xkb_block(std::string& out, const Layout& layout, std::string_view group_name) {
    out += "xkb_symbols \"" + layout.name + "\" {\n";
    out += "    name[Group1]= \"" + std::string(group_name) + "\";\n\n";
    for (KeyId key : key_order()) {
        const KeyAssignment& assignment = layout.at(key);
        int levels = (assignment.reg(3) || assignment.reg(4)) ? 4 : 2;
        out += "    key <" + std::string(xkb_key_name(key)) + "> { [ ";
        for (int reg = 1; reg <= levels; ++reg) {
            if (reg > 1) out += ", ";
            const std::optional<CodePoint>& cp = assignment.reg(reg);
            out += cp ? keysym_for(*cp) : "NoSymbol";
        }
        out += " ] };\n";
    }
    out += "};\n";
}

}  // namespace

std::string emit_xkb(const Layout& cyr, const Layout& lat,
                     std::string_view cyr_group_name, std::string_view lat_group_name) {
    if (cyr.mode != Mode::Cyrillic || lat.mode != Mode::Latin) {
        throw Error("emit_xkb expects a cyrillic layout and a latin layout, in that order");
    }
    std::string out;
    append_xkb_block(out, cyr, cyr_group_name);
    out += '\n';
    append_xkb_block(out, lat, lat_group_name);
    return out;
}

std::string emit_ascii_diagram(const Layout& layout, RegisterPair pair) {
    int upper_reg = pair == RegisterPair::Low12 ? 2 : 4;
    int lower_reg = pair == RegisterPair::Low12 ? 1 : 3;

    std::string out;
    for (const DiagramRow& row : kDiagramRows) {
        append_key_row(out, layout, row, upper_reg, lower_reg);
    }

    // Space bar drawn as one wide cell.
    constexpr std::size_t kSpaceWidth = 29;
    KeyId space = KeyId::from_ordinal(KeyId::kCount - 1);
    std::string border = "+" + std::string(kSpaceWidth, '-') + "+\n";
    out += border;
    out += "|" + center(diagram_glyph(layout.slot(space, upper_reg)), kSpaceWidth) + "|\n";
    out += "|" + center(diagram_glyph(layout.slot(space, lower_reg)), kSpaceWidth) + "|\n";
    out += border;
    return out;
}

}  // namespace kbforge

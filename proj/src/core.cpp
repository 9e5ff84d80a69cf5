#include "kbforge/core.hpp"

#include <cstdio>

namespace kbforge {

std::string CodePoint::to_string() const {
    char buf[12];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(value));
    return buf;
}

std::optional<CodePoint> CodePoint::parse(std::string_view text) {
    if (text.size() < 6 || text.size() > 8 || text.substr(0, 2) != "U+") return std::nullopt;
    char32_t v = 0;
    for (char c : text.substr(2)) {
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else return std::nullopt;
        v = v * 16 + static_cast<char32_t>(digit);
    }
    if (!is_scalar(v)) return std::nullopt;
    return CodePoint(v);
}

std::string_view to_string(Mode mode) {
    return mode == Mode::Cyrillic ? "cyrillic" : "latin";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "cyrillic") return Mode::Cyrillic;
    if (text == "latin") return Mode::Latin;
    return std::nullopt;
}

void append_utf8(std::string& out, CodePoint cp) {
    char32_t v = cp.value;
    if (v < 0x80) {
        out.push_back(static_cast<char>(v));
    } else if (v < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (v >> 6)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else if (v < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (v >> 12)));
        out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (v >> 18)));
        out.push_back(static_cast<char>(0x80 | ((v >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    }
}

std::string to_utf8(CodePoint cp) {
    std::string out;
    append_utf8(out, cp);
    return out;
}

}  // namespace kbforge

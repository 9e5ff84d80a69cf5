#pragma once

#include <span>
#include <string>
#include <string_view>

#include "kbforge/layout.hpp"

namespace kbforge {

// Layout file format (UTF-8, LF):
//   layout <name> mode <cyrillic|latin>
//   <KEYID> <r1> <r2> <r3> <r4>
// where each register field is U+XXXX (4-6 uppercase hex digits) or "-".
// Blank lines and lines starting with '#' are ignored. Keys not listed get
// all-empty registers; listing a key twice is an error.
Layout parse_layout(std::string_view text);

// Canonical form: header plus one line per key in canonical order.
// parse_layout(serialize_layout(x)) == x.
std::string serialize_layout(const Layout& layout);

// The X keysym for a codepoint: the named entry of the built-in table when
// one exists, otherwise the "U" + uppercase-hex fallback ("U045D").
std::string keysym_for(CodePoint cp);

// Inverse of keysym_for on its range; throws on identifiers that are neither
// known names nor well-formed fallbacks.
CodePoint codepoint_for_keysym(std::string_view name);

// Named (codepoint, keysym) pairs, sorted by codepoint. Exposed so tests can
// check the table's internal consistency.
struct KeysymEntry {
    char32_t codepoint;
    std::string_view name;
};
std::span<const KeysymEntry> keysym_table();

}  // namespace kbforge

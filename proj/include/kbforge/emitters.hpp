#pragma once

#include <string>
#include <string_view>

#include "kbforge/layout.hpp"

namespace kbforge {

enum class RegisterPair { Low12, High34 };

// Plain-text table mirroring the formal layout definition: two rows per key,
// the first carrying registers 1 and 3, the second registers 2 and 4, each
// with the U+XXXX form and the keysym name. Fixed column offsets; empty
// cells stay blank.
std::string emit_unicode_table(const Layout& layout);

// Inverse of emit_unicode_table; rejects tables whose keysym column does not
// match the codepoint column.
Layout parse_unicode_table(std::string_view text);

// XKB symbols: one block per layout, 49 key lines each in canonical order,
// four keysyms per line (two where registers 3-4 are empty).
std::string emit_xkb(const Layout& cyr, const Layout& lat,
                     std::string_view cyr_group_name, std::string_view lat_group_name);

// The fixed ISO 9995 -> XKB key name map (E00 -> TLDE, C12 -> BKSL, ...).
std::string_view xkb_key_name(KeyId key);

// Fixed-width keyboard picture of one register pair: four key rows plus the
// space bar, the higher register of the pair drawn above the lower one.
// Cell width is 5 display columns. U+2011 draws as /-/, U+00A0 as NBSP and
// combining marks sit on a dotted circle.
std::string emit_ascii_diagram(const Layout& layout, RegisterPair pair);

}  // namespace kbforge

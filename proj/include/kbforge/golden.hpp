#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kbforge/layout.hpp"
#include "kbforge/rules.hpp"

namespace kbforge {

// The four shipped arrangements: "bds", "phonetic", "phonetic-bds", "latin".
std::span<const std::string_view> builtin_names();

// Raw text of the shipped assets; unknown names throw.
std::string_view builtin_layout_text(std::string_view name);
std::string_view builtin_rules_text(std::string_view name);

// Parsed forms. builtin_base is the golden layout with registers 3-4 emptied.
const Layout& builtin_layout(std::string_view name);
Layout builtin_base(std::string_view name);
const RuleList& builtin_rules(std::string_view name);

struct DiffEntry {
    KeyId key;
    int reg = 0;
    std::optional<CodePoint> left;
    std::optional<CodePoint> right;

    bool operator==(const DiffEntry&) const = default;
};

// Cells where the two layouts disagree, canonical key order then register.
struct LayoutDiff {
    std::vector<DiffEntry> entries;

    bool empty() const { return entries.empty(); }
};

LayoutDiff diff_layouts(const Layout& a, const Layout& b);
std::string format_diff(const LayoutDiff& diff);

// A modernization checklist: symbols a conforming layout must carry.
struct ValidationProfile {
    std::string name;
    Mode mode = Mode::Cyrillic;
    std::vector<CodePoint> required;      // must sit in register 1 or 2
    std::vector<CodePoint> required_any;  // any register will do
    bool base_registers_total = false;    // every key needs registers 1 and 2
};

// "bg-cyrillic" or "en-latin"; unknown names throw.
const ValidationProfile& builtin_profile(std::string_view name);

struct SymbolFinding {
    CodePoint cp;
    bool base_registers_only = false;  // which requirement list it came from
    bool via_case_toggle = false;      // reachable only as a CapsLock image
    std::vector<std::pair<KeyId, int>> positions;  // empty when missing

    bool missing() const { return positions.empty(); }
};

struct ValidationReport {
    std::vector<SymbolFinding> findings;
    std::vector<KeyId> structural_holes;  // keys with register 1 or 2 empty
    bool passed = false;

    std::vector<CodePoint> missing_symbols() const;
};

// Checks every profile requirement against the layout; throws on a
// layout/profile mode mismatch.
ValidationReport validate_profile(const Layout& layout, const ValidationProfile& profile);
std::string format_validation(const ValidationReport& report, const ValidationProfile& profile);

}  // namespace kbforge

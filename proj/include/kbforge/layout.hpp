#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kbforge/core.hpp"
#include "kbforge/key_id.hpp"

namespace kbforge {

// The up-to-four symbols one key can generate. Registers are 1-based:
// 1 = plain, 2 = Shift, 3 = third level, 4 = Shift + third level.
struct KeyAssignment {
    std::array<std::optional<CodePoint>, 4> regs;

    const std::optional<CodePoint>& reg(int r) const { return regs.at(static_cast<std::size_t>(r - 1)); }
    std::optional<CodePoint>& reg(int r) { return regs.at(static_cast<std::size_t>(r - 1)); }

    bool operator==(const KeyAssignment&) const = default;
};

// A named, mode-tagged assignment for all 49 key positions.
struct Layout {
    std::string name;
    Mode mode = Mode::Cyrillic;
    std::array<KeyAssignment, KeyId::kCount> keys;

    const KeyAssignment& at(KeyId key) const { return keys[static_cast<std::size_t>(key.ordinal())]; }
    KeyAssignment& at(KeyId key) { return keys[static_cast<std::size_t>(key.ordinal())]; }

    const std::optional<CodePoint>& slot(KeyId key, int reg) const { return at(key).reg(reg); }
    std::optional<CodePoint>& slot(KeyId key, int reg) { return at(key).reg(reg); }

    bool operator==(const Layout&) const = default;
};

// All slots currently holding `cp`, in canonical key order, register ascending.
std::vector<std::pair<KeyId, int>> occurrences_of(const Layout& layout, CodePoint cp);

// True when `cp` sits in register 1 or 2 of any key.
bool occurs_in_base_registers(const Layout& layout, CodePoint cp);

// A third/fourth-register slot is free when it is empty or its occupant is
// also reachable from register 1 or 2 somewhere on the keyboard.
// Registers 1 and 2 are never up for grabs; asking about them is an error.
bool is_free_slot(const Layout& layout, KeyId key, int reg);

}  // namespace kbforge

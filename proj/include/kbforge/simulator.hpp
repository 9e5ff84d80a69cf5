#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kbforge/layout.hpp"

namespace kbforge {

struct KeyEvent {
    KeyId key;
    bool shift = false;
    bool level3 = false;
    bool capslock = false;
};

struct SimState {
    Layout cyr;
    Layout lat;
    Mode mode = Mode::Cyrillic;
    bool capslock = false;
};

SimState make_sim_state(Layout cyr, Layout lat, Mode mode);

// Register selection: plain 1, Shift 2, level3 3, Shift+level3 4. CapsLock
// case-toggles cased letters from registers 1-2 only; registers 3-4 ignore it.
std::optional<CodePoint> resolve_event(const SimState& state, const KeyEvent& event);

// Concatenates the resolved codepoints, skipping empty resolutions.
std::string type_sequence(const SimState& state, std::span<const KeyEvent> events);

SimState set_mode(SimState state, Mode mode);

enum class PasswordPolicy { AsciiOnly, AnyScript };
enum class PasswordVerdict { Ok, MustSwitchToLatin, MustIndicateState };

// ASCII-only password fields must not receive Cyrillic; free-script fields
// need the keyboard state surfaced to the user.
PasswordVerdict password_guard(const SimState& state, PasswordPolicy policy);

// Event token syntax: [S+][L3+][CL+]<KEYID>, whitespace separated.
std::vector<KeyEvent> parse_events(std::string_view text);

// Simple case toggle over the letter repertoire a layout can carry
// (ASCII, Latin-1, Greek, Cyrillic); identity for everything else.
CodePoint toggle_case(CodePoint cp);

}  // namespace kbforge

#include "kbforge/simulator.hpp"

namespace kbforge {

namespace {

bool in_range(char32_t v, char32_t lo, char32_t hi) {
    return v >= lo && v <= hi;
}

}  // namespace

CodePoint toggle_case(CodePoint cp) {
    char32_t v = cp.value;
    // ASCII
    if (in_range(v, U'a', U'z')) return CodePoint(v - 0x20);
    if (in_range(v, U'A', U'Z')) return CodePoint(v + 0x20);
    // Latin-1 letters; 0xD7/0xF7 are multiplication and division signs.
    if (in_range(v, 0xE0, 0xFE) && v != 0xF7) return CodePoint(v - 0x20);
    if (in_range(v, 0xC0, 0xDE) && v != 0xD7) return CodePoint(v + 0x20);
    // Greek; final sigma pairs with capital sigma too, but only one way back.
    if (in_range(v, 0x3B1, 0x3C9) && v != 0x3C2) return CodePoint(v - 0x20);
    if (in_range(v, 0x391, 0x3A9) && v != 0x3A2) return CodePoint(v + 0x20);
    // Cyrillic base block
    if (in_range(v, 0x430, 0x44F)) return CodePoint(v - 0x20);
    if (in_range(v, 0x410, 0x42F)) return CodePoint(v + 0x20);
    if (in_range(v, 0x450, 0x45F)) return CodePoint(v - 0x50);
    if (in_range(v, 0x400, 0x40F)) return CodePoint(v + 0x50);
    // Cyrillic extended (historic letters pair even/odd)
    if (in_range(v, 0x460, 0x481)) return CodePoint((v % 2 == 0) ? v + 1 : v - 1);
    return cp;
}

SimState make_sim_state(Layout cyr, Layout lat, Mode mode) {
    if (cyr.mode != Mode::Cyrillic) throw Error("simulator state needs a cyrillic layout first");
    if (lat.mode != Mode::Latin) throw Error("simulator state needs a latin layout second");
    return SimState{std::move(cyr), std::move(lat), mode, false};
}

std::optional<CodePoint> resolve_event(const SimState& state, const KeyEvent& event) {
    const Layout& layout = state.mode == Mode::Cyrillic ? state.cyr : state.lat;
    int reg = 1 + (event.shift ? 1 : 0) + (event.level3 ? 2 : 0);
    std::optional<CodePoint> cp = layout.slot(event.key, reg);
    if (!cp) return std::nullopt;
    bool capslock = event.capslock || state.capslock;
    if (capslock && reg <= 2) {
        CodePoint toggled = toggle_case(*cp);
        if (toggled != *cp) return toggled;
    }
    return cp;
}

std::string type_sequence(const SimState& state, std::span<const KeyEvent> events) {
    std::string out;
    for (const KeyEvent& event : events) {
        if (std::optional<CodePoint> cp = resolve_event(state, event)) append_utf8(out, *cp);
    }
    return out;
}

SimState set_mode(SimState state, Mode mode) {
    state.mode = mode;
    return state;
}

PasswordVerdict password_guard(const SimState& state, PasswordPolicy policy) {
    if (policy == PasswordPolicy::AsciiOnly) {
        return state.mode == Mode::Cyrillic ? PasswordVerdict::MustSwitchToLatin : PasswordVerdict::Ok;
    }
    return PasswordVerdict::MustIndicateState;
}

std::vector<KeyEvent> parse_events(std::string_view text) {
    std::vector<KeyEvent> events;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n') ++i;
        if (i == start) break;
        std::string_view token = text.substr(start, i - start);
        std::string_view rest = token;

        KeyEvent event{};
        for (;;) {
            if (!event.shift && rest.substr(0, 2) == "S+") {
                event.shift = true;
                rest.remove_prefix(2);
            } else if (!event.level3 && rest.substr(0, 3) == "L3+") {
                event.level3 = true;
                rest.remove_prefix(3);
            } else if (!event.capslock && rest.substr(0, 3) == "CL+") {
                event.capslock = true;
                rest.remove_prefix(3);
            } else {
                break;
            }
        }
        std::optional<KeyId> key = KeyId::parse(rest);
        if (!key) throw ParseError(0, "bad event token \"" + std::string(token) + "\"");
        event.key = *key;
        events.push_back(event);
    }
    return events;
}

}  // namespace kbforge

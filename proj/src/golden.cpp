#include "kbforge/golden.hpp"

#include <array>
#include <map>

#include "kbforge/embedded_assets.hpp"
#include "kbforge/layout_io.hpp"
#include "kbforge/simulator.hpp"

namespace kbforge {

namespace {

constexpr std::array<std::string_view, 4> kNames = {"bds", "phonetic", "phonetic-bds", "latin"};

struct AssetPair {
    std::string_view layout;
    std::string_view rules;
};

AssetPair asset_for(std::string_view name) {
    if (name == "bds") return {assets::bds_layout, assets::bds_rules};
    if (name == "phonetic") return {assets::phonetic_layout, assets::phonetic_rules};
    if (name == "phonetic-bds") return {assets::phonetic_bds_layout, assets::phonetic_bds_rules};
    if (name == "latin") return {assets::latin_layout, assets::latin_rules};
    throw Error("unknown builtin layout \"" + std::string(name) + "\"");
}

std::vector<CodePoint> codepoint_range(char32_t first, char32_t last) {
    std::vector<CodePoint> cps;
    for (char32_t v = first; v <= last; ++v) cps.emplace_back(v);
    return cps;
}

void append(std::vector<CodePoint>& into, const std::vector<CodePoint>& more) {
    into.insert(into.end(), more.begin(), more.end());
}

// The 30 modern Bulgarian letters: the full Cyrillic run without the Russian
// yeru and e, in both cases, plus stressed i.
std::vector<CodePoint> bulgarian_letters() {
    std::vector<CodePoint> cps;
    for (char32_t v = 0x0410; v <= 0x044F; ++v) {
        if (v == 0x042B || v == 0x042D || v == 0x044B || v == 0x044D) continue;
        cps.emplace_back(v);
    }
    cps.emplace_back(0x045D);
    cps.emplace_back(0x040D);
    return cps;
}

ValidationProfile make_bg_cyrillic() {
    ValidationProfile profile;
    profile.name = "bg-cyrillic";
    profile.mode = Mode::Cyrillic;
    profile.required = bulgarian_letters();
    append(profile.required, codepoint_range(U'0', U'9'));
    profile.required_any = {CodePoint(0x201E), CodePoint(0x201C), CodePoint(0x2013),
                            CodePoint(0x20AC), CodePoint(0x2116), CodePoint(0x00A7)};
    profile.base_registers_total = true;
    return profile;
}

ValidationProfile make_en_latin() {
    ValidationProfile profile;
    profile.name = "en-latin";
    profile.mode = Mode::Latin;
    profile.required = codepoint_range(U'a', U'z');
    append(profile.required, codepoint_range(U'A', U'Z'));
    append(profile.required, codepoint_range(U'0', U'9'));
    append(profile.required, codepoint_range(0x20, 0x2F));
    append(profile.required, codepoint_range(0x3A, 0x40));
    append(profile.required, codepoint_range(0x5B, 0x60));
    append(profile.required, codepoint_range(0x7B, 0x7E));
    profile.required_any = {CodePoint(0x20AC), CodePoint(0x00A3), CodePoint(0x00A5)};
    profile.base_registers_total = true;
    return profile;
}

}  // namespace

std::span<const std::string_view> builtin_names() {
    return kNames;
}

std::string_view builtin_layout_text(std::string_view name) {
    return asset_for(name).layout;
}

std::string_view builtin_rules_text(std::string_view name) {
    return asset_for(name).rules;
}

const Layout& builtin_layout(std::string_view name) {
    static const std::map<std::string_view, Layout> layouts = [] {
        std::map<std::string_view, Layout> m;
        for (std::string_view n : kNames) m.emplace(n, parse_layout(asset_for(n).layout));
        return m;
    }();
    auto it = layouts.find(name);
    if (it == layouts.end()) throw Error("unknown builtin layout \"" + std::string(name) + "\"");
    return it->second;
}

Layout builtin_base(std::string_view name) {
    Layout base = builtin_layout(name);
    for (KeyId key : key_order()) {
        base.slot(key, 3).reset();
        base.slot(key, 4).reset();
    }
    return base;
}

const RuleList& builtin_rules(std::string_view name) {
    static const std::map<std::string_view, RuleList> rules = [] {
        std::map<std::string_view, RuleList> m;
        for (std::string_view n : kNames) m.emplace(n, parse_rules(asset_for(n).rules));
        return m;
    }();
    auto it = rules.find(name);
    if (it == rules.end()) throw Error("unknown builtin rule list \"" + std::string(name) + "\"");
    return it->second;
}

LayoutDiff diff_layouts(const Layout& a, const Layout& b) {
    LayoutDiff diff;
    for (KeyId key : key_order()) {
        for (int reg = 1; reg <= 4; ++reg) {
            const std::optional<CodePoint>& left = a.slot(key, reg);
            const std::optional<CodePoint>& right = b.slot(key, reg);
            if (left != right) diff.entries.push_back({key, reg, left, right});
        }
    }
    return diff;
}

std::string format_diff(const LayoutDiff& diff) {
    std::string out;
    for (const DiffEntry& entry : diff.entries) {
        out += entry.key.name();
        out += " reg " + std::to_string(entry.reg) + ": ";
        out += entry.left ? entry.left->to_string() : "-";
        out += " != ";
        out += entry.right ? entry.right->to_string() : "-";
        out += '\n';
    }
    return out;
}

const ValidationProfile& builtin_profile(std::string_view name) {
    static const ValidationProfile bg = make_bg_cyrillic();
    static const ValidationProfile en = make_en_latin();
    if (name == "bg-cyrillic") return bg;
    if (name == "en-latin") return en;
    throw Error("unknown profile \"" + std::string(name) + "\"");
}

ValidationReport validate_profile(const Layout& layout, const ValidationProfile& profile) {
    if (layout.mode != profile.mode) {
        throw Error("profile " + profile.name + " expects a " + std::string(to_string(profile.mode)) +
                    " layout, got " + std::string(to_string(layout.mode)));
    }

    auto base_positions = [&](CodePoint cp) {
        std::vector<std::pair<KeyId, int>> positions;
        for (auto [key, reg] : occurrences_of(layout, cp)) {
            if (reg <= 2) positions.emplace_back(key, reg);
        }
        return positions;
    };

    ValidationReport report;
    for (CodePoint cp : profile.required) {
        SymbolFinding finding{cp, true, false, base_positions(cp)};
        // Cased letters count as present through CapsLock: the tables leave
        // capital soft sign off the registers entirely.
        if (finding.positions.empty() && toggle_case(cp) != cp) {
            finding.positions = base_positions(toggle_case(cp));
            finding.via_case_toggle = !finding.positions.empty();
        }
        report.findings.push_back(std::move(finding));
    }
    for (CodePoint cp : profile.required_any) {
        report.findings.push_back({cp, false, false, occurrences_of(layout, cp)});
    }
    if (profile.base_registers_total) {
        for (KeyId key : key_order()) {
            if (!layout.slot(key, 1) || !layout.slot(key, 2)) report.structural_holes.push_back(key);
        }
    }

    report.passed = report.structural_holes.empty();
    for (const SymbolFinding& finding : report.findings) {
        if (finding.missing()) report.passed = false;
    }
    return report;
}

std::vector<CodePoint> ValidationReport::missing_symbols() const {
    std::vector<CodePoint> missing;
    for (const SymbolFinding& finding : findings) {
        if (finding.missing()) missing.push_back(finding.cp);
    }
    return missing;
}

std::string format_validation(const ValidationReport& report, const ValidationProfile& profile) {
    std::string out = "profile " + profile.name + ": " + (report.passed ? "pass" : "fail") + "\n";
    for (const SymbolFinding& finding : report.findings) {
        if (finding.missing()) {
            out += "missing " + finding.cp.to_string() + "\n";
            continue;
        }
        out += "present " + finding.cp.to_string() + (finding.via_case_toggle ? " via capslock at" : " at");
        for (auto [key, reg] : finding.positions) {
            out += ' ';
            out += key.name();
            out += '/' + std::to_string(reg);
        }
        out += '\n';
    }
    for (KeyId key : report.structural_holes) {
        out += "hole " + std::string(key.name()) + ": register 1 or 2 empty\n";
    }
    return out;
}

}  // namespace kbforge

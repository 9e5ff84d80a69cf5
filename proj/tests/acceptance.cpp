// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Runs against the library plus the kbforge binary.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kbforge/emitters.hpp"
#include "kbforge/golden.hpp"
#include "kbforge/layout_io.hpp"
#include "kbforge/placement.hpp"
#include "kbforge/simulator.hpp"

using namespace kbforge;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(std::string text) {
    g_notes.push_back(std::move(text));
}

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
    g_notes.clear();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note(std::string("exception: ") + e.what());
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << "\n";
    if (!ok) {
        ++g_failures;
        for (const std::string& n : g_notes) std::cout << "      " << n << "\n";
    }
}

bool expect(bool condition, const std::string& what) {
    if (!condition) note(what);
    return condition;
}

KeyId key(std::string_view name) {
    return *KeyId::parse(name);
}

struct ExecResult {
    int code;
    std::string out;
};

ExecResult exec_cli(const std::string& args) {
    std::string cmd = std::string(KBFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// --- criteria ---------------------------------------------------------------

bool golden_reproduction() {
    bool ok = true;
    for (std::string_view name : builtin_names()) {
        auto [compiled, report] = run_placement(builtin_base(name), builtin_rules(name));
        LayoutDiff diff = diff_layouts(compiled, builtin_layout(name));
        ok &= expect(diff.empty(), std::string(name) + ": " + std::to_string(diff.entries.size()) +
                                       " differing cell(s)\n" + format_diff(diff));
        ok &= expect(report.unplaceable_count() == 0, std::string(name) + ": unplaceable rules");
    }
    return ok;
}

bool branch_coverage() {
    auto [compiled, report] = run_placement(builtin_base("bds"), builtin_rules("bds"));

    auto has = [&](int step, std::string_view key_name, int reg, char32_t target) {
        for (const PlacementOutcome& o : report.outcomes) {
            if (o.status == PlacementOutcome::Status::Placed && o.placed.step == step &&
                o.placed.key == key(key_name) && o.placed.reg == reg && o.target == CodePoint(target)) {
                return true;
            }
        }
        return false;
    };

    bool ok = true;
    ok &= expect(has(4, "D01", 3, 0x2019), "no step-4 placement of U+2019 at D01");
    ok &= expect(has(5, "E06", 4, 0x2014), "no step-5 placement of U+2014 at E06");
    ok &= expect(has(6, "D01", 4, 0x2018), "no step-6 placement of U+2018 at D01");
    ok &= expect(has(7, "E08", 4, 0x0301), "no step-7 placement of U+0301 at E08");

    // replaying the recorded trace reproduces the compiled layout exactly
    Layout replay = builtin_base("bds");
    for (const PlacementOutcome& o : report.outcomes) {
        if (o.status != PlacementOutcome::Status::Placed) continue;
        KeyAssignment& assignment = replay.at(o.placed.key);
        if (o.placed.step == 7) assignment.reg(3) = assignment.reg(4);
        assignment.reg(o.placed.reg) = o.target;
    }
    replay = finalize_registers(replay);
    ok &= expect(diff_layouts(replay, compiled).empty(), "trace replay diverges from the compiled layout");
    return ok;
}

bool finalization_law() {
    bool ok = true;
    auto check_layout = [&](const Layout& layout, const std::string& what) {
        for (KeyId k : key_order()) {
            if (layout.slot(k, 3).has_value() != layout.slot(k, 4).has_value()) {
                ok &= expect(false, what + ": register 3/4 pairing broken at " + std::string(k.name()));
                return;
            }
        }
    };

    for (std::string_view name : builtin_names()) {
        auto [compiled, report] = run_placement(builtin_base(name), builtin_rules(name));
        check_layout(compiled, std::string(name));
    }

    const Layout base = builtin_base("bds");
    std::vector<CodePoint> anchors;
    for (KeyId k : key_order()) {
        for (int reg = 1; reg <= 2; ++reg) anchors.push_back(*base.slot(k, reg));
    }
    std::mt19937 rng(20250808);
    for (int round = 0; round < 1000; ++round) {
        RuleList rules;
        std::size_t count = 1 + rng() % 6;
        for (std::size_t i = 0; i < count; ++i) {
            Rule rule;
            rule.target = CodePoint(0x2100 + rng() % 0x300);
            std::size_t anchor_count = 1 + rng() % 2;
            for (std::size_t a = 0; a < anchor_count; ++a) {
                CodePoint anchor = rng() % 5 == 0 ? CodePoint(0x3C) /* absent from BDS */
                                                  : anchors[rng() % anchors.size()];
                if (anchor != rule.target) rule.anchors.push_back(anchor);
            }
            if (rule.anchors.empty()) rule.anchors.push_back(anchors[0]);
            rules.rules.push_back(rule);
        }
        auto [layout, report] = run_placement(base, rules);
        check_layout(layout, "random rule list " + std::to_string(round));
        if (!ok) return false;
    }
    return ok;
}

bool keysym_fidelity() {
    bool ok = true;
    std::size_t comparisons = 0;
    for (std::string_view name : builtin_names()) {
        fs::path path = fs::path(KBFORGE_EXPECTED_DIR) / (std::string(name) + ".keysyms");
        std::istringstream in(read_file(path));
        const Layout& layout = builtin_layout(name);
        int rows = 0;
        for (std::string line; std::getline(in, line);) {
            std::istringstream fields(line);
            std::string key_name, tokens[4];
            fields >> key_name >> tokens[0] >> tokens[1] >> tokens[2] >> tokens[3];
            auto k = KeyId::parse(key_name);
            if (!expect(k.has_value(), path.string() + ": bad key " + key_name)) return false;
            ++rows;
            for (int reg = 1; reg <= 4; ++reg) {
                const std::string& want = tokens[reg - 1];
                const std::optional<CodePoint>& cell = layout.slot(*k, reg);
                ++comparisons;
                if (want == "-") {
                    ok &= expect(!cell.has_value(), std::string(name) + " " + key_name + " reg " +
                                                        std::to_string(reg) + ": expected empty cell");
                } else if (!expect(cell.has_value(), std::string(name) + " " + key_name + " reg " +
                                                         std::to_string(reg) + ": cell unexpectedly empty")) {
                    ok = false;
                } else {
                    std::string got = keysym_for(*cell);
                    ok &= expect(got == want, std::string(name) + " " + key_name + " reg " +
                                                  std::to_string(reg) + ": " + got + " != " + want);
                }
            }
        }
        ok &= expect(rows == KeyId::kCount, std::string(name) + ": expected 49 rows");
    }
    ok &= expect(comparisons == 4 * 196, "expected 784 comparisons, ran " + std::to_string(comparisons));
    return ok;
}

bool round_trips() {
    bool ok = true;
    for (std::string_view name : builtin_names()) {
        const Layout& golden = builtin_layout(name);
        ok &= expect(parse_layout(serialize_layout(golden)) == golden,
                     std::string(name) + ": parse/serialize round trip");
        ok &= expect(parse_unicode_table(emit_unicode_table(golden)) == golden,
                     std::string(name) + ": unicode table re-import");
        ok &= expect(serialize_layout(golden) == serialize_layout(golden) &&
                         emit_unicode_table(golden) == emit_unicode_table(golden) &&
                         emit_ascii_diagram(golden, RegisterPair::Low12) ==
                             emit_ascii_diagram(golden, RegisterPair::Low12) &&
                         emit_ascii_diagram(golden, RegisterPair::High34) ==
                             emit_ascii_diagram(golden, RegisterPair::High34),
                     std::string(name) + ": emitter determinism");
    }
    std::string xkb_a = emit_xkb(builtin_layout("bds"), builtin_layout("latin"), "bds", "latin");
    std::string xkb_b = emit_xkb(builtin_layout("bds"), builtin_layout("latin"), "bds", "latin");
    ok &= expect(xkb_a == xkb_b, "xkb determinism");

    // and across separate processes, through the CLI
    for (const char* args : {"emit --layout builtin:bds --format table",
                             "emit --layout builtin:bds --format xkb",
                             "emit --layout builtin:phonetic --format ascii --registers high"}) {
        ExecResult first = exec_cli(args);
        ExecResult second = exec_cli(args);
        ok &= expect(first.code == 0 && second.code == 0 && first.out == second.out && !first.out.empty(),
                     std::string("cli determinism: ") + args);
    }
    return ok;
}

bool profile_validation() {
    bool ok = true;
    const ValidationProfile& bg = builtin_profile("bg-cyrillic");
    for (std::string_view name : {"bds", "phonetic", "phonetic-bds"}) {
        ok &= expect(validate_profile(builtin_layout(name), bg).passed,
                     std::string(name) + " fails bg-cyrillic");
    }
    ok &= expect(validate_profile(builtin_layout("latin"), builtin_profile("en-latin")).passed,
                 "latin fails en-latin");

    // one emptied quote cell: exactly one missing-symbol finding
    Layout one_cell = builtin_layout("bds");
    one_cell.slot(key("C12"), 1).reset();
    ValidationReport single = validate_profile(one_cell, bg);
    std::vector<CodePoint> missing = single.missing_symbols();
    ok &= expect(!single.passed, "C12 register-1 mutant passed");
    ok &= expect(missing.size() == 1 && (missing[0] == CodePoint(0x201E) || missing[0] == CodePoint(0x201C)),
                 "C12 register-1 mutant: expected exactly one missing quote, got " +
                     std::to_string(missing.size()));

    // the whole key emptied: both quotes and nothing else go missing
    Layout whole_key = builtin_layout("bds");
    for (int reg = 1; reg <= 4; ++reg) whole_key.slot(key("C12"), reg).reset();
    ValidationReport full = validate_profile(whole_key, bg);
    ok &= expect(!full.passed, "C12 mutant passed");
    for (CodePoint c : full.missing_symbols()) {
        ok &= expect(c == CodePoint(0x201E) || c == CodePoint(0x201C),
                     "unexpected missing symbol " + c.to_string());
    }
    ok &= expect(full.missing_symbols().size() == 2, "C12 mutant: expected both quotes missing");
    return ok;
}

bool simulator_equivalence() {
    bool ok = true;
    for (std::string_view cyr_name : {"bds", "phonetic", "phonetic-bds"}) {
        SimState state = make_sim_state(builtin_layout(cyr_name), builtin_layout("latin"), Mode::Cyrillic);
        for (Mode mode : {Mode::Cyrillic, Mode::Latin}) {
            SimState current = set_mode(state, mode);
            const Layout& layout = mode == Mode::Cyrillic ? current.cyr : current.lat;
            for (KeyId k : key_order()) {
                for (int reg = 1; reg <= 4; ++reg) {
                    KeyEvent event{k, reg == 2 || reg == 4, reg >= 3, false};
                    auto got = resolve_event(current, event);
                    if (got != layout.slot(k, reg)) {
                        ok &= expect(false, std::string(layout.name) + " " + std::string(k.name()) +
                                                " reg " + std::to_string(reg) + " mismatch");
                    }
                }
            }
        }
    }
    SimState bds = make_sim_state(builtin_layout("bds"), builtin_layout("latin"), Mode::Cyrillic);
    auto capital_soft_sign = resolve_event(bds, KeyEvent{key("C01"), false, false, true});
    ok &= expect(capital_soft_sign == CodePoint(0x42C), "CL+C01 on BDS did not give U+042C");
    return ok;
}

bool password_verdicts() {
    SimState state = make_sim_state(builtin_layout("bds"), builtin_layout("latin"), Mode::Cyrillic);
    bool ok = true;
    ok &= expect(password_guard(state, PasswordPolicy::AsciiOnly) == PasswordVerdict::MustSwitchToLatin,
                 "cyrillic + ascii-only");
    ok &= expect(password_guard(set_mode(state, Mode::Latin), PasswordPolicy::AsciiOnly) == PasswordVerdict::Ok,
                 "latin + ascii-only");
    ok &= expect(password_guard(set_mode(state, Mode::Latin), PasswordPolicy::AnyScript) ==
                     PasswordVerdict::MustIndicateState,
                 "latin + any-script");
    return ok;
}

bool cli_end_to_end() {
    bool ok = true;
    ExecResult pristine = exec_cli("check-goldens");
    ok &= expect(pristine.code == 0, "pristine check-goldens exited " + std::to_string(pristine.code));

    fs::path dir = fs::temp_directory_path() / "kbforge-acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    std::mt19937 rng(97);
    for (int round = 0; round < 5; ++round) {
        for (std::string_view name : builtin_names()) {
            std::ofstream(dir / (std::string(name) + ".layout")) << builtin_layout_text(name);
            std::ofstream(dir / (std::string(name) + ".rules")) << builtin_rules_text(name);
        }
        std::string victim(builtin_names()[rng() % builtin_names().size()]);
        std::string rules(builtin_rules_text(victim));
        std::vector<std::pair<std::size_t, std::size_t>> rule_lines;
        std::size_t pos = 0;
        while (pos < rules.size()) {
            std::size_t eol = rules.find('\n', pos);
            if (eol == std::string::npos) eol = rules.size();
            if (rules.compare(pos, 6, "place ") == 0) rule_lines.emplace_back(pos, eol + 1 - pos);
            pos = eol + 1;
        }
        auto [at, len] = rule_lines[rng() % rule_lines.size()];
        std::string deleted_line = rules.substr(at, len);
        rules.erase(at, len);
        std::ofstream(dir / (victim + ".rules")) << rules;

        ExecResult mutated = exec_cli("check-goldens --data " + dir.string());
        ok &= expect(mutated.code == 1, "deletion round " + std::to_string(round) + " (" + victim +
                                            ", \"" + deleted_line.substr(0, deleted_line.find('\n')) +
                                            "\"): exited " + std::to_string(mutated.code));
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "golden reproduction of all four layouts (4 x 196 cells, exact)", golden_reproduction);
    criterion(2, "placement report covers cascade steps 4, 5, 6 and 7 at the pinned cells", branch_coverage);
    criterion(3, "register 3/4 pairing after placement (4 goldens + 1000 random rule lists)", finalization_law);
    criterion(4, "keysym fidelity against the formal tables (784 comparisons)", keysym_fidelity);
    criterion(5, "round trips and byte-level emitter determinism", round_trips);
    criterion(6, "profile validation: goldens pass, quote-cell mutants fail precisely", profile_validation);
    criterion(7, "simulator reproduces every table cell (49 x 4 x 2 modes x 3 pairs) plus CapsLock", simulator_equivalence);
    criterion(8, "password guard verdicts", password_verdicts);
    criterion(9, "CLI check-goldens: 0 pristine, 1 after any single rule deletion (5 random)", cli_end_to_end);

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}

#include "kbforge/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kbforge/emitters.hpp"
#include "kbforge/golden.hpp"
#include "kbforge/layout_io.hpp"
#include "kbforge/placement.hpp"
#include "kbforge/simulator.hpp"

namespace kbforge {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

constexpr std::string_view kBuiltinPrefix = "builtin:";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write \"" + path + "\"");
    out << content;
    if (!out) throw Error("cannot write \"" + path + "\"");
}

// File paths accept builtin:<name> anywhere a layout is expected. When the
// path names a compile input (--base), the builtin resolves to the stripped
// base rather than the finished layout.
Layout load_layout_arg(const std::string& path, bool as_base = false) {
    if (path.starts_with(kBuiltinPrefix)) {
        std::string_view name = std::string_view(path).substr(kBuiltinPrefix.size());
        return as_base ? builtin_base(name) : builtin_layout(name);
    }
    return parse_layout(read_file(path));
}

RuleList load_rules_arg(const std::string& path) {
    if (path.starts_with(kBuiltinPrefix)) {
        return builtin_rules(std::string_view(path).substr(kBuiltinPrefix.size()));
    }
    return parse_rules(read_file(path));
}

void print_report_summary(const PlacementReport& report) {
    std::cout << "placed " << report.placed_count() << ", skipped " << report.skipped_count()
              << ", unplaceable " << report.unplaceable_count() << ", passes " << report.passes << "\n";
}

int cmd_compile(const std::string& base_path, const std::string& rules_path, const std::string& out_path) {
    Layout base = load_layout_arg(base_path, /*as_base=*/true);
    RuleList rules = load_rules_arg(rules_path);
    auto [compiled, report] = run_placement(base, rules);
    write_file(out_path, serialize_layout(compiled));
    print_report_summary(report);
    return kOk;
}

int cmd_check_goldens(const std::string& data_dir) {
    bool all_clean = true;
    for (std::string_view name : builtin_names()) {
        Layout golden;
        RuleList rules;
        if (data_dir.empty()) {
            golden = builtin_layout(name);
            rules = builtin_rules(name);
        } else {
            golden = parse_layout(read_file(data_dir + "/" + std::string(name) + ".layout"));
            rules = parse_rules(read_file(data_dir + "/" + std::string(name) + ".rules"));
        }
        Layout base = golden;
        for (KeyId key : key_order()) {
            base.slot(key, 3).reset();
            base.slot(key, 4).reset();
        }
        auto [compiled, report] = run_placement(base, rules);
        LayoutDiff diff = diff_layouts(compiled, golden);
        if (diff.empty()) {
            std::cout << name << ": OK (" << KeyId::kCount * 4 << " cells)\n";
        } else {
            all_clean = false;
            std::cout << name << ": " << diff.entries.size() << " cell(s) differ\n" << format_diff(diff);
        }
    }
    return all_clean ? kOk : kMismatch;
}

int cmd_emit(const std::string& layout_path, const std::string& format, const std::string& registers) {
    Layout layout = load_layout_arg(layout_path);
    if (format == "table") {
        std::cout << emit_unicode_table(layout);
        return kOk;
    }
    if (format == "ascii") {
        RegisterPair pair = registers == "high" ? RegisterPair::High34 : RegisterPair::Low12;
        std::cout << emit_ascii_diagram(layout, pair);
        return kOk;
    }
    if (format == "xkb") {
        if (layout.mode == Mode::Cyrillic) {
            std::cout << emit_xkb(layout, builtin_layout("latin"), layout.name, "latin");
        } else {
            std::cout << emit_xkb(builtin_layout("bds"), layout, "bds", layout.name);
        }
        return kOk;
    }
    throw Error("unknown format \"" + format + "\"");
}

int cmd_validate(const std::string& layout_path, const std::string& profile_name) {
    Layout layout = load_layout_arg(layout_path);
    const ValidationProfile& profile = builtin_profile(profile_name);
    ValidationReport report = validate_profile(layout, profile);
    std::cout << format_validation(report, profile);
    return report.passed ? kOk : kMismatch;
}

int cmd_diff(const std::string& a_path, const std::string& b_path) {
    Layout a = load_layout_arg(a_path);
    Layout b = load_layout_arg(b_path);
    LayoutDiff diff = diff_layouts(a, b);
    std::cout << format_diff(diff);
    return diff.empty() ? kOk : kMismatch;
}

int cmd_simulate(const std::string& cyr_path, const std::string& lat_path, const std::string& mode_name,
                 const std::string& events_text, bool capslock) {
    std::optional<Mode> mode = parse_mode(mode_name);
    if (!mode) throw Error("unknown mode \"" + mode_name + "\"");
    SimState state = make_sim_state(load_layout_arg(cyr_path), load_layout_arg(lat_path), *mode);
    state.capslock = capslock;
    std::vector<KeyEvent> events = parse_events(events_text);
    std::cout << type_sequence(state, events) << "\n";
    std::cout << "mode=" << to_string(state.mode) << " capslock=" << (state.capslock ? "on" : "off") << "\n";
    return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Extended Bulgarian keyboard layout compiler and checker"};
    app.require_subcommand(1);

    std::string base_path, rules_path, out_path;
    CLI::App* compile = app.add_subcommand("compile", "Fill registers 3-4 of a base layout from rules");
    compile->add_option("--base", base_path, "base layout file or builtin:<name>")->required();
    compile->add_option("--rules", rules_path, "rule file or builtin:<name>")->required();
    compile->add_option("-o,--output", out_path, "output layout file")->required();

    std::string data_dir;
    CLI::App* check = app.add_subcommand("check-goldens", "Recompile all builtin layouts and diff against the goldens");
    check->add_option("--data", data_dir, "directory with <name>.layout and <name>.rules to check instead of the embedded assets");

    std::string layout_path, format, registers = "low";
    CLI::App* emit = app.add_subcommand("emit", "Render a layout as xkb, table or ascii");
    emit->add_option("--layout", layout_path, "layout file or builtin:<name>")->required();
    emit->add_option("--format", format, "xkb, table or ascii")->required();
    emit->add_option("--registers", registers, "ascii register pair: low or high")
        ->check(CLI::IsMember({"low", "high"}));

    std::string profile_name;
    CLI::App* validate = app.add_subcommand("validate", "Check a layout against a symbol profile");
    validate->add_option("--layout", layout_path, "layout file or builtin:<name>")->required();
    validate->add_option("--profile", profile_name, "bg-cyrillic or en-latin")->required();

    std::string diff_a, diff_b;
    CLI::App* diff = app.add_subcommand("diff", "Cell-by-cell comparison of two layouts");
    diff->add_option("a", diff_a, "layout file or builtin:<name>")->required();
    diff->add_option("b", diff_b, "layout file or builtin:<name>")->required();

    std::string cyr_path, lat_path, mode_name, events_text;
    bool capslock = false;
    CLI::App* simulate = app.add_subcommand("simulate", "Resolve key events against a layout pair");
    simulate->add_option("--cyr", cyr_path, "cyrillic layout file or builtin:<name>")->required();
    simulate->add_option("--lat", lat_path, "latin layout file or builtin:<name>")->required();
    simulate->add_option("--mode", mode_name, "cyrillic or latin")->required();
    simulate->add_option("--events", events_text, "tokens like \"S+D03 L3+E08 CL+C01\"")->required();
    simulate->add_flag("--capslock", capslock, "session-level CapsLock");

    try {
        app.parse(argc, argv);
        if (compile->parsed()) return cmd_compile(base_path, rules_path, out_path);
        if (check->parsed()) return cmd_check_goldens(data_dir);
        if (emit->parsed()) return cmd_emit(layout_path, format, registers);
        if (validate->parsed()) return cmd_validate(layout_path, profile_name);
        if (diff->parsed()) return cmd_diff(diff_a, diff_b);
        if (simulate->parsed()) return cmd_simulate(cyr_path, lat_path, mode_name, events_text, capslock);
        return kUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return kOk;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace kbforge

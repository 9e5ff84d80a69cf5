#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kbforge/cli.hpp"
#include "kbforge/golden.hpp"
#include "kbforge/layout_io.hpp"
#include "test_helpers.hpp"

using namespace kbforge;
using namespace kbforge::test;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char*> argv = {"kbforge"};
    for (const std::string& a : args) argv.push_back(a.c_str());

    std::ostringstream captured;
    std::streambuf* old_out = std::cout.rdbuf(captured.rdbuf());
    std::ostringstream err_sink;
    std::streambuf* old_err = std::cerr.rdbuf(err_sink.rdbuf());
    int code = run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, captured.str()};
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "kbforge-cli-test";
    fs::create_directories(dir);
    return dir;
}

std::string read_all(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("compile reproduces the golden from builtin assets") {
    fs::path out = temp_dir() / "bds-out.layout";
    CliResult r = run({"compile", "--base", "builtin:bds", "--rules", "builtin:bds", "-o", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("unplaceable 0") != std::string::npos);
    CHECK(read_all(out) == serialize_layout(builtin_layout("bds")));
}

TEST_CASE("compile with an empty rule file finalizes the base") {
    fs::path rules = temp_dir() / "empty.rules";
    std::ofstream(rules) << "# nothing\n";
    fs::path out = temp_dir() / "base-out.layout";
    CliResult r = run({"compile", "--base", "builtin:bds", "--rules", rules.string(), "-o", out.string()});
    CHECK(r.code == 0);
    CHECK(read_all(out) == serialize_layout(builtin_base("bds")));
}

TEST_CASE("compile with a missing input exits 2") {
    CliResult r = run({"compile", "--base", "/nonexistent/base.layout", "--rules", "builtin:bds",
                       "-o", (temp_dir() / "x.layout").string()});
    CHECK(r.code == 2);
}

TEST_CASE("check-goldens passes on pristine assets") {
    CliResult r = run({"check-goldens"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bds: OK") != std::string::npos);
    CHECK(r.out.find("latin: OK") != std::string::npos);
}

TEST_CASE("check-goldens flags a corrupted data directory") {
    fs::path dir = temp_dir() / "data-bad";
    fs::create_directories(dir);
    for (std::string_view name : builtin_names()) {
        std::ofstream(dir / (std::string(name) + ".layout")) << builtin_layout_text(name);
        std::ofstream(dir / (std::string(name) + ".rules")) << builtin_rules_text(name);
    }
    CHECK(run({"check-goldens", "--data", dir.string()}).code == 0);

    // drop one rule line
    std::string rules = std::string(builtin_rules_text("bds"));
    std::size_t pos = rules.find("place U+2026");
    REQUIRE(pos != std::string::npos);
    rules.erase(pos, rules.find('\n', pos) - pos + 1);
    std::ofstream(dir / "bds.rules") << rules;
    CliResult r = run({"check-goldens", "--data", dir.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("E07") != std::string::npos);

    // corrupted golden file
    std::ofstream(dir / "bds.layout") << "layout broken mode";
    CHECK(run({"check-goldens", "--data", dir.string()}).code == 2);
}

TEST_CASE("emit writes artifacts to stdout") {
    CliResult table = run({"emit", "--layout", "builtin:bds", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("numerosign") != std::string::npos);

    CliResult ascii = run({"emit", "--layout", "builtin:phonetic", "--format", "ascii", "--registers", "high"});
    CHECK(ascii.code == 0);
    CHECK(ascii.out.find("/-/") != std::string::npos);

    CliResult xkb = run({"emit", "--layout", "builtin:bds", "--format", "xkb"});
    CHECK(xkb.code == 0);
    CHECK(xkb.out.find("xkb_symbols \"bds\"") != std::string::npos);
    CHECK(xkb.out.find("xkb_symbols \"latin\"") != std::string::npos);

    CHECK(run({"emit", "--layout", "builtin:bds", "--format", "bogus"}).code == 2);
    CHECK(run({"emit", "--layout", "builtin:bds", "--format", "ascii", "--registers", "middle"}).code == 2);
}

TEST_CASE("validate reports pass and fail with matching exit codes") {
    CHECK(run({"validate", "--layout", "builtin:bds", "--profile", "bg-cyrillic"}).code == 0);
    CHECK(run({"validate", "--layout", "builtin:latin", "--profile", "en-latin"}).code == 0);
    CHECK(run({"validate", "--layout", "builtin:latin", "--profile", "bg-cyrillic"}).code == 2);  // mode mismatch
    CHECK(run({"validate", "--layout", "builtin:bds", "--profile", "no-such"}).code == 2);

    Layout mutated = builtin_layout("bds");
    for (int reg = 1; reg <= 4; ++reg) set_slot(mutated, "C12", reg, std::nullopt);
    fs::path path = temp_dir() / "mutated.layout";
    std::ofstream(path) << serialize_layout(mutated);
    CliResult r = run({"validate", "--layout", path.string(), "--profile", "bg-cyrillic"});
    CHECK(r.code == 1);
    CHECK(r.out.find("missing U+201E") != std::string::npos);
}

TEST_CASE("diff exits 0 on equal and 1 on differing layouts") {
    CHECK(run({"diff", "builtin:bds", "builtin:bds"}).code == 0);
    CliResult r = run({"diff", "builtin:phonetic", "builtin:phonetic-bds"});
    CHECK(r.code == 1);
    CHECK(r.out.find("D02 reg 1: U+0432 != U+0448") != std::string::npos);
    CHECK(run({"diff", "builtin:bds"}).code == 2);  // missing operand
}

TEST_CASE("simulate prints the text and the state line") {
    CliResult r = run({"simulate", "--cyr", "builtin:bds", "--lat", "builtin:latin",
                       "--mode", "cyrillic", "--events", "S+D09 D03 D10"});
    CHECK(r.code == 0);
    CHECK(r.out == "Дез\nmode=cyrillic capslock=off\n");

    CliResult latin = run({"simulate", "--cyr", "builtin:bds", "--lat", "builtin:latin",
                           "--mode", "latin", "--events", "D01"});
    CHECK(latin.code == 0);
    CHECK(latin.out == "q\nmode=latin capslock=off\n");

    CHECK(run({"simulate", "--cyr", "builtin:bds", "--lat", "builtin:latin",
               "--mode", "cyrillic", "--events", "Z+E01"}).code == 2);
    CHECK(run({"simulate", "--cyr", "builtin:bds", "--lat", "builtin:latin",
               "--mode", "greek", "--events", "D01"}).code == 2);
    CHECK(run({"simulate", "--cyr", "builtin:latin", "--lat", "builtin:latin",
               "--mode", "latin", "--events", "D01"}).code == 2);  // wrong mode pairing

    CliResult locked = run({"simulate", "--cyr", "builtin:bds", "--lat", "builtin:latin",
                            "--mode", "cyrillic", "--events", "C01", "--capslock"});
    CHECK(locked.code == 0);
    CHECK(locked.out == "Ь\nmode=cyrillic capslock=on\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"compile", "--base", "builtin:bds"}).code == 2);  // missing required options
}

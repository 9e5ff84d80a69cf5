#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kbforge {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with a 1-based source line number (0 when not line-addressable).
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

// A Unicode scalar value. Surrogates are rejected at construction.
struct CodePoint {
    char32_t value = 0;

    constexpr CodePoint() = default;
    constexpr explicit CodePoint(char32_t v) : value(v) {}

    auto operator<=>(const CodePoint&) const = default;

    static constexpr bool is_scalar(char32_t v) {
        return v <= 0x10FFFF && !(v >= 0xD800 && v <= 0xDFFF);
    }

    // "U+XXXX", 4-6 uppercase hex digits.
    std::string to_string() const;

    // Parses the "U+XXXX" form; rejects surrogates, out-of-range values and
    // malformed digits.
    static std::optional<CodePoint> parse(std::string_view text);
};

enum class Mode { Cyrillic, Latin };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

// UTF-8 encoding of one scalar value, appended to `out`.
void append_utf8(std::string& out, CodePoint cp);
std::string to_utf8(CodePoint cp);

}  // namespace kbforge

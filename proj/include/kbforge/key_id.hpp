#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

namespace kbforge {

// One of the 49 ISO 9995 alphanumeric key positions:
// E00-E12, D01-D12, C01-C12, B00-B10 and SPACE.
// Internally a canonical ordinal (0..48); the ordinal order is the canonical
// scan order used everywhere (E row first, SPACE last).
class KeyId {
public:
    static constexpr int kCount = 49;

    constexpr KeyId() = default;

    static constexpr KeyId from_ordinal(int ordinal) { return KeyId(static_cast<std::uint8_t>(ordinal)); }
    static std::optional<KeyId> parse(std::string_view name);

    constexpr int ordinal() const { return ordinal_; }
    std::string_view name() const;

    auto operator<=>(const KeyId&) const = default;

private:
    constexpr explicit KeyId(std::uint8_t ordinal) : ordinal_(ordinal) {}

    std::uint8_t ordinal_ = 0;
};

// The 49 keys in canonical order.
const std::array<KeyId, KeyId::kCount>& key_order();

}  // namespace kbforge

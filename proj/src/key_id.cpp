#include "kbforge/key_id.hpp"

#include <string>

namespace kbforge {

namespace {

// Row letter, count and first index for each of the four key rows.
struct RowSpec {
    char letter;
    int first_index;  // E00 starts at 0, D01/C01 at 1, B00 at 0
    int count;
};

constexpr std::array<RowSpec, 4> kRows = {{
    {'E', 0, 13},
    {'D', 1, 12},
    {'C', 1, 12},
    {'B', 0, 11},
}};

std::array<std::string, KeyId::kCount> make_names() {
    std::array<std::string, KeyId::kCount> names;
    int ordinal = 0;
    for (const RowSpec& row : kRows) {
        for (int i = 0; i < row.count; ++i) {
            int index = row.first_index + i;
            names[static_cast<std::size_t>(ordinal++)] =
                std::string(1, row.letter) + (index < 10 ? "0" : "") + std::to_string(index);
        }
    }
    names[static_cast<std::size_t>(ordinal)] = "SPACE";
    return names;
}

const std::array<std::string, KeyId::kCount>& names() {
    static const std::array<std::string, KeyId::kCount> table = make_names();
    return table;
}

}  // namespace

std::string_view KeyId::name() const {
    return names()[static_cast<std::size_t>(ordinal_)];
}

std::optional<KeyId> KeyId::parse(std::string_view name) {
    if (name == "SPACE") return from_ordinal(kCount - 1);
    if (name.size() != 3) return std::nullopt;
    if (name[1] < '0' || name[1] > '9' || name[2] < '0' || name[2] > '9') return std::nullopt;
    int index = (name[1] - '0') * 10 + (name[2] - '0');
    int base = 0;
    for (const RowSpec& row : kRows) {
        if (name[0] == row.letter) {
            if (index < row.first_index || index >= row.first_index + row.count) return std::nullopt;
            return from_ordinal(base + index - row.first_index);
        }
        base += row.count;
    }
    return std::nullopt;
}

const std::array<KeyId, KeyId::kCount>& key_order() {
    static const std::array<KeyId, KeyId::kCount> order = [] {
        std::array<KeyId, KeyId::kCount> keys{};
        for (int i = 0; i < KeyId::kCount; ++i) keys[static_cast<std::size_t>(i)] = KeyId::from_ordinal(i);
        return keys;
    }();
    return order;
}

}  // namespace kbforge

#include "kbforge/layout.hpp"

namespace kbforge {

std::vector<std::pair<KeyId, int>> occurrences_of(const Layout& layout, CodePoint cp) {
    std::vector<std::pair<KeyId, int>> found;
    for (KeyId key : key_order()) {
        for (int reg = 1; reg <= 4; ++reg) {
            if (layout.slot(key, reg) == cp) found.emplace_back(key, reg);
        }
    }
    return found;
}

bool occurs_in_base_registers(const Layout& layout, CodePoint cp) {
    for (KeyId key : key_order()) {
        if (layout.slot(key, 1) == cp || layout.slot(key, 2) == cp) return true;
    }
    return false;
}

bool is_free_slot(const Layout& layout, KeyId key, int reg) {
    if (reg != 3 && reg != 4) {
        throw Error("is_free_slot: register must be 3 or 4, got " + std::to_string(reg));
    }
    const std::optional<CodePoint>& occupant = layout.slot(key, reg);
    if (!occupant) return true;
    return occurs_in_base_registers(layout, *occupant);
}

}  // namespace kbforge

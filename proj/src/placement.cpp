#include "kbforge/placement.hpp"

#include <algorithm>

namespace kbforge {

std::size_t PlacementReport::placed_count() const {
    return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const PlacementOutcome& o) {
        return o.status == PlacementOutcome::Status::Placed;
    }));
}

std::size_t PlacementReport::skipped_count() const {
    return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const PlacementOutcome& o) {
        return o.status == PlacementOutcome::Status::Skipped;
    }));
}

std::size_t PlacementReport::unplaceable_count() const {
    return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const PlacementOutcome& o) {
        return o.status == PlacementOutcome::Status::Unplaceable;
    }));
}

std::optional<PlacedAt> try_place(Layout& layout, CodePoint target, KeyId key, int occurrence_reg) {
    KeyAssignment& assignment = layout.at(key);

    // step 4
    if (occurrence_reg == 1 && is_free_slot(layout, key, 3)) {
        assignment.reg(3) = target;
        return PlacedAt{key, 3, 4};
    }
    // step 5
    if (occurrence_reg == 2 && is_free_slot(layout, key, 4)) {
        assignment.reg(4) = target;
        return PlacedAt{key, 4, 5};
    }
    // step 6
    if (is_free_slot(layout, key, 4)) {
        assignment.reg(4) = target;
        return PlacedAt{key, 4, 6};
    }
    // step 7: the anchor itself sits in register 4 and slides down to 3.
    if (occurrence_reg == 4 && is_free_slot(layout, key, 3)) {
        assignment.reg(3) = assignment.reg(4);
        assignment.reg(4) = target;
        return PlacedAt{key, 4, 7};
    }
    // step 8
    if (is_free_slot(layout, key, 3)) {
        assignment.reg(3) = target;
        return PlacedAt{key, 3, 8};
    }
    return std::nullopt;
}

Layout finalize_registers(Layout layout) {
    // Lone fourth-register symbols duplicate down. An already placed third
    // register stays, even when its occupant doubles a base-register symbol:
    // the formal tables keep pairs like D04's i-grave over capital i-grave.
    for (KeyId key : key_order()) {
        KeyAssignment& assignment = layout.at(key);
        if (assignment.reg(4) && !assignment.reg(3)) {
            assignment.reg(3) = assignment.reg(4);
        }
    }
    // Lone third-register symbols duplicate up unconditionally.
    for (KeyId key : key_order()) {
        KeyAssignment& assignment = layout.at(key);
        if (assignment.reg(3) && !assignment.reg(4)) {
            assignment.reg(4) = assignment.reg(3);
        }
    }
    return layout;
}

std::pair<Layout, PlacementReport> run_placement(const Layout& base, const RuleList& rules) {
    Layout layout = base;
    PlacementReport report;

    std::vector<std::size_t> pending(rules.rules.size());
    for (std::size_t i = 0; i < pending.size(); ++i) pending[i] = i;

    while (!pending.empty()) {
        ++report.passes;
        bool placed_this_pass = false;
        std::vector<std::size_t> deferred;

        for (std::size_t index : pending) {
            const Rule& rule = rules.rules[index];
            bool anchor_on_keyboard = false;
            std::optional<PlacedAt> placed;

            for (CodePoint anchor : rule.anchors) {
                for (auto [key, reg] : occurrences_of(layout, anchor)) {
                    anchor_on_keyboard = true;
                    placed = try_place(layout, rule.target, key, reg);
                    if (placed) break;
                }
                if (placed) break;
            }

            if (placed) {
                report.outcomes.push_back(
                    {index, rule.target, PlacementOutcome::Status::Placed, *placed});
                placed_this_pass = true;
            } else if (!anchor_on_keyboard) {
                report.outcomes.push_back({index, rule.target, PlacementOutcome::Status::Skipped, {}});
            } else {
                deferred.push_back(index);
            }
        }

        if (deferred.size() == pending.size() || !placed_this_pass) {
            for (std::size_t index : deferred) {
                report.outcomes.push_back(
                    {index, rules.rules[index].target, PlacementOutcome::Status::Unplaceable, {}});
            }
            break;
        }
        pending = std::move(deferred);
    }

    return {finalize_registers(std::move(layout)), std::move(report)};
}

}  // namespace kbforge

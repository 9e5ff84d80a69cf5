#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kbforge/layout.hpp"
#include "kbforge/rules.hpp"

namespace kbforge {

// Where a target landed and which cascade clause (4..8) put it there.
struct PlacedAt {
    KeyId key;
    int reg = 0;   // 3 or 4
    int step = 0;  // 4..8
};

struct PlacementOutcome {
    enum class Status { Placed, Skipped, Unplaceable };

    std::size_t rule_index = 0;  // index into the RuleList
    CodePoint target;
    Status status = Status::Skipped;
    PlacedAt placed;  // valid when status == Placed
};

struct PlacementReport {
    // One entry per rule instance, in resolution order. Replaying the Placed
    // entries over the base reproduces the compiled layout.
    std::vector<PlacementOutcome> outcomes;
    int passes = 0;

    std::size_t placed_count() const;
    std::size_t skipped_count() const;
    std::size_t unplaceable_count() const;
};

// Tries the third/fourth-register cascade for `target` at one live anchor
// occurrence (key, occurrence_reg). On success mutates `layout` and reports
// the slot written; on failure leaves `layout` untouched.
//
//   step 4: anchor in reg 1 and slot 3 writable -> reg 3
//   step 5: anchor in reg 2 and slot 4 writable -> reg 4
//   step 6: slot 4 writable                     -> reg 4
//   step 7: anchor in reg 4 and slot 3 writable -> old reg 4 moves to reg 3,
//                                                  target takes reg 4
//   step 8: slot 3 writable                     -> reg 3
//
// A slot is writable when is_free_slot holds or it already contains the
// incoming symbol. Registers 1-2 are never modified.
std::optional<PlacedAt> try_place(Layout& layout, CodePoint target, KeyId key, int occurrence_reg);

// Duplicates lone fourth-register symbols into register 3 (where writable)
// and lone third-register symbols into register 4. Idempotent.
Layout finalize_registers(Layout layout);

// Runs the whole pass structure: rules in order, anchors in order, anchor
// occurrences in canonical order. Rules whose anchors are absent from the
// keyboard are Skipped; rules that fail on every occurrence are retried in
// further passes until a pass places nothing, then reported Unplaceable.
// Ends with finalize_registers. Deterministic.
std::pair<Layout, PlacementReport> run_placement(const Layout& base, const RuleList& rules);

}  // namespace kbforge

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kbforge/core.hpp"

namespace kbforge {

// One placement request: put `target` next to the first anchor that works.
// Anchor candidates are tried in order.
struct Rule {
    CodePoint target;
    std::vector<CodePoint> anchors;
    std::string rationale;

    bool operator==(const Rule&) const = default;
};

// Order is the processing order. The same rule may appear twice; the second
// instance asks for a second placement of the same target.
struct RuleList {
    std::vector<Rule> rules;

    bool operator==(const RuleList&) const = default;
};

// Rule file format (UTF-8, LF):
//   place U+XXXX after U+YYYY[, U+ZZZZ ...] [# rationale]
// Blank lines and lines starting with '#' are ignored.
RuleList parse_rules(std::string_view text);

}  // namespace kbforge

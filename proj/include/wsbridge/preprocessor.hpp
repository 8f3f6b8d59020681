#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wsbridge/errors.hpp"
#include "wsbridge/token.hpp"

namespace wsbridge {

// State of the indent preprocessor. The stack of open indentation columns is
// strictly increasing and always bottoms out at 0; the current indent is the
// stack top and the open-block depth is size() - 1.
struct IndentState {
    std::vector<int> indent_stack{0};
    bool pending_line_continuation = false;
    bool content_since_boundary = false;

    int top() const { return indent_stack.back(); }
    int block_depth() const { return static_cast<int>(indent_stack.size()) - 1; }
};

// Tab-expanded indent of the next line that carries a content token, looking
// ahead (without consuming) over the upcoming raw tokens. Blank and
// comment-only lines are skipped; a backslash continuation keeps the logical
// line open, and the indent measured is always the one of the logical line's
// first physical line. Returns nullopt once only EOF remains.
//
// Throws TabsDisallowed when leading whitespace contains a tab and the
// policy forbids tabs.
std::optional<int> calc_current_indent(std::span<const Token> lookahead,
                                       const IndentPolicy& policy);

// Like calc_current_indent, but also reports where the measured line starts.
struct IndentScan {
    std::optional<int> indent;
    SourcePos line_start;
};
IndentScan scan_next_content_line(std::span<const Token> lookahead, const IndentPolicy& policy);

// Processes one token that was routed through the whitespace-sensitive path,
// appending any emitted tokens to `out` and updating `state`. `lookahead`
// covers the raw tokens after `token`.
//
// Control-token injection follows the indent stack: push emits BLOCK_START,
// staying level emits STMT_END, and a dedent emits one STMT_END followed by
// one BLOCK_END per popped level. Dedenting to a column that is not an open
// level throws IndentMismatch.
void process(const Token& token, IndentState& state, std::span<const Token> lookahead,
             const IndentPolicy& policy, std::vector<Token>& out);

}  // namespace wsbridge

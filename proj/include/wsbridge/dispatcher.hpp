#pragma once

#include <vector>

#include "wsbridge/token.hpp"

namespace wsbridge {

enum class Mode {
    WsSensitive,
    WsInsensitive,
};

enum class Route {
    ToPreprocessor,  // the whitespace-sensitive path
    ToBuffer,        // straight to the parser-facing buffer
};

// Sensitivity is suspended while any bracket is open, so the mode is fully
// determined by the stack: WS_SENSITIVE iff the stack is empty.
struct DispatcherState {
    std::vector<TokenKind> bracket_stack;

    Mode mode() const {
        return bracket_stack.empty() ? Mode::WsSensitive : Mode::WsInsensitive;
    }
};

bool is_open_bracket(TokenKind kind);   // ( [ {
bool is_close_bracket(TokenKind kind);  // ) ] }

// Routes one token and updates the bracket stack. Never drops, reorders or
// synthesizes tokens. Bracket mismatches are not checked here; matching of
// opening and closing pairs is the parser's job.
Route dispatch(const Token& token, DispatcherState& state);

}  // namespace wsbridge

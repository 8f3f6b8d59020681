#include "wsbridge/dispatcher.hpp"

namespace wsbridge {

bool is_open_bracket(TokenKind kind) {
    return kind == TokenKind::LParen || kind == TokenKind::LBracket || kind == TokenKind::LBrace;
}

bool is_close_bracket(TokenKind kind) {
    return kind == TokenKind::RParen || kind == TokenKind::RBracket || kind == TokenKind::RBrace;
}

Route dispatch(const Token& token, DispatcherState& state) {
    if (state.mode() == Mode::WsSensitive) {
        if (is_open_bracket(token.kind)) {
            state.bracket_stack.push_back(token.kind);
            return Route::ToBuffer;
        }
        // Includes unmatched closing brackets: they pass through unchanged
        // and surface as parse errors later.
        return Route::ToPreprocessor;
    }
    if (is_open_bracket(token.kind)) {
        state.bracket_stack.push_back(token.kind);
    } else if (is_close_bracket(token.kind)) {
        state.bracket_stack.pop_back();
    }
    return Route::ToBuffer;
}

}  // namespace wsbridge

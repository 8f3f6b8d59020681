#pragma once

#include <span>
#include <string>

#include "wsbridge/errors.hpp"
#include "wsbridge/token.hpp"

namespace wsbridge {

// Renders a full post-preprocessing token stream back into character form
// with explicit delimiter glyphs, so an unmodified whitespace-insensitive
// frontend can consume it. WS and COMMENT tokens are dropped, NEWLINE tokens
// keep a rough line layout, and a single space is inserted exactly where two
// adjacent tokens would otherwise re-lex differently.
//
// Throws UnbalancedStream when the control tokens do not balance.
std::string render_delimited(std::span<const Token> stream, const ControlTokenConfig& cfg);

}  // namespace wsbridge

#pragma once

#include <string>
#include <vector>

#include "wsbridge/errors.hpp"
#include "wsbridge/token.hpp"

namespace wsbridge {

struct LexerConfig {
    IndentPolicy indent_policy;
    ControlTokenConfig control_tokens;
    // Off in the normal pipeline; on when lexing the delimited form, where
    // the control glyphs lex directly to BLOCK_START/BLOCK_END/STMT_END.
    bool recognize_control_glyphs = false;
};

// Tokenizes UTF-8 source text. Whitespace, newlines, comments and line
// continuations come out as real tokens on the hidden channel so the
// preprocessing stages can see them. Lossless: concatenating all lexemes
// reproduces the input. The result ends with exactly one EOF token.
//
// Throws FrontendError with UnterminatedString or InvalidCharacter.
std::vector<Token> lex(const std::string& source, const LexerConfig& cfg);

}  // namespace wsbridge

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wsbridge {

// 1-based line, 0-based column. Columns are measured after tab expansion so
// that indent comparison and diagnostics agree on one width.
struct SourcePos {
    int line = 1;
    int column = 0;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class Channel : std::uint8_t {
    Default,
    Hidden,
};

enum class TokenKind : std::uint8_t {
    // content: atoms
    Name,
    Int,
    Float,
    String,
    // content: keywords
    If,
    Elif,
    Else,
    While,
    For,
    In,
    Def,
    Return,
    Pass,
    Break,
    Continue,
    Import,
    And,
    Or,
    Not,
    True,
    False,
    None,
    // content: operators and punctuation
    Plus,
    Minus,
    Star,
    Slash,
    DoubleSlash,
    Percent,
    DoubleStar,
    Eq,
    Ne,
    Lt,
    Gt,
    Le,
    Ge,
    Assign,
    PlusAssign,
    MinusAssign,
    PlusPlus,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Dot,
    // layout (hidden channel)
    Newline,
    Ws,
    Comment,
    LineCont,
    // control tokens, injected by the preprocessor or lexed from their
    // glyphs in delimited-input mode
    BlockStart,
    BlockEnd,
    StmtEnd,
    Eof,
};

constexpr int kTokenKindCount = static_cast<int>(TokenKind::Eof) + 1;

// Name as used in the debug token format, e.g. "NAME", "BLOCK_START".
const char* kind_name(TokenKind kind);

bool is_layout_kind(TokenKind kind);
bool is_control_kind(TokenKind kind);
// Everything except layout, control and EOF.
bool is_content_kind(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string lexeme;
    Channel channel = Channel::Default;
    SourcePos pos;

    friend bool operator==(const Token&, const Token&) = default;
};

// The configurable block-start / block-end / statement-end tokens. Defaults
// are printable glyphs that cannot occur in ordinary source text, so they
// never collide with content lexemes.
struct ControlTokenConfig {
    std::string block_start_glyph = "⦃";            // ⦃
    std::string block_end_glyph = "⦄";              // ⦄
    std::vector<std::string> stmt_end_glyphs = {"⁏", ";"};  // ⁏ plus ASCII alternative
};

struct IndentPolicy {
    int tab_stop = 8;  // >= 1
    bool allow_tabs = true;
};

// Character-stream rendering of a single token. Content tokens render as
// their lexemes, control tokens as their configured glyphs, NEWLINE as a
// line break. Total over all kinds.
std::string render_token(const Token& token, const ControlTokenConfig& cfg);

// Debug format, one token per line: LINE:COL KIND "lexeme" CHANNEL.
// Lexemes are escaped C-style so the format stays line oriented.
std::string debug_line(const Token& token);

std::string escape_lexeme(const std::string& lexeme);

// Position one column/line past the end of the token's lexeme.
SourcePos token_end(const Token& token, const IndentPolicy& policy);

}  // namespace wsbridge

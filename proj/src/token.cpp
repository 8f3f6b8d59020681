#include "wsbridge/token.hpp"

#include <array>

#include "wsbridge/errors.hpp"

namespace wsbridge {

namespace {

constexpr std::array<const char*, kTokenKindCount> kKindNames = {
    "NAME",       "INT",         "FLOAT",     "STRING",   "IF",       "ELIF",
    "ELSE",       "WHILE",       "FOR",       "IN",       "DEF",      "RETURN",
    "PASS",       "BREAK",       "CONTINUE",  "IMPORT",   "AND",      "OR",
    "NOT",        "TRUE",        "FALSE",     "NONE",     "PLUS",     "MINUS",
    "STAR",       "SLASH",       "DOUBLESLASH", "PERCENT", "DOUBLESTAR", "EQ",
    "NE",         "LT",          "GT",        "LE",       "GE",       "ASSIGN",
    "PLUSASSIGN", "MINUSASSIGN", "PLUSPLUS",  "LPAREN",   "RPAREN",   "LBRACKET",
    "RBRACKET",   "LBRACE",      "RBRACE",    "COMMA",    "COLON",    "DOT",
    "NEWLINE",    "WS",          "COMMENT",   "LINE_CONT", "BLOCK_START",
    "BLOCK_END",  "STMT_END",    "EOF",
};

bool is_utf8_continuation(unsigned char c) {
    return (c & 0xC0) == 0x80;
}

}  // namespace

const char* kind_name(TokenKind kind) {
    return kKindNames[static_cast<int>(kind)];
}

bool is_layout_kind(TokenKind kind) {
    switch (kind) {
        case TokenKind::Newline:
        case TokenKind::Ws:
        case TokenKind::Comment:
        case TokenKind::LineCont:
            return true;
        default:
            return false;
    }
}

bool is_control_kind(TokenKind kind) {
    switch (kind) {
        case TokenKind::BlockStart:
        case TokenKind::BlockEnd:
        case TokenKind::StmtEnd:
            return true;
        default:
            return false;
    }
}

bool is_content_kind(TokenKind kind) {
    return !is_layout_kind(kind) && !is_control_kind(kind) && kind != TokenKind::Eof;
}

std::string render_token(const Token& token, const ControlTokenConfig& cfg) {
    switch (token.kind) {
        case TokenKind::BlockStart:
            return cfg.block_start_glyph;
        case TokenKind::BlockEnd:
            return cfg.block_end_glyph;
        case TokenKind::StmtEnd:
            return cfg.stmt_end_glyphs.front();
        case TokenKind::Newline:
            return token.lexeme.empty() ? "\n" : token.lexeme;
        case TokenKind::Eof:
            return "";
        default:
            return token.lexeme;
    }
}

std::string escape_lexeme(const std::string& lexeme) {
    std::string out;
    out.reserve(lexeme.size());
    for (char c : lexeme) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string debug_line(const Token& token) {
    std::string out = std::to_string(token.pos.line);
    out += ':';
    out += std::to_string(token.pos.column);
    out += ' ';
    out += kind_name(token.kind);
    out += " \"";
    out += escape_lexeme(token.lexeme);
    out += "\" ";
    out += token.channel == Channel::Default ? "DEFAULT" : "HIDDEN";
    return out;
}

SourcePos token_end(const Token& token, const IndentPolicy& policy) {
    SourcePos pos = token.pos;
    for (std::size_t i = 0; i < token.lexeme.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(token.lexeme[i]);
        if (c == '\n') {
            ++pos.line;
            pos.column = 0;
        } else if (c == '\r') {
            if (i + 1 < token.lexeme.size() && token.lexeme[i + 1] == '\n') {
                continue;  // counted at the '\n'
            }
            ++pos.line;
            pos.column = 0;
        } else if (c == '\t') {
            pos.column += policy.tab_stop - (pos.column % policy.tab_stop);
        } else if (!is_utf8_continuation(c)) {
            ++pos.column;
        }
    }
    return pos;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnterminatedString: return "UnterminatedString";
        case ErrorCode::InvalidCharacter: return "InvalidCharacter";
        case ErrorCode::TabsDisallowed: return "TabsDisallowed";
        case ErrorCode::IndentMismatch: return "IndentMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NoStatementParser: return "NoStatementParser";
        case ErrorCode::CompositionConflict: return "CompositionConflict";
        case ErrorCode::UnbalancedStream: return "UnbalancedStream";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

std::string format_diagnostic(const std::string& path, const FrontendError& err) {
    std::string out = path;
    if (err.pos()) {
        out += ':';
        out += std::to_string(err.pos()->line);
        out += ':';
        out += std::to_string(err.pos()->column);
    }
    out += ": ";
    out += error_code_name(err.code());
    out += ' ';
    out += err.what();
    return out;
}

}  // namespace wsbridge

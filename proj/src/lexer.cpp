#include "wsbridge/lexer.hpp"

#include <cctype>
#include <string_view>
#include <unordered_map>

namespace wsbridge {

namespace {

const std::unordered_map<std::string_view, TokenKind>& keyword_table() {
    static const std::unordered_map<std::string_view, TokenKind> table = {
        {"if", TokenKind::If},         {"elif", TokenKind::Elif},
        {"else", TokenKind::Else},     {"while", TokenKind::While},
        {"for", TokenKind::For},       {"in", TokenKind::In},
        {"def", TokenKind::Def},       {"return", TokenKind::Return},
        {"pass", TokenKind::Pass},     {"break", TokenKind::Break},
        {"continue", TokenKind::Continue}, {"import", TokenKind::Import},
        {"and", TokenKind::And},       {"or", TokenKind::Or},
        {"not", TokenKind::Not},       {"True", TokenKind::True},
        {"False", TokenKind::False},   {"None", TokenKind::None},
    };
    return table;
}

struct TwoCharOp {
    const char* text;
    TokenKind kind;
};

// Longest match: every two-character operator is tried before its prefix.
constexpr TwoCharOp kTwoCharOps[] = {
    {"**", TokenKind::DoubleStar}, {"//", TokenKind::DoubleSlash},
    {"++", TokenKind::PlusPlus},   {"+=", TokenKind::PlusAssign},
    {"-=", TokenKind::MinusAssign}, {"==", TokenKind::Eq},
    {"!=", TokenKind::Ne},         {"<=", TokenKind::Le},
    {">=", TokenKind::Ge},
};

TokenKind one_char_op(char c) {
    switch (c) {
        case '+': return TokenKind::Plus;
        case '-': return TokenKind::Minus;
        case '*': return TokenKind::Star;
        case '/': return TokenKind::Slash;
        case '%': return TokenKind::Percent;
        case '=': return TokenKind::Assign;
        case '<': return TokenKind::Lt;
        case '>': return TokenKind::Gt;
        case '(': return TokenKind::LParen;
        case ')': return TokenKind::RParen;
        case '[': return TokenKind::LBracket;
        case ']': return TokenKind::RBracket;
        case '{': return TokenKind::LBrace;
        case '}': return TokenKind::RBrace;
        case ',': return TokenKind::Comma;
        case ':': return TokenKind::Colon;
        case '.': return TokenKind::Dot;
        default: return TokenKind::Eof;  // sentinel: no match
    }
}

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

class Scanner {
  public:
    Scanner(const std::string& source, const LexerConfig& cfg) : src_(source), cfg_(cfg) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (!at_end()) {
            out.push_back(next_token());
        }
        out.push_back(Token{TokenKind::Eof, "", Channel::Default, pos_});
        return out;
    }

  private:
    std::string_view src_;
    LexerConfig cfg_;
    std::size_t i_ = 0;
    SourcePos pos_;

    bool at_end() const { return i_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
    }
    bool starts_with(std::string_view s) const {
        return src_.substr(i_).starts_with(s);
    }

    // Advances over one char, keeping line/column in tab-expanded columns.
    // UTF-8 continuation bytes do not advance the column.
    void advance() {
        char c = src_[i_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 0;
        } else if (c == '\r') {
            if (peek() == '\n') {
                ++i_;
            }
            ++pos_.line;
            pos_.column = 0;
        } else if (c == '\t') {
            pos_.column += cfg_.indent_policy.tab_stop - (pos_.column % cfg_.indent_policy.tab_stop);
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++pos_.column;
        }
    }

    void advance_n(std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            char c = src_[i_];
            // A bare advance over '\r' swallows a following '\n'; here we
            // step byte by byte instead so n is honored exactly.
            if (c == '\n') {
                ++pos_.line;
                pos_.column = 0;
                ++i_;
            } else if (c == '\r') {
                ++pos_.line;
                pos_.column = 0;
                ++i_;
                if (i_ < src_.size() && src_[i_] == '\n' && k + 1 < n) {
                    ++i_;
                    ++k;
                }
            } else if (c == '\t') {
                pos_.column += cfg_.indent_policy.tab_stop - (pos_.column % cfg_.indent_policy.tab_stop);
                ++i_;
            } else {
                if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
                    ++pos_.column;
                }
                ++i_;
            }
        }
    }

    Token make(TokenKind kind, std::size_t start, SourcePos start_pos) {
        Channel channel = is_layout_kind(kind) ? Channel::Hidden : Channel::Default;
        return Token{kind, std::string(src_.substr(start, i_ - start)), channel, start_pos};
    }

    Token next_token() {
        std::size_t start = i_;
        SourcePos start_pos = pos_;
        char c = peek();

        if (c == ' ' || c == '\t') {
            while (peek() == ' ' || peek() == '\t') {
                advance();
            }
            return make(TokenKind::Ws, start, start_pos);
        }
        if (c == '\n' || c == '\r') {
            std::size_t n = (c == '\r' && peek(1) == '\n') ? 2 : 1;
            advance_n(n);
            return make(TokenKind::Newline, start, start_pos);
        }
        if (c == '#') {
            while (!at_end() && peek() != '\n' && peek() != '\r') {
                advance();
            }
            return make(TokenKind::Comment, start, start_pos);
        }
        if (c == '\\') {
            if (peek(1) == '\n' || peek(1) == '\r') {
                advance();
                return make(TokenKind::LineCont, start, start_pos);
            }
            throw FrontendError(ErrorCode::InvalidCharacter, start_pos,
                                "stray '\\' not followed by a line break");
        }

        if (cfg_.recognize_control_glyphs) {
            if (starts_with(cfg_.control_tokens.block_start_glyph)) {
                advance_n(cfg_.control_tokens.block_start_glyph.size());
                return make(TokenKind::BlockStart, start, start_pos);
            }
            if (starts_with(cfg_.control_tokens.block_end_glyph)) {
                advance_n(cfg_.control_tokens.block_end_glyph.size());
                return make(TokenKind::BlockEnd, start, start_pos);
            }
            for (const std::string& glyph : cfg_.control_tokens.stmt_end_glyphs) {
                if (starts_with(glyph)) {
                    advance_n(glyph.size());
                    return make(TokenKind::StmtEnd, start, start_pos);
                }
            }
        }

        if (c == '"' || c == '\'') {
            return lex_string(start, start_pos);
        }
        if (is_digit(c)) {
            return lex_number(start, start_pos);
        }
        if (is_name_start(c)) {
            while (is_name_char(peek())) {
                advance();
            }
            std::string_view text = src_.substr(start, i_ - start);
            auto it = keyword_table().find(text);
            TokenKind kind = it != keyword_table().end() ? it->second : TokenKind::Name;
            return make(kind, start, start_pos);
        }

        for (const TwoCharOp& op : kTwoCharOps) {
            if (starts_with(op.text)) {
                advance_n(2);
                return make(op.kind, start, start_pos);
            }
        }
        if (TokenKind kind = one_char_op(c); kind != TokenKind::Eof) {
            advance();
            return make(kind, start, start_pos);
        }

        throw FrontendError(ErrorCode::InvalidCharacter, start_pos,
                            std::string("no lexical rule matches '") + c + "'");
    }

    Token lex_string(std::size_t start, SourcePos start_pos) {
        char quote = peek();
        bool triple = peek(1) == quote && peek(2) == quote;
        advance_n(triple ? 3 : 1);
        while (true) {
            if (at_end()) {
                throw FrontendError(ErrorCode::UnterminatedString, start_pos,
                                    "string literal not terminated before end of input");
            }
            char c = peek();
            if (c == '\\') {
                if (i_ + 1 >= src_.size()) {
                    throw FrontendError(ErrorCode::UnterminatedString, start_pos,
                                        "string literal not terminated before end of input");
                }
                advance_n(2);
                continue;
            }
            if (!triple && (c == '\n' || c == '\r')) {
                throw FrontendError(ErrorCode::UnterminatedString, start_pos,
                                    "line break inside single-line string literal");
            }
            if (c == quote) {
                if (!triple) {
                    advance();
                    break;
                }
                if (peek(1) == quote && peek(2) == quote) {
                    advance_n(3);
                    break;
                }
            }
            advance();
        }
        return make(TokenKind::String, start, start_pos);
    }

    Token lex_number(std::size_t start, SourcePos start_pos) {
        while (is_digit(peek())) {
            advance();
        }
        bool is_float = false;
        if (peek() == '.' && is_digit(peek(1))) {
            is_float = true;
            advance();
            while (is_digit(peek())) {
                advance();
            }
            // Optional exponent; only consumed when a digit actually follows.
            std::size_t exp_len = 0;
            if (peek() == 'e' || peek() == 'E') {
                exp_len = 1;
                if (peek(1) == '+' || peek(1) == '-') {
                    exp_len = 2;
                }
                if (!is_digit(peek(exp_len))) {
                    exp_len = 0;
                }
            }
            if (exp_len > 0) {
                advance_n(exp_len);
                while (is_digit(peek())) {
                    advance();
                }
            }
        }
        return make(is_float ? TokenKind::Float : TokenKind::Int, start, start_pos);
    }
};

}  // namespace

std::vector<Token> lex(const std::string& source, const LexerConfig& cfg) {
    return Scanner(source, cfg).run();
}

}  // namespace wsbridge

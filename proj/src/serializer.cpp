#include "wsbridge/serializer.hpp"

#include "wsbridge/lexer.hpp"

namespace wsbridge {

namespace {

// Two rendered tokens may be glued iff re-lexing their concatenation yields
// exactly the same two tokens back.
bool needs_space(const std::string& a_text, TokenKind a_kind, const std::string& b_text,
                 TokenKind b_kind, const LexerConfig& probe) {
    std::vector<Token> tokens;
    try {
        tokens = lex(a_text + b_text, probe);
    } catch (const FrontendError&) {
        return true;
    }
    return !(tokens.size() == 3 && tokens[0].kind == a_kind && tokens[0].lexeme == a_text &&
             tokens[1].kind == b_kind && tokens[1].lexeme == b_text);
}

}  // namespace

std::string render_delimited(std::span<const Token> stream, const ControlTokenConfig& cfg) {
    LexerConfig probe;
    probe.control_tokens = cfg;
    probe.recognize_control_glyphs = true;

    std::string out;
    int depth = 0;
    bool have_prev = false;
    std::string prev_text;
    TokenKind prev_kind = TokenKind::Eof;

    for (const Token& t : stream) {
        switch (t.kind) {
            case TokenKind::Ws:
            case TokenKind::Comment:
            case TokenKind::LineCont:
            case TokenKind::Eof:
                continue;
            case TokenKind::Newline:
                out += t.lexeme.empty() ? "\n" : t.lexeme;
                have_prev = false;
                continue;
            case TokenKind::BlockStart:
                ++depth;
                break;
            case TokenKind::BlockEnd:
                if (--depth < 0) {
                    throw FrontendError(ErrorCode::UnbalancedStream, t.pos,
                                        "block end without matching block start");
                }
                break;
            default:
                break;
        }
        std::string text = render_token(t, cfg);
        if (have_prev && needs_space(prev_text, prev_kind, text, t.kind, probe)) {
            out += ' ';
        }
        out += text;
        prev_text = std::move(text);
        prev_kind = t.kind;
        have_prev = true;
    }
    if (depth != 0) {
        throw FrontendError(ErrorCode::UnbalancedStream,
                            std::to_string(depth) + " block(s) left open at end of stream");
    }
    return out;
}

}  // namespace wsbridge

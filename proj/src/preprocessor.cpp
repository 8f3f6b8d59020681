#include "wsbridge/preprocessor.hpp"

namespace wsbridge {

namespace {

// Tab-expanded width of a leading-whitespace token. Enforces the tab policy.
int expand_leading_ws(const Token& ws, const IndentPolicy& policy) {
    int col = ws.pos.column;
    for (char c : ws.lexeme) {
        if (c == '\t') {
            if (!policy.allow_tabs) {
                throw FrontendError(ErrorCode::TabsDisallowed, SourcePos{ws.pos.line, col},
                                    "tab in leading whitespace");
            }
            col += policy.tab_stop - col % policy.tab_stop;
        } else {
            ++col;
        }
    }
    return col;
}

Token control_token(TokenKind kind, SourcePos pos) {
    return Token{kind, "", Channel::Default, pos};
}

}  // namespace

IndentScan scan_next_content_line(std::span<const Token> lookahead, const IndentPolicy& policy) {
    int indent = 0;
    SourcePos line_start{};
    bool have_line_start = false;
    bool leading = true;    // still in the leading-WS zone of the logical line's first physical line
    bool continued = false; // a LINE_CONT keeps the logical line open across the next break
    for (const Token& t : lookahead) {
        if (!have_line_start) {
            line_start = SourcePos{t.pos.line, 0};
            have_line_start = true;
        }
        switch (t.kind) {
            case TokenKind::Ws:
                if (leading) {
                    indent = expand_leading_ws(t, policy);
                }
                break;
            case TokenKind::Comment:
                leading = false;
                break;
            case TokenKind::LineCont:
                leading = false;
                continued = true;
                break;
            case TokenKind::Newline:
                if (continued) {
                    continued = false;  // same logical line; indent already fixed
                } else {
                    indent = 0;
                    leading = true;
                    have_line_start = false;
                }
                break;
            case TokenKind::Eof:
                return IndentScan{std::nullopt, t.pos};
            default:
                return IndentScan{indent, line_start};
        }
    }
    return IndentScan{std::nullopt, line_start};
}

std::optional<int> calc_current_indent(std::span<const Token> lookahead,
                                       const IndentPolicy& policy) {
    return scan_next_content_line(lookahead, policy).indent;
}

void process(const Token& token, IndentState& state, std::span<const Token> lookahead,
             const IndentPolicy& policy, std::vector<Token>& out) {
    switch (token.kind) {
        case TokenKind::LineCont:
            state.pending_line_continuation = true;  // token dropped
            return;

        case TokenKind::Newline: {
            if (state.pending_line_continuation) {
                state.pending_line_continuation = false;  // continuation break dropped
                return;
            }
            if (!state.content_since_boundary) {
                return;  // blank or comment-only line: no boundary
            }
            IndentScan scan = scan_next_content_line(lookahead, policy);
            // End of input dedents all the way out; EOF then only has to
            // finish streams that end without a line break.
            int next = scan.indent.value_or(0);
            if (next > state.top()) {
                state.indent_stack.push_back(next);
                out.push_back(control_token(TokenKind::BlockStart, token.pos));
            } else if (next == state.top()) {
                out.push_back(control_token(TokenKind::StmtEnd, token.pos));
            } else {
                out.push_back(control_token(TokenKind::StmtEnd, token.pos));
                while (state.top() > next) {
                    state.indent_stack.pop_back();
                    out.push_back(control_token(TokenKind::BlockEnd, token.pos));
                }
                if (state.top() != next) {
                    throw FrontendError(
                        ErrorCode::IndentMismatch, scan.line_start,
                        "dedent to column " + std::to_string(next) + " matches no open block");
                }
            }
            state.content_since_boundary = false;
            out.push_back(token);
            return;
        }

        case TokenKind::Eof:
            if (state.content_since_boundary) {
                out.push_back(control_token(TokenKind::StmtEnd, token.pos));
                state.content_since_boundary = false;
            }
            while (state.block_depth() > 0) {
                state.indent_stack.pop_back();
                out.push_back(control_token(TokenKind::BlockEnd, token.pos));
            }
            out.push_back(token);
            return;

        case TokenKind::Ws:
        case TokenKind::Comment:
            out.push_back(token);
            return;

        default:
            state.content_since_boundary = true;
            out.push_back(token);
            return;
    }
}

}  // namespace wsbridge

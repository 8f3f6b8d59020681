#include <doctest.h>

#include "support/testutil.hpp"
#include "wsbridge/lexer.hpp"
#include "wsbridge/pipeline.hpp"
#include "wsbridge/preprocessor.hpp"

using namespace wsbridge;
using namespace wsbridge::testing;

namespace {

// Lookahead as the preprocessor would see it right after the first NEWLINE.
std::vector<Token> after_first_newline(const std::string& source) {
    std::vector<Token> tokens = lex(source, LexerConfig{});
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].kind == TokenKind::Newline) {
            return std::vector<Token>(tokens.begin() + static_cast<long>(i) + 1, tokens.end());
        }
    }
    FAIL("source has no newline");
    return {};
}

ErrorCode pipeline_error(const std::string& source, const LexerConfig& cfg = {}) {
    try {
        processed_stream(source, cfg);
    } catch (const FrontendError& err) {
        return err.code();
    }
    throw std::logic_error("expected a pipeline error");
}

}  // namespace

TEST_CASE("calc_current_indent counts spaces") {
    std::vector<Token> look = after_first_newline("a\n    x\n");
    CHECK(calc_current_indent(look, IndentPolicy{}) == 4);
}

TEST_CASE("calc_current_indent skips blank and comment-only lines") {
    std::vector<Token> look = after_first_newline("a\n\n# note\n  y\n");
    CHECK(calc_current_indent(look, IndentPolicy{}) == 2);
}

TEST_CASE("calc_current_indent expands tabs to the next stop") {
    CHECK(calc_current_indent(after_first_newline("a\n\tx\n"), IndentPolicy{}) == 8);
    CHECK(calc_current_indent(after_first_newline("a\n  \tx\n"), IndentPolicy{}) == 8);
    IndentPolicy narrow{4, true};
    CHECK(calc_current_indent(after_first_newline("a\n\tx\n"), narrow) == 4);
}

TEST_CASE("calc_current_indent reports end of input") {
    CHECK(calc_current_indent(after_first_newline("a\n"), IndentPolicy{}) == std::nullopt);
    CHECK(calc_current_indent(after_first_newline("a\n\n   \n# only\n"), IndentPolicy{}) ==
          std::nullopt);
}

TEST_CASE("calc_current_indent measures the logical line's first physical line") {
    // the continuation line's own indentation is irrelevant
    std::vector<Token> look = after_first_newline("a\n  b \\\n        + c\n");
    CHECK(calc_current_indent(look, IndentPolicy{}) == 2);
}

TEST_CASE("calc_current_indent rejects tabs when the policy forbids them") {
    IndentPolicy no_tabs{8, false};
    CHECK_THROWS_AS(calc_current_indent(after_first_newline("a\n\tx\n"), no_tabs), FrontendError);
    // tabs after the leading whitespace are not indentation
    CHECK(calc_current_indent(after_first_newline("a\n  x\ty\n"), no_tabs) == 2);
}

TEST_CASE("process: line continuation sets the flag and is dropped") {
    IndentState state;
    std::vector<Token> out;
    Token cont{TokenKind::LineCont, "\\", Channel::Hidden, {1, 2}};
    process(cont, state, {}, IndentPolicy{}, out);
    CHECK(out.empty());
    CHECK(state.pending_line_continuation);

    // the following newline is discarded and clears the flag
    Token nl{TokenKind::Newline, "\n", Channel::Hidden, {1, 3}};
    process(nl, state, {}, IndentPolicy{}, out);
    CHECK(out.empty());
    CHECK_FALSE(state.pending_line_continuation);
}

TEST_CASE("process: newline without content emits nothing") {
    IndentState state;
    std::vector<Token> out;
    Token nl{TokenKind::Newline, "\n", Channel::Hidden, {1, 0}};
    process(nl, state, {}, IndentPolicy{}, out);
    CHECK(out.empty());
}

TEST_CASE("process: indent stack evolves through a nested program") {
    const std::string source = "if a:\n    if b:\n        x = 1\ny = 2\n";
    std::vector<Token> tokens = lex(source, LexerConfig{});
    IndentState state;
    std::vector<Token> out;
    std::vector<int> depth_after_newline;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::span<const Token> lookahead(tokens.data() + i + 1, tokens.size() - i - 1);
        process(tokens[i], state, lookahead, IndentPolicy{}, out);
        // stack stays strictly increasing from 0
        REQUIRE(state.indent_stack.front() == 0);
        for (std::size_t k = 1; k < state.indent_stack.size(); ++k) {
            REQUIRE(state.indent_stack[k - 1] < state.indent_stack[k]);
        }
        if (tokens[i].kind == TokenKind::Newline) {
            depth_after_newline.push_back(state.block_depth());
        }
    }
    CHECK(depth_after_newline == std::vector<int>{1, 2, 0, 0});
    CHECK(state.indent_stack == std::vector<int>{0});
    CHECK_FALSE(state.pending_line_continuation);
}

TEST_CASE("pipeline boundary structure for the nested dedent example") {
    // two levels popped at once after the innermost statement
    CHECK(visible_kinds("if a:\n    if b:\n        x = 1\ny = 2\n") ==
          "IF NAME COLON BLOCK_START "
          "IF NAME COLON BLOCK_START "
          "NAME ASSIGN INT STMT_END BLOCK_END BLOCK_END "
          "NAME ASSIGN INT STMT_END EOF");
}

TEST_CASE("empty input preprocesses to EOF alone") {
    std::vector<Token> stream = processed_stream("", LexerConfig{});
    REQUIRE(stream.size() == 1);
    CHECK(stream[0].kind == TokenKind::Eof);
}

TEST_CASE("blank and comment-only lines produce no boundaries") {
    CHECK(visible_kinds("a = 1\n\n\n# note\n   \nb = 2\n") ==
          "NAME ASSIGN INT STMT_END NAME ASSIGN INT STMT_END EOF");
    CHECK(visible_kinds("if a:\n\n    # intro\n    x = 1\n") ==
          "IF NAME COLON BLOCK_START NAME ASSIGN INT STMT_END BLOCK_END EOF");
}

TEST_CASE("continuation joins lines without a statement boundary") {
    CHECK(visible_kinds("x = 1 + \\\n    2\ny = 3\n") ==
          "NAME ASSIGN INT PLUS INT STMT_END NAME ASSIGN INT STMT_END EOF");
}

TEST_CASE("file without trailing newline still closes statements and blocks") {
    CHECK(visible_kinds("x = 1") == "NAME ASSIGN INT STMT_END EOF");
    CHECK(visible_kinds("if a:\n    x = 1") ==
          "IF NAME COLON BLOCK_START NAME ASSIGN INT STMT_END BLOCK_END EOF");
}

TEST_CASE("dedent to a foreign column is an IndentMismatch") {
    CHECK(pipeline_error("if a:\n    x = 1\n  y = 2\n") == ErrorCode::IndentMismatch);
    try {
        processed_stream("if a:\n    x = 1\n  y = 2\n", LexerConfig{});
        FAIL("expected IndentMismatch");
    } catch (const FrontendError& err) {
        REQUIRE(err.pos().has_value());
        CHECK(*err.pos() == SourcePos{3, 0});
    }
}

TEST_CASE("indent jump inside an open block is fine, partial dedent is matched exactly") {
    CHECK_NOTHROW(processed_stream("if a:\n        x = 1\n", LexerConfig{}));
    CHECK(pipeline_error("if a:\n    if b:\n            x = 1\n      y = 2\n") ==
          ErrorCode::IndentMismatch);
}

TEST_CASE("tabs disallowed propagates out of the pipeline") {
    LexerConfig cfg;
    cfg.indent_policy.allow_tabs = false;
    CHECK(pipeline_error("if a:\n\tx = 1\n", cfg) == ErrorCode::TabsDisallowed);
}

TEST_CASE("synthesized control tokens carry the triggering token's position") {
    std::vector<Token> stream = processed_stream("if a:\n    x = 1\n", LexerConfig{});
    for (const Token& t : stream) {
        if (t.kind == TokenKind::BlockStart) {
            CHECK(t.pos == SourcePos{1, 5});  // the newline that ends the header line
        }
    }
}

#pragma once

#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "wsbridge/ast.hpp"
#include "wsbridge/errors.hpp"
#include "wsbridge/registry.hpp"
#include "wsbridge/token.hpp"

namespace wsbridge {

// Anything that can hand the parser one DEFAULT-channel token at a time.
class TokenSource {
  public:
    virtual ~TokenSource() = default;
    virtual Token next() = 0;
};

class VectorTokenSource : public TokenSource {
  public:
    explicit VectorTokenSource(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}
    Token next() override;

  private:
    std::vector<Token> tokens_;
    std::size_t i_ = 0;
};

// Recursive-descent statement parsing over the registry's statement table,
// with precedence-climbing expressions over its Pratt tables. Statements
// dispatch on their leading token and fall back to expression-or-assignment
// when the leading token has a prefix rule.
class Parser {
  public:
    Parser(TokenSource& source, const ComponentRegistry& registry, IndentPolicy policy = {});

    Module parse_module();

    // Helpers shared with component parse procedures.
    const Token& peek(int ahead = 0);
    Token advance();
    bool check(TokenKind kind);
    bool match(TokenKind kind);
    Token expect(TokenKind kind, const char* context);
    [[noreturn]] void fail(std::vector<TokenKind> expected, const std::string& message);

    StmtPtr parse_statement();
    // StatementBlock = (StartBlock Statement+ EndBlock) | Statement
    Block parse_statement_block();
    ExprPtr parse_expression(int min_binding_power = 0);
    StmtPtr parse_expr_or_assign();

    // True when `kind` can begin a statement under the current registry.
    bool starts_statement(TokenKind kind) const;

    const ComponentRegistry& registry() const { return registry_; }
    SourcePos end_of(const Token& token) const { return token_end(token, policy_); }

  private:
    TokenSource& source_;
    const ComponentRegistry& registry_;
    IndentPolicy policy_;
    std::deque<Token> lookahead_;
    SourcePos last_end_{1, 0};  // end of the most recently consumed token
    friend class SpanTracker;

  public:
    SourcePos last_end() const { return last_end_; }
};

Module parse_module(TokenSource& source, const ComponentRegistry& registry, IndentPolicy policy = {});
Module parse_module(std::vector<Token> parser_tokens, const ComponentRegistry& registry,
                    IndentPolicy policy = {});

// Throws ParseError unless the expression is a name, attribute or subscript.
void require_assignable(const Expr& expr);

}  // namespace wsbridge

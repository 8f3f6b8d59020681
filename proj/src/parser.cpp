#include "wsbridge/parser.hpp"

namespace wsbridge {

Token VectorTokenSource::next() {
    if (i_ < tokens_.size()) {
        return tokens_[i_++];
    }
    if (!tokens_.empty()) {
        return tokens_.back();
    }
    return Token{TokenKind::Eof, "", Channel::Default, SourcePos{1, 0}};
}

Parser::Parser(TokenSource& source, const ComponentRegistry& registry, IndentPolicy policy)
    : source_(source), registry_(registry), policy_(policy) {}

const Token& Parser::peek(int ahead) {
    while (lookahead_.size() <= static_cast<std::size_t>(ahead)) {
        lookahead_.push_back(source_.next());
    }
    return lookahead_[static_cast<std::size_t>(ahead)];
}

Token Parser::advance() {
    peek();
    Token t = std::move(lookahead_.front());
    lookahead_.pop_front();
    last_end_ = token_end(t, policy_);
    return t;
}

bool Parser::check(TokenKind kind) {
    return peek().kind == kind;
}

bool Parser::match(TokenKind kind) {
    if (check(kind)) {
        advance();
        return true;
    }
    return false;
}

Token Parser::expect(TokenKind kind, const char* context) {
    if (check(kind)) {
        return advance();
    }
    fail({kind}, std::string("in ") + context);
}

void Parser::fail(std::vector<TokenKind> expected, const std::string& message) {
    const Token& found = peek();
    std::string what;
    if (!expected.empty()) {
        what = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) {
                what += i + 1 == expected.size() ? " or " : ", ";
            }
            what += kind_name(expected[i]);
        }
        what += " ";
    }
    what += message;
    what += ", found ";
    what += kind_name(found.kind);
    if (!found.lexeme.empty()) {
        what += " \"" + escape_lexeme(found.lexeme) + "\"";
    }
    throw ParseError(found.pos, what, std::move(expected), found);
}

bool Parser::starts_statement(TokenKind kind) const {
    return registry_.statement_for(kind) != nullptr || registry_.prefix_for(kind) != nullptr;
}

StmtPtr Parser::parse_statement() {
    const Token& head = peek();
    if (const StatementEntry* entry = registry_.statement_for(head.kind)) {
        return entry->parse(*this);
    }
    if (registry_.prefix_for(head.kind) != nullptr) {
        return parse_expr_or_assign();
    }
    throw ParseError(ErrorCode::NoStatementParser, head.pos,
                     std::string("no statement parser accepts ") + kind_name(head.kind), head);
}

Block Parser::parse_statement_block() {
    const ControlBindings& cb = registry_.controls();
    Block block;
    if (match(cb.start_block)) {
        if (check(cb.end_block)) {
            fail({}, "block requires at least one statement");
        }
        while (!check(cb.end_block)) {
            block.stmts.push_back(parse_statement());
        }
        advance();  // the EndBlock token
    } else if (starts_statement(peek().kind)) {
        block.stmts.push_back(parse_statement());
    } else {
        fail({cb.start_block}, "or an inline statement to open the block");
    }
    block.span = Span{block.stmts.front()->span.start, block.stmts.back()->span.end};
    return block;
}

ExprPtr Parser::parse_expression(int min_binding_power) {
    Token head = peek();
    const PrefixRule* prefix = registry_.prefix_for(head.kind);
    if (prefix == nullptr) {
        fail({}, "expected an expression");
    }
    advance();
    ExprPtr left = (*prefix)(*this, head);
    while (true) {
        const InfixEntry* infix = registry_.infix_for(peek().kind);
        if (infix == nullptr || infix->binding_power <= min_binding_power) {
            break;
        }
        Token op = advance();
        left = infix->rule(*this, std::move(left), op);
    }
    return left;
}

void require_assignable(const Expr& expr) {
    bool ok = std::holds_alternative<NameExpr>(expr.node) ||
              std::holds_alternative<AttributeExpr>(expr.node) ||
              std::holds_alternative<SubscriptExpr>(expr.node);
    if (!ok) {
        throw FrontendError(ErrorCode::ParseError, expr.span.start,
                            "cannot assign to this expression");
    }
}

StmtPtr Parser::parse_expr_or_assign() {
    const ControlBindings& cb = registry_.controls();
    SourcePos start = peek().pos;
    ExprPtr first = parse_expression();

    if (check(TokenKind::Assign)) {
        AssignStmt assign{AssignOp::Assign, {}, nullptr};
        ExprPtr current = std::move(first);
        while (match(TokenKind::Assign)) {
            require_assignable(*current);
            assign.targets.push_back(std::move(current));
            current = parse_expression();
        }
        assign.value = std::move(current);
        SourcePos end = last_end_;
        expect(cb.end_stmt, "assignment");
        auto stmt = std::make_unique<Stmt>();
        stmt->span = Span{start, end};
        stmt->node = std::move(assign);
        return stmt;
    }
    if (check(TokenKind::PlusAssign) || check(TokenKind::MinusAssign)) {
        AssignOp op = check(TokenKind::PlusAssign) ? AssignOp::AddAssign : AssignOp::SubAssign;
        advance();
        require_assignable(*first);
        AssignStmt assign{op, {}, nullptr};
        assign.targets.push_back(std::move(first));
        assign.value = parse_expression();
        SourcePos end = last_end_;
        expect(cb.end_stmt, "assignment");
        auto stmt = std::make_unique<Stmt>();
        stmt->span = Span{start, end};
        stmt->node = std::move(assign);
        return stmt;
    }

    SourcePos end = last_end_;
    expect(cb.end_stmt, "expression statement");
    auto stmt = std::make_unique<Stmt>();
    stmt->span = Span{start, end};
    stmt->node = ExprStmt{std::move(first)};
    return stmt;
}

Module Parser::parse_module() {
    Module module;
    module.span.start = SourcePos{1, 0};
    while (!check(TokenKind::Eof)) {
        module.body.push_back(parse_statement());
    }
    module.span.end = advance().pos;
    return module;
}

Module parse_module(TokenSource& source, const ComponentRegistry& registry, IndentPolicy policy) {
    Parser parser(source, registry, policy);
    return parser.parse_module();
}

Module parse_module(std::vector<Token> parser_tokens, const ComponentRegistry& registry,
                    IndentPolicy policy) {
    VectorTokenSource source(std::move(parser_tokens));
    return parse_module(source, registry, policy);
}

}  // namespace wsbridge

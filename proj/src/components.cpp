#include "wsbridge/parser.hpp"
#include "wsbridge/registry.hpp"

namespace wsbridge {

void ComponentRegistry::add_statement(StatementEntry entry) {
    for (int k = 0; k < kTokenKindCount; ++k) {
        TokenKind kind = static_cast<TokenKind>(k);
        if (!entry.matches(kind)) {
            continue;
        }
        for (const StatementEntry& existing : statement_entries_) {
            if (existing.matches(kind)) {
                throw FrontendError(ErrorCode::CompositionConflict,
                                    "statement parsers '" + existing.name + "' and '" + entry.name +
                                        "' both claim leading token " + kind_name(kind));
            }
        }
    }
    statement_entries_.push_back(std::move(entry));
}

void ComponentRegistry::add_prefix(TokenKind kind, PrefixRule rule) {
    if (prefix_rules_.contains(kind)) {
        throw FrontendError(ErrorCode::CompositionConflict,
                            std::string("duplicate prefix rule for ") + kind_name(kind));
    }
    prefix_rules_.emplace(kind, std::move(rule));
}

void ComponentRegistry::add_infix(TokenKind kind, InfixEntry entry) {
    if (infix_rules_.contains(kind)) {
        throw FrontendError(ErrorCode::CompositionConflict,
                            std::string("duplicate infix rule for ") + kind_name(kind));
    }
    infix_rules_.emplace(kind, std::move(entry));
}

const StatementEntry* ComponentRegistry::statement_for(TokenKind kind) const {
    for (const StatementEntry& entry : statement_entries_) {
        if (entry.matches(kind)) {
            return &entry;
        }
    }
    return nullptr;
}

const PrefixRule* ComponentRegistry::prefix_for(TokenKind kind) const {
    auto it = prefix_rules_.find(kind);
    return it != prefix_rules_.end() ? &it->second : nullptr;
}

const InfixEntry* ComponentRegistry::infix_for(TokenKind kind) const {
    auto it = infix_rules_.find(kind);
    return it != infix_rules_.end() ? &it->second : nullptr;
}

namespace {

// Binding powers, loosest to tightest:
// or < and < not < comparison < additive < multiplicative < unary < power < postfix
constexpr int kBpOr = 10;
constexpr int kBpAnd = 20;
constexpr int kBpNot = 30;
constexpr int kBpCompare = 40;
constexpr int kBpAdditive = 50;
constexpr int kBpMultiplicative = 60;
constexpr int kBpUnary = 70;
constexpr int kBpPower = 80;
constexpr int kBpPostfix = 90;

ExprPtr make_expr(Span span, auto node) {
    auto e = std::make_unique<Expr>();
    e->span = span;
    e->node = std::move(node);
    return e;
}

StmtPtr make_stmt(Span span, auto node) {
    auto s = std::make_unique<Stmt>();
    s->span = span;
    s->node = std::move(node);
    return s;
}

auto leading(TokenKind kind) {
    return [kind](TokenKind k) { return k == kind; };
}

ExprPtr atom_rule(Parser& p, const Token& t, auto node) {
    return make_expr(Span{t.pos, p.end_of(t)}, std::move(node));
}

void add_binary_infix(ComponentRegistry& reg, TokenKind kind, BinaryOp op, int bp,
                      bool right_assoc = false) {
    reg.add_infix(kind, InfixEntry{bp, right_assoc,
                                   [op, bp, right_assoc](Parser& p, ExprPtr left, const Token&) {
                                       ExprPtr right =
                                           p.parse_expression(right_assoc ? bp - 1 : bp);
                                       Span span{left->span.start, right->span.end};
                                       return make_expr(
                                           span, BinaryExpr{op, std::move(left), std::move(right)});
                                   }});
}

bool is_compare_kind(TokenKind k) {
    switch (k) {
        case TokenKind::Eq:
        case TokenKind::Ne:
        case TokenKind::Lt:
        case TokenKind::Gt:
        case TokenKind::Le:
        case TokenKind::Ge:
            return true;
        default:
            return false;
    }
}

void add_compare_infix(ComponentRegistry& reg, TokenKind kind, CompareOp op) {
    reg.add_infix(kind,
                  InfixEntry{kBpCompare, false, [op](Parser& p, ExprPtr left, const Token&) {
                                 ExprPtr right = p.parse_expression(kBpCompare);
                                 if (is_compare_kind(p.peek().kind)) {
                                     p.fail({}, "chained comparisons are not supported");
                                 }
                                 Span span{left->span.start, right->span.end};
                                 return make_expr(
                                     span, CompareExpr{op, std::move(left), std::move(right)});
                             }});
}

void add_unary_prefix(ComponentRegistry& reg, TokenKind kind, UnaryOp op, int bp) {
    reg.add_prefix(kind, [op, bp](Parser& p, const Token& t) {
        ExprPtr operand = p.parse_expression(bp);
        Span span{t.pos, operand->span.end};
        return make_expr(span, UnaryExpr{op, std::move(operand)});
    });
}

// expr (',' expr)* with an optional trailing comma, up to `close`.
std::vector<ExprPtr> parse_expr_list(Parser& p, TokenKind close) {
    std::vector<ExprPtr> items;
    while (!p.check(close)) {
        items.push_back(p.parse_expression());
        if (!p.match(TokenKind::Comma)) {
            break;
        }
    }
    return items;
}

Block parse_colon_block(Parser& p, const char* context) {
    p.expect(TokenKind::Colon, context);
    return p.parse_statement_block();
}

}  // namespace

void install_basics(ComponentRegistry& reg) {
    reg.add_prefix(TokenKind::Name, [](Parser& p, const Token& t) {
        return atom_rule(p, t, NameExpr{t.lexeme});
    });
}

void install_common_literals(ComponentRegistry& reg) {
    reg.add_prefix(TokenKind::Int, [](Parser& p, const Token& t) {
        return atom_rule(p, t, IntLit{t.lexeme});
    });
    reg.add_prefix(TokenKind::Float, [](Parser& p, const Token& t) {
        return atom_rule(p, t, FloatLit{t.lexeme});
    });
    reg.add_prefix(TokenKind::String, [](Parser& p, const Token& t) {
        return atom_rule(p, t, StrLit{t.lexeme});
    });
    reg.add_prefix(TokenKind::True, [](Parser& p, const Token& t) {
        return atom_rule(p, t, BoolLit{true});
    });
    reg.add_prefix(TokenKind::False, [](Parser& p, const Token& t) {
        return atom_rule(p, t, BoolLit{false});
    });
    reg.add_prefix(TokenKind::None, [](Parser& p, const Token& t) {
        return atom_rule(p, t, NoneLit{});
    });
}

void install_common_expressions(ComponentRegistry& reg) {
    // Grouping and displays.
    reg.add_prefix(TokenKind::LParen, [](Parser& p, const Token& t) {
        if (p.match(TokenKind::RParen)) {
            return make_expr(Span{t.pos, p.last_end()}, TupleExpr{});
        }
        ExprPtr first = p.parse_expression();
        if (p.check(TokenKind::Comma)) {
            TupleExpr tuple;
            tuple.items.push_back(std::move(first));
            while (p.match(TokenKind::Comma)) {
                if (p.check(TokenKind::RParen)) {
                    break;
                }
                tuple.items.push_back(p.parse_expression());
            }
            p.expect(TokenKind::RParen, "tuple display");
            return make_expr(Span{t.pos, p.last_end()}, std::move(tuple));
        }
        p.expect(TokenKind::RParen, "parenthesized expression");
        return make_expr(Span{t.pos, p.last_end()}, ParenExpr{std::move(first)});
    });
    reg.add_prefix(TokenKind::LBracket, [](Parser& p, const Token& t) {
        ListExpr list{parse_expr_list(p, TokenKind::RBracket)};
        p.expect(TokenKind::RBracket, "list display");
        return make_expr(Span{t.pos, p.last_end()}, std::move(list));
    });
    reg.add_prefix(TokenKind::LBrace, [](Parser& p, const Token& t) {
        DictExpr dict;
        while (!p.check(TokenKind::RBrace)) {
            ExprPtr key = p.parse_expression();
            p.expect(TokenKind::Colon, "dict display");
            ExprPtr value = p.parse_expression();
            dict.items.emplace_back(std::move(key), std::move(value));
            if (!p.match(TokenKind::Comma)) {
                break;
            }
        }
        p.expect(TokenKind::RBrace, "dict display");
        return make_expr(Span{t.pos, p.last_end()}, std::move(dict));
    });

    // Unary operators. ++ binds both as a prefix and as a postfix; the
    // well-formedness pass rejects both after parsing.
    add_unary_prefix(reg, TokenKind::Minus, UnaryOp::Neg, kBpUnary);
    add_unary_prefix(reg, TokenKind::Plus, UnaryOp::Pos, kBpUnary);
    add_unary_prefix(reg, TokenKind::Not, UnaryOp::Not, kBpNot);
    add_unary_prefix(reg, TokenKind::PlusPlus, UnaryOp::IncPrefix, kBpUnary);

    add_binary_infix(reg, TokenKind::Or, BinaryOp::Or, kBpOr);
    add_binary_infix(reg, TokenKind::And, BinaryOp::And, kBpAnd);

    add_compare_infix(reg, TokenKind::Eq, CompareOp::Eq);
    add_compare_infix(reg, TokenKind::Ne, CompareOp::Ne);
    add_compare_infix(reg, TokenKind::Lt, CompareOp::Lt);
    add_compare_infix(reg, TokenKind::Gt, CompareOp::Gt);
    add_compare_infix(reg, TokenKind::Le, CompareOp::Le);
    add_compare_infix(reg, TokenKind::Ge, CompareOp::Ge);

    add_binary_infix(reg, TokenKind::Plus, BinaryOp::Add, kBpAdditive);
    add_binary_infix(reg, TokenKind::Minus, BinaryOp::Sub, kBpAdditive);
    add_binary_infix(reg, TokenKind::Star, BinaryOp::Mul, kBpMultiplicative);
    add_binary_infix(reg, TokenKind::Slash, BinaryOp::Div, kBpMultiplicative);
    add_binary_infix(reg, TokenKind::DoubleSlash, BinaryOp::FloorDiv, kBpMultiplicative);
    add_binary_infix(reg, TokenKind::Percent, BinaryOp::Mod, kBpMultiplicative);
    add_binary_infix(reg, TokenKind::DoubleStar, BinaryOp::Pow, kBpPower, /*right_assoc=*/true);

    // Postfix: calls, attribute access, subscripts and the ++ suffix.
    reg.add_infix(TokenKind::LParen,
                  InfixEntry{kBpPostfix, false, [](Parser& p, ExprPtr left, const Token&) {
                                 CallExpr call{std::move(left),
                                               parse_expr_list(p, TokenKind::RParen)};
                                 p.expect(TokenKind::RParen, "call arguments");
                                 Span span{call.callee->span.start, p.last_end()};
                                 return make_expr(span, std::move(call));
                             }});
    reg.add_infix(TokenKind::Dot,
                  InfixEntry{kBpPostfix, false, [](Parser& p, ExprPtr left, const Token&) {
                                 Token name = p.expect(TokenKind::Name, "attribute access");
                                 Span span{left->span.start, p.last_end()};
                                 return make_expr(span,
                                                  AttributeExpr{std::move(left), name.lexeme});
                             }});
    reg.add_infix(TokenKind::LBracket,
                  InfixEntry{kBpPostfix, false, [](Parser& p, ExprPtr left, const Token&) {
                                 ExprPtr index = p.parse_expression();
                                 p.expect(TokenKind::RBracket, "subscript");
                                 Span span{left->span.start, p.last_end()};
                                 return make_expr(
                                     span, SubscriptExpr{std::move(left), std::move(index)});
                             }});
    reg.add_infix(TokenKind::PlusPlus,
                  InfixEntry{kBpPostfix, false, [](Parser& p, ExprPtr left, const Token&) {
                                 Span span{left->span.start, p.last_end()};
                                 return make_expr(span, IncSuffixExpr{std::move(left)});
                             }});
}

void install_basic_statements(ComponentRegistry& reg) {
    reg.add_statement(StatementEntry{
        "If", leading(TokenKind::If), [](Parser& p) {
            Token kw = p.advance();
            IfStmt node{p.parse_expression(), Block{}, {}, std::nullopt};
            node.then_block = parse_colon_block(p, "if header");
            while (p.check(TokenKind::Elif)) {
                p.advance();
                ExprPtr cond = p.parse_expression();
                node.elifs.emplace_back(std::move(cond), parse_colon_block(p, "elif header"));
            }
            if (p.match(TokenKind::Else)) {
                node.else_block = parse_colon_block(p, "else header");
            }
            return make_stmt(Span{kw.pos, p.last_end()}, std::move(node));
        }});
    reg.add_statement(StatementEntry{
        "While", leading(TokenKind::While), [](Parser& p) {
            Token kw = p.advance();
            ExprPtr cond = p.parse_expression();
            Block body = parse_colon_block(p, "while header");
            return make_stmt(Span{kw.pos, p.last_end()},
                             WhileStmt{std::move(cond), std::move(body)});
        }});
    reg.add_statement(StatementEntry{
        "Return", leading(TokenKind::Return), [](Parser& p) {
            Token kw = p.advance();
            ReturnStmt node{nullptr};
            if (!p.check(p.registry().controls().end_stmt)) {
                node.value = p.parse_expression();
            }
            SourcePos end = p.last_end();
            p.expect(p.registry().controls().end_stmt, "return statement");
            return make_stmt(Span{kw.pos, end}, std::move(node));
        }});
    reg.add_statement(StatementEntry{
        "Pass", leading(TokenKind::Pass), [](Parser& p) {
            Token kw = p.advance();
            SourcePos end = p.last_end();
            p.expect(p.registry().controls().end_stmt, "pass statement");
            return make_stmt(Span{kw.pos, end}, PassStmt{});
        }});
    reg.add_statement(StatementEntry{
        "Break", leading(TokenKind::Break), [](Parser& p) {
            Token kw = p.advance();
            SourcePos end = p.last_end();
            p.expect(p.registry().controls().end_stmt, "break statement");
            return make_stmt(Span{kw.pos, end}, BreakStmt{});
        }});
    reg.add_statement(StatementEntry{
        "Continue", leading(TokenKind::Continue), [](Parser& p) {
            Token kw = p.advance();
            SourcePos end = p.last_end();
            p.expect(p.registry().controls().end_stmt, "continue statement");
            return make_stmt(Span{kw.pos, end}, ContinueStmt{});
        }});
}

void install_py_statements(ComponentRegistry& reg) {
    reg.add_statement(StatementEntry{
        "For", leading(TokenKind::For), [](Parser& p) {
            Token kw = p.advance();
            ExprPtr target = p.parse_expression();
            require_assignable(*target);
            p.expect(TokenKind::In, "for header");
            ExprPtr iterable = p.parse_expression();
            Block body = parse_colon_block(p, "for header");
            return make_stmt(Span{kw.pos, p.last_end()},
                             ForStmt{std::move(target), std::move(iterable), std::move(body)});
        }});
    reg.add_statement(StatementEntry{
        "FuncDef", leading(TokenKind::Def), [](Parser& p) {
            Token kw = p.advance();
            FuncDefStmt node;
            node.name = p.expect(TokenKind::Name, "function definition").lexeme;
            p.expect(TokenKind::LParen, "parameter list");
            while (!p.check(TokenKind::RParen)) {
                node.params.push_back(p.expect(TokenKind::Name, "parameter list").lexeme);
                if (!p.match(TokenKind::Comma)) {
                    break;
                }
            }
            p.expect(TokenKind::RParen, "parameter list");
            node.body = parse_colon_block(p, "function definition");
            return make_stmt(Span{kw.pos, p.last_end()}, std::move(node));
        }});
    reg.add_statement(StatementEntry{
        "Import", leading(TokenKind::Import), [](Parser& p) {
            Token kw = p.advance();
            ImportStmt node;
            node.path.push_back(p.expect(TokenKind::Name, "import statement").lexeme);
            while (p.match(TokenKind::Dot)) {
                node.path.push_back(p.expect(TokenKind::Name, "import statement").lexeme);
            }
            SourcePos end = p.last_end();
            p.expect(p.registry().controls().end_stmt, "import statement");
            return make_stmt(Span{kw.pos, end}, std::move(node));
        }});
}

ComponentRegistry build_minipython_registry() {
    ComponentRegistry reg;
    install_basics(reg);
    install_common_literals(reg);
    install_common_expressions(reg);
    install_basic_statements(reg);
    install_py_statements(reg);
    reg.bind_controls(ControlBindings{});
    return reg;
}

}  // namespace wsbridge

#include "wsbridge/ast.hpp"

#include <json.hpp>

namespace wsbridge {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json pos_json(const SourcePos& p) {
    return json{{"line", p.line}, {"col", p.column}};
}

json span_json(const Span& s) {
    return json{{"start", pos_json(s.start)}, {"end", pos_json(s.end)}};
}

json expr_json(const Expr& e);
json stmt_json(const Stmt& s);

json exprs_json(const std::vector<ExprPtr>& items) {
    json arr = json::array();
    for (const auto& e : items) {
        arr.push_back(expr_json(*e));
    }
    return arr;
}

json block_json(const Block& b) {
    json arr = json::array();
    for (const auto& s : b.stmts) {
        arr.push_back(stmt_json(*s));
    }
    return json{{"type", "Block"}, {"stmts", std::move(arr)}, {"span", span_json(b.span)}};
}

json expr_json(const Expr& e) {
    json out = std::visit(
        overloaded{
            [](const NameExpr& n) { return json{{"type", "Name"}, {"id", n.id}}; },
            [](const IntLit& n) { return json{{"type", "Int"}, {"value", n.text}}; },
            [](const FloatLit& n) { return json{{"type", "Float"}, {"value", n.text}}; },
            [](const StrLit& n) { return json{{"type", "Str"}, {"value", n.text}}; },
            [](const BoolLit& n) { return json{{"type", "Bool"}, {"value", n.value}}; },
            [](const NoneLit&) { return json{{"type", "None"}}; },
            [](const UnaryExpr& n) {
                return json{{"type", "Unary"},
                            {"op", unary_op_text(n.op)},
                            {"operand", expr_json(*n.operand)}};
            },
            [](const IncSuffixExpr& n) {
                return json{{"type", "IncSuffix"}, {"operand", expr_json(*n.operand)}};
            },
            [](const BinaryExpr& n) {
                return json{{"type", "Binary"},
                            {"op", binary_op_text(n.op)},
                            {"lhs", expr_json(*n.lhs)},
                            {"rhs", expr_json(*n.rhs)}};
            },
            [](const CompareExpr& n) {
                return json{{"type", "Compare"},
                            {"op", compare_op_text(n.op)},
                            {"lhs", expr_json(*n.lhs)},
                            {"rhs", expr_json(*n.rhs)}};
            },
            [](const CallExpr& n) {
                return json{{"type", "Call"},
                            {"callee", expr_json(*n.callee)},
                            {"args", exprs_json(n.args)}};
            },
            [](const AttributeExpr& n) {
                return json{{"type", "Attribute"},
                            {"object", expr_json(*n.object)},
                            {"name", n.name}};
            },
            [](const SubscriptExpr& n) {
                return json{{"type", "Subscript"},
                            {"object", expr_json(*n.object)},
                            {"index", expr_json(*n.index)}};
            },
            [](const ListExpr& n) { return json{{"type", "List"}, {"items", exprs_json(n.items)}}; },
            [](const TupleExpr& n) {
                return json{{"type", "Tuple"}, {"items", exprs_json(n.items)}};
            },
            [](const DictExpr& n) {
                json pairs = json::array();
                for (const auto& [k, v] : n.items) {
                    pairs.push_back(json{{"key", expr_json(*k)}, {"value", expr_json(*v)}});
                }
                return json{{"type", "Dict"}, {"pairs", std::move(pairs)}};
            },
            [](const ParenExpr& n) {
                return json{{"type", "Paren"}, {"inner", expr_json(*n.inner)}};
            },
        },
        e.node);
    out["span"] = span_json(e.span);
    return out;
}

json stmt_json(const Stmt& s) {
    json out = std::visit(
        overloaded{
            [](const ExprStmt& n) { return json{{"type", "ExprStmt"}, {"expr", expr_json(*n.expr)}}; },
            [](const AssignStmt& n) {
                return json{{"type", "Assign"},
                            {"op", assign_op_text(n.op)},
                            {"targets", exprs_json(n.targets)},
                            {"value", expr_json(*n.value)}};
            },
            [](const IfStmt& n) {
                json elifs = json::array();
                for (const auto& [cond, block] : n.elifs) {
                    elifs.push_back(json{{"cond", expr_json(*cond)}, {"block", block_json(block)}});
                }
                json out{{"type", "If"},
                         {"cond", expr_json(*n.cond)},
                         {"then", block_json(n.then_block)},
                         {"elifs", std::move(elifs)}};
                if (n.else_block) {
                    out["else"] = block_json(*n.else_block);
                }
                return out;
            },
            [](const WhileStmt& n) {
                return json{{"type", "While"},
                            {"cond", expr_json(*n.cond)},
                            {"body", block_json(n.body)}};
            },
            [](const ForStmt& n) {
                return json{{"type", "For"},
                            {"target", expr_json(*n.target)},
                            {"iter", expr_json(*n.iterable)},
                            {"body", block_json(n.body)}};
            },
            [](const FuncDefStmt& n) {
                return json{{"type", "FuncDef"},
                            {"name", n.name},
                            {"params", n.params},
                            {"body", block_json(n.body)}};
            },
            [](const ReturnStmt& n) {
                json out{{"type", "Return"}};
                if (n.value) {
                    out["value"] = expr_json(*n.value);
                }
                return out;
            },
            [](const PassStmt&) { return json{{"type", "Pass"}}; },
            [](const BreakStmt&) { return json{{"type", "Break"}}; },
            [](const ContinueStmt&) { return json{{"type", "Continue"}}; },
            [](const ImportStmt& n) { return json{{"type", "Import"}, {"path", n.path}}; },
        },
        s.node);
    out["span"] = span_json(s.span);
    return out;
}

void sexpr_expr(const Expr& e, std::string& out);
void sexpr_stmt(const Stmt& s, std::string& out);

void sexpr_quoted(const std::string& text, std::string& out) {
    out += '"';
    out += escape_lexeme(text);
    out += '"';
}

void sexpr_block(const Block& b, std::string& out) {
    out += "(block";
    for (const auto& s : b.stmts) {
        out += ' ';
        sexpr_stmt(*s, out);
    }
    out += ')';
}

void sexpr_expr(const Expr& e, std::string& out) {
    std::visit(
        overloaded{
            [&](const NameExpr& n) { out += "(name " + n.id + ")"; },
            [&](const IntLit& n) { out += "(int " + n.text + ")"; },
            [&](const FloatLit& n) { out += "(float " + n.text + ")"; },
            [&](const StrLit& n) {
                out += "(str ";
                sexpr_quoted(n.text, out);
                out += ')';
            },
            [&](const BoolLit& n) { out += n.value ? "(true)" : "(false)"; },
            [&](const NoneLit&) { out += "(none)"; },
            [&](const UnaryExpr& n) {
                out += "(unary ";
                out += unary_op_text(n.op);
                out += ' ';
                sexpr_expr(*n.operand, out);
                out += ')';
            },
            [&](const IncSuffixExpr& n) {
                out += "(incsuffix ";
                sexpr_expr(*n.operand, out);
                out += ')';
            },
            [&](const BinaryExpr& n) {
                out += "(binary ";
                out += binary_op_text(n.op);
                out += ' ';
                sexpr_expr(*n.lhs, out);
                out += ' ';
                sexpr_expr(*n.rhs, out);
                out += ')';
            },
            [&](const CompareExpr& n) {
                out += "(compare ";
                out += compare_op_text(n.op);
                out += ' ';
                sexpr_expr(*n.lhs, out);
                out += ' ';
                sexpr_expr(*n.rhs, out);
                out += ')';
            },
            [&](const CallExpr& n) {
                out += "(call ";
                sexpr_expr(*n.callee, out);
                for (const auto& a : n.args) {
                    out += ' ';
                    sexpr_expr(*a, out);
                }
                out += ')';
            },
            [&](const AttributeExpr& n) {
                out += "(attr ";
                sexpr_expr(*n.object, out);
                out += ' ';
                out += n.name;
                out += ')';
            },
            [&](const SubscriptExpr& n) {
                out += "(subscript ";
                sexpr_expr(*n.object, out);
                out += ' ';
                sexpr_expr(*n.index, out);
                out += ')';
            },
            [&](const ListExpr& n) {
                out += "(list";
                for (const auto& item : n.items) {
                    out += ' ';
                    sexpr_expr(*item, out);
                }
                out += ')';
            },
            [&](const TupleExpr& n) {
                out += "(tuple";
                for (const auto& item : n.items) {
                    out += ' ';
                    sexpr_expr(*item, out);
                }
                out += ')';
            },
            [&](const DictExpr& n) {
                out += "(dict";
                for (const auto& [k, v] : n.items) {
                    out += " (pair ";
                    sexpr_expr(*k, out);
                    out += ' ';
                    sexpr_expr(*v, out);
                    out += ')';
                }
                out += ')';
            },
            [&](const ParenExpr& n) {
                out += "(paren ";
                sexpr_expr(*n.inner, out);
                out += ')';
            },
        },
        e.node);
}

void sexpr_stmt(const Stmt& s, std::string& out) {
    std::visit(
        overloaded{
            [&](const ExprStmt& n) {
                out += "(exprstmt ";
                sexpr_expr(*n.expr, out);
                out += ')';
            },
            [&](const AssignStmt& n) {
                out += "(assign ";
                out += assign_op_text(n.op);
                for (const auto& t : n.targets) {
                    out += ' ';
                    sexpr_expr(*t, out);
                }
                out += ' ';
                sexpr_expr(*n.value, out);
                out += ')';
            },
            [&](const IfStmt& n) {
                out += "(if ";
                sexpr_expr(*n.cond, out);
                out += ' ';
                sexpr_block(n.then_block, out);
                for (const auto& [cond, block] : n.elifs) {
                    out += " (elif ";
                    sexpr_expr(*cond, out);
                    out += ' ';
                    sexpr_block(block, out);
                    out += ')';
                }
                if (n.else_block) {
                    out += " (else ";
                    sexpr_block(*n.else_block, out);
                    out += ')';
                }
                out += ')';
            },
            [&](const WhileStmt& n) {
                out += "(while ";
                sexpr_expr(*n.cond, out);
                out += ' ';
                sexpr_block(n.body, out);
                out += ')';
            },
            [&](const ForStmt& n) {
                out += "(for ";
                sexpr_expr(*n.target, out);
                out += ' ';
                sexpr_expr(*n.iterable, out);
                out += ' ';
                sexpr_block(n.body, out);
                out += ')';
            },
            [&](const FuncDefStmt& n) {
                out += "(def " + n.name + " (params";
                for (const auto& p : n.params) {
                    out += ' ';
                    out += p;
                }
                out += ") ";
                sexpr_block(n.body, out);
                out += ')';
            },
            [&](const ReturnStmt& n) {
                out += "(return";
                if (n.value) {
                    out += ' ';
                    sexpr_expr(*n.value, out);
                }
                out += ')';
            },
            [&](const PassStmt&) { out += "(pass)"; },
            [&](const BreakStmt&) { out += "(break)"; },
            [&](const ContinueStmt&) { out += "(continue)"; },
            [&](const ImportStmt& n) {
                out += "(import";
                for (const auto& seg : n.path) {
                    out += ' ';
                    out += seg;
                }
                out += ')';
            },
        },
        s.node);
}

}  // namespace

const char* unary_op_text(UnaryOp op) {
    switch (op) {
        case UnaryOp::Neg: return "-";
        case UnaryOp::Pos: return "+";
        case UnaryOp::Not: return "not";
        case UnaryOp::IncPrefix: return "++";
    }
    return "?";
}

const char* binary_op_text(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::FloorDiv: return "//";
        case BinaryOp::Mod: return "%";
        case BinaryOp::Pow: return "**";
        case BinaryOp::And: return "and";
        case BinaryOp::Or: return "or";
    }
    return "?";
}

const char* compare_op_text(CompareOp op) {
    switch (op) {
        case CompareOp::Eq: return "==";
        case CompareOp::Ne: return "!=";
        case CompareOp::Lt: return "<";
        case CompareOp::Gt: return ">";
        case CompareOp::Le: return "<=";
        case CompareOp::Ge: return ">=";
    }
    return "?";
}

const char* assign_op_text(AssignOp op) {
    switch (op) {
        case AssignOp::Assign: return "=";
        case AssignOp::AddAssign: return "+=";
        case AssignOp::SubAssign: return "-=";
    }
    return "?";
}

std::string to_json_string(const Module& module, int indent) {
    json body = json::array();
    for (const auto& s : module.body) {
        body.push_back(stmt_json(*s));
    }
    json out{{"type", "Module"}, {"body", std::move(body)}, {"span", span_json(module.span)}};
    return out.dump(indent);
}

std::string to_sexpr(const Module& module) {
    std::string out = "(module";
    for (const auto& s : module.body) {
        out += ' ';
        sexpr_stmt(*s, out);
    }
    out += ')';
    return out;
}

std::string to_sexpr(const Expr& expr) {
    std::string out;
    sexpr_expr(expr, out);
    return out;
}

std::string to_sexpr(const Stmt& stmt) {
    std::string out;
    sexpr_stmt(stmt, out);
    return out;
}

bool ast_equal(const Module& a, const Module& b) {
    return to_sexpr(a) == to_sexpr(b);
}

}  // namespace wsbridge

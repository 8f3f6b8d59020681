#include "wsbridge/wellformed.hpp"

namespace wsbridge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void walk_expr(const Expr& e, std::vector<Diagnostic>& out);
void walk_stmt(const Stmt& s, std::vector<Diagnostic>& out);

void walk_block(const Block& b, std::vector<Diagnostic>& out) {
    for (const auto& s : b.stmts) {
        walk_stmt(*s, out);
    }
}

void walk_expr(const Expr& e, std::vector<Diagnostic>& out) {
    std::visit(
        overloaded{
            [&](const UnaryExpr& n) {
                if (n.op == UnaryOp::IncPrefix) {
                    out.push_back(Diagnostic{kDiagIncrementNotAllowed,
                                             "increment expression is not allowed", e.span});
                }
                walk_expr(*n.operand, out);
            },
            [&](const IncSuffixExpr& n) {
                out.push_back(Diagnostic{kDiagIncrementNotAllowed,
                                         "increment expression is not allowed", e.span});
                walk_expr(*n.operand, out);
            },
            [&](const BinaryExpr& n) {
                walk_expr(*n.lhs, out);
                walk_expr(*n.rhs, out);
            },
            [&](const CompareExpr& n) {
                walk_expr(*n.lhs, out);
                walk_expr(*n.rhs, out);
            },
            [&](const CallExpr& n) {
                walk_expr(*n.callee, out);
                for (const auto& a : n.args) {
                    walk_expr(*a, out);
                }
            },
            [&](const AttributeExpr& n) { walk_expr(*n.object, out); },
            [&](const SubscriptExpr& n) {
                walk_expr(*n.object, out);
                walk_expr(*n.index, out);
            },
            [&](const ListExpr& n) {
                for (const auto& item : n.items) {
                    walk_expr(*item, out);
                }
            },
            [&](const TupleExpr& n) {
                for (const auto& item : n.items) {
                    walk_expr(*item, out);
                }
            },
            [&](const DictExpr& n) {
                for (const auto& [k, v] : n.items) {
                    walk_expr(*k, out);
                    walk_expr(*v, out);
                }
            },
            [&](const ParenExpr& n) { walk_expr(*n.inner, out); },
            [&](const auto&) {},  // leaf atoms
        },
        e.node);
}

void walk_stmt(const Stmt& s, std::vector<Diagnostic>& out) {
    std::visit(
        overloaded{
            [&](const ExprStmt& n) { walk_expr(*n.expr, out); },
            [&](const AssignStmt& n) {
                for (const auto& t : n.targets) {
                    walk_expr(*t, out);
                }
                walk_expr(*n.value, out);
            },
            [&](const IfStmt& n) {
                walk_expr(*n.cond, out);
                walk_block(n.then_block, out);
                for (const auto& [cond, block] : n.elifs) {
                    walk_expr(*cond, out);
                    walk_block(block, out);
                }
                if (n.else_block) {
                    walk_block(*n.else_block, out);
                }
            },
            [&](const WhileStmt& n) {
                walk_expr(*n.cond, out);
                walk_block(n.body, out);
            },
            [&](const ForStmt& n) {
                walk_expr(*n.target, out);
                walk_expr(*n.iterable, out);
                walk_block(n.body, out);
            },
            [&](const FuncDefStmt& n) { walk_block(n.body, out); },
            [&](const ReturnStmt& n) {
                if (n.value) {
                    walk_expr(*n.value, out);
                }
            },
            [&](const auto&) {},  // pass/break/continue/import
        },
        s.node);
}

}  // namespace

std::vector<Diagnostic> check_wellformed(const Module& module) {
    std::vector<Diagnostic> out;
    for (const auto& s : module.body) {
        walk_stmt(*s, out);
    }
    return out;
}

}  // namespace wsbridge

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wsbridge/token.hpp"

namespace wsbridge {

struct Span {
    SourcePos start;
    SourcePos end;

    friend bool operator==(const Span&, const Span&) = default;
};

enum class UnaryOp { Neg, Pos, Not, IncPrefix };
enum class BinaryOp { Add, Sub, Mul, Div, FloorDiv, Mod, Pow, And, Or };
enum class CompareOp { Eq, Ne, Lt, Gt, Le, Ge };
enum class AssignOp { Assign, AddAssign, SubAssign };

const char* unary_op_text(UnaryOp op);
const char* binary_op_text(BinaryOp op);
const char* compare_op_text(CompareOp op);
const char* assign_op_text(AssignOp op);

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

struct NameExpr {
    std::string id;
};
struct IntLit {
    std::string text;  // literal spelling, kept verbatim
};
struct FloatLit {
    std::string text;
};
struct StrLit {
    std::string text;  // raw lexeme including quotes and escapes
};
struct BoolLit {
    bool value = false;
};
struct NoneLit {};
struct UnaryExpr {
    UnaryOp op;
    ExprPtr operand;
};
struct IncSuffixExpr {
    ExprPtr operand;
};
struct BinaryExpr {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct CompareExpr {
    CompareOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct CallExpr {
    ExprPtr callee;
    std::vector<ExprPtr> args;
};
struct AttributeExpr {
    ExprPtr object;
    std::string name;
};
struct SubscriptExpr {
    ExprPtr object;
    ExprPtr index;
};
struct ListExpr {
    std::vector<ExprPtr> items;
};
struct TupleExpr {
    std::vector<ExprPtr> items;
};
struct DictExpr {
    std::vector<std::pair<ExprPtr, ExprPtr>> items;
};
struct ParenExpr {
    ExprPtr inner;
};

struct Expr {
    Span span;
    std::variant<NameExpr, IntLit, FloatLit, StrLit, BoolLit, NoneLit, UnaryExpr, IncSuffixExpr,
                 BinaryExpr, CompareExpr, CallExpr, AttributeExpr, SubscriptExpr, ListExpr,
                 TupleExpr, DictExpr, ParenExpr>
        node;
};

// Nonempty by construction: the grammar's block body is Statement+.
struct Block {
    Span span;
    std::vector<StmtPtr> stmts;
};

struct ExprStmt {
    ExprPtr expr;
};
struct AssignStmt {
    AssignOp op;
    std::vector<ExprPtr> targets;  // chained for plain '='; single for augmented ops
    ExprPtr value;
};
struct IfStmt {
    ExprPtr cond;
    Block then_block;
    std::vector<std::pair<ExprPtr, Block>> elifs;
    std::optional<Block> else_block;
};
struct WhileStmt {
    ExprPtr cond;
    Block body;
};
struct ForStmt {
    ExprPtr target;
    ExprPtr iterable;
    Block body;
};
struct FuncDefStmt {
    std::string name;
    std::vector<std::string> params;
    Block body;
};
struct ReturnStmt {
    ExprPtr value;  // may be null
};
struct PassStmt {};
struct BreakStmt {};
struct ContinueStmt {};
struct ImportStmt {
    std::vector<std::string> path;  // dotted name segments
};

struct Stmt {
    Span span;
    std::variant<ExprStmt, AssignStmt, IfStmt, WhileStmt, ForStmt, FuncDefStmt, ReturnStmt,
                 PassStmt, BreakStmt, ContinueStmt, ImportStmt>
        node;
};

struct Module {
    Span span;
    std::vector<StmtPtr> body;
};

// JSON form: node type tag, fields, span. Stable for golden tests.
std::string to_json_string(const Module& module, int indent = 2);

// Compact span-free s-expression form.
std::string to_sexpr(const Module& module);
std::string to_sexpr(const Expr& expr);
std::string to_sexpr(const Stmt& stmt);

// Structural equality, ignoring spans.
bool ast_equal(const Module& a, const Module& b);

}  // namespace wsbridge

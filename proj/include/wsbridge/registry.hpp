#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wsbridge/ast.hpp"
#include "wsbridge/errors.hpp"
#include "wsbridge/token.hpp"

namespace wsbridge {

class Parser;

// Pratt-table and statement-table registrations contributed by grammar
// components. Registries are immutable after composition and shareable.
using PrefixRule = std::function<ExprPtr(Parser&, const Token&)>;
using InfixRule = std::function<ExprPtr(Parser&, ExprPtr, const Token&)>;

struct InfixEntry {
    int binding_power = 0;
    bool right_assoc = false;
    InfixRule rule;
};

struct StatementEntry {
    std::string name;
    std::function<bool(TokenKind)> matches;  // leading-token predicate
    std::function<StmtPtr(Parser&)> parse;
};

// The StartBlock/EndBlock/EndStmt extension points, bound by the composing
// language to concrete control-token kinds.
struct ControlBindings {
    TokenKind start_block = TokenKind::BlockStart;
    TokenKind end_block = TokenKind::BlockEnd;
    TokenKind end_stmt = TokenKind::StmtEnd;
};

class ComponentRegistry {
  public:
    // Each throws CompositionConflict when two components claim the same
    // leading token or the same rule slot.
    void add_statement(StatementEntry entry);
    void add_prefix(TokenKind kind, PrefixRule rule);
    void add_infix(TokenKind kind, InfixEntry entry);
    void bind_controls(ControlBindings bindings) { controls_ = bindings; }

    const StatementEntry* statement_for(TokenKind kind) const;
    const PrefixRule* prefix_for(TokenKind kind) const;
    const InfixEntry* infix_for(TokenKind kind) const;
    const ControlBindings& controls() const { return controls_; }
    const std::vector<StatementEntry>& statements() const { return statement_entries_; }

  private:
    std::vector<StatementEntry> statement_entries_;
    std::map<TokenKind, PrefixRule> prefix_rules_;
    std::map<TokenKind, InfixEntry> infix_rules_;
    ControlBindings controls_;
};

// The reusable components. Every expression-side component is
// whitespace-insensitive; the statement components reach block and statement
// boundaries only through the control bindings.
void install_basics(ComponentRegistry& reg);              // identifiers
void install_common_literals(ComponentRegistry& reg);     // int/float/string/bool/none
void install_common_expressions(ComponentRegistry& reg);  // C-style operators incl. ++
void install_basic_statements(ComponentRegistry& reg);    // if/while/return/pass/break/continue
void install_py_statements(ComponentRegistry& reg);       // for/def/import

// The Mini-Python composition: all components above, with StartBlock bound
// to BLOCK_START, EndBlock to BLOCK_END and EndStmt to STMT_END.
ComponentRegistry build_minipython_registry();

}  // namespace wsbridge

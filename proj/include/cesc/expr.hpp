#pragma once

#include <memory>
#include <string>

#include "cesc/symbols.hpp"

namespace cesc {

enum class ExprOp { CONST, SYM, NOT, AND, OR };

// Immutable boolean expression over event/proposition symbols. Nodes are
// shared and never mutated, so Expr values are cheap to copy and safe to
// share across threads.
class Expr {
 public:
  Expr() : Expr(constant(false)) {}

  static Expr constant(bool v);
  static Expr symbol(SymbolId id);
  static Expr negation(const Expr& e);
  static Expr conjunction(const Expr& a, const Expr& b);
  static Expr disjunction(const Expr& a, const Expr& b);

  ExprOp op() const { return node_->op; }
  bool const_value() const { return node_->value; }
  SymbolId symbol_id() const { return node_->sym; }
  const Expr& left() const { return node_->left; }
  const Expr& right() const { return node_->right; }

  bool eval(const Valuation& v) const;
  SymbolMask support() const { return node_->support; }

  // Syntactic (structural) equality; no canonicalization.
  bool equals(const Expr& other) const;
  bool operator==(const Expr& other) const { return equals(other); }

  // Concrete syntax: `!` > `&` > `|`, parentheses as needed. Without a
  // table, symbols print as `@<id>`.
  std::string str(const SymbolTable* symtab = nullptr) const;

 private:
  struct Node {
    ExprOp op;
    bool value = false;
    SymbolId sym = 0;
    Expr left;
    Expr right;
    SymbolMask support = 0;

    Node(ExprOp o) : op(o) {}
    Node(ExprOp o, Expr l, Expr r) : op(o), left(std::move(l)), right(std::move(r)) {}
  };

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  void print(std::string& out, int parent_prec, const SymbolTable* symtab) const;

  std::shared_ptr<const Node> node_;
};

// True iff some valuation over `universe` satisfies `e`. Enumerates all
// 2^|universe| assignments, so |universe| is capped (default 16).
inline constexpr int kDefaultUniverseCap = 16;
bool satisfiable(const Expr& e, SymbolMask universe,
                 int cap = kDefaultUniverseCap);

// Parses the expression concrete syntax against a symbol table. Exposed for
// tools and tests; the chart DSL parser uses the same grammar inline.
Expr parse_expr(const std::string& text, const SymbolTable& symtab);

}  // namespace cesc

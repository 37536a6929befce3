#include "cesc/expr.hpp"

#include <bit>
#include <cctype>

namespace cesc {

Expr Expr::constant(bool v) {
  auto n = std::make_shared<Node>(ExprOp::CONST);
  n->value = v;
  return Expr(std::move(n));
}

Expr Expr::symbol(SymbolId id) {
  auto n = std::make_shared<Node>(ExprOp::SYM);
  n->sym = id;
  n->support = SymbolMask{1} << id;
  return Expr(std::move(n));
}

Expr Expr::negation(const Expr& e) {
  auto n = std::make_shared<Node>(ExprOp::NOT, e, Expr());
  n->support = e.support();
  return Expr(std::move(n));
}

Expr Expr::conjunction(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Node>(ExprOp::AND, a, b);
  n->support = a.support() | b.support();
  return Expr(std::move(n));
}

Expr Expr::disjunction(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Node>(ExprOp::OR, a, b);
  n->support = a.support() | b.support();
  return Expr(std::move(n));
}

bool Expr::eval(const Valuation& v) const {
  switch (node_->op) {
    case ExprOp::CONST: return node_->value;
    case ExprOp::SYM: return v.value(node_->sym);
    case ExprOp::NOT: return !node_->left.eval(v);
    case ExprOp::AND: return node_->left.eval(v) && node_->right.eval(v);
    case ExprOp::OR: return node_->left.eval(v) || node_->right.eval(v);
  }
  return false;
}

bool Expr::equals(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (node_->op != other.node_->op) return false;
  switch (node_->op) {
    case ExprOp::CONST: return node_->value == other.node_->value;
    case ExprOp::SYM: return node_->sym == other.node_->sym;
    case ExprOp::NOT: return node_->left.equals(other.node_->left);
    case ExprOp::AND:
    case ExprOp::OR:
      return node_->left.equals(other.node_->left) &&
             node_->right.equals(other.node_->right);
  }
  return false;
}

namespace {
int prec(ExprOp op) {
  switch (op) {
    case ExprOp::OR: return 1;
    case ExprOp::AND: return 2;
    case ExprOp::NOT: return 3;
    default: return 4;
  }
}
}  // namespace

void Expr::print(std::string& out, int parent_prec,
                 const SymbolTable* symtab) const {
  int p = prec(node_->op);
  bool parens = p < parent_prec;
  if (parens) out += '(';
  switch (node_->op) {
    case ExprOp::CONST: out += node_->value ? "true" : "false"; break;
    case ExprOp::SYM:
      if (symtab)
        out += symtab->symbol(node_->sym).name;
      else
        out += "@" + std::to_string(node_->sym);
      break;
    case ExprOp::NOT:
      out += '!';
      node_->left.print(out, p + 1, symtab);
      break;
    case ExprOp::AND:
      node_->left.print(out, p, symtab);
      out += " & ";
      node_->right.print(out, p + 1, symtab);
      break;
    case ExprOp::OR:
      node_->left.print(out, p, symtab);
      out += " | ";
      node_->right.print(out, p + 1, symtab);
      break;
  }
  if (parens) out += ')';
}

std::string Expr::str(const SymbolTable* symtab) const {
  std::string out;
  print(out, 0, symtab);
  return out;
}

bool satisfiable(const Expr& e, SymbolMask universe, int cap) {
  int k = std::popcount(universe);
  if (cap >= 0 && k > cap)
    throw Error(Code::E_UNIVERSE_TOO_LARGE,
                "satisfiability universe has " + std::to_string(k) +
                    " symbols, cap is " + std::to_string(cap));
  if ((e.support() & ~universe) != 0)
    throw Error(Code::E_UNDECLARED_SYMBOL,
                "expression support not contained in the given universe");

  // Positions of universe bits, so assignment m maps onto the right symbols.
  SymbolId pos[64];
  int count = 0;
  for (SymbolId i = 0; i < 64; ++i)
    if (universe & (SymbolMask{1} << i)) pos[count++] = i;

  Valuation v;
  v.domain = universe;
  for (uint64_t m = 0; m < (uint64_t{1} << count); ++m) {
    SymbolMask bits = 0;
    for (int i = 0; i < count; ++i)
      if (m & (uint64_t{1} << i)) bits |= SymbolMask{1} << pos[i];
    v.bits = bits;
    if (e.eval(v)) return true;
  }
  return false;
}

namespace {

// Minimal recursive-descent parser for the guard syntax.
struct ExprParser {
  const std::string& text;
  const SymbolTable& symtab;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Code::E_PARSE, msg + " at offset " + std::to_string(pos) +
                                   " in expression '" + text + "'");
  }

  Expr parse_or() {
    Expr e = parse_and();
    while (eat('|')) e = Expr::disjunction(e, parse_and());
    return e;
  }

  Expr parse_and() {
    Expr e = parse_not();
    while (eat('&')) e = Expr::conjunction(e, parse_not());
    return e;
  }

  Expr parse_not() {
    if (eat('!')) return Expr::negation(parse_not());
    return parse_atom();
  }

  Expr parse_atom() {
    skip_ws();
    if (eat('(')) {
      Expr e = parse_or();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected symbol, 'true', 'false', '!' or '('");
    std::string name = text.substr(start, pos - start);
    if (name == "true") return Expr::constant(true);
    if (name == "false") return Expr::constant(false);
    auto id = symtab.find_symbol(name);
    if (!id)
      throw Error(Code::E_UNDECLARED_SYMBOL,
                  "undeclared symbol '" + name + "' in expression");
    return Expr::symbol(*id);
  }
};

}  // namespace

Expr parse_expr(const std::string& text, const SymbolTable& symtab) {
  ExprParser p{text, symtab};
  Expr e = p.parse_or();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

}  // namespace cesc

#pragma once

// A small expression language for series terms and integrands.
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := unary ("^" factor)?
//   unary  := "-" unary | atom
//   atom   := number | ident | ident "(" expr ("," expr)* ")" | "(" expr ")"
//
// "^" is right associative and binds tighter than a leading minus, so -t^2
// is -(t^2). The index variable is `n` for series and `t` for integrals; any
// other identifier outside the builtin function set is a named parameter.
// `pi` and `e` are predefined parameters.

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "accel/jet.hpp"
#include "accel/realkit.hpp"

namespace accel {

enum class ExprContext { Series, Integral };

using Bindings = std::map<std::string, double, std::less<>>;

struct ExprNode {
  enum class Kind { Literal, Variable, Parameter, Negate, Add, Sub, Mul, Div, Pow, Call };

  Kind kind = Kind::Literal;
  double value = 0.0;  // Literal
  std::string name;    // Parameter or Call
  std::vector<std::unique_ptr<const ExprNode>> args;
  std::size_t id = 0;  // dense pre-order index, used for evaluation caches
};

class ExprAst {
 public:
  ExprAst(std::shared_ptr<const ExprNode> root, ExprContext context, std::size_t node_count);

  const ExprNode& root() const { return *root_; }
  ExprContext context() const { return context_; }
  std::size_t node_count() const { return node_count_; }
  /// Named parameters referenced by the expression, excluding predefined constants.
  const std::set<std::string, std::less<>>& parameters() const { return parameters_; }
  bool uses_variable() const { return uses_variable_; }

 private:
  std::shared_ptr<const ExprNode> root_;
  ExprContext context_;
  std::size_t node_count_;
  std::set<std::string, std::less<>> parameters_;
  bool uses_variable_ = false;
};

ExprAst parse_expr(std::string_view text, ExprContext context);

/// Fully parenthesized source text that parses back to the same tree.
std::string print_expr(const ExprAst& ast);

/// Holds per-evaluation caches (currently the Legendre recurrence state per
/// call site). Not thread safe; use one session per thread.
class EvalSession {
 public:
  explicit EvalSession(const ExprAst& ast);
  ~EvalSession();
  EvalSession(EvalSession&&) noexcept;
  EvalSession& operator=(EvalSession&&) noexcept;

  double eval(const Bindings& bindings, double point);
  Jet eval_jet(const Bindings& bindings, double t0, std::size_t order);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

double eval_expr(const ExprAst& ast, const Bindings& bindings, double point);

/// Truncated Taylor expansion of the expression about t0. order <= 8.
Jet eval_jet(const ExprAst& ast, double t0, std::size_t order, const Bindings& bindings);

/// Series terms f(n) = expr(n) backed by a private EvalSession, so a
/// legendre(n, x) call advances its recurrence by one step per term.
TermSequence make_term_sequence(const ExprAst& ast, Bindings bindings);

/// Evaluates an expression that must not reference the index variable.
double eval_constant(std::string_view text, const Bindings& bindings = {});

}  // namespace accel

#include "accel/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

#include "accel/error.hpp"
#include "accel/special_functions.hpp"

namespace accel {

namespace {

using Kind = ExprNode::Kind;
using NodePtr = std::unique_ptr<ExprNode>;

struct Builtin {
  std::string_view name;
  std::size_t arity;
};

constexpr Builtin kBuiltins[] = {
    {"sin", 1},      {"cos", 1},      {"exp", 1},      {"log", 1},        {"sqrt", 1},
    {"abs", 1},      {"besselj0", 1}, {"besselj1", 1}, {"legendre", 2},
};

const Builtin* find_builtin(std::string_view name) {
  for (const auto& b : kBuiltins) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::string_view variable_name(ExprContext c) { return c == ExprContext::Series ? "n" : "t"; }
std::string_view other_variable_name(ExprContext c) { return c == ExprContext::Series ? "t" : "n"; }

constexpr std::string_view kOperandExpected = "number, identifier, '(' or '-'";

class Parser {
 public:
  Parser(std::string_view text, ExprContext context) : text_(text), context_(context) {}

  NodePtr parse() {
    skip_space();
    if (pos_ >= text_.size()) error(kOperandExpected, "empty expression");
    NodePtr root = parse_sum();
    skip_space();
    if (pos_ < text_.size()) error("operator or end of input", "unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void error(std::string_view expected, std::string_view what) const {
    throw ParseError(pos_, std::string(expected),
                     std::string(what) + " at offset " + std::to_string(pos_) + " (expected " +
                         std::string(expected) + ")");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr make(Kind kind) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    return n;
  }

  static NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs) {
    NodePtr n = make(kind);
    n->args.push_back(std::move(lhs));
    n->args.push_back(std::move(rhs));
    return n;
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Kind::Add, std::move(lhs), parse_product());
      } else if (accept('-')) {
        lhs = binary(Kind::Sub, std::move(lhs), parse_product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        lhs = binary(Kind::Mul, std::move(lhs), parse_factor());
      } else if (accept('/')) {
        lhs = binary(Kind::Div, std::move(lhs), parse_factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    if (accept('-')) {
      NodePtr n = make(Kind::Negate);
      n->args.push_back(parse_factor());
      return n;
    }
    NodePtr base = parse_atom();
    if (accept('^')) return binary(Kind::Pow, std::move(base), parse_factor());
    return base;
  }

  NodePtr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) error(kOperandExpected, "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (accept('(')) {
      NodePtr inner = parse_sum();
      if (!accept(')')) error("')'", "unbalanced parenthesis");
      return inner;
    }
    error(kOperandExpected, "unexpected character");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t count = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++count;
      }
      return count;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      error("digit", "malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;  // not an exponent; leave 'e' for the caller
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_ || !std::isfinite(v)) {
      pos_ = start;
      error("representable number", "number out of range");
    }
    NodePtr n = make(Kind::Literal);
    n->value = v;
    return n;
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      const Builtin* b = find_builtin(name);
      if (b == nullptr) {
        pos_ = start;
        error("function name", "unknown function '" + name + "'");
      }
      ++pos_;
      NodePtr call = make(Kind::Call);
      call->name = name;
      call->args.push_back(parse_sum());
      while (accept(',')) call->args.push_back(parse_sum());
      if (!accept(')')) error("',' or ')'", "unterminated argument list");
      if (call->args.size() != b->arity) {
        pos_ = start;
        error("call with " + std::to_string(b->arity) + " argument(s)", "wrong number of arguments to '" + name + "'");
      }
      return call;
    }
    if (find_builtin(name) != nullptr) error("'('", "function '" + name + "' used without arguments");
    if (name == other_variable_name(context_)) {
      throw Error(ErrorKind::ContextError,
                  "variable '" + name + "' at offset " + std::to_string(start) + " is not valid in " +
                      (context_ == ExprContext::Series ? "series" : "integral") + " context; use '" +
                      std::string(variable_name(context_)) + "'");
    }
    if (name == variable_name(context_)) return make(Kind::Variable);
    NodePtr p = make(Kind::Parameter);
    p->name = name;
    return p;
  }

  std::string_view text_;
  ExprContext context_;
  std::size_t pos_ = 0;
};

std::size_t number_nodes(ExprNode& n, std::size_t next) {
  n.id = next++;
  for (auto& a : n.args) next = number_nodes(const_cast<ExprNode&>(*a), next);
  return next;
}

void collect(const ExprNode& n, std::set<std::string, std::less<>>& params, bool& uses_var) {
  if (n.kind == Kind::Parameter && n.name != "pi" && n.name != "e") params.insert(n.name);
  if (n.kind == Kind::Variable) uses_var = true;
  for (const auto& a : n.args) collect(*a, params, uses_var);
}

void print_node(const ExprNode& n, ExprContext ctx, std::string& out) {
  switch (n.kind) {
    case Kind::Literal: {
      char buf[512];
      const auto res = std::to_chars(buf, buf + sizeof buf, n.value, std::chars_format::fixed);
      out.append(buf, res.ptr);
      return;
    }
    case Kind::Variable: out += variable_name(ctx); return;
    case Kind::Parameter: out += n.name; return;
    case Kind::Negate:
      out += "(-";
      print_node(*n.args[0], ctx, out);
      out += ')';
      return;
    case Kind::Call:
      out += n.name;
      out += '(';
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i > 0) out += ", ";
        print_node(*n.args[i], ctx, out);
      }
      out += ')';
      return;
    default: break;
  }
  const char op = n.kind == Kind::Add ? '+' : n.kind == Kind::Sub ? '-' : n.kind == Kind::Mul ? '*'
                : n.kind == Kind::Div ? '/' : '^';
  out += '(';
  print_node(*n.args[0], ctx, out);
  out += ' ';
  out += op;
  out += ' ';
  print_node(*n.args[1], ctx, out);
  out += ')';
}

double lookup(const Bindings& b, const std::string& name) {
  if (auto it = b.find(name); it != b.end()) return it->second;
  if (name == "pi") return std::numbers::pi;
  if (name == "e") return std::numbers::e;
  fail(ErrorKind::UnboundParameter, "parameter '" + name + "' is not bound");
}

std::size_t legendre_degree(double k) {
  const double r = std::nearbyint(k);
  if (!(std::abs(k - r) <= 1e-9) || r < 0.0) {
    fail(ErrorKind::DomainError, "legendre: degree must be a non-negative integer, got " + std::to_string(k));
  }
  return static_cast<std::size_t>(r);
}

double checked_pow(double a, double b) {
  if (a < 0.0 && std::nearbyint(b) != b) fail(ErrorKind::DomainError, "non-integer power of negative value");
  if (a == 0.0 && b < 0.0) fail(ErrorKind::DomainError, "negative power of zero");
  return std::pow(a, b);
}

}  // namespace

ExprAst::ExprAst(std::shared_ptr<const ExprNode> root, ExprContext context, std::size_t node_count)
    : root_(std::move(root)), context_(context), node_count_(node_count) {
  collect(*root_, parameters_, uses_variable_);
}

ExprAst parse_expr(std::string_view text, ExprContext context) {
  Parser parser(text, context);
  NodePtr root = parser.parse();
  const std::size_t count = number_nodes(*root, 0);
  return ExprAst(std::shared_ptr<const ExprNode>(std::move(root)), context, count);
}

std::string print_expr(const ExprAst& ast) {
  std::string out;
  print_node(ast.root(), ast.context(), out);
  return out;
}

// ---------------------------------------------------------------------------

struct EvalSession::Impl {
  ExprAst ast;
  std::vector<std::optional<LegendreWalker>> legendre;

  explicit Impl(const ExprAst& a) : ast(a), legendre(a.node_count()) {}

  double legendre_cached(std::size_t id, std::size_t k, double x) {
    auto& slot = legendre[id];
    // Bitwise comparison: the cache is only reused for the identical argument.
    if (!slot || !(slot->x() == x) || std::signbit(slot->x()) != std::signbit(x)) slot.emplace(x);
    return slot->at(k);
  }

  double eval(const ExprNode& n, const Bindings& b, double point) {
    switch (n.kind) {
      case Kind::Literal: return n.value;
      case Kind::Variable: return point;
      case Kind::Parameter: return lookup(b, n.name);
      case Kind::Negate: return -eval(*n.args[0], b, point);
      case Kind::Add: return eval(*n.args[0], b, point) + eval(*n.args[1], b, point);
      case Kind::Sub: return eval(*n.args[0], b, point) - eval(*n.args[1], b, point);
      case Kind::Mul: return eval(*n.args[0], b, point) * eval(*n.args[1], b, point);
      case Kind::Div: {
        const double num = eval(*n.args[0], b, point);
        const double den = eval(*n.args[1], b, point);
        if (den == 0.0) fail(ErrorKind::DomainError, "division by zero");
        return num / den;
      }
      case Kind::Pow: return checked_pow(eval(*n.args[0], b, point), eval(*n.args[1], b, point));
      case Kind::Call: return call(n, b, point);
    }
    return 0.0;
  }

  double call(const ExprNode& n, const Bindings& b, double point) {
    if (n.name == "legendre") {
      const std::size_t k = legendre_degree(eval(*n.args[0], b, point));
      return legendre_cached(n.id, k, eval(*n.args[1], b, point));
    }
    const double x = eval(*n.args[0], b, point);
    if (n.name == "sin") return std::sin(x);
    if (n.name == "cos") return std::cos(x);
    if (n.name == "exp") return std::exp(x);
    if (n.name == "abs") return std::abs(x);
    if (n.name == "log") {
      if (!(x > 0.0)) fail(ErrorKind::DomainError, "log of non-positive value");
      return std::log(x);
    }
    if (n.name == "sqrt") {
      if (x < 0.0) fail(ErrorKind::DomainError, "sqrt of negative value");
      return std::sqrt(x);
    }
    if (x < 0.0) fail(ErrorKind::DomainError, n.name + " of negative argument");
    return bessel_j(n.name == "besselj0" ? 0 : 1, x);
  }

  Jet jet(const ExprNode& n, const Bindings& b, double t0, std::size_t p) {
    switch (n.kind) {
      case Kind::Literal: return Jet::constant(t0, p, n.value);
      case Kind::Variable: return Jet::variable(t0, p);
      case Kind::Parameter: return Jet::constant(t0, p, lookup(b, n.name));
      case Kind::Negate: return -jet(*n.args[0], b, t0, p);
      case Kind::Add: return jet(*n.args[0], b, t0, p) + jet(*n.args[1], b, t0, p);
      case Kind::Sub: return jet(*n.args[0], b, t0, p) - jet(*n.args[1], b, t0, p);
      case Kind::Mul: return jet(*n.args[0], b, t0, p) * jet(*n.args[1], b, t0, p);
      case Kind::Div: return jet(*n.args[0], b, t0, p) / jet(*n.args[1], b, t0, p);
      case Kind::Pow: {
        const Jet base = jet(*n.args[0], b, t0, p);
        const Jet expo = jet(*n.args[1], b, t0, p);
        checked_pow(base.value(), expo.value());
        return pow(base, expo);
      }
      case Kind::Call: break;
    }
    if (n.name == "legendre") {
      const Jet k = jet(*n.args[0], b, t0, p);
      for (std::size_t i = 1; i <= p; ++i) {
        if (k[i] != 0.0) fail(ErrorKind::DomainError, "legendre: degree must not depend on the variable");
      }
      return legendre_p(legendre_degree(k.value()), jet(*n.args[1], b, t0, p));
    }
    const Jet x = jet(*n.args[0], b, t0, p);
    if (n.name == "sin") return sin(x);
    if (n.name == "cos") return cos(x);
    if (n.name == "exp") return exp(x);
    if (n.name == "log") return log(x);
    if (n.name == "sqrt") return sqrt(x);
    if (n.name == "abs") return abs(x);
    if (x.value() < 0.0) fail(ErrorKind::DomainError, n.name + " of negative argument");
    return bessel_j(n.name == "besselj0" ? 0 : 1, x);
  }
};

EvalSession::EvalSession(const ExprAst& ast) : impl_(std::make_unique<Impl>(ast)) {}
EvalSession::~EvalSession() = default;
EvalSession::EvalSession(EvalSession&&) noexcept = default;
EvalSession& EvalSession::operator=(EvalSession&&) noexcept = default;

double EvalSession::eval(const Bindings& bindings, double point) {
  return impl_->eval(impl_->ast.root(), bindings, point);
}

Jet EvalSession::eval_jet(const Bindings& bindings, double t0, std::size_t order) {
  if (order > kMaxJetOrder) {
    fail(ErrorKind::InvalidParams, "eval_jet: order " + std::to_string(order) + " exceeds " +
                                       std::to_string(kMaxJetOrder));
  }
  return impl_->jet(impl_->ast.root(), bindings, t0, order);
}

double eval_expr(const ExprAst& ast, const Bindings& bindings, double point) {
  EvalSession session(ast);
  return session.eval(bindings, point);
}

Jet eval_jet(const ExprAst& ast, double t0, std::size_t order, const Bindings& bindings) {
  EvalSession session(ast);
  return session.eval_jet(bindings, t0, order);
}

TermSequence make_term_sequence(const ExprAst& ast, Bindings bindings) {
  for (const auto& name : ast.parameters()) lookup(bindings, name);
  auto session = std::make_shared<EvalSession>(ast);
  return [session, bindings = std::move(bindings)](std::size_t n) {
    return session->eval(bindings, static_cast<double>(n));
  };
}

double eval_constant(std::string_view text, const Bindings& bindings) {
  const ExprAst ast = parse_expr(text, ExprContext::Series);
  if (ast.uses_variable()) fail(ErrorKind::ContextError, "constant expression must not use 'n'");
  return eval_expr(ast, bindings, 0.0);
}

}  // namespace accel

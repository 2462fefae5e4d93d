#include "riccheck/cli/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

#include "riccheck/errors.hpp"

namespace riccheck::cli {

using geom::Jet;
using geom::JetVec;

namespace {

enum class Fn { exp, log, sqrt, recip, sin, cos, sinh, cosh, tanh };

bool lookup_fn(const std::string& name, Fn& out) {
  if (name == "exp") out = Fn::exp;
  else if (name == "log") out = Fn::log;
  else if (name == "sqrt") out = Fn::sqrt;
  else if (name == "recip") out = Fn::recip;
  else if (name == "sin") out = Fn::sin;
  else if (name == "cos") out = Fn::cos;
  else if (name == "sinh") out = Fn::sinh;
  else if (name == "cosh") out = Fn::cosh;
  else if (name == "tanh") out = Fn::tanh;
  else return false;
  return true;
}

Jet apply_fn(Fn f, const Jet& a) {
  using namespace geom;
  switch (f) {
    case Fn::exp: return exp(a);
    case Fn::log: return log(a);
    case Fn::sqrt: return sqrt(a);
    case Fn::recip: return recip(a);
    case Fn::sin: return sin(a);
    case Fn::cos: return cos(a);
    case Fn::sinh: return sinh(a);
    case Fn::cosh: return cosh(a);
    case Fn::tanh: return tanh(a);
  }
  throw precondition_error("unhandled function");
}

}  // namespace

struct Expr::Node {
  enum class Kind { number, variable, add, sub, mul, div, neg, pow, call };

  Kind kind;
  double number = 0.0;   // number, and the folded exponent for pow
  int variable = -1;
  Fn fn = Fn::exp;
  std::unique_ptr<Node> a, b;

  bool has_variable() const {
    if (kind == Kind::variable) return true;
    if (a && a->has_variable()) return true;
    if (b && b->has_variable()) return true;
    return false;
  }

  double fold() const {
    switch (kind) {
      case Kind::number: return number;
      case Kind::add: return a->fold() + b->fold();
      case Kind::sub: return a->fold() - b->fold();
      case Kind::mul: return a->fold() * b->fold();
      case Kind::div: return a->fold() / b->fold();
      case Kind::neg: return -a->fold();
      case Kind::pow: return std::pow(a->fold(), number);
      case Kind::call: {
        double v = a->fold();
        switch (fn) {
          case Fn::exp: return std::exp(v);
          case Fn::log: return std::log(v);
          case Fn::sqrt: return std::sqrt(v);
          case Fn::recip: return 1.0 / v;
          case Fn::sin: return std::sin(v);
          case Fn::cos: return std::cos(v);
          case Fn::sinh: return std::sinh(v);
          case Fn::cosh: return std::cosh(v);
          case Fn::tanh: return std::tanh(v);
        }
        break;
      }
      case Kind::variable: break;
    }
    throw precondition_error("expression is not constant");
  }

  Jet eval(const JetVec& xs) const {
    switch (kind) {
      case Kind::number:
        return Jet::constant(xs[0].dim(), xs[0].order(), number);
      case Kind::variable:
        return xs[static_cast<std::size_t>(variable)];
      case Kind::add: return a->eval(xs) + b->eval(xs);
      case Kind::sub: return a->eval(xs) - b->eval(xs);
      case Kind::mul: return a->eval(xs) * b->eval(xs);
      case Kind::div: return a->eval(xs) / b->eval(xs);
      case Kind::neg: return -a->eval(xs);
      case Kind::pow: {
        Jet base = a->eval(xs);
        double e = number;
        if (e == std::floor(e) && std::abs(e) < 64.0) return pow(base, static_cast<int>(e));
        return pow(base, e);
      }
      case Kind::call: return apply_fn(fn, a->eval(xs));
    }
    throw precondition_error("unhandled expression node");
  }
};

namespace {

using Node = Expr::Node;
using NodePtr = std::unique_ptr<Node>;

struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw usage_error("expression error at position " + std::to_string(pos) + ": " + msg +
                      " in \"" + text + "\"");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (accept('+')) lhs = make(Node::Kind::add, std::move(lhs), parse_term());
      else if (accept('-')) lhs = make(Node::Kind::sub, std::move(lhs), parse_term());
      else return lhs;
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_power();
    for (;;) {
      if (accept('*')) lhs = make(Node::Kind::mul, std::move(lhs), parse_power());
      else if (accept('/')) lhs = make(Node::Kind::div, std::move(lhs), parse_power());
      else return lhs;
    }
  }

  NodePtr parse_power() {
    NodePtr base = parse_unary();
    if (!accept('^')) return base;
    NodePtr expo = parse_power();  // right associative
    if (expo->has_variable()) fail("exponent must be a constant");
    auto n = make(Node::Kind::pow, std::move(base));
    n->number = expo->fold();
    return n;
  }

  NodePtr parse_unary() {
    if (accept('-')) return make(Node::Kind::neg, parse_unary());
    accept('+');
    return parse_primary();
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      NodePtr inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    double v = 0.0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{}) fail("bad number");
    pos = static_cast<std::size_t>(res.ptr - text.data());
    auto n = make(Node::Kind::number);
    n->number = v;
    return n;
  }

  NodePtr parse_ident() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name = text.substr(start, pos - start);
    if (accept('(')) {
      Fn f;
      if (!lookup_fn(name, f)) {
        pos = start;
        fail("unknown function '" + name + "'");
      }
      NodePtr arg = parse_expr();
      if (!accept(')')) fail("expected ')' after function argument");
      auto n = make(Node::Kind::call, std::move(arg));
      n->fn = f;
      return n;
    }
    if (name == "pi") {
      auto n = make(Node::Kind::number);
      n->number = 3.14159265358979323846;
      return n;
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) {
        auto n = make(Node::Kind::variable);
        n->variable = static_cast<int>(i);
        return n;
      }
    }
    pos = start;
    fail("unknown variable '" + name + "'");
  }
};

}  // namespace

Expr Expr::parse(const std::string& text, const std::vector<std::string>& vars) {
  Parser p{text, vars};
  NodePtr root = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  Expr e;
  e.root_ = std::shared_ptr<const Node>(root.release());
  e.nvars_ = static_cast<int>(vars.size());
  e.text_ = text;
  return e;
}

Jet Expr::eval(const JetVec& xs) const {
  if (!root_) throw precondition_error("evaluating an empty expression");
  if (static_cast<int>(xs.size()) != nvars_ || xs.empty())
    throw precondition_error("expression expects " + std::to_string(nvars_) + " variables, got " +
                             std::to_string(xs.size()));
  return root_->eval(xs);
}

double Expr::value(const geom::ChartPoint& p) const {
  return eval(geom::seed_coordinates(p, 0)).value();
}

geom::ScalarField Expr::scalar_field() const {
  geom::ScalarField s;
  s.dim = nvars_;
  Expr copy = *this;
  s.fn = [copy](const JetVec& xs) { return copy.eval(xs); };
  return s;
}

skr::Profile Expr::profile() const {
  if (nvars_ != 1)
    throw usage_error("profile expression must use exactly one variable, got \"" + text_ + "\"");
  skr::Profile pr;
  Expr copy = *this;
  pr.fn = [copy](const Jet& t) { return copy.eval(JetVec{t}); };
  return pr;
}

}  // namespace riccheck::cli

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "riccheck/geom/fields.hpp"
#include "riccheck/skr/profile.hpp"

namespace riccheck::cli {

// Arithmetic expression over named chart variables, evaluated in jet
// arithmetic so that fields defined in config files carry full derivative
// data. Supports + - * / ^ (constant exponent, right associative), unary
// minus, parentheses, numeric literals, the constant pi, and the functions
// exp, log, sqrt, recip, sin, cos, sinh, cosh, tanh.
class Expr {
 public:
  Expr() = default;

  // Throws usage_error with a position message on bad input.
  static Expr parse(const std::string& text, const std::vector<std::string>& vars);

  bool valid() const { return static_cast<bool>(root_); }
  int arity() const { return nvars_; }
  const std::string& text() const { return text_; }

  // xs.size() must equal arity(); jets must share dim and order.
  geom::Jet eval(const geom::JetVec& xs) const;

  // Value-only convenience (seeds order-0 jets).
  double value(const geom::ChartPoint& p) const;

  // Wraps eval as a chart field of dimension arity().
  geom::ScalarField scalar_field() const;

  // Single-variable expressions as profiles.
  skr::Profile profile() const;

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  int nvars_ = 0;
  std::string text_;
};

}  // namespace riccheck::cli

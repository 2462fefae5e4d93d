#pragma once

#include <string>
#include <utility>

#include "riccheck/diffalg/poly.hpp"

namespace riccheck::diffalg {

// Rational function in the generators, kept fully reduced with a
// sign-normalized denominator, so equal values have equal representations.
class DiffRat {
 public:
  DiffRat() : num_(), den_(DiffPoly::integer(1)) {}
  DiffRat(DiffPoly num, DiffPoly den);
  explicit DiffRat(DiffPoly p) : num_(std::move(p)), den_(DiffPoly::integer(1)) {}

  static DiffRat integer(long v) { return DiffRat(DiffPoly::integer(v)); }
  static DiffRat variable(int g) { return DiffRat(DiffPoly::variable(g)); }
  static DiffRat alpha(int i = 0) { return DiffRat(DiffPoly::alpha(i)); }

  const DiffPoly& num() const { return num_; }
  const DiffPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool has_alpha() const { return num_.has_alpha() || den_.has_alpha(); }

  DiffRat operator-() const;
  friend DiffRat operator+(const DiffRat& a, const DiffRat& b);
  friend DiffRat operator-(const DiffRat& a, const DiffRat& b);
  friend DiffRat operator*(const DiffRat& a, const DiffRat& b);
  friend DiffRat operator/(const DiffRat& a, const DiffRat& b);
  friend bool operator==(const DiffRat& a, const DiffRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const DiffRat& a, const DiffRat& b) { return !(a == b); }

  DiffRat pow(int e) const;
  DiffRat derive() const;

  std::string str() const;

 private:
  void normalize();
  DiffPoly num_, den_;
};

// replaces al0 by alpha_expr and each al<i> by its i-th derivative
DiffRat substitute_alpha(const DiffRat& e, const DiffRat& alpha_expr);

}  // namespace riccheck::diffalg

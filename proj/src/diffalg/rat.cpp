#include "riccheck/diffalg/rat.hpp"

#include <vector>

#include "riccheck/errors.hpp"

namespace riccheck::diffalg {

DiffRat::DiffRat(DiffPoly num, DiffPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void DiffRat::normalize() {
  if (den_.is_zero()) throw precondition_error("zero denominator in a rational function");
  if (num_.is_zero()) {
    den_ = DiffPoly::integer(1);
    return;
  }
  DiffPoly g = gcd(num_, den_);
  num_ = DiffPoly::divide_exact(num_, g);
  den_ = DiffPoly::divide_exact(den_, g);
  if (den_.lead_coef() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

DiffRat DiffRat::operator-() const {
  DiffRat r = *this;
  r.num_ = -r.num_;
  return r;
}

DiffRat operator+(const DiffRat& a, const DiffRat& b) {
  return DiffRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

DiffRat operator-(const DiffRat& a, const DiffRat& b) { return a + (-b); }

DiffRat operator*(const DiffRat& a, const DiffRat& b) {
  return DiffRat(a.num_ * b.num_, a.den_ * b.den_);
}

DiffRat operator/(const DiffRat& a, const DiffRat& b) {
  if (b.is_zero()) throw precondition_error("division by the zero rational function");
  return DiffRat(a.num_ * b.den_, a.den_ * b.num_);
}

DiffRat DiffRat::pow(int e) const {
  if (e < 0) return DiffRat::integer(1) / pow(-e);
  DiffRat r = DiffRat::integer(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

DiffRat DiffRat::derive() const {
  return DiffRat(num_.derive() * den_ - num_ * den_.derive(), den_ * den_);
}

std::string DiffRat::str() const {
  if (den_ == DiffPoly::integer(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

DiffRat substitute_alpha(const DiffRat& e, const DiffRat& alpha_expr) {
  if (alpha_expr.has_alpha())
    throw precondition_error("substitution target still contains the indeterminate");
  int top = std::max(e.num().max_alpha_index(), e.den().max_alpha_index());
  std::vector<DiffRat> tower;
  tower.reserve(static_cast<std::size_t>(top) + 1);
  if (top >= 0) {
    tower.push_back(alpha_expr);
    for (int i = 1; i <= top; ++i) tower.push_back(tower.back().derive());
  }
  auto subst_poly = [&tower](const DiffPoly& p) {
    DiffRat out;
    for (const auto& t : p.terms()) {
      DiffRat term(DiffPoly::integer(t.coef));
      for (std::size_t g = 0; g < t.exps.size(); ++g) {
        if (t.exps[g] == 0) continue;
        if (static_cast<int>(g) >= gen::alpha_base) {
          const DiffRat& rep = tower[g - static_cast<std::size_t>(gen::alpha_base)];
          term = term * rep.pow(t.exps[g]);
        } else {
          term = term * DiffRat(DiffPoly::variable(static_cast<int>(g), t.exps[g]));
        }
      }
      out = out + term;
    }
    return out;
  };
  return subst_poly(e.num()) / subst_poly(e.den());
}

}  // namespace riccheck::diffalg

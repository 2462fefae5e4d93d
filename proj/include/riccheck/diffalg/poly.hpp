#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace riccheck::diffalg {

using Int = boost::multiprecision::cpp_int;

// Generator indices of the polynomial ring: the base variable x, the
// symbolic constants, and the derivative tower al0, al1, al2, ...
namespace gen {
constexpr int x = 0;
constexpr int c = 1;
constexpr int m = 2;
constexpr int K = 3;
constexpr int lam = 4;
constexpr int phat = 5;
constexpr int chat = 6;
constexpr int dhat = 7;
constexpr int alpha_base = 8;
constexpr int alpha(int i) { return alpha_base + i; }
}  // namespace gen

// Multivariate polynomial with arbitrary-precision integer coefficients,
// kept in a unique sorted-term form so that equality is representation
// equality. The derivation treats x as the variable, the named constants
// as constants, and maps al<i> to al<i+1>.
class DiffPoly {
 public:
  struct Term {
    Int coef;
    std::vector<int> exps;  // exps[g] = power of generator g, trailing zeros trimmed
  };

  DiffPoly() = default;
  static DiffPoly integer(const Int& v);
  static DiffPoly integer(long v) { return integer(Int(v)); }
  static DiffPoly variable(int g, int power = 1);
  static DiffPoly alpha(int i = 0) { return variable(gen::alpha(i)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_integer() const;
  // value of an integer polynomial (zero for the empty one)
  Int integer_value() const;
  const std::vector<Term>& terms() const { return terms_; }

  int degree_in(int g) const;
  int top_variable() const;  // largest generator present, -1 for constants
  bool has_alpha() const;
  int max_alpha_index() const;  // -1 when no alpha generator appears

  DiffPoly operator-() const;
  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b);
  friend bool operator!=(const DiffPoly& a, const DiffPoly& b) { return !(a == b); }

  DiffPoly pow(int e) const;
  DiffPoly derive() const;

  // gcd of the integer coefficients, positive; zero for the zero polynomial
  Int int_content() const;
  // leading coefficient in the canonical term order
  Int lead_coef() const;

  std::string str() const;

  // exact division; throws if b is zero or does not divide a
  static DiffPoly divide_exact(const DiffPoly& a, const DiffPoly& b);

 private:
  static DiffPoly from_terms(std::vector<Term> ts);
  std::vector<Term> terms_;  // canonical descending order

  friend DiffPoly gcd(const DiffPoly& a, const DiffPoly& b);
};

// canonical gcd: positive leading coefficient, includes integer content
DiffPoly gcd(const DiffPoly& a, const DiffPoly& b);

std::string generator_name(int g);

}  // namespace riccheck::diffalg

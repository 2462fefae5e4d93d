#include "riccheck/diffalg/poly.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "riccheck/errors.hpp"

namespace riccheck::diffalg {

namespace {

int exp_at(const std::vector<int>& e, std::size_t g) {
  return g < e.size() ? e[g] : 0;
}

void trim(std::vector<int>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

int total_degree(const std::vector<int>& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

// graded order, ties broken by the earliest generator with the larger power
bool monomial_less(const std::vector<int>& a, const std::vector<int>& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t g = 0; g < n; ++g) {
    int ea = exp_at(a, g), eb = exp_at(b, g);
    if (ea != eb) return ea < eb;
  }
  return false;
}

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

Int int_gcd(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

DiffPoly DiffPoly::from_terms(std::vector<Term> ts) {
  std::map<std::vector<int>, Int> acc;
  for (auto& t : ts) {
    trim(t.exps);
    if (t.coef != 0) acc[t.exps] += t.coef;
  }
  DiffPoly p;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.push_back(Term{c, e});
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return monomial_less(b.exps, a.exps); });
  return p;
}

DiffPoly DiffPoly::integer(const Int& v) {
  DiffPoly p;
  if (v != 0) p.terms_.push_back(Term{v, {}});
  return p;
}

DiffPoly DiffPoly::variable(int g, int power) {
  if (g < 0) throw usage_error("generator index out of range");
  if (power < 0) throw usage_error("negative power in a polynomial");
  if (power == 0) return integer(1);
  DiffPoly p;
  std::vector<int> e(static_cast<std::size_t>(g) + 1, 0);
  e[static_cast<std::size_t>(g)] = power;
  p.terms_.push_back(Term{Int(1), std::move(e)});
  return p;
}

bool DiffPoly::is_integer() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.empty());
}

Int DiffPoly::integer_value() const {
  if (!is_integer()) throw precondition_error("polynomial is not a constant");
  return terms_.empty() ? Int(0) : terms_[0].coef;
}

int DiffPoly::degree_in(int g) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, exp_at(t.exps, static_cast<std::size_t>(g)));
  return d;
}

int DiffPoly::top_variable() const {
  int top = -1;
  for (const auto& t : terms_)
    for (std::size_t g = 0; g < t.exps.size(); ++g)
      if (t.exps[g] > 0) top = std::max(top, static_cast<int>(g));
  return top;
}

bool DiffPoly::has_alpha() const { return top_variable() >= gen::alpha_base; }

int DiffPoly::max_alpha_index() const {
  int top = top_variable();
  return top >= gen::alpha_base ? top - gen::alpha_base : -1;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
  std::vector<DiffPoly::Term> ts = a.terms_;
  ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
  return DiffPoly::from_terms(std::move(ts));
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) { return a + (-b); }

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  std::vector<DiffPoly::Term> ts;
  ts.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      DiffPoly::Term t;
      t.coef = ta.coef * tb.coef;
      t.exps.resize(std::max(ta.exps.size(), tb.exps.size()), 0);
      for (std::size_t g = 0; g < t.exps.size(); ++g)
        t.exps[g] = exp_at(ta.exps, g) + exp_at(tb.exps, g);
      ts.push_back(std::move(t));
    }
  return DiffPoly::from_terms(std::move(ts));
}

bool operator==(const DiffPoly& a, const DiffPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coef != b.terms_[i].coef || a.terms_[i].exps != b.terms_[i].exps)
      return false;
  return true;
}

DiffPoly DiffPoly::pow(int e) const {
  if (e < 0) throw usage_error("negative power in a polynomial");
  DiffPoly r = integer(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

DiffPoly DiffPoly::derive() const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    for (std::size_t g = 0; g < t.exps.size(); ++g) {
      int e = t.exps[g];
      if (e == 0) continue;
      if (g >= 1 && g < gen::alpha_base) continue;  // symbolic constants
      Term nt = t;
      nt.coef *= e;
      nt.exps[g] -= 1;
      if (g >= gen::alpha_base) {
        std::size_t up = g + 1;
        if (nt.exps.size() <= up) nt.exps.resize(up + 1, 0);
        nt.exps[up] += 1;
      }
      ts.push_back(std::move(nt));
    }
  }
  return from_terms(std::move(ts));
}

Int DiffPoly::int_content() const {
  Int g = 0;
  for (const auto& t : terms_) g = int_gcd(g, t.coef);
  return g;
}

Int DiffPoly::lead_coef() const { return terms_.empty() ? Int(0) : terms_[0].coef; }

namespace {

DiffPoly term_to_poly(const DiffPoly::Term& t) {
  DiffPoly p = DiffPoly::integer(t.coef);
  for (std::size_t g = 0; g < t.exps.size(); ++g)
    if (t.exps[g] > 0) p = p * DiffPoly::variable(static_cast<int>(g), t.exps[g]);
  return p;
}

std::vector<DiffPoly> uni_view(const DiffPoly& a, int v) {
  std::vector<DiffPoly> u(static_cast<std::size_t>(a.degree_in(v)) + 1);
  for (const auto& t : a.terms()) {
    std::size_t e = static_cast<std::size_t>(exp_at(t.exps, static_cast<std::size_t>(v)));
    DiffPoly::Term r = t;
    if (static_cast<std::size_t>(v) < r.exps.size()) r.exps[static_cast<std::size_t>(v)] = 0;
    u[e] = u[e] + term_to_poly(r);
  }
  return u;
}

int uni_degree(const std::vector<DiffPoly>& u) {
  for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
    if (!u[static_cast<std::size_t>(d)].is_zero()) return d;
  return -1;
}

DiffPoly from_uni(const std::vector<DiffPoly>& u, int v) {
  DiffPoly p;
  for (std::size_t e = 0; e < u.size(); ++e)
    if (!u[e].is_zero()) p = p + u[e] * DiffPoly::variable(v, static_cast<int>(e));
  return p;
}

DiffPoly content_in(const DiffPoly& a, int v) {
  DiffPoly g;
  for (const auto& coef : uni_view(a, v))
    if (!coef.is_zero()) g = gcd(g, coef);
  return g;
}

// pseudo-remainder of a by b in the variable v
DiffPoly prem(const DiffPoly& a, const DiffPoly& b, int v) {
  std::vector<DiffPoly> r = uni_view(a, v);
  std::vector<DiffPoly> ub = uni_view(b, v);
  int db = uni_degree(ub);
  if (db < 0) throw precondition_error("pseudo-division by zero");
  const DiffPoly& lb = ub[static_cast<std::size_t>(db)];
  int e = uni_degree(r) - db + 1;
  while (true) {
    int dr = uni_degree(r);
    if (dr < db) break;
    DiffPoly lr = r[static_cast<std::size_t>(dr)];
    for (auto& coef : r) coef = coef * lb;
    for (int i = 0; i <= db; ++i) {
      std::size_t k = static_cast<std::size_t>(dr - db + i);
      r[k] = r[k] - lr * ub[static_cast<std::size_t>(i)];
    }
    --e;
  }
  DiffPoly rest = from_uni(r, v);
  for (int i = 0; i < e; ++i) rest = rest * lb;
  return rest;
}

DiffPoly sign_canon(const DiffPoly& a) { return a.lead_coef() < 0 ? -a : a; }

}  // namespace

DiffPoly DiffPoly::divide_exact(const DiffPoly& a, const DiffPoly& b) {
  if (b.is_zero()) throw precondition_error("division by the zero polynomial");
  if (a.is_zero()) return DiffPoly();
  if (b.is_integer()) {
    Int d = b.integer_value();
    DiffPoly q = a;
    for (auto& t : q.terms_) {
      if (t.coef % d != 0) throw precondition_error("inexact polynomial division");
      t.coef /= d;
    }
    return q;
  }
  int v = b.top_variable();
  std::vector<DiffPoly> ua = uni_view(a, v);
  std::vector<DiffPoly> ub = uni_view(b, v);
  int db = uni_degree(ub);
  std::vector<DiffPoly> q(ua.size());
  while (true) {
    int da = uni_degree(ua);
    if (da < 0) break;
    if (da < db) throw precondition_error("inexact polynomial division");
    DiffPoly qc = divide_exact(ua[static_cast<std::size_t>(da)], ub[static_cast<std::size_t>(db)]);
    q[static_cast<std::size_t>(da - db)] = qc;
    for (int i = 0; i <= db; ++i) {
      std::size_t k = static_cast<std::size_t>(da - db + i);
      ua[k] = ua[k] - qc * ub[static_cast<std::size_t>(i)];
    }
  }
  return from_uni(q, v);
}

DiffPoly gcd(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero()) return sign_canon(b);
  if (b.is_zero()) return sign_canon(a);
  if (a.is_integer() && b.is_integer())
    return DiffPoly::integer(int_gcd(a.integer_value(), b.integer_value()));
  if (a.is_integer()) return DiffPoly::integer(int_gcd(a.integer_value(), b.int_content()));
  if (b.is_integer()) return DiffPoly::integer(int_gcd(b.integer_value(), a.int_content()));

  int v = std::max(a.top_variable(), b.top_variable());
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  DiffPoly ca = content_in(a, v);
  DiffPoly cb = content_in(b, v);
  DiffPoly cont = gcd(ca, cb);
  DiffPoly pa = DiffPoly::divide_exact(a, ca);
  DiffPoly pb = DiffPoly::divide_exact(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    DiffPoly r = prem(pa, pb, v);
    pa = pb;
    if (r.is_zero()) {
      pb = r;
    } else {
      DiffPoly cr = content_in(r, v);
      pb = DiffPoly::divide_exact(r, cr);
    }
  }
  if (pa.degree_in(v) > 0) pa = DiffPoly::divide_exact(pa, content_in(pa, v));
  return sign_canon(cont * pa);
}

std::string generator_name(int g) {
  switch (g) {
    case gen::x: return "x";
    case gen::c: return "c";
    case gen::m: return "m";
    case gen::K: return "K";
    case gen::lam: return "lam";
    case gen::phat: return "phat";
    case gen::chat: return "chat";
    case gen::dhat: return "dhat";
    default: break;
  }
  if (g >= gen::alpha_base) return "al" + std::to_string(g - gen::alpha_base);
  throw usage_error("generator index out of range");
}

std::string DiffPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Int mag = abs_int(t.coef);
    if (first) {
      if (t.coef < 0) out += "-";
      first = false;
    } else {
      out += (t.coef < 0) ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t g = 0; g < t.exps.size(); ++g) {
      if (t.exps[g] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += generator_name(static_cast<int>(g));
      if (t.exps[g] > 1) mono += "^" + std::to_string(t.exps[g]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace riccheck::diffalg

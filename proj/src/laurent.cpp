#include "g2rs/laurent.hpp"

#include <sstream>

namespace g2rs {

const std::array<const char*, kVarCount> kVarNames = {"r", "s", "l1",
                                                      "l2", "g1", "g2"};

RationalPoint RationalPoint::rs(const Rational& rv, const Rational& sv) {
  RationalPoint pt;
  pt.values[0] = rv;
  pt.values[1] = sv;
  return pt;
}

RationalPoint RationalPoint::all(const Rational& rv, const Rational& sv) {
  RationalPoint pt = rs(rv, sv);
  for (int i = 2; i < kVarCount; ++i) pt.values[i] = Rational(1);
  return pt;
}

const Rational& RationalPoint::get(Var v) const {
  const auto& slot = values[static_cast<int>(v)];
  if (!slot) throw std::invalid_argument(std::string("unassigned variable ") +
                                         kVarNames[static_cast<int>(v)]);
  return *slot;
}

LaurentPoly::LaurentPoly(long value) {
  if (value != 0) terms_[exp_zero()] = value;
}

LaurentPoly::LaurentPoly(const BigInt& value) {
  if (value != 0) terms_[exp_zero()] = value;
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, const ExpVec& exps) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exps] = coeff;
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, int power) {
  ExpVec e{};
  e[static_cast<int>(v)] = power;
  return monomial(1, e);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == exp_zero() &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const BigInt& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

std::pair<ExpVec, BigInt> LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

void LaurentPoly::add_term(const ExpVec& e, const BigInt& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(exp_add(ea, eb), ca * cb);
  return p;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e == 0) return LaurentPoly(1);
  if (e < 0) return unit_inverse().pow(-e);
  LaurentPoly base = *this, acc(1);
  int k = e;
  while (k > 0) {
    if (k & 1) acc *= base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (terms_.size() != 1)
    throw std::domain_error("inverse of a non-monomial Laurent polynomial");
  const auto& [e, c] = *terms_.begin();
  if (c != 1 && c != -1)
    throw std::domain_error("inverse of a non-unit coefficient");
  ExpVec ne{};
  for (int i = 0; i < kVarCount; ++i) ne[i] = -e[i];
  return monomial(c, ne);
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& p,
                                                     const LaurentPoly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return LaurentPoly();
  LaurentPoly rem = p, quot;
  auto [qe, qc] = q.leading_term();
  // Quotient terms are produced in strictly decreasing lex order, so the
  // number of iterations is bounded by the quotient's support.
  std::size_t guard = 16 * (p.term_count() + q.term_count()) + 64;
  while (!rem.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    auto [re, rc] = rem.leading_term();
    if (rc % qc != 0) return std::nullopt;
    LaurentPoly t = monomial(rc / qc, exp_sub(re, qe));
    quot += t;
    rem -= t * q;
    if (!rem.is_zero() && !(rem.leading_term().first < re)) return std::nullopt;
  }
  return quot;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::divide_content(const BigInt& d) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) {
    if (c % d != 0) throw std::logic_error("content division not exact");
    p.terms_[e] = c / d;
  }
  return p;
}

bool LaurentPoly::uses_var(Var v) const {
  int i = static_cast<int>(v);
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) return true;
  return false;
}

Rational LaurentPoly::evaluate(const RationalPoint& pt) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t(c);
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      const Rational& v = pt.get(static_cast<Var>(i));
      if (v == 0) throw std::invalid_argument("evaluation at zero coordinate");
      Rational p = 1;
      int k = e[i] < 0 ? -e[i] : e[i];
      for (int j = 0; j < k; ++j) p *= v;
      if (e[i] < 0) p = Rational(1) / p;
      t *= p;
    }
    acc += t;
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending lex so "-3*r^2*s^-1 + 1" prints high exponents first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::string vars;
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += kVarNames[i];
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << vars;
    }
  }
  return os.str();
}

}  // namespace g2rs

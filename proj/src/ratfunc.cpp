#include "g2rs/ratfunc.hpp"

#include <deque>
#include <mutex>
#include <sstream>

namespace g2rs {

namespace {

std::mutex g_registry_mu;
// A deque keeps references stable while new factors register.
std::deque<LaurentPoly>& registry() {
  // Seeded with the cyclotomic-type factors that arise when the defining
  // relations are completed; anything else registers on demand.
  static std::deque<LaurentPoly> f = [] {
    const LaurentPoly r = LaurentPoly::variable(Var::r);
    const LaurentPoly s = LaurentPoly::variable(Var::s);
    std::deque<LaurentPoly> v;
    v.push_back(r + s);
    v.push_back(r * r - r * s + s * s);
    v.push_back(r * r + s * s);
    v.push_back(r * r + r * s + s * s);
    return v;
  }();
  return f;
}

// Strip monomial content: divide by the lex-leading... we normalize a factor
// to have nonnegative minimal exponents, positive content 1 leading sign.
LaurentPoly primitive_form(const LaurentPoly& p) {
  ExpVec mins{};
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      mins = e;
      first = false;
    } else {
      for (int i = 0; i < kVarCount; ++i) mins[i] = std::min(mins[i], e[i]);
    }
  }
  LaurentPoly shifted;
  for (const auto& [e, c] : p.terms())
    shifted += LaurentPoly::monomial(c, exp_sub(e, mins));
  BigInt ct = shifted.content();
  if (shifted.leading_term().second < 0) ct = -ct;
  return shifted.divide_content(ct);
}

}  // namespace

namespace factor_registry {
const LaurentPoly& factor(int index) {
  std::lock_guard<std::mutex> lk(g_registry_mu);
  return registry().at(static_cast<std::size_t>(index));
}
std::size_t size() {
  std::lock_guard<std::mutex> lk(g_registry_mu);
  return registry().size();
}
}  // namespace factor_registry

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    iden_ = 1;
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    const LaurentPoly& f = factor_registry::factor(it->first);
    while (it->second > 0) {
      auto q = LaurentPoly::divide_exact(num_, f);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
  if (iden_ != 1) {
    BigInt g = boost::multiprecision::gcd(num_.content(), iden_);
    if (g > 1) {
      num_ = num_.divide_content(g);
      iden_ /= g;
    }
  }
}

LaurentPoly RatFunc::denominator() const {
  LaurentPoly d(iden_);
  for (const auto& [idx, e] : den_)
    d *= factor_registry::factor(idx).pow(e);
  return d;
}

const LaurentPoly& RatFunc::as_laurent() const {
  if (!is_ring())
    throw std::domain_error("rational function with nontrivial denominator: " +
                            str());
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  std::map<int, int> den;
  for (const auto& [i, e] : den_) den[i] = e;
  for (const auto& [i, e] : o.den_) den[i] = std::max(den[i], e);
  LaurentPoly na = num_, nb = o.num_;
  for (const auto& [i, e] : den) {
    auto ita = den_.find(i);
    int ea = ita == den_.end() ? 0 : ita->second;
    auto itb = o.den_.find(i);
    int eb = itb == o.den_.end() ? 0 : itb->second;
    const LaurentPoly& f = factor_registry::factor(i);
    if (e > ea) na *= f.pow(e - ea);
    if (e > eb) nb *= f.pow(e - eb);
  }
  BigInt d = boost::multiprecision::lcm(iden_, o.iden_);
  na *= LaurentPoly(BigInt(d / iden_));
  nb *= LaurentPoly(BigInt(d / o.iden_));
  num_ = na + nb;
  den_ = std::move(den);
  iden_ = d;
  normalize();
  return *this;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& [i, e] : b.den_) r.den_[i] += e;
  r.iden_ = a.iden_ * b.iden_;
  r.normalize();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  // Factor the numerator over the registry, extending it when needed.
  LaurentPoly rest = num_;
  std::map<int, int> nden;
  {
    std::lock_guard<std::mutex> lk(g_registry_mu);
    auto& reg = registry();
    bool progress = true;
    while (progress && rest.term_count() > 1) {
      progress = false;
      for (std::size_t i = 0; i < reg.size(); ++i) {
        while (rest.term_count() > 1) {
          auto q = LaurentPoly::divide_exact(rest, reg[i]);
          if (!q) break;
          rest = std::move(*q);
          ++nden[static_cast<int>(i)];
          progress = true;
        }
      }
      if (!progress && rest.term_count() > 1) {
        reg.push_back(primitive_form(rest));
        progress = true;
      }
    }
  }
  // rest is now a monomial c * v^e
  auto [e, c] = rest.leading_term();
  ExpVec ne{};
  for (int i = 0; i < kVarCount; ++i) ne[i] = -e[i];
  RatFunc r;
  r.num_ = LaurentPoly::monomial(c < 0 ? -iden_ : iden_, ne);
  for (const auto& [i, k] : den_)
    r.num_ *= factor_registry::factor(i).pow(k);
  r.den_ = std::move(nden);
  r.iden_ = boost::multiprecision::abs(c);
  r.normalize();
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  if (den_ == o.den_ && iden_ == o.iden_) return num_ == o.num_;
  RatFunc d = *this;
  d -= o;
  return d.is_zero();
}

Rational RatFunc::evaluate(const RationalPoint& pt) const {
  Rational n = num_.evaluate(pt);
  Rational d(iden_);
  for (const auto& [i, e] : den_) {
    Rational f = factor_registry::factor(i).evaluate(pt);
    if (f == 0) throw std::invalid_argument("denominator vanishes at point");
    for (int k = 0; k < e; ++k) d *= f;
  }
  return n / d;
}

std::string RatFunc::str() const {
  if (is_ring()) return num_.str();
  std::ostringstream os;
  if (num_.term_count() > 1)
    os << "(" << num_.str() << ")";
  else
    os << num_.str();
  os << "/(" << denominator().str() << ")";
  return os.str();
}

}  // namespace g2rs

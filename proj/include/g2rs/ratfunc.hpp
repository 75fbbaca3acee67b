#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2rs/laurent.hpp"

namespace g2rs {

// Rational function in the scalar ring, kept as a Laurent-polynomial
// numerator over a product of registered polynomial factors and a positive
// integer.  Division by an arbitrary value factors its numerator over the
// registry, registering new primitive factors on demand.  Monomials never
// enter the denominator (they fold into the numerator's exponents).
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long v) : num_(v) {}  // NOLINT: implicit on purpose
  RatFunc(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT

  static RatFunc variable(Var v, int power = 1) {
    return RatFunc(LaurentPoly::variable(v, power));
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.empty() && iden_ == 1 && num_.is_one(); }
  // True when the denominator is trivial, i.e. the value lies in the ring.
  bool is_ring() const { return den_.empty() && iden_ == 1; }

  const LaurentPoly& numerator() const { return num_; }
  LaurentPoly denominator() const;  // expanded product
  const std::map<int, int>& den_factors() const { return den_; }
  const BigInt& den_int() const { return iden_; }

  // Numerator as a ring element; throws when the denominator is nontrivial.
  const LaurentPoly& as_laurent() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
  }

  // Exact inverse; throws on zero.
  RatFunc inverse() const;

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  Rational evaluate(const RationalPoint& pt) const;
  std::string str() const;

 private:
  LaurentPoly num_;
  std::map<int, int> den_;  // registry index -> exponent > 0
  BigInt iden_ = 1;         // positive integer denominator

  void normalize();
  friend class FactorRegistry;
};

// Process-wide registry of denominator factors (primitive, non-monomial
// Laurent polynomials with positive leading coefficient).
namespace factor_registry {
const LaurentPoly& factor(int index);
std::size_t size();
}  // namespace factor_registry

}  // namespace g2rs

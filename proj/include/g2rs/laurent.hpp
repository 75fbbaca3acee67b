#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace g2rs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Formal unit variables of the scalar ring.  r, s are the deformation
// parameters; l1, l2, g1, g2 are reserved for endomorphism scalars.
enum class Var : int { r = 0, s = 1, l1 = 2, l2 = 3, g1 = 4, g2 = 5 };

inline constexpr int kVarCount = 6;
extern const std::array<const char*, kVarCount> kVarNames;

// One integer exponent per variable, negatives allowed.
using ExpVec = std::array<int, kVarCount>;

inline ExpVec exp_zero() { return ExpVec{}; }
inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (int i = 0; i < kVarCount; ++i) r[i] = a[i] + b[i];
  return r;
}
inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (int i = 0; i < kVarCount; ++i) r[i] = a[i] - b[i];
  return r;
}

// Point for exact numeric specialization; variables may be left unassigned.
struct RationalPoint {
  std::array<std::optional<Rational>, kVarCount> values;

  static RationalPoint rs(const Rational& rv, const Rational& sv);
  // All six variables assigned (extra entries default to 1).
  static RationalPoint all(const Rational& rv, const Rational& sv);
  bool has(Var v) const { return values[static_cast<int>(v)].has_value(); }
  const Rational& get(Var v) const;
};

// Sparse Laurent polynomial with arbitrary-precision integer coefficients:
// a finite map from exponent vectors to nonzero coefficients.  The map order
// (lexicographic on exponent vectors) doubles as the serialization order.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value);  // NOLINT: implicit on purpose, constants embed
  explicit LaurentPoly(const BigInt& value);

  static LaurentPoly monomial(const BigInt& coeff, const ExpVec& exps);
  static LaurentPoly variable(Var v, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Single term with coefficient +1 or -1, i.e. a unit of the ring.
  bool is_unit_monomial() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, BigInt>& terms() const { return terms_; }

  // Leading term under the lexicographic exponent order.
  std::pair<ExpVec, BigInt> leading_term() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Integer power; negative exponents require a unit monomial.
  LaurentPoly pow(int e) const;
  // Inverse of a unit monomial (coefficient +-1); throws otherwise.
  LaurentPoly unit_inverse() const;

  // Exact division; nullopt when q does not divide p.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& p,
                                                 const LaurentPoly& q);

  // Gcd of all coefficients (positive), 0 for the zero polynomial.
  BigInt content() const;
  LaurentPoly divide_content(const BigInt& d) const;

  bool uses_var(Var v) const;

  // Exact evaluation; throws if a used variable is unassigned.
  Rational evaluate(const RationalPoint& pt) const;

  std::string str() const;

 private:
  std::map<ExpVec, BigInt> terms_;
  void add_term(const ExpVec& e, const BigInt& c);
};

}  // namespace g2rs

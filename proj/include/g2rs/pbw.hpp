#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "g2rs/free_algebra.hpp"

namespace g2rs {

// (e1-degree, e2-degree) of a homogeneous element.
struct Weight {
  int p = 0;
  int q = 0;
  friend Weight operator+(Weight a, Weight b) { return {a.p + b.p, a.q + b.q}; }
  bool operator==(const Weight&) const = default;
  int degree() const { return p + q; }
};

// Weights of the root vectors X1..X6.
Weight root_weight(int i);

// Free-algebra expansion of the root vector X_i (iterated q-brackets of the
// generators; X1 = e2, X6 = e1).
const FreeElement& root_vector(int i);

using XExps = std::array<int, 6>;  // exponents of X1..X6

// Basis monomial X1^{x[0]} ... X6^{x[5]} k1^m k2^n.
struct PbwMonomial {
  XExps x{};
  int m = 0, n = 0;

  static PbwMonomial one() { return {}; }
  static PbwMonomial k(int m, int n) { return {{}, m, n}; }
  static PbwMonomial generator(int i, int e = 1);

  int e_degree() const;
  Weight weight() const;  // of the X part
  bool is_k_free() const { return m == 0 && n == 0; }
  bool is_x_free() const;

  bool operator==(const PbwMonomial&) const = default;
  // e-degree, then lex on x, then (m, n); the map/serialization order.
  bool operator<(const PbwMonomial& o) const;

  std::string str() const;  // "X1^2*X3*k1^-1", "1" when trivial
};

// Linear combination of basis monomials; the canonical form of algebra
// elements.  Coefficients live in the localized scalar ring: straightening
// the fixed root vectors genuinely produces 1/(r+s) factors, so the plain
// Laurent ring is not closed under multiplication here.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(long v);  // NOLINT: scalars embed
  explicit AlgebraElement(const RatFunc& c);

  static AlgebraElement monomial(const PbwMonomial& mono,
                                 RatFunc coeff = RatFunc(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<PbwMonomial, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const PbwMonomial& mono) const;
  // Largest monomial under the canonical order; throws on zero.
  std::pair<PbwMonomial, RatFunc> leading_term() const;

  void add_term(const PbwMonomial& mono, const RatFunc& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const RatFunc& c, const AlgebraElement& a);
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  bool homogeneous_weight(Weight* out = nullptr) const;

  std::string str() const;

 private:
  std::map<PbwMonomial, RatFunc> terms_;
};

// Scalar c with k1^m k2^n u = c u k1^m k2^n for homogeneous u of weight w.
LaurentPoly k_move_scalar(Weight w, int m, int n);

// PBW form of X_j X_i for i < j, from the memoized straightening table.
// Entries are derived by free-algebra reduction and an exact linear solve,
// and cross-checked against the reduction oracle when first computed.
const AlgebraElement& straighten_pair(int i, int j);
// Force-computes the whole table (useful before concurrent use).
void precompute_straightening();

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// Substitute root-vector expansions; requires zero k-exponents.
FreeElement pbw_to_free(const AlgebraElement& x);

// Unique PBW expansion of a free-algebra element (k-free by construction).
// Throws when the linear solve is inconsistent, which signals a broken
// rewrite system.
AlgebraElement free_to_pbw(const FreeElement& f);

// Number of PBW X-monomials of total e-degree n.
long graded_dimension(int n);

// All X-exponent vectors of the given weight, sorted.
std::vector<XExps> xvecs_of_weight(Weight w);

// ---- exact numeric specialization ----

// Element with coefficients specialized at a rational point.
using RationalElement = std::map<PbwMonomial, Rational>;

RationalElement specialize(const AlgebraElement& x, const RationalPoint& pt);

// Product computed with structure constants evaluated at the point, i.e.
// specialize-then-multiply.  Point coordinates must be nonzero.
RationalElement multiply_specialized(const RationalElement& a,
                                     const RationalElement& b,
                                     const RationalPoint& pt);

std::string rational_element_str(const RationalElement& x);

}  // namespace g2rs

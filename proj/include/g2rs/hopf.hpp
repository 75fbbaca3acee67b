#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "g2rs/pbw.hpp"

namespace g2rs {

// Element of the tensor square, a linear combination of ordered pairs of
// basis monomials.  Multiplication is componentwise, no sign twist:
// (a (x) b)(c (x) d) = ac (x) bd.
class TensorElement {
 public:
  using Key = std::pair<PbwMonomial, PbwMonomial>;

  TensorElement() = default;

  static TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Key, RatFunc>& terms() const { return terms_; }

  void add_term(const Key& k, const RatFunc& c);

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

  TensorElement flip() const;  // swap tensor factors

  std::string str() const;  // "x (x) y" with coefficients in front

 private:
  std::map<Key, RatFunc> terms_;
};

// The algebra homomorphism with Delta(e1) = e1 (x) 1 + k1^2 k2^-1 (x) e1,
// Delta(e2) = e2 (x) 1 + k1^-3 k2^2 (x) e2, Delta(k) = k (x) k.
TensorElement coproduct(const AlgebraElement& x);

// epsilon(e) = 0, epsilon(k) = 1, extended multiplicatively.
RatFunc counit(const AlgebraElement& x);

// The anti-homomorphism solving the antipode axiom: S(k) = k^-1,
// S(e1) = -k1^-2 k2 e1, S(e2) = -k1^3 k2^-2 e2.
AlgebraElement antipode(const AlgebraElement& x);

struct HopfAxiomReport {
  int max_degree = 0;
  int monomials_checked = 0;
  bool coassoc_ok = true;
  bool counit_ok = true;
  bool antipode_ok = true;
  bool hom_ok = true;
  std::vector<std::string> failures;

  // Catalogued antipode values audited against the axiom; entries with
  // claimed_satisfies_axiom == false are errata.
  struct AntipodeVariant {
    std::string generator;
    std::string claimed;
    std::string derived;
    bool claimed_satisfies_axiom = false;
  };
  std::vector<AntipodeVariant> antipode_variants;

  bool all_axioms_ok() const {
    return coassoc_ok && counit_ok && antipode_ok && hom_ok;
  }
  bool errata_nonempty() const;
};

// Verifies coassociativity, the counit laws and both antipode identities on
// every basis monomial of e-degree <= max_degree with k-exponents in
// [-1, 1], plus homomorphism checks on seeded random pairs, and audits the
// catalogued antipode variants.
HopfAxiomReport check_hopf_axioms(int max_degree, unsigned long seed = 1);

}  // namespace g2rs

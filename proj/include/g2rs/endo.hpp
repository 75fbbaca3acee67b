#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2rs/hopf.hpp"

namespace g2rs {

// Candidate (Hopf) endomorphism: k_l maps to lambda_l k_{sigma(l)}, e_1 to
// gamma_1 k1^a k2^b e_{sigma(1)}, e_2 to gamma_2 k1^c k2^d e_{sigma(2)}.
// Scalars are nonzero Laurent monomials, typically the formal units l1, l2,
// g1, g2; well-definedness is not assumed (run check_relations first).
struct EndoParams {
  bool swap = false;  // sigma: false = identity, true = exchange 1 <-> 2
  LaurentPoly lambda1{1}, lambda2{1};
  LaurentPoly gamma1{1}, gamma2{1};
  std::array<int, 2> exp1{0, 0};  // (a, b)
  std::array<int, 2> exp2{0, 0};  // (c, d)

  static EndoParams identity() { return {}; }
  // k-exponents as given, scalars set to the formal unit variables.
  static EndoParams formal(int a, int b, int c, int d, bool swap = false);

  void validate() const;  // throws unless all four scalars are nonzero monomials
};

AlgebraElement apply_endo(const EndoParams& p, const AlgebraElement& x);

struct RelationReport {
  struct Entry {
    std::string relation;
    bool holds = false;
    std::string residual;  // empty when the relation holds
  };
  std::vector<Entry> entries;
  bool all_hold = true;
};

// Applies the endomorphism to the six defining relations (four k-e
// commutations and the two quantum Serre relations) and reports whether
// each image normalizes to zero.
RelationReport check_relations(const EndoParams& p);

// All X-exponent vectors of e-degree <= degree_bound whose weight commutes
// past k1, k2 with exactly the scalars the defining relations force for the
// image of e_target under the given sigma.  target is 1 or 2.
std::vector<XExps> solve_weight_equations(bool swap, int target,
                                          int degree_bound);

// Integer linear form in the k-exponent symbols (a, b, c, d).
struct LinForm {
  std::array<long, 4> c{};

  long eval(long a, long b, long cc, long d) const {
    return c[0] * a + c[1] * b + c[2] * cc + c[3] * d;
  }
  LinForm& operator+=(const LinForm& o);
  friend LinForm operator+(LinForm a, const LinForm& o) { return a += o; }
  friend LinForm operator*(LinForm a, long k);
  friend LinForm operator-(LinForm a, const LinForm& o);
  bool operator==(const LinForm&) const = default;
  bool is_zero() const { return c == std::array<long, 4>{}; }
  std::string str() const;  // "6*a + 18*b + 4*c + 12*d"
};

// The subgroup of Z^4 of k-exponent tuples (a, b, c, d) for which the
// generator assignment extends to an algebra endomorphism, together with
// the raw linear equations it came from.
struct ConstraintLattice {
  std::vector<std::array<long, 4>> basis;
  std::vector<LinForm> equations;  // each equated to zero

  bool contains(const std::array<long, 4>& v) const;
  int rank() const { return static_cast<int>(basis.size()); }
  bool satisfies_equations(const std::array<long, 4>& v) const;
};

// Symbolically reorders both Serre-relation images with formal (a, b, c, d)
// and equates the r- and s-exponents of all terms; returns the raw system
// (12 equations) and an integer basis of its solution lattice.
ConstraintLattice derive_exponent_constraints();

struct HopfCompatReport {
  struct Entry {
    std::string generator;
    bool holds = false;
  };
  std::vector<Entry> entries;
  bool all_hold = true;
};

// Checks Delta(theta(g)) = (theta (x) theta)(Delta(g)) on the four
// generators.
HopfCompatReport check_hopf_compat(const EndoParams& p);

// Group operations on sigma-identity parameter sets.  Both expect (and
// compose() preserves) relation-valid parameters; sigma = swap is rejected.
EndoParams compose(const EndoParams& p, const EndoParams& q);
EndoParams invert(const EndoParams& p);

// Small dense integer matrix.
class IntMatrix {
 public:
  explicit IntMatrix(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int size() const { return n_; }
  BigInt& at(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const BigInt& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i * n_ + j)];
  }

  BigInt det() const;
  IntMatrix adjugate() const;

 private:
  int n_;
  std::vector<BigInt> a_;
};

struct PermCheckResult {
  bool accepted = false;
  std::vector<int> perm;  // column j maps to row perm[j] (0-based)
  std::string reason;     // rejection reason when !accepted

  std::string perm_str() const;  // "identity" or cycle notation "(1 2)"
};

// Accepts M iff M and M^-1 both have nonnegative entries and det = +-1, in
// which case M is a permutation matrix and the permutation is returned.
PermCheckResult gl_nonneg_permutation(const IntMatrix& m);

// ---- audit of catalogued reordering identities ----

struct ReorderAuditReport {
  struct Identity {
    std::string id;
    bool interpretable = true;
    std::string reason;  // why not, when uninterpretable
    bool r_ok = false, s_ok = false, k_ok = false;
    bool kernel_walk_agree = true;  // kernel products match the exponent walk
    long tuples_checked = 0;
    std::string verdict;  // "match" | "mismatch" | "uninterpretable"
    std::string detail;   // mismatching components, claimed vs computed
  };
  std::vector<Identity> identities;
};

// Checks a built-in catalog of claimed k-e reordering identities against the
// kernel over the exponent box [-box, box]^4.  Degree-inconsistent claims are
// flagged rather than compared.
ReorderAuditReport verify_commutation_lemmas(int box, int threads = 1);

}  // namespace g2rs

// Acceptance suite: one pass/fail line per criterion, all checks exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <vector>

#include "g2rs/endo.hpp"
#include "g2rs/json_io.hpp"
#include "g2rs/parse.hpp"

using namespace g2rs;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& name, const std::function<bool()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (ok ? "PASS" : "FAIL") << "  " << num << "  " << name << "  ["
            << dt << " s]";
  if (!error.empty()) std::cout << "  error: " << error;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

AlgebraElement X(int i, int e = 1) {
  return AlgebraElement::monomial(PbwMonomial::generator(i, e));
}

std::vector<XExps> xvecs_up_to(int maxdeg) {
  std::vector<XExps> out;
  for (int d = 0; d <= maxdeg; ++d)
    for (int p = 0; p <= d; ++p)
      for (const auto& v : xvecs_of_weight({p, d - p})) out.push_back(v);
  return out;
}

// independent generating-function oracle:
// coefficients of 1/((1-t)^2 (1-t^2)(1-t^3)(1-t^4)(1-t^5)) up to degree n
std::vector<long> gf_series(int n) {
  std::vector<long> acc(static_cast<std::size_t>(n) + 1, 0);
  acc[0] = 1;
  for (int d : {1, 1, 2, 3, 4, 5}) {
    // multiply by the truncated geometric series in t^d
    std::vector<long> factor(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k * d <= n; ++k) factor[static_cast<std::size_t>(k * d)] = 1;
    std::vector<long> next(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
      if (acc[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= n; ++j)
        next[static_cast<std::size_t>(i + j)] +=
            acc[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
    }
    acc = std::move(next);
  }
  return acc;
}

bool criterion1() {
  const RewriteSystem& sys = default_system();
  ConfluenceReport rep = check_confluence(sys, &default_reducer());
  if (!rep.confluent || rep.pairs.empty()) return false;
  static const long frozen[9] = {1, 2, 4, 7, 12, 19, 29, 42, 60};
  std::vector<long> gf = gf_series(8);
  for (int n = 0; n <= 8; ++n) {
    long words = irreducible_count(sys, n);
    long dims = graded_dimension(n);
    if (words != frozen[n] || dims != frozen[n] || gf[static_cast<std::size_t>(n)] != frozen[n])
      return false;
  }
  return true;
}

bool criterion2() {
  // round trip on every basis monomial of e-degree <= 5
  for (const auto& v : xvecs_up_to(5)) {
    AlgebraElement m = AlgebraElement::monomial(PbwMonomial{v, 0, 0});
    if (!(free_to_pbw(pbw_to_free(m)) == m)) return false;
  }
  // multiplication against the free reduction oracle on 200 random pairs
  std::mt19937_64 rng(20240801);
  auto pool = xvecs_up_to(3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  const Reducer& red = default_reducer();
  for (int t = 0; t < 200; ++t) {
    int c1 = coef(rng), c2 = coef(rng);
    AlgebraElement a =
        AlgebraElement::monomial(PbwMonomial{pool[pick(rng)], 0, 0}) +
        RatFunc(c1) * AlgebraElement::monomial(PbwMonomial{pool[pick(rng)], 0, 0});
    AlgebraElement b =
        AlgebraElement::monomial(PbwMonomial{pool[pick(rng)], 0, 0}) +
        RatFunc(c2) * AlgebraElement::monomial(PbwMonomial{pool[pick(rng)], 0, 0});
    FreeElement lhs = red.normal_form(pbw_to_free(multiply(a, b)));
    FreeElement rhs = red.normal_form(pbw_to_free(a) * pbw_to_free(b));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool criterion3() {
  HopfAxiomReport rep = check_hopf_axioms(3, 97);
  return rep.coassoc_ok && rep.counit_ok && rep.antipode_ok && rep.hom_ok &&
         rep.errata_nonempty();
}

bool criterion4() {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          bool pass = check_relations(EndoParams::formal(a, b, c, d)).all_hold;
          bool lattice = (c == 3 * b) && (a + 3 * b + d == 0);
          if (pass != lattice) return false;
        }
  ConstraintLattice lat = derive_exponent_constraints();
  if (lat.rank() != 2) return false;
  if (!lat.contains({-3, 1, 3, 0}) || !lat.contains({-1, 0, 0, 1})) return false;
  for (const auto& v : lat.basis)
    if (!(v[2] == 3 * v[1] && v[0] + 3 * v[1] + v[3] == 0)) return false;
  return true;
}

bool criterion5() {
  XExps x6{};
  x6[5] = 1;
  XExps x1{};
  x1[0] = 1;
  for (int bound = 1; bound <= 6; ++bound) {
    if (solve_weight_equations(false, 1, bound) != std::vector<XExps>{x6}) return false;
    if (solve_weight_equations(false, 2, bound) != std::vector<XExps>{x1}) return false;
    if (!solve_weight_equations(true, 1, bound).empty()) return false;
    if (!solve_weight_equations(true, 2, bound).empty()) return false;
  }
  return true;
}

bool criterion6() {
  // lattice-valid tuples in the box are (a, 0, 0, -a)
  for (int a = -2; a <= 2; ++a) {
    for (int l1 = 0; l1 < 2; ++l1) {
      for (int l2 = 0; l2 < 2; ++l2) {
        EndoParams p;
        p.exp1 = {a, 0};
        p.exp2 = {0, -a};
        p.gamma1 = LaurentPoly::variable(Var::g1);
        p.gamma2 = LaurentPoly::variable(Var::g2);
        p.lambda1 = l1 ? LaurentPoly::variable(Var::l1) : LaurentPoly(1);
        p.lambda2 = l2 ? LaurentPoly::variable(Var::l2) : LaurentPoly(1);
        bool pass = check_hopf_compat(p).all_hold;
        bool expect = (a == 0 && l1 == 0 && l2 == 0);
        if (pass != expect) return false;
      }
    }
  }
  // the surviving family really is a two-parameter gamma torus: a numeric
  // gamma choice passes as well
  EndoParams num;
  num.gamma1 = LaurentPoly(5);
  num.gamma2 = LaurentPoly(-3);
  if (!check_hopf_compat(num).all_hold) return false;
  if (!check_relations(num).all_hold) return false;
  return true;
}

bool criterion7() {
  int accepted = 0;
  bool id_ok = false, swap_ok = false;
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long c = 0; c <= 3; ++c)
        for (long d = 0; d <= 3; ++d) {
          PermCheckResult res =
              gl_nonneg_permutation(IntMatrix::from_rows({{a, b}, {c, d}}));
          if (res.accepted) {
            ++accepted;
            if (a == 1 && d == 1 && b == 0 && c == 0) id_ok = true;
            if (b == 1 && c == 1 && a == 0 && d == 0) swap_ok = true;
          }
        }
  return accepted == 2 && id_ok && swap_ok;
}

bool criterion8() {
  ReorderAuditReport rep = verify_commutation_lemmas(2);
  std::map<std::string, std::string> verdicts;
  std::map<std::string, const ReorderAuditReport::Identity*> by_id;
  for (const auto& id : rep.identities) {
    verdicts[id.id] = id.verdict;
    by_id[id.id] = &id;
    if (id.interpretable && !id.kernel_walk_agree) return false;
  }
  // documented typo corrections: the k-power move claim fails in s, the
  // first left reorder in its k-exponents; two claims are degree-incoherent
  const std::map<std::string, std::string> expected = {
      {"k-power-move", "mismatch"},     {"left-reorder-1", "mismatch"},
      {"left-reorder-2", "match"},      {"left-reorder-3", "match"},
      {"left-reorder-4", "match"},      {"left-reorder-5", "uninterpretable"},
      {"right-reorder-1", "match"},     {"right-reorder-2", "match"},
      {"right-reorder-3", "uninterpretable"},
  };
  if (verdicts != expected) return false;
  if (!by_id.at("k-power-move")->r_ok || by_id.at("k-power-move")->s_ok) return false;
  const auto* l1 = by_id.at("left-reorder-1");
  if (!l1->r_ok || !l1->s_ok || l1->k_ok) return false;
  return true;
}

bool criterion9() {
  std::mt19937_64 rng(777);
  auto pool = xvecs_up_to(4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> kexp(-2, 2), coef(-3, 3), val(1, 7);
  for (int pt_i = 0; pt_i < 5; ++pt_i) {
    RationalPoint pt = RationalPoint::all(Rational(val(rng), val(rng)),
                                          Rational(val(rng), val(rng)));
    for (int t = 0; t < 20; ++t) {
      int c = coef(rng);
      if (c == 0) c = 1;
      AlgebraElement a =
          AlgebraElement::monomial(PbwMonomial{pool[pick(rng)], kexp(rng), kexp(rng)}) +
          RatFunc(c) * AlgebraElement::monomial(
                           PbwMonomial{pool[pick(rng)], kexp(rng), kexp(rng)});
      AlgebraElement b = AlgebraElement::monomial(
          PbwMonomial{pool[pick(rng)], kexp(rng), kexp(rng)});
      RationalElement lhs = specialize(multiply(a, b), pt);
      RationalElement rhs =
          multiply_specialized(specialize(a, pt), specialize(b, pt), pt);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "confluence and basis certificate", criterion1);
  criterion(2, "PBW round trip and multiplication oracle", criterion2);
  criterion(3, "Hopf axioms and antipode errata", criterion3);
  criterion(4, "relation preservation matches the exponent lattice", criterion4);
  criterion(5, "weight equations single out the generators", criterion5);
  criterion(6, "Hopf rigidity: the surviving torus", criterion6);
  criterion(7, "nonnegative unimodular matrices are permutations", criterion7);
  criterion(8, "reorder identity audit", criterion8);
  criterion(9, "numeric specialization commutes", criterion9);
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}

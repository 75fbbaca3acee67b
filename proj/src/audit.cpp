#include <future>
#include <sstream>

#include "g2rs/endo.hpp"
#include "reorder_walk.hpp"

namespace g2rs {

namespace {

using detail::ReorderFactor;
using detail::ReorderForms;
using detail::reorder_walk;

struct CatalogEntry {
  std::string id;
  std::vector<ReorderFactor> lhs;
  LinForm r_claim, s_claim, k1_claim, k2_claim;
  std::string rhs_word;  // letters '1'/'2'
};

ReorderFactor fac(int pair, int letter) {
  // pair 1: (a, b) exponents, pair 2: (c, d); letter 0 means k's only
  ReorderFactor f;
  f.letter = letter;
  if (pair == 1) {
    f.k1f.c = {1, 0, 0, 0};
    f.k2f.c = {0, 1, 0, 0};
  } else {
    f.k1f.c = {0, 0, 1, 0};
    f.k2f.c = {0, 0, 0, 1};
  }
  return f;
}

LinForm lf(long a, long b, long c, long d) {
  LinForm f;
  f.c = {a, b, c, d};
  return f;
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  auto A = [](int letter) { return fac(1, letter); };
  auto C = [](int letter) { return fac(2, letter); };
  // products of theta(e1)-type and theta(e2)-type factors, claimed to equal
  // r^R s^S k1^K1 k2^K2 times the stated word
  out.push_back({"left-reorder-1",
                 {A(1), A(1), A(1), A(1), C(2)},
                 lf(6, 18, 4, 12),
                 lf(12, 18, 8, 12),
                 lf(1, 0, 1, 0),
                 lf(0, 1, 0, 1),
                 "11112"});
  out.push_back({"left-reorder-2",
                 {A(1), A(1), A(1), C(2), A(1)},
                 lf(3, 12, 3, 9),
                 lf(9, 15, 6, 9),
                 lf(4, 0, 1, 0),
                 lf(0, 4, 0, 1),
                 "11121"});
  out.push_back({"left-reorder-3",
                 {A(1), A(1), C(2), A(1), A(1)},
                 lf(0, 6, 2, 6),
                 lf(6, 12, 4, 6),
                 lf(4, 0, 1, 0),
                 lf(0, 4, 0, 1),
                 "11211"});
  out.push_back({"left-reorder-4",
                 {A(1), C(2), A(1), A(1), A(1)},
                 lf(-3, 0, 1, 3),
                 lf(3, 9, 2, 3),
                 lf(4, 0, 1, 0),
                 lf(0, 4, 0, 1),
                 "12111"});
  out.push_back({"left-reorder-5",
                 {C(2), A(0), A(0), A(0), A(0)},
                 lf(-6, -6, 0, 0),
                 lf(0, 6, 0, 0),
                 lf(4, 0, 1, 0),
                 lf(0, 4, 0, 1),
                 "21111"});
  out.push_back({"right-reorder-1",
                 {C(2), C(2), A(1)},
                 lf(-6, -12, -3, -6),
                 lf(-6, -6, -3, -3),
                 lf(1, 0, 2, 0),
                 lf(0, 1, 0, 2),
                 "221"});
  out.push_back({"right-reorder-2",
                 {C(2), A(1), C(2)},
                 lf(-3, -6, -2, -3),
                 lf(-3, -3, -1, 0),
                 lf(1, 0, 2, 0),
                 lf(0, 1, 0, 2),
                 "212"});
  out.push_back({"right-reorder-3",
                 {A(1), A(1), C(2), C(2)},
                 lf(0, 0, -1, 6),
                 lf(0, 0, 1, 3),
                 lf(1, 0, 2, 0),
                 lf(0, 1, 0, 2),
                 "122"});
  return out;
}

AlgebraElement gen_element(int letter) {
  return AlgebraElement::monomial(PbwMonomial::generator(letter == 1 ? 6 : 1));
}

AlgebraElement word_product(const std::string& w) {
  AlgebraElement out(1);
  for (char c : w) out = multiply(out, gen_element(c - '0'));
  return out;
}

LaurentPoly rs_mono(long re, long se) {
  ExpVec e{};
  e[static_cast<int>(Var::r)] = static_cast<int>(re);
  e[static_cast<int>(Var::s)] = static_cast<int>(se);
  return LaurentPoly::monomial(1, e);
}

// kernel product of the instantiated factors
AlgebraElement lhs_product(const std::vector<ReorderFactor>& fs, long a, long b,
                           long c, long d) {
  AlgebraElement out(1);
  for (const auto& f : fs) {
    AlgebraElement factor = AlgebraElement::monomial(PbwMonomial::k(
        static_cast<int>(f.k1f.eval(a, b, c, d)),
        static_cast<int>(f.k2f.eval(a, b, c, d))));
    if (f.letter != 0) factor = multiply(factor, gen_element(f.letter));
    out = multiply(out, factor);
  }
  return out;
}

template <typename Fn>
void for_each_tuple(int box, int threads, Fn&& fn) {
  // fn(a, b, c, d) must be thread safe when threads > 1
  if (threads <= 1) {
    for (long a = -box; a <= box; ++a)
      for (long b = -box; b <= box; ++b)
        for (long c = -box; c <= box; ++c)
          for (long d = -box; d <= box; ++d) fn(a, b, c, d);
    return;
  }
  std::vector<std::future<void>> futs;
  for (long a = -box; a <= box; ++a) {
    futs.push_back(std::async(std::launch::async, [a, box, &fn] {
      for (long b = -box; b <= box; ++b)
        for (long c = -box; c <= box; ++c)
          for (long d = -box; d <= box; ++d) fn(a, b, c, d);
    }));
    if (futs.size() >= static_cast<std::size_t>(threads)) {
      for (auto& f : futs) f.get();
      futs.clear();
    }
  }
  for (auto& f : futs) f.get();
}

ReorderAuditReport::Identity audit_k_move(int box) {
  ReorderAuditReport::Identity ent;
  ent.id = "k-power-move";
  ent.interpretable = true;
  // claimed exponent L(x, y, beta) with the same linear form under both the
  // r^-1 and the s^-2 base
  const std::array<long, 6> Lx = {-3, -2, -3, -1, 0, 1};
  const std::array<long, 6> Ly = {-6, -3, -3, 0, 3, 3};
  std::array<long, 6> claim_r_x{}, claim_r_y{}, claim_s_x{}, claim_s_y{};
  std::array<long, 6> true_r_x{}, true_r_y{}, true_s_x{}, true_s_y{};
  for (int i = 0; i < 6; ++i) {
    claim_r_x[i] = -Lx[i];
    claim_r_y[i] = -Ly[i];
    claim_s_x[i] = -2 * Lx[i];
    claim_s_y[i] = -2 * Ly[i];
    Weight w = root_weight(i + 1);
    true_r_x[i] = -w.p + 3 * w.q;
    true_r_y[i] = -3 * w.p + 6 * w.q;
    true_s_x[i] = -2 * w.p + 3 * w.q;
    true_s_y[i] = -3 * w.p + 3 * w.q;
  }
  ent.r_ok = (claim_r_x == true_r_x && claim_r_y == true_r_y);
  ent.s_ok = (claim_s_x == true_s_x && claim_s_y == true_s_y);
  ent.k_ok = true;  // the claim keeps k1^x k2^y unchanged on the right
  if (!ent.s_ok) {
    std::ostringstream os;
    os << "s-exponent differs; e.g. moving k1 past X1 computes s^"
       << true_s_x[0] << " but the claim gives s^" << claim_s_x[0];
    ent.detail = os.str();
  }
  // kernel confirmation over the box: k1^x k2^y X^beta vs the move scalar
  for (int x = -box; x <= box && ent.kernel_walk_agree; ++x) {
    for (int y = -box; y <= box && ent.kernel_walk_agree; ++y) {
      for (int d = 0; d <= 3; ++d) {
        for (int pp = 0; pp <= d; ++pp) {
          for (const auto& v : xvecs_of_weight({pp, d - pp})) {
            PbwMonomial xb{v, 0, 0};
            AlgebraElement lhs =
                multiply(AlgebraElement::monomial(PbwMonomial::k(x, y)),
                         AlgebraElement::monomial(xb));
            AlgebraElement rhs =
                RatFunc(k_move_scalar(xb.weight(), x, y)) *
                AlgebraElement::monomial(PbwMonomial{v, x, y});
            if (lhs != rhs) {
              ent.kernel_walk_agree = false;
              break;
            }
            ++ent.tuples_checked;
          }
        }
      }
    }
  }
  ent.verdict = (ent.r_ok && ent.s_ok && ent.k_ok) ? "match" : "mismatch";
  return ent;
}

}  // namespace

ReorderAuditReport verify_commutation_lemmas(int box, int threads) {
  if (box < 0) throw std::invalid_argument("negative box");
  precompute_straightening();
  ReorderAuditReport rep;
  rep.identities.push_back(audit_k_move(box));

  for (const auto& entry : catalog()) {
    ReorderAuditReport::Identity ent;
    ent.id = entry.id;

    std::string letters;
    for (const auto& f : entry.lhs)
      if (f.letter != 0) letters += static_cast<char>('0' + f.letter);
    if (letters != entry.rhs_word) {
      ent.interpretable = false;
      ent.reason = "left-hand letters " +
                   (letters.empty() ? std::string("(none)")
                                    : Word::from_letters(letters).str()) +
                   " do not spell the right-hand word " +
                   Word::from_letters(entry.rhs_word).str();
      ent.verdict = "uninterpretable";
      rep.identities.push_back(std::move(ent));
      continue;
    }

    ReorderForms truth = reorder_walk(entry.lhs);
    ent.r_ok = (truth.rexp == entry.r_claim);
    ent.s_ok = (truth.sexp == entry.s_claim);
    ent.k_ok =
        (truth.k1tot == entry.k1_claim && truth.k2tot == entry.k2_claim);
    std::ostringstream detail;
    if (!ent.r_ok)
      detail << "r-exponent: claimed " << entry.r_claim.str() << ", computed "
             << truth.rexp.str() << "; ";
    if (!ent.s_ok)
      detail << "s-exponent: claimed " << entry.s_claim.str() << ", computed "
             << truth.sexp.str() << "; ";
    if (!ent.k_ok)
      detail << "k-exponents: claimed (" << entry.k1_claim.str() << ", "
             << entry.k2_claim.str() << "), computed (" << truth.k1tot.str()
             << ", " << truth.k2tot.str() << ")";
    ent.detail = detail.str();

    // kernel ground truth over the box: the product must equal the walk form
    std::atomic<bool> agree{true};
    std::atomic<long> tuples{0};
    AlgebraElement word_elem = word_product(entry.rhs_word);
    for_each_tuple(box, threads, [&](long a, long b, long c, long d) {
      if (!agree.load(std::memory_order_relaxed)) return;
      AlgebraElement lhs = lhs_product(entry.lhs, a, b, c, d);
      AlgebraElement rhs =
          RatFunc(rs_mono(truth.rexp.eval(a, b, c, d),
                          truth.sexp.eval(a, b, c, d))) *
          multiply(AlgebraElement::monomial(PbwMonomial::k(
                       static_cast<int>(truth.k1tot.eval(a, b, c, d)),
                       static_cast<int>(truth.k2tot.eval(a, b, c, d)))),
                   word_elem);
      if (lhs != rhs) agree.store(false, std::memory_order_relaxed);
      tuples.fetch_add(1, std::memory_order_relaxed);
    });
    ent.kernel_walk_agree = agree.load();
    ent.tuples_checked = tuples.load();
    ent.verdict = (ent.r_ok && ent.s_ok && ent.k_ok) ? "match" : "mismatch";
    if (!ent.kernel_walk_agree) ent.verdict = "internal-error";
    rep.identities.push_back(std::move(ent));
  }
  return rep;
}

}  // namespace g2rs

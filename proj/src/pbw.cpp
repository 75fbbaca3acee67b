#include "g2rs/pbw.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>

namespace g2rs {

namespace {

constexpr std::array<Weight, 6> kRootWeights = {
    Weight{0, 1}, Weight{1, 1}, Weight{3, 2},
    Weight{2, 1}, Weight{3, 1}, Weight{1, 0}};

// q-bracket [a, b]_c = a b - c b a in the free algebra
FreeElement bracket(const FreeElement& a, const FreeElement& b,
                    const RatFunc& c) {
  return a * b - c * (b * a);
}

}  // namespace

Weight root_weight(int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("root index out of range");
  return kRootWeights[static_cast<std::size_t>(i - 1)];
}

const FreeElement& root_vector(int i) {
  static const std::array<FreeElement, 6> table = [] {
    const RatFunc r = RatFunc::variable(Var::r);
    const RatFunc s = RatFunc::variable(Var::s);
    FreeElement e1 = FreeElement::word(Word::e1());
    FreeElement e2 = FreeElement::word(Word::e2());
    std::array<FreeElement, 6> t;
    t[0] = e2;                                    // X1
    t[5] = e1;                                    // X6
    t[1] = bracket(e1, e2, s * s * s);            // X2 = e1 e2 - s^3 e2 e1
    t[3] = bracket(e1, t[1], r * s * s);          // X4
    t[4] = bracket(e1, t[3], r * r * s);          // X5
    t[2] = bracket(t[3], t[1], r * r * s);        // X3
    return t;
  }();
  if (i < 1 || i > 6) throw std::invalid_argument("root index out of range");
  return table[static_cast<std::size_t>(i - 1)];
}

PbwMonomial PbwMonomial::generator(int i, int e) {
  if (i < 1 || i > 6) throw std::invalid_argument("root index out of range");
  if (e < 0) throw std::invalid_argument("negative root-vector exponent");
  PbwMonomial m;
  m.x[static_cast<std::size_t>(i - 1)] = e;
  return m;
}

int PbwMonomial::e_degree() const {
  int d = 0;
  for (int i = 0; i < 6; ++i)
    d += x[static_cast<std::size_t>(i)] * kRootWeights[i].degree();
  return d;
}

Weight PbwMonomial::weight() const {
  Weight w;
  for (int i = 0; i < 6; ++i) {
    w.p += x[static_cast<std::size_t>(i)] * kRootWeights[i].p;
    w.q += x[static_cast<std::size_t>(i)] * kRootWeights[i].q;
  }
  return w;
}

bool PbwMonomial::is_x_free() const {
  return std::all_of(x.begin(), x.end(), [](int e) { return e == 0; });
}

bool PbwMonomial::operator<(const PbwMonomial& o) const {
  int da = e_degree(), db = o.e_degree();
  if (da != db) return da < db;
  if (x != o.x) return x < o.x;
  if (m != o.m) return m < o.m;
  return n < o.n;
}

std::string PbwMonomial::str() const {
  std::string out;
  auto app = [&out](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (int i = 0; i < 6; ++i)
    app("X" + std::to_string(i + 1), x[static_cast<std::size_t>(i)]);
  app("k1", m);
  app("k2", n);
  return out.empty() ? "1" : out;
}

AlgebraElement::AlgebraElement(long v) {
  if (v != 0) terms_[PbwMonomial::one()] = RatFunc(v);
}

AlgebraElement::AlgebraElement(const RatFunc& c) {
  if (!c.is_zero()) terms_[PbwMonomial::one()] = c;
}

AlgebraElement AlgebraElement::monomial(const PbwMonomial& mono,
                                        RatFunc coeff) {
  AlgebraElement e;
  e.add_term(mono, coeff);
  return e;
}

RatFunc AlgebraElement::coeff(const PbwMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::pair<PbwMonomial, RatFunc> AlgebraElement::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

void AlgebraElement::add_term(const PbwMonomial& mono, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement e;
  for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
  return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement operator*(const RatFunc& c, const AlgebraElement& a) {
  AlgebraElement e;
  for (const auto& [m, cm] : a.terms()) e.add_term(m, c * cm);
  return e;
}

bool AlgebraElement::homogeneous_weight(Weight* out) const {
  if (terms_.empty()) return true;
  Weight w0 = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_)
    if (!(m.weight() == w0)) return false;
  if (out) *out = w0;
  return true;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string ms = m.str();
    bool needs_parens = cs.find(" + ") != std::string::npos ||
                        cs.find(" - ") != std::string::npos;
    if (ms == "1") {
      os << (needs_parens && false ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      os << ms;
    } else if (needs_parens) {
      os << "(" << cs << ")*" << ms;
    } else {
      os << cs << "*" << ms;
    }
  }
  return os.str();
}

LaurentPoly k_move_scalar(Weight w, int m, int n) {
  ExpVec e{};
  e[static_cast<int>(Var::r)] = m * (-w.p + 3 * w.q) + n * (-3 * w.p + 6 * w.q);
  e[static_cast<int>(Var::s)] = m * (-2 * w.p + 3 * w.q) + n * (-3 * w.p + 3 * w.q);
  return LaurentPoly::monomial(1, e);
}

std::vector<XExps> xvecs_of_weight(Weight w) {
  std::vector<XExps> out;
  XExps acc{};
  auto rec = [&](auto&& self, int i, int p, int q) -> void {
    if (i == 6) {
      if (p == 0 && q == 0) out.push_back(acc);
      return;
    }
    Weight rw = kRootWeights[static_cast<std::size_t>(i)];
    int maxk = std::numeric_limits<int>::max();
    if (rw.p > 0) maxk = p / rw.p;
    if (rw.q > 0) maxk = std::min(maxk, q / rw.q);
    if (rw.p == 0 && rw.q == 0) maxk = 0;
    for (int k = 0; k <= maxk; ++k) {
      acc[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, p - k * rw.p, q - k * rw.q);
    }
    acc[static_cast<std::size_t>(i)] = 0;
  };
  if (w.p >= 0 && w.q >= 0) rec(rec, 0, w.p, w.q);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Irreducible words of the given weight w.r.t. the default system, sorted.
std::vector<Word> irreducible_words(Weight w) {
  const auto& rules = default_system().rules();
  std::vector<Word> out;
  int nrl = w.p + w.q;
  std::string word(static_cast<std::size_t>(nrl), '1');
  // enumerate positions of the q letters '2'
  std::vector<int> pos(static_cast<std::size_t>(w.q));
  auto emit = [&]() {
    std::string ww = word;
    for (int p : pos) ww[static_cast<std::size_t>(p)] = '2';
    for (const auto& rule : rules)
      if (ww.find(rule.lhs.letters()) != std::string::npos) return;
    out.push_back(Word::from_letters(ww));
  };
  auto rec = [&](auto&& self, int idx, int start) -> void {
    if (idx == w.q) {
      emit();
      return;
    }
    for (int p = start; p <= nrl - (w.q - idx); ++p) {
      pos[static_cast<std::size_t>(idx)] = p;
      self(self, idx + 1, p + 1);
    }
  };
  if (w.q == 0)
    emit();
  else
    rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// NF of the free-algebra image of an X-exponent vector, memoized.
const FreeElement& nf_image(const XExps& v) {
  static std::map<XExps, FreeElement> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(v);
  if (it != cache.end()) return it->second;
  FreeElement img = FreeElement::one();
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < v[static_cast<std::size_t>(i)]; ++k)
      img = img * root_vector(i + 1);
  auto [pos, ok] = cache.emplace(v, default_reducer().normal_form(img));
  return pos->second;
}

LaurentPoly clear_denominators_row(std::vector<RatFunc>& row) {
  std::map<int, int> fmax;
  BigInt ilcm = 1;
  for (const auto& c : row) {
    for (const auto& [i, e] : c.den_factors())
      fmax[i] = std::max(fmax[i], e);
    ilcm = boost::multiprecision::lcm(ilcm, c.den_int());
  }
  RatFunc mult{LaurentPoly(ilcm)};
  for (const auto& [i, e] : fmax)
    mult *= RatFunc(factor_registry::factor(i).pow(e));
  LaurentPoly den = mult.as_laurent();
  for (auto& c : row) c *= mult;
  return den;
}

// Solve M c = b exactly by fraction-free elimination (Bareiss).  Entries come
// in as rational functions; rows are cleared to the Laurent ring first, so
// every interior division is exact.  Back substitution divides in the
// fraction field only when a solution genuinely leaves the ring.
std::vector<RatFunc> solve_fraction_free(
    std::vector<std::vector<RatFunc>> mrows, std::vector<RatFunc> brow) {
  const std::size_t nn = mrows.size();
  std::vector<std::vector<LaurentPoly>> M(nn);
  std::vector<LaurentPoly> b(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    mrows[i].push_back(brow[i]);
    clear_denominators_row(mrows[i]);
    M[i].reserve(nn);
    for (std::size_t j = 0; j < nn; ++j)
      M[i].push_back(mrows[i][j].as_laurent());
    b[i] = mrows[i][nn].as_laurent();
  }
  auto exact_div = [](const LaurentPoly& p, const LaurentPoly& q) {
    auto r = LaurentPoly::divide_exact(p, q);
    if (!r) throw std::logic_error("fraction-free elimination: division not exact");
    return *r;
  };
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < nn; ++k) {
    std::size_t piv = k;
    while (piv < nn && M[piv][k].is_zero()) ++piv;
    if (piv == nn) throw std::logic_error("singular straightening system");
    std::swap(M[piv], M[k]);
    std::swap(b[piv], b[k]);
    for (std::size_t i = k + 1; i < nn; ++i) {
      for (std::size_t j = k + 1; j < nn; ++j)
        M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      b[i] = exact_div(M[k][k] * b[i] - M[i][k] * b[k], prev);
      M[i][k] = LaurentPoly();
    }
    prev = M[k][k];
  }
  std::vector<RatFunc> xs(nn);
  for (std::size_t ii = nn; ii-- > 0;) {
    RatFunc acc{b[ii]};
    for (std::size_t j = ii + 1; j < nn; ++j)
      acc -= RatFunc(M[ii][j]) * xs[j];
    if (M[ii][ii].is_zero())
      throw std::logic_error("singular straightening system");
    if (acc.is_ring()) {
      auto q = LaurentPoly::divide_exact(acc.as_laurent(), M[ii][ii]);
      if (q) {
        xs[ii] = RatFunc(std::move(*q));
        continue;
      }
    }
    xs[ii] = acc / RatFunc(M[ii][ii]);
  }
  return xs;
}

AlgebraElement solve_component(const FreeElement& comp, Weight w) {
  auto cands = xvecs_of_weight(w);
  auto words = irreducible_words(w);
  if (cands.size() != words.size())
    throw std::logic_error("bigraded dimension mismatch (broken system)");
  if (cands.empty()) {
    if (!comp.is_zero())
      throw std::logic_error("nonzero component with no candidates");
    return AlgebraElement();
  }
  for (const auto& [word, c] : comp.terms())
    if (!std::binary_search(words.begin(), words.end(), word))
      throw std::logic_error("component contains a reducible word");
  std::vector<std::vector<RatFunc>> M(words.size());
  std::vector<RatFunc> b(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    M[i].reserve(cands.size());
    for (const auto& cand : cands)
      M[i].push_back(nf_image(cand).coeff(words[i]));
    b[i] = comp.coeff(words[i]);
  }
  auto xs = solve_fraction_free(std::move(M), std::move(b));
  AlgebraElement out;
  for (std::size_t j = 0; j < cands.size(); ++j)
    out.add_term(PbwMonomial{cands[j], 0, 0}, xs[j]);
  return out;
}

}  // namespace

FreeElement pbw_to_free(const AlgebraElement& x) {
  FreeElement out;
  for (const auto& [mono, c] : x.terms()) {
    if (!mono.is_k_free())
      throw std::invalid_argument(
          "free algebra carries no k generators (nonzero k-exponent)");
    FreeElement img = FreeElement::one();
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < mono.x[static_cast<std::size_t>(i)]; ++k)
        img = img * root_vector(i + 1);
    out += c * img;
  }
  return out;
}

AlgebraElement free_to_pbw(const FreeElement& f) {
  FreeElement nf = default_reducer().normal_form(f);
  std::map<std::pair<int, int>, FreeElement> comps;
  for (const auto& [w, c] : nf.terms())
    comps[w.weight()].add_term(w, c);
  AlgebraElement out;
  for (const auto& [wq, comp] : comps)
    out += solve_component(comp, Weight{wq.first, wq.second});
  return out;
}

namespace {

struct StraighteningTable {
  std::mutex mu;
  std::map<std::pair<int, int>, AlgebraElement> entries;

  const AlgebraElement& get(int i, int j) {
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(i, j);
    auto it = entries.find(key);
    if (it != entries.end()) return it->second;
    FreeElement prod = root_vector(j) * root_vector(i);
    AlgebraElement pbw = free_to_pbw(prod);
    // cross-check against the reduction oracle
    FreeElement back = default_reducer().normal_form(pbw_to_free(pbw));
    FreeElement direct = default_reducer().normal_form(prod);
    if (!(back == direct))
      throw std::logic_error("straightening entry fails the reduction oracle");
    return entries.emplace(key, std::move(pbw)).first->second;
  }
};

StraighteningTable& table() {
  static StraighteningTable t;
  return t;
}

using XSeq = std::vector<signed char>;

XSeq expand_seq(const XExps& x) {
  XSeq s;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < x[static_cast<std::size_t>(i)]; ++k)
      s.push_back(static_cast<signed char>(i + 1));
  return s;
}

XExps collect_seq(const XSeq& s) {
  XExps x{};
  for (signed char c : s) ++x[static_cast<std::size_t>(c - 1)];
  return x;
}

// Product of two sorted X-monomials as a k-free element, by repeated
// replacement of adjacent inversions through the straightening table.
// Memoized per thread; results are k-independent.
const AlgebraElement& x_mul(const XExps& a, const XExps& b) {
  thread_local std::map<std::pair<XExps, XExps>, AlgebraElement> cache;
  auto key = std::make_pair(a, b);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  AlgebraElement out;
  XSeq init = expand_seq(a);
  XSeq tail = expand_seq(b);
  init.insert(init.end(), tail.begin(), tail.end());
  std::vector<std::pair<RatFunc, XSeq>> work;
  work.emplace_back(RatFunc(1), std::move(init));
  long budget = 10'000'000;
  while (!work.empty()) {
    if (--budget < 0) throw std::logic_error("straightening step budget exceeded");
    auto [coeff, seq] = std::move(work.back());
    work.pop_back();
    std::size_t inv = seq.size();
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
      if (seq[t] > seq[t + 1]) {
        inv = t;
        break;
      }
    }
    if (inv == seq.size()) {
      out.add_term(PbwMonomial{collect_seq(seq), 0, 0}, coeff);
      continue;
    }
    int j = seq[inv], i = seq[inv + 1];
    const AlgebraElement& entry = straighten_pair(i, j);
    for (const auto& [mono, c] : entry.terms()) {
      XSeq next(seq.begin(), seq.begin() + static_cast<long>(inv));
      XSeq mid = expand_seq(mono.x);
      next.insert(next.end(), mid.begin(), mid.end());
      next.insert(next.end(), seq.begin() + static_cast<long>(inv) + 2,
                  seq.end());
      work.emplace_back(coeff * c, std::move(next));
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

const AlgebraElement& straighten_pair(int i, int j) {
  if (!(1 <= i && i < j && j <= 6))
    throw std::invalid_argument("straighten_pair requires 1 <= i < j <= 6");
  return table().get(i, j);
}

void precompute_straightening() {
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) straighten_pair(i, j);
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      RatFunc scalar = ca * cb * RatFunc(k_move_scalar(mb.weight(), ma.m, ma.n));
      const AlgebraElement& xprod = x_mul(ma.x, mb.x);
      for (const auto& [mx, cx] : xprod.terms())
        out.add_term(PbwMonomial{mx.x, ma.m + mb.m, ma.n + mb.n}, scalar * cx);
    }
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

long graded_dimension(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  static const int degs[6] = {1, 2, 5, 3, 4, 1};
  std::vector<long> dp(static_cast<std::size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int d : degs)
    for (int i = d; i <= n; ++i)
      dp[static_cast<std::size_t>(i)] += dp[static_cast<std::size_t>(i - d)];
  return dp[static_cast<std::size_t>(n)];
}

RationalElement specialize(const AlgebraElement& x, const RationalPoint& pt) {
  RationalElement out;
  for (const auto& [m, c] : x.terms()) {
    Rational v = c.evaluate(pt);
    if (v != 0) out[m] = v;
  }
  return out;
}

RationalElement multiply_specialized(const RationalElement& a,
                                     const RationalElement& b,
                                     const RationalPoint& pt) {
  precompute_straightening();
  auto add = [](RationalElement& e, const PbwMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = e.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) e.erase(it);
    }
  };
  RationalElement out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Rational scalar =
          ca * cb * k_move_scalar(mb.weight(), ma.m, ma.n).evaluate(pt);
      std::vector<std::pair<Rational, XSeq>> work;
      XSeq seq = expand_seq(ma.x);
      XSeq tail = expand_seq(mb.x);
      seq.insert(seq.end(), tail.begin(), tail.end());
      work.emplace_back(scalar, std::move(seq));
      while (!work.empty()) {
        auto [coeff, sq] = std::move(work.back());
        work.pop_back();
        std::size_t inv = sq.size();
        for (std::size_t t = 0; t + 1 < sq.size(); ++t)
          if (sq[t] > sq[t + 1]) {
            inv = t;
            break;
          }
        if (inv == sq.size()) {
          add(out, PbwMonomial{collect_seq(sq), ma.m + mb.m, ma.n + mb.n},
              coeff);
          continue;
        }
        int j = sq[inv], i = sq[inv + 1];
        for (const auto& [mono, c] : straighten_pair(i, j).terms()) {
          XSeq next(sq.begin(), sq.begin() + static_cast<long>(inv));
          XSeq mid = expand_seq(mono.x);
          next.insert(next.end(), mid.begin(), mid.end());
          next.insert(next.end(), sq.begin() + static_cast<long>(inv) + 2,
                      sq.end());
          work.emplace_back(coeff * c.evaluate(pt), std::move(next));
        }
      }
    }
  }
  return out;
}

std::string rational_element_str(const RationalElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x) {
    Rational a = c;
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
    std::string ms = m.str();
    std::ostringstream cs;
    cs << a;
    if (ms == "1")
      os << cs.str();
    else if (a == 1)
      os << ms;
    else
      os << cs.str() << "*" << ms;
  }
  return os.str();
}

}  // namespace g2rs

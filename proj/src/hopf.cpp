#include "g2rs/hopf.hpp"

#include <random>
#include <sstream>

namespace g2rs {

namespace {

AlgebraElement gen_e1() {
  return AlgebraElement::monomial(PbwMonomial::generator(6));
}
AlgebraElement gen_e2() {
  return AlgebraElement::monomial(PbwMonomial::generator(1));
}
AlgebraElement gen_k(int m, int n) {
  return AlgebraElement::monomial(PbwMonomial::k(m, n));
}

const TensorElement& delta_e1() {
  static const TensorElement t = [] {
    TensorElement t;
    t.add_term({PbwMonomial::generator(6), PbwMonomial::one()}, RatFunc(1));
    t.add_term({PbwMonomial::k(2, -1), PbwMonomial::generator(6)}, RatFunc(1));
    return t;
  }();
  return t;
}

const TensorElement& delta_e2() {
  static const TensorElement t = [] {
    TensorElement t;
    t.add_term({PbwMonomial::generator(1), PbwMonomial::one()}, RatFunc(1));
    t.add_term({PbwMonomial::k(-3, 2), PbwMonomial::generator(1)}, RatFunc(1));
    return t;
  }();
  return t;
}

}  // namespace

TensorElement TensorElement::tensor(const AlgebraElement& a,
                                    const AlgebraElement& b) {
  TensorElement t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.add_term({ma, mb}, ca * cb);
  return t;
}

void TensorElement::add_term(const Key& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement TensorElement::operator-() const {
  TensorElement t;
  for (const auto& [k, c] : terms_) t.terms_.emplace(k, -c);
  return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      AlgebraElement left = multiply(AlgebraElement::monomial(ka.first),
                                     AlgebraElement::monomial(kb.first));
      AlgebraElement right = multiply(AlgebraElement::monomial(ka.second),
                                      AlgebraElement::monomial(kb.second));
      RatFunc c = ca * cb;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms())
          out.add_term({ml, mr}, c * cl * cr);
    }
  }
  return out;
}

TensorElement TensorElement::flip() const {
  TensorElement t;
  for (const auto& [k, c] : terms_) t.add_term({k.second, k.first}, c);
  return t;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool needs_parens = cs.find(" + ") != std::string::npos ||
                        cs.find(" - ") != std::string::npos;
    if (cs != "1") {
      if (needs_parens)
        os << "(" << cs << ")*";
      else
        os << cs << "*";
    }
    os << k.first.str() << " (x) " << k.second.str();
  }
  return os.str();
}

TensorElement coproduct(const AlgebraElement& x) {
  TensorElement out;
  for (const auto& [mono, c] : x.terms()) {
    // X part through its generator-word expansion
    AlgebraElement xpart = AlgebraElement::monomial({mono.x, 0, 0});
    TensorElement dx;
    if (mono.is_x_free()) {
      dx.add_term({PbwMonomial::one(), PbwMonomial::one()}, RatFunc(1));
    } else {
      FreeElement words = pbw_to_free(xpart);
      for (const auto& [w, cw] : words.terms()) {
        TensorElement dw;
        dw.add_term({PbwMonomial::one(), PbwMonomial::one()}, RatFunc(1));
        for (std::size_t i = 0; i < w.size(); ++i)
          dw = dw * (w.at(i) == 1 ? delta_e1() : delta_e2());
        for (const auto& [k, cc] : dw.terms())
          dx.add_term(k, cc * cw);
      }
    }
    // group-like k part
    TensorElement dk;
    dk.add_term({PbwMonomial::k(mono.m, mono.n), PbwMonomial::k(mono.m, mono.n)},
                c);
    out += dx * dk;
  }
  return out;
}

RatFunc counit(const AlgebraElement& x) {
  RatFunc out;
  for (const auto& [mono, c] : x.terms())
    if (mono.is_x_free()) out += c;
  return out;
}

namespace {

const AlgebraElement& antipode_e1() {
  static const AlgebraElement a =
      RatFunc(-1) * multiply(gen_k(-2, 1), gen_e1());
  return a;
}
const AlgebraElement& antipode_e2() {
  static const AlgebraElement a =
      RatFunc(-1) * multiply(gen_k(3, -2), gen_e2());
  return a;
}

// Anti-homomorphism determined by images of e1, e2 (k's map to inverses).
AlgebraElement antimap(const AlgebraElement& x, const AlgebraElement& se1,
                       const AlgebraElement& se2) {
  AlgebraElement out;
  for (const auto& [mono, c] : x.terms()) {
    AlgebraElement acc = AlgebraElement::monomial(PbwMonomial::k(-mono.m, -mono.n));
    if (!mono.is_x_free()) {
      AlgebraElement xpart = AlgebraElement::monomial({mono.x, 0, 0});
      FreeElement words = pbw_to_free(xpart);
      AlgebraElement ximg;
      for (const auto& [w, cw] : words.terms()) {
        AlgebraElement prod = 1;
        for (std::size_t i = w.size(); i-- > 0;)
          prod = multiply(prod, w.at(i) == 1 ? se1 : se2);
        ximg += cw * prod;
      }
      acc = multiply(acc, ximg);
    }
    out += c * acc;
  }
  return out;
}

}  // namespace

AlgebraElement antipode(const AlgebraElement& x) {
  return antimap(x, antipode_e1(), antipode_e2());
}

bool HopfAxiomReport::errata_nonempty() const {
  for (const auto& v : antipode_variants)
    if (!v.claimed_satisfies_axiom) return true;
  return false;
}

namespace {

// Triple tensors, needed only for the coassociativity check.
using Key3 = std::array<PbwMonomial, 3>;
using Tensor3 = std::map<Key3, RatFunc>;

void add3(Tensor3& t, const Key3& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

Tensor3 delta_left(const TensorElement& t) {
  Tensor3 out;
  for (const auto& [k, c] : t.terms()) {
    TensorElement dl = coproduct(AlgebraElement::monomial(k.first));
    for (const auto& [kl, cl] : dl.terms())
      add3(out, {kl.first, kl.second, k.second}, c * cl);
  }
  return out;
}

Tensor3 delta_right(const TensorElement& t) {
  Tensor3 out;
  for (const auto& [k, c] : t.terms()) {
    TensorElement dr = coproduct(AlgebraElement::monomial(k.second));
    for (const auto& [kr, cr] : dr.terms())
      add3(out, {k.first, kr.first, kr.second}, c * cr);
  }
  return out;
}

AlgebraElement collapse_counit_left(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms())
    out += (c * counit(AlgebraElement::monomial(k.first))) *
           AlgebraElement::monomial(k.second);
  return out;
}

AlgebraElement collapse_counit_right(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms())
    out += (c * counit(AlgebraElement::monomial(k.second))) *
           AlgebraElement::monomial(k.first);
  return out;
}

AlgebraElement collapse_antipode(const TensorElement& t,
                                 const AlgebraElement& se1,
                                 const AlgebraElement& se2, bool left) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) {
    AlgebraElement l = AlgebraElement::monomial(k.first);
    AlgebraElement r = AlgebraElement::monomial(k.second);
    out += c * multiply(left ? antimap(l, se1, se2) : l,
                        left ? r : antimap(r, se1, se2));
  }
  return out;
}

}  // namespace

HopfAxiomReport check_hopf_axioms(int max_degree, unsigned long seed) {
  if (max_degree > 4)
    throw std::invalid_argument("axiom check bounded at degree 4");
  HopfAxiomReport rep;
  rep.max_degree = max_degree;

  std::vector<PbwMonomial> basis;
  for (int d = 0; d <= max_degree; ++d) {
    for (int p = 0; p <= d; ++p) {
      for (const auto& v : xvecs_of_weight({p, d - p})) {
        for (int m = -1; m <= 1; ++m)
          for (int n = -1; n <= 1; ++n) basis.push_back(PbwMonomial{v, m, n});
      }
    }
  }

  for (const auto& mono : basis) {
    AlgebraElement x = AlgebraElement::monomial(mono);
    TensorElement dx = coproduct(x);
    ++rep.monomials_checked;
    if (delta_left(dx) != delta_right(dx)) {
      rep.coassoc_ok = false;
      rep.failures.push_back("coassociativity fails on " + mono.str());
    }
    if (collapse_counit_left(dx) != x || collapse_counit_right(dx) != x) {
      rep.counit_ok = false;
      rep.failures.push_back("counit law fails on " + mono.str());
    }
    AlgebraElement target = AlgebraElement(counit(x));
    if (collapse_antipode(dx, antipode_e1(), antipode_e2(), true) != target ||
        collapse_antipode(dx, antipode_e1(), antipode_e2(), false) != target) {
      rep.antipode_ok = false;
      rep.failures.push_back("antipode axiom fails on " + mono.str());
    }
  }

  // homomorphism / anti-homomorphism spot checks on random pairs
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < 20 && !basis.empty(); ++t) {
    AlgebraElement x = AlgebraElement::monomial(basis[pick(rng)]);
    AlgebraElement y = AlgebraElement::monomial(basis[pick(rng)]);
    AlgebraElement xy = multiply(x, y);
    if (coproduct(xy) != coproduct(x) * coproduct(y)) {
      rep.hom_ok = false;
      rep.failures.push_back("coproduct not multiplicative on sample");
    }
    if (counit(xy) != counit(x) * counit(y)) {
      rep.hom_ok = false;
      rep.failures.push_back("counit not multiplicative on sample");
    }
    if (antipode(xy) != multiply(antipode(y), antipode(x))) {
      rep.hom_ok = false;
      rep.failures.push_back("antipode not anti-multiplicative on sample");
    }
  }

  // audit catalogued antipode values against the axiom
  auto audit = [&rep](const std::string& name, const AlgebraElement& gen,
                      const AlgebraElement& claimed_se1,
                      const AlgebraElement& claimed_se2,
                      const AlgebraElement& derived) {
    TensorElement dg = coproduct(gen);
    AlgebraElement lhs = collapse_antipode(dg, claimed_se1, claimed_se2, true);
    AlgebraElement target = AlgebraElement(counit(gen));
    HopfAxiomReport::AntipodeVariant v;
    v.generator = name;
    v.claimed = (name == "e1" ? claimed_se1 : claimed_se2).str();
    v.derived = derived.str();
    v.claimed_satisfies_axiom = (lhs == target);
    rep.antipode_variants.push_back(std::move(v));
  };
  // catalogued values: S(e1) = -k1^2 k2^-1 e1, S(e2) = -k1^-3 k2^2 e2
  AlgebraElement claimed_se1 = RatFunc(-1) * multiply(gen_k(2, -1), gen_e1());
  AlgebraElement claimed_se2 = RatFunc(-1) * multiply(gen_k(-3, 2), gen_e2());
  audit("e1", gen_e1(), claimed_se1, claimed_se2, antipode_e1());
  audit("e2", gen_e2(), claimed_se1, claimed_se2, antipode_e2());

  return rep;
}

}  // namespace g2rs

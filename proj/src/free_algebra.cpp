#include "g2rs/free_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace g2rs {

namespace {
constexpr long kStepBudget = 50'000'000;
}

Word Word::from_letters(std::string letters) {
  for (char c : letters)
    if (c != '1' && c != '2')
      throw std::invalid_argument("word letters must be '1' or '2'");
  return Word(std::move(letters));
}

std::pair<int, int> Word::weight() const {
  int p = 0, q = 0;
  for (char c : letters_) (c == '1' ? p : q)++;
  return {p, q};
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (char c : letters_) {
    if (!out.empty()) out += "*";
    out += (c == '1') ? "e1" : "e2";
  }
  return out;
}

FreeElement FreeElement::word(const Word& w, RatFunc c) {
  FreeElement e;
  e.add_term(w, c);
  return e;
}

RatFunc FreeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

const Word& FreeElement::leading_word() const {
  if (terms_.empty()) throw std::logic_error("leading word of zero");
  return terms_.rbegin()->first;
}

void FreeElement::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeElement FreeElement::operator-() const {
  FreeElement e;
  for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
  return e;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement e;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) e.add_term(wa + wb, ca * cb);
  return e;
}

FreeElement operator*(const RatFunc& c, const FreeElement& a) {
  FreeElement e;
  for (const auto& [w, cw] : a.terms_) e.add_term(w, c * cw);
  return e;
}

bool FreeElement::homogeneous_weight(std::pair<int, int>* out) const {
  if (terms_.empty()) return true;
  auto w0 = terms_.begin()->first.weight();
  for (const auto& [w, c] : terms_)
    if (w.weight() != w0) return false;
  if (out) *out = w0;
  return true;
}

std::string FreeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool simple = (cs == "1");
    bool needs_parens = cs.find(" + ") != std::string::npos ||
                        cs.find(" - ") != std::string::npos;
    if (!simple) {
      if (needs_parens)
        os << "(" << cs << ")*";
      else
        os << cs << "*";
    }
    os << w.str();
  }
  return os.str();
}

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules) {
  for (auto& r : rules) add_rule(std::move(r));
}

void RewriteSystem::add_rule(RewriteRule rule) {
  for (const auto& [w, c] : rule.rhs.terms()) {
    if (!(w < rule.lhs))
      throw std::invalid_argument("rule rhs word not smaller than lhs");
  }
  for (const auto& r : rules_)
    if (r.lhs == rule.lhs)
      throw std::invalid_argument("duplicate rule lhs " + rule.lhs.str());
  rules_.push_back(std::move(rule));
}

std::shared_ptr<const FreeElement> Reducer::reduce_word(const Word& w) const {
  // mu_ is held by the caller.
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;

  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& rule : sys_.rules()) {
      if (rule.lhs.size() > w.size() - pos) continue;
      if (w.subword(pos, rule.lhs.size()) != rule.lhs) continue;
      if (++steps_ > kStepBudget)
        throw std::logic_error("reduction step budget exceeded");
      Word prefix = w.subword(0, pos);
      Word suffix = w.subword(pos + rule.lhs.size(),
                              w.size() - pos - rule.lhs.size());
      FreeElement out;
      for (const auto& [t, c] : rule.rhs.terms()) {
        auto sub = reduce_word(prefix + t + suffix);
        for (const auto& [sw, sc] : sub->terms()) out.add_term(sw, sc * c);
      }
      auto sp = std::make_shared<const FreeElement>(std::move(out));
      cache_.emplace(w, sp);
      return sp;
    }
  }
  auto sp = std::make_shared<const FreeElement>(FreeElement::word(w));
  cache_.emplace(w, sp);
  return sp;
}

FreeElement Reducer::normal_form_word(const Word& w) const {
  std::lock_guard<std::mutex> lk(mu_);
  steps_ = 0;
  return *reduce_word(w);
}

FreeElement Reducer::normal_form(const FreeElement& x) const {
  std::lock_guard<std::mutex> lk(mu_);
  steps_ = 0;
  FreeElement out;
  for (const auto& [w, c] : x.terms()) {
    auto nf = reduce_word(w);
    for (const auto& [sw, sc] : nf->terms()) out.add_term(sw, sc * c);
  }
  return out;
}

FreeElement normal_form(const FreeElement& x, const RewriteSystem& sys) {
  return Reducer(sys).normal_form(x);
}

FreeElement quantum_serre_relation(int degree) {
  const RatFunc r = RatFunc::variable(Var::r);
  const RatFunc s = RatFunc::variable(Var::s);
  auto W = [](const char* l) { return Word::from_letters(l); };
  if (degree == 3) {
    // e2^2 e1 - (r^-3 + s^-3) e2 e1 e2 + r^-3 s^-3 e1 e2^2
    RatFunc c1 = RatFunc::variable(Var::r, -3) + RatFunc::variable(Var::s, -3);
    RatFunc c2 = RatFunc::variable(Var::r, -3) * RatFunc::variable(Var::s, -3);
    FreeElement e;
    e.add_term(W("221"), 1);
    e.add_term(W("212"), -c1);
    e.add_term(W("122"), c2);
    return e;
  }
  if (degree == 5) {
    // e1^4 e2 - [4] e1^3 e2 e1 + rs[4;2] e1^2 e2 e1^2
    //         - r^3 s^3 [4] e1 e2 e1^3 + r^6 s^6 e2 e1^4
    // with [4] = (r+s)(r^2+s^2) and [4;2] = (r^2+s^2)(r^2+rs+s^2).
    RatFunc a = (r + s) * (r * r + s * s);
    RatFunc b = r * s * (r * r + s * s) * (r * r + r * s + s * s);
    RatFunc c = RatFunc::variable(Var::r, 3) * RatFunc::variable(Var::s, 3) * a;
    RatFunc d = RatFunc::variable(Var::r, 6) * RatFunc::variable(Var::s, 6);
    FreeElement e;
    e.add_term(W("11112"), 1);
    e.add_term(W("11121"), -a);
    e.add_term(W("11211"), b);
    e.add_term(W("12111"), -c);
    e.add_term(W("21111"), d);
    return e;
  }
  throw std::invalid_argument("relation degree must be 3 or 5");
}

RewriteRule orient(const FreeElement& relation) {
  if (relation.is_zero()) throw std::invalid_argument("cannot orient zero");
  const Word& lead = relation.leading_word();
  RatFunc inv = relation.coeff(lead).inverse();
  FreeElement rhs;
  for (const auto& [w, c] : relation.terms())
    if (!(w == lead)) rhs.add_term(w, -(c * inv));
  return RewriteRule{lead, std::move(rhs)};
}

RewriteSystem generator_rules() {
  RewriteSystem sys;
  sys.add_rule(orient(quantum_serre_relation(3)));
  sys.add_rule(orient(quantum_serre_relation(5)));
  return sys;
}

const RewriteSystem& default_system() {
  static const RewriteSystem sys = complete(generator_rules());
  return sys;
}

const Reducer& default_reducer() {
  static const Reducer red(default_system());
  return red;
}

std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys) {
  std::vector<CriticalPair> out;
  const auto& rules = sys.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      // proper overlaps: nonempty suffix of li = prefix of lj
      for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (li.subword(li.size() - k, k) != lj.subword(0, k)) continue;
        CriticalPair cp;
        cp.overlap = li + lj.subword(k, lj.size() - k);
        cp.rule_left = i;
        cp.rule_right = j;
        Word tail = lj.subword(k, lj.size() - k);
        Word head = li.subword(0, li.size() - k);
        for (const auto& [t, c] : rules[i].rhs.terms())
          cp.left_reduct.add_term(t + tail, c);
        for (const auto& [t, c] : rules[j].rhs.terms())
          cp.right_reduct.add_term(head + t, c);
        out.push_back(std::move(cp));
      }
      // inclusions: lj occurs strictly inside li
      if (i != j && lj.size() < li.size()) {
        for (std::size_t pos = li.find(lj); pos != std::string::npos;
             pos = li.find(lj, pos + 1)) {
          CriticalPair cp;
          cp.overlap = li;
          cp.rule_left = i;
          cp.rule_right = j;
          cp.left_reduct = rules[i].rhs;
          Word prefix = li.subword(0, pos);
          Word suffix =
              li.subword(pos + lj.size(), li.size() - pos - lj.size());
          for (const auto& [t, c] : rules[j].rhs.terms())
            cp.right_reduct.add_term(prefix + t + suffix, c);
          out.push_back(std::move(cp));
        }
      }
    }
  }
  return out;
}

ConfluenceReport check_confluence(const RewriteSystem& sys,
                                  const Reducer* reducer) {
  Reducer local(sys);
  const Reducer& red = reducer ? *reducer : local;
  ConfluenceReport rep;
  rep.confluent = true;
  for (auto& cp : critical_pairs(sys)) {
    ConfluenceReport::PairResult pr;
    pr.left_nf = red.normal_form(cp.left_reduct);
    pr.right_nf = red.normal_form(cp.right_reduct);
    pr.joinable = (pr.left_nf == pr.right_nf);
    pr.pair = std::move(cp);
    if (!pr.joinable) rep.confluent = false;
    rep.pairs.push_back(std::move(pr));
  }
  return rep;
}

RewriteSystem complete(const RewriteSystem& sys, int max_degree) {
  RewriteSystem cur = sys;
  for (int round = 0; round < 64; ++round) {
    Reducer red(cur);
    bool added = false;
    auto cps = critical_pairs(cur);
    std::stable_sort(cps.begin(), cps.end(),
                     [](const CriticalPair& a, const CriticalPair& b) {
                       return a.overlap < b.overlap;
                     });
    for (const auto& cp : cps) {
      FreeElement diff =
          red.normal_form(cp.left_reduct) - red.normal_form(cp.right_reduct);
      if (diff.is_zero()) continue;
      if (static_cast<int>(diff.leading_word().size()) > max_degree)
        throw std::logic_error("completion residual exceeds degree bound at " +
                               diff.leading_word().str());
      cur.add_rule(orient(diff));
      added = true;
      break;  // restart with a fresh reducer
    }
    if (!added) return cur;
  }
  throw std::logic_error("completion did not stabilize");
}

long irreducible_count(const RewriteSystem& sys, int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n > 20) throw std::invalid_argument("length too large for enumeration");
  long count = 0;
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::string w(n, '1');
    for (int i = 0; i < n; ++i)
      if (mask & (1L << i)) w[i] = '2';
    bool ok = true;
    for (const auto& rule : sys.rules()) {
      if (w.find(rule.lhs.letters()) != std::string::npos) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace g2rs

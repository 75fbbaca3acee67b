#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "g2rs/ratfunc.hpp"

namespace g2rs {

// Word over the alphabet {e1, e2}, stored as '1'/'2' characters.  The
// comparison order is degree-lexicographic with e2 > e1; it is the term
// order of the rewriting system.
class Word {
 public:
  Word() = default;
  static Word e1() { return Word("1"); }
  static Word e2() { return Word("2"); }
  static Word from_letters(std::string letters);  // validates '1'/'2'

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  // letter index at position i: 1 or 2
  int at(std::size_t i) const { return letters_[i] - '0'; }
  const std::string& letters() const { return letters_; }

  // (#e1, #e2)
  std::pair<int, int> weight() const;

  Word operator+(const Word& o) const { return Word(letters_ + o.letters_); }
  Word subword(std::size_t pos, std::size_t len) const {
    return Word(letters_.substr(pos, len));
  }
  bool contains(const Word& w) const {
    return letters_.find(w.letters_) != std::string::npos;
  }
  // First position where w occurs at or after `from`, or npos.
  std::size_t find(const Word& w, std::size_t from = 0) const {
    return letters_.find(w.letters_, from);
  }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return letters_ != o.letters_; }
  // deglex, e2 > e1 ('2' > '1' in ASCII)
  bool operator<(const Word& o) const {
    if (letters_.size() != o.letters_.size())
      return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
  }

  std::string str() const;  // "e1*e2*e1", "1" for the empty word

 private:
  explicit Word(std::string l) : letters_(std::move(l)) {}
  std::string letters_;
};

// Linear combination of words with rational-function coefficients.
class FreeElement {
 public:
  FreeElement() = default;

  static FreeElement zero() { return FreeElement(); }
  static FreeElement one() { return word(Word()); }
  static FreeElement word(const Word& w, RatFunc c = RatFunc(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const Word& w) const;
  // Largest word under deglex; throws on zero.
  const Word& leading_word() const;

  void add_term(const Word& w, const RatFunc& c);

  FreeElement operator-() const;
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const RatFunc& c, const FreeElement& a);
  bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const FreeElement& o) const { return !(*this == o); }

  // True when every word has the same (p, q) letter counts; returns it.
  bool homogeneous_weight(std::pair<int, int>* out = nullptr) const;

  std::string str() const;

 private:
  std::map<Word, RatFunc> terms_;
};

struct RewriteRule {
  Word lhs;
  FreeElement rhs;
};

// Ordered list of rules; every rhs word must be strictly smaller than the
// lhs, and lhs words are pairwise distinct.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<RewriteRule> rules);

  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  void add_rule(RewriteRule rule);  // validates

 private:
  std::vector<RewriteRule> rules_;
};

// Normal-form computation with a per-system memo cache.  Reduction strategy
// is leftmost occurrence, first matching rule; results are strategy
// independent once the system is confluent.
class Reducer {
 public:
  explicit Reducer(RewriteSystem sys) : sys_(std::move(sys)) {}

  const RewriteSystem& system() const { return sys_; }
  FreeElement normal_form(const FreeElement& x) const;
  FreeElement normal_form_word(const Word& w) const;

 private:
  RewriteSystem sys_;
  mutable std::mutex mu_;
  mutable std::map<Word, std::shared_ptr<const FreeElement>> cache_;
  mutable long steps_ = 0;

  std::shared_ptr<const FreeElement> reduce_word(const Word& w) const;
};

// Convenience wrapper using a transient reducer.
FreeElement normal_form(const FreeElement& x, const RewriteSystem& sys);

// The two defining relations, zero in the algebra: degree (1,2) and (4,1).
FreeElement quantum_serre_relation(int degree);  // degree in {3, 5}

// Orient a relation: solve for its leading word.  Throws when the leading
// coefficient is not invertible in the fraction field (i.e. zero).
RewriteRule orient(const FreeElement& relation);

// The two oriented defining relations.
RewriteSystem generator_rules();

// The confluent completion of generator_rules(); computed once and cached.
// This is the system every normal form in the kernel is taken against.
const RewriteSystem& default_system();
const Reducer& default_reducer();

struct CriticalPair {
  Word overlap;
  std::size_t rule_left = 0, rule_right = 0;
  FreeElement left_reduct, right_reduct;  // one-step reducts
};

// All overlap and inclusion ambiguities, each enumerated exactly once.
std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys);

struct ConfluenceReport {
  struct PairResult {
    CriticalPair pair;
    FreeElement left_nf, right_nf;
    bool joinable = false;
  };
  std::vector<PairResult> pairs;
  bool confluent = false;
};

ConfluenceReport check_confluence(const RewriteSystem& sys,
                                  const Reducer* reducer = nullptr);

// Knuth-Bendix completion: repeatedly adds oriented, fully reduced critical
// pair residuals of degree <= max_degree until every pair joins.  Throws if
// a residual exceeds the bound.
RewriteSystem complete(const RewriteSystem& sys, int max_degree = 9);

// Number of words of length n avoiding every rule lhs as a subword.
long irreducible_count(const RewriteSystem& sys, int n);

}  // namespace g2rs

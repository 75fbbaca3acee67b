#include "g2rs/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace g2rs {

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j])))
        ++j;
      out.push_back({Token::Number, std::string(in.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < in.size() &&
             (std::isalnum(static_cast<unsigned char>(in[j]))))
        ++j;
      out.push_back({Token::Ident, std::string(in.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::End, "", in.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  AlgebraElement parse() {
    AlgebraElement e = expr();
    if (cur().kind != Token::End)
      throw ParseError("trailing input", cur().pos);
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t idx_ = 0;

  const Token& cur() const { return toks_[idx_]; }
  void advance() { ++idx_; }
  bool accept(Token::Kind k) {
    if (cur().kind != k) return false;
    advance();
    return true;
  }

  int parse_exponent() {
    bool neg = accept(Token::Minus);
    if (cur().kind != Token::Number)
      throw ParseError("expected integer exponent", cur().pos);
    long v = std::stol(cur().text);
    advance();
    return static_cast<int>(neg ? -v : v);
  }

  AlgebraElement expr() {
    bool neg = accept(Token::Minus);
    AlgebraElement acc = term();
    if (neg) acc = RatFunc(-1) * acc;
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      bool minus = cur().kind == Token::Minus;
      advance();
      AlgebraElement t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  AlgebraElement term() {
    AlgebraElement acc = factor();
    while (cur().kind == Token::Star || cur().kind == Token::Slash) {
      bool div = cur().kind == Token::Slash;
      std::size_t pos = cur().pos;
      advance();
      AlgebraElement f = factor();
      if (div) {
        RatFunc c = scalar_of(f, pos);
        acc = c.inverse() * acc;
      } else {
        acc = multiply(acc, f);
      }
    }
    return acc;
  }

  static RatFunc scalar_of(const AlgebraElement& e, std::size_t pos) {
    if (e.term_count() != 1 || !(e.terms().begin()->first == PbwMonomial::one()))
      throw ParseError("divisor must be a scalar expression", pos);
    RatFunc c = e.terms().begin()->second;
    if (c.is_zero()) throw ParseError("division by zero", pos);
    return c;
  }

  AlgebraElement factor() {
    const Token& t = cur();
    if (t.kind == Token::Number) {
      advance();
      return AlgebraElement(RatFunc(LaurentPoly(BigInt(t.text))));
    }
    if (t.kind == Token::LParen) {
      advance();
      AlgebraElement e = expr();
      if (!accept(Token::RParen)) throw ParseError("expected ')'", cur().pos);
      return e;
    }
    if (t.kind == Token::Ident) return ident_factor();
    throw ParseError("expected a factor", t.pos);
  }

  AlgebraElement ident_factor() {
    const Token t = cur();
    advance();
    int power = 1;
    bool has_power = false;
    if (accept(Token::Caret)) {
      power = parse_exponent();
      has_power = true;
    }
    (void)has_power;
    const std::string& name = t.text;

    auto evec = [&](int which, int pw) {
      // e1 = X6, e2 = X1
      if (pw < 0)
        throw ParseError("generator e" + std::to_string(which) +
                             " is not invertible",
                         t.pos);
      return AlgebraElement::monomial(
          PbwMonomial::generator(which == 1 ? 6 : 1, pw));
    };

    if (name == "e1") return evec(1, power);
    if (name == "e2") return evec(2, power);
    if (name == "k1") return AlgebraElement::monomial(PbwMonomial::k(power, 0));
    if (name == "k2") return AlgebraElement::monomial(PbwMonomial::k(0, power));
    if (name.size() == 2 && name[0] == 'X' && name[1] >= '1' && name[1] <= '6') {
      if (power < 0)
        throw ParseError("root vector " + name + " is not invertible", t.pos);
      return AlgebraElement::monomial(
          PbwMonomial::generator(name[1] - '0', power));
    }
    for (int i = 0; i < kVarCount; ++i) {
      if (name == kVarNames[i]) {
        return AlgebraElement(
            RatFunc(LaurentPoly::variable(static_cast<Var>(i), power)));
      }
    }
    throw ParseError("unknown identifier '" + name + "'", t.pos);
  }
};

}  // namespace

AlgebraElement parse_element(std::string_view text) {
  return Parser(text).parse();
}

LaurentPoly parse_scalar(std::string_view text) {
  AlgebraElement e = Parser(text).parse();
  if (e.is_zero()) return LaurentPoly();
  if (e.term_count() != 1 || !(e.terms().begin()->first == PbwMonomial::one()))
    throw ParseError("expected a scalar expression", 0);
  return e.terms().begin()->second.as_laurent();
}

}  // namespace g2rs

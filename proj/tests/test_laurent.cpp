#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2rs/ratfunc.hpp"

using namespace g2rs;

namespace {

LaurentPoly rs_mono(long coeff, int re, int se) {
  ExpVec e{};
  e[0] = re;
  e[1] = se;
  return LaurentPoly::monomial(coeff, e);
}

const LaurentPoly R = LaurentPoly::variable(Var::r);
const LaurentPoly S = LaurentPoly::variable(Var::s);

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), coef(-5, 5);
  LaurentPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p += rs_mono(coef(rng), expo(rng), expo(rng));
  return p;
}

RationalPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(1, 9);
  return RationalPoint::all(Rational(v(rng), v(rng)), Rational(v(rng), v(rng)));
}

}  // namespace

TEST_CASE("monomial construction") {
  CHECK(rs_mono(1, -1, -2).str() == "r^-1*s^-2");
  CHECK(rs_mono(0, 5, 5).is_zero());
  CHECK(rs_mono(-1, 0, 0).str() == "-1");
  CHECK(LaurentPoly(0).is_zero());
}

TEST_CASE("products expand exactly") {
  // (r^-3 + s^-3)(r^3 s^3) = s^3 + r^3
  CHECK((rs_mono(1, -3, 0) + rs_mono(1, 0, -3)) * rs_mono(1, 3, 3) ==
        rs_mono(1, 0, 3) + rs_mono(1, 3, 0));
  CHECK((LaurentPoly(1) + R) * (LaurentPoly(1) - R) == LaurentPoly(1) - R * R);
  // (r+s)(r^2+s^2) = r^3 + r s^2 + r^2 s + s^3
  CHECK((R + S) * (R * R + S * S) ==
        rs_mono(1, 3, 0) + rs_mono(1, 1, 2) + rs_mono(1, 2, 1) + rs_mono(1, 0, 3));
}

TEST_CASE("evaluation") {
  RationalPoint pt = RationalPoint::all(2, 3);
  CHECK(rs_mono(1, -1, -2).evaluate(pt) == Rational(1, 18));
  CHECK(LaurentPoly().evaluate(pt) == 0);
  CHECK((R * R * R + S * S * S).evaluate(RationalPoint::all(1, -1)) == 0);
  RationalPoint partial = RationalPoint::rs(2, 3);
  CHECK_THROWS_AS(LaurentPoly::variable(Var::g1).evaluate(partial),
                  std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; ++t) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng);
    RationalPoint pt = random_point(rng);
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
  }
}

TEST_CASE("canonical form and ring axioms") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng),
                w = random_poly(rng);
    CHECK((p + (-p)).is_zero());
    CHECK((p + (-p)).term_count() == 0);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p * q) * w == p * (q * w));
    CHECK(p * (q + w) == p * q + p * w);
  }
}

TEST_CASE("monomial equality encodes genericity") {
  // r^a s^b = r^c s^d iff (a, b) = (c, d)
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d)
          CHECK((rs_mono(1, a, b) == rs_mono(1, c, d)) == (a == c && b == d));
}

TEST_CASE("powers and unit inverses") {
  CHECK(rs_mono(1, 1, 2).pow(-2) == rs_mono(1, -2, -4));
  CHECK(rs_mono(-1, 1, 0).pow(-1) == rs_mono(-1, -1, 0));
  CHECK((R + S).pow(0).is_one());
  CHECK_THROWS_AS((R + S).pow(-1), std::domain_error);
  CHECK_THROWS_AS(rs_mono(2, 0, 0).unit_inverse(), std::domain_error);
}

TEST_CASE("exact division") {
  LaurentPoly a = (R + S) * (R * R + S * S) * rs_mono(3, -2, 5);
  auto q = LaurentPoly::divide_exact(a, R + S);
  REQUIRE(q.has_value());
  CHECK(*q == (R * R + S * S) * rs_mono(3, -2, 5));
  CHECK(!LaurentPoly::divide_exact(R * R + R * S + S * S, R + S).has_value());
  CHECK(!LaurentPoly::divide_exact(LaurentPoly(3), LaurentPoly(2)).has_value());
  CHECK(LaurentPoly::divide_exact(LaurentPoly(), R + S)->is_zero());
}

TEST_CASE("text form") {
  CHECK((rs_mono(-3, 2, -1) + LaurentPoly(1)).str() == "-3*r^2*s^-1 + 1");
  CHECK(LaurentPoly().str() == "0");
  CHECK((R + S).str() == "r + s");
}

TEST_CASE("rational functions reduce against registered factors") {
  RatFunc a{(R + S) * (R * R + S * S)};
  RatFunc b = a / RatFunc(R + S);
  CHECK(b.is_ring());
  CHECK(b.numerator() == R * R + S * S);

  RatFunc c = RatFunc(R * R + R * S + S * S) / RatFunc(R + S);
  CHECK(!c.is_ring());
  CHECK(c * RatFunc(R + S) == RatFunc(R * R + R * S + S * S));
  CHECK((c - c).is_zero());
  CHECK(c + c == RatFunc(2) * c);
}

TEST_CASE("rational function inverse and evaluation") {
  RatFunc c = RatFunc(rs_mono(2, 1, 0)) / RatFunc(R + S);
  RatFunc inv = c.inverse();
  CHECK(c * inv == RatFunc(1));
  RationalPoint pt = RationalPoint::all(2, 3);
  CHECK(c.evaluate(pt) == Rational(4, 5));
  CHECK_THROWS_AS(c.as_laurent(), std::domain_error);
}

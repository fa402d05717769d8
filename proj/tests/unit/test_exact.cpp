#include "doctest.h"
#include "hgperiod/errors.hpp"
#include "hgperiod/rational_function.hpp"
#include "hgperiod/sfn.hpp"
#include "support.hpp"

using namespace hgp;
using hgp::test::q;

TEST_CASE("fractions parse exactly and reject decimals") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("0.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("fractional part and congruence") {
  CHECK(frac(q("-1/3")) == q("2/3"));
  CHECK(frac(q("7/2")) == q("1/2"));
  CHECK(congruent_mod_1(q("7/2"), q("-1/2")));
  CHECK_FALSE(congruent_mod_1(q("1/3"), q("1/5")));
  CHECK(is_integer(q("4/2")));
}

TEST_CASE("polynomial arithmetic over Q") {
  const QPoly x = QPoly::x();
  const QPoly p = x * x - QPoly(1L);
  const auto [quo, r] = p.divmod(x - QPoly(1L));
  CHECK(quo == x + QPoly(1L));
  CHECK(r.is_zero_poly());
  CHECK(p.derivative() == x.scaled(Rational(2)));
  CHECK(p(Rational(3)) == 8);
  CHECK(p.shifted(Rational(1)) == x * x + x.scaled(Rational(2)));
  CHECK(gcd(p, x * x - x) == x - QPoly(1L));
}

TEST_CASE("rational functions stay reduced") {
  const QPoly x = QPoly::x();
  const QRatFn f(x * x - QPoly(1L), x - QPoly(1L));
  CHECK(f.is_polynomial());
  CHECK(f == QRatFn(x + QPoly(1L)));
  const QRatFn g = QRatFn(1L) / QRatFn(x - QPoly(1L));
  CHECK(g * QRatFn(x - QPoly(1L)) == QRatFn(1L));
  CHECK((g - g).is_zero_rf());
  CHECK(g.derivative() == QRatFn(QPoly(-1L), (x - QPoly(1L)) * (x - QPoly(1L))));
  CHECK_THROWS_AS(QRatFn(1L) / QRatFn(), std::domain_error);
}

TEST_CASE("functions of s: shift, evaluation and cancellation") {
  const SFn s = SFn::s();
  const SFn inv = SFn::inverse_linear({Rational(1)});  // 1/(s-1)
  CHECK((inv * (s - SFn(1L))) == SFn(1L));
  CHECK(inv.shifted(1).at(Rational(2)) == QRatFn(Rational(1, 2)));
  CHECK_THROWS_AS(inv.at(Rational(1)), PoleError);
  CHECK(((s + inv) - inv) == s);
}

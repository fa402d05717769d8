#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hgperiod/errors.hpp"
#include "hgperiod/hg_core.hpp"
#include "support.hpp"

using namespace hgp;
using hgp::test::fixture_cplx;
using hgp::test::q;
using hgp::test::rel;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(q("2/7"), 0) == 1);
  CHECK(pochhammer(Rational(1), 5) == 120);
  CHECK(pochhammer(q("1/2"), 3) == q("15/8"));
  CHECK(rel(pochhammer(cplx(0.5, 0.0), 3), 15.0 / 8) < 1e-15);
}

TEST_CASE("pochhammer splits over index sums") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> nd(0, 12);
  std::uniform_real_distribution<double> ud(-3, 3);
  for (int k = 0; k < 50; ++k) {
    const int n = nd(rng), m = nd(rng);
    const Rational a(static_cast<long>(nd(rng)) - 6, 7);
    CHECK(pochhammer(a, n + m) == pochhammer(a, n) * pochhammer(Rational(a + n), m));
    const cplx z(ud(rng), ud(rng));
    CHECK(rel(pochhammer(z, n + m), pochhammer(z, n) * pochhammer(z + double(n), m)) <
          1e-13 * std::max(1.0, std::abs(pochhammer(z, n + m))));
  }
}

TEST_CASE("gamma, beta and products") {
  CHECK(rel(hgp::gamma(1.0), 1.0) < 1e-15);
  const cplx s(0.3, 0.2);
  CHECK(rel(hgp::gamma(s + 1.0), s * hgp::gamma(s)) < 1e-14);
  CHECK(rel(hgp::gamma(0.5), fixture_cplx("gamma_half")) < 1e-14);
  CHECK(rel(hgp::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK_THROWS_AS(hgp::gamma(-2.0), PoleError);

  const cplx mu(3.5, 0.0), i(0.0, 1.0);
  CHECK(rel(hgp::beta(1.0, mu + i), 1.0 / (mu + i)) < 1e-14);
  CHECK(rel(hgp::beta(0.3, 0.8), hgp::beta(0.8, 0.3)) < 1e-15);
  CHECK(rel(hgp::beta(1.0 / 3, 2.0 / 3), fixture_cplx("beta_third")) < 1e-13);
  CHECK(rel(hgp::beta(1.0 / 3, 2.0 / 3), 2 * std::numbers::pi / std::sqrt(3.0)) < 1e-13);

  CHECK(rel(gamma_product({0.7}, {0.7}), 1.0) < 1e-15);
  const double a = 1.0 / 3, b = 0.2, m = 3.5;
  CHECK(rel(gamma_product({m, m + 1 - a - b}, {m + 1 - a, m + 1 - b}), fixture_cplx("gamma_product_G_prefactor")) <
        1e-13);
  CHECK(rel(gamma_product({1 - 0.25 - 1.0 / 3}, {0.75, 2.0 / 3}), fixture_cplx("gamma_product_kummer")) < 1e-13);
}

TEST_CASE("digamma") {
  CHECK(std::abs(digamma(1.0) + 0.57721566490153286) < 1e-14);
  CHECK(std::abs(digamma(0.5) - (digamma(1.0) - 2 * std::log(2.0))) < 1e-13);
}

TEST_CASE("pFq series") {
  const HGSeriesSpec spec{{0.5, 7.0}, {7.0}};
  CHECK(eval_pFq(spec, 0.0).value == cplx(1.0));
  const SeriesResult r = eval_pFq(spec, 0.3);
  CHECK(rel(r.value, fixture_cplx("hyp2f1_binomial")) < 1e-14);
  CHECK(rel(r.value, std::pow(0.7, -0.5)) < 1e-14);
  CHECK(r.terms_used > 0);
  CHECK(r.est_error < 1e-12);

  CHECK(rel(hyp3f2(0.2, 0.4, 0.6, 1.1, 1.3, 0.5), fixture_cplx("hyp3f2_euler")) < 1e-9);

  // Gauss summation at x = 1
  const double a = 0.3, b = 0.4, c = 1.9;
  const cplx gauss = hgp::gamma(c) * hgp::gamma(c - a - b) / (hgp::gamma(c - a) * hgp::gamma(c - b));
  CHECK(rel(hyp2f1(a, b, c, 1.0, {1e-13, 200000}), gauss) < 1e-6);

  CHECK_THROWS_AS(eval_pFq(spec, 1.5), DomainError);
  CHECK_THROWS_AS(eval_pFq({{0.5, 1.0}, {-2.0}}, 0.3), PoleError);
  CHECK_THROWS(eval_pFq({{0.5}, {1.0}}, 0.3));
  CHECK_THROWS(TruncationPolicy{-1.0, 10}.validate());
}

TEST_CASE("terminating series stop early") {
  const SeriesResult r = eval_pFq({{-3.0, 1.0}, {2.0}}, 0.9);
  CHECK(r.terms_used < 10);
  // 2F1(-3, 1; 2; x) = sum_{n<=3} (-3)_n/(n+1)! ... checked against explicit sum
  double s = 0, term = 1;
  for (int n = 0; n <= 3; ++n) {
    s += term;
    term *= (-3.0 + n) * (1.0 + n) / ((2.0 + n) * (n + 1.0)) * 0.9;
  }
  CHECK(rel(r.value, s) < 1e-15);
}

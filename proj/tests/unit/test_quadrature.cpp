#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hgperiod/errors.hpp"
#include "hgperiod/hg_core.hpp"
#include "hgperiod/quadrature.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hgp;
using hgp::test::fixture;
using hgp::test::fixture_cplx;
using hgp::test::q;
using hgp::test::ref_params;
using hgp::test::rel;

TEST_CASE("basic integrals") {
  CHECK(rel(integrate_01([](double, double) { return cplx(1.0); }, 1e-12).value, 1.0) < 1e-13);
  CHECK(rel(integrate_01(WeightedIntegrand{-0.5, 0.0, [](double, double) { return cplx(1.0); }}, 1e-12).value, 2.0) <
        1e-12);
  const QuadResult b = integrate_01(WeightedIntegrand{-0.3, 0.4, [](double, double) { return cplx(1.0); }}, 1e-13);
  CHECK(rel(b.value, hgp::beta(0.7, 1.4)) < 1e-11);
  CHECK(b.est_error < 1e-11);
}

TEST_CASE("balanced 2F1 near t = 1") {
  for (double t : {0.1, 0.5, 0.9, 0.999}) {
    const BalancedHyp h = hyp2f1_balanced(0.3, 0.45, t, 1 - t);
    CHECK(std::abs(h.value - oracle::hyp2f1_balanced(0.3, 0.45, t)) < 1e-12 * std::abs(h.value));
  }
}

TEST_CASE("Euler integral for 2F1") {
  CHECK(verify_int_rep_2F1(q("1/3"), q("1/2"), q("3/2"), 0.4) < 1e-9);
  CHECK(verify_int_rep_2F1(q("1/3"), q("1/2"), q("3/2"), 0.0) < 1e-12);
  CHECK(verify_int_rep_2F1(q("1/3"), q("1/2"), q("3/2"), cplx(0.3, 0.2)) < 1e-9);
  CHECK(rel(hyp2f1(1.0 / 3, 0.5, 1.5, cplx(0.3, 0.2)) * hgp::beta(0.5, 1.0), fixture_cplx("int_rep_2F1_complex")) <
        1e-12);
}

TEST_CASE("Euler integral for 3F2") {
  CHECK(verify_int_rep_3F2(q("1/3"), q("1/5"), q("1/2"), q("1"), q("3/2"), 0.0) < 1e-12);
  CHECK(verify_int_rep_3F2(q("1/3"), q("1/5"), q("1"), q("1"), q("9/2"), 0.45) < 1e-9);
  const auto& f = fixture("int_rep_3F2_random");
  const auto& a = f.at("args");
  auto r = [&](const char* k) { return parse_rational(a.at(k).get<std::string>()); };
  CHECK(verify_int_rep_3F2(r("a"), r("b"), r("c"), r("d"), r("e"), 0.25) < 1e-9);
  CHECK(rel(hyp3f2(r("a").get_d(), r("b").get_d(), r("c").get_d(), r("d").get_d(), r("e").get_d(), 0.25),
            fixture_cplx("int_rep_3F2_random")) < 1e-12);
}

TEST_CASE("integral form of H_mu") {
  const HGParams p = ref_params();
  CHECK(verify_H_integral(p, -1.5) < 1e-8);
  CHECK(verify_H_integral(p, cplx(2.6, 0.4)) < 1e-8);
  CHECK(rel(H_integral(p, -1.5), fixture_cplx("H_mu_at_m1.5")) < 1e-8);
  const HGParams integer_mu = HGParams::unchecked(q("1/3"), q("1/5"), q("3"), 1);
  CHECK_THROWS_AS(verify_H_integral(integer_mu, -1.5), HypothesisError);
}

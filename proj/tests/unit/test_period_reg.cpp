#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hgperiod/diffop.hpp"
#include "hgperiod/errors.hpp"
#include "hgperiod/period_reg.hpp"
#include "hgperiod/theta_data.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hgp;
using hgp::test::fixture;
using hgp::test::fixture_cplx;
using hgp::test::q;
using hgp::test::ref_params;
using hgp::test::rel;

namespace {
const QRatFn lam = QRatFn::x();
ThetaData unit_t1mt() { return derive_ab(QPoly(1L), poly_from({0, 1, -1})); }

QRatFn ratfn_from_json(const nlohmann::json& j) {
  std::vector<Rational> n, d;
  for (const auto& c : j.at("num")) n.push_back(parse_rational(c.get<std::string>()));
  for (const auto& c : j.at("den")) d.push_back(parse_rational(c.get<std::string>()));
  return QRatFn(poly_from(n), poly_from(d));
}
}  // namespace

TEST_CASE("parameter hypotheses") {
  CHECK_NOTHROW(ref_params());
  const HGParams p = ref_params();
  CHECK(p.l == 2);
  CHECK(p.k == 1);
  CHECK(p.m() == 7);
  try {
    HGParams::make(q("1/3"), q("1/5"), q("1/3"));
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(std::string(e.what()).find("(mod Z)") != std::string::npos);
  }
  CHECK_THROWS_AS(HGParams::make(q("1/3"), q("1/5"), q("3")), HypothesisError);
  CHECK_THROWS_AS(HGParams::make(q("1/3"), q("1/5"), q("1/2")), HypothesisError);
  CHECK_THROWS_AS(HGParams::make(q("4/3"), q("1/5"), q("7/2")), HypothesisError);
  CHECK(HGParams::make(q("1/3"), q("1/5"), q("7/2"), 4).l == 4);
}

TEST_CASE("theta data expansion") {
  const ThetaData td = unit_t1mt();
  CHECK(td.a_at(0) == QPoly(1L));
  for (int i = 1; i < 4; ++i) CHECK(td.a_at(i).is_zero_poly());
  CHECK(td.b_at(0) == poly_from({0, 1, -1}));
  CHECK(td.b_at(1) == poly_from({-1, 2}));
  CHECK(td.b_at(2) == QPoly(-1L));
  CHECK(td.b_at(3).is_zero_poly());
  const oracle::HandAB hand = oracle::hand_ab_unit_t1mt();
  CHECK(td.a == hand.a);
  CHECK(td.b == hand.b);
  CHECK_THROWS_AS(derive_ab(QPoly(1L), poly_from({0, 0, 1})), HypothesisError);
  CHECK(satisfies_p1(poly_from({0, 1, -1})));
}

TEST_CASE("P_m and Q_m") {
  const HGParams p = ref_params();
  const ThetaData td = unit_t1mt();
  CHECK(rel(eval_P_m(p, derive_ab(QPoly(1L), QPoly()), 7, 0.5), fixture_cplx("P_m_unit_theta")) < 1e-13);
  CHECK(std::abs(eval_P_m(p, derive_ab(QPoly(), QPoly()), 7, 0.5)) == 0.0);
  CHECK(rel(eval_Q_m(p, derive_ab(QPoly(1L), QPoly()), 7, -1.4), 0.5 * eval_H_mu(p, -1.4)) < 1e-15);
  CHECK(rel(eval_Q_m(p, td, 7, -1.4), fixture_cplx("Q_m_quadrature")) < 1e-7);

  const AnalyticFunction P = make_P(p, td, 9), Q = make_Q(p, td, 9);
  CHECK(rel(derivative(P, 0.6), 3.5 * eval_P_m(p, td, 7, 0.6)) < 1e-9);
  CHECK(rel(derivative(Q, -1.4), 3.5 * eval_Q_m(p, td, 7, -1.4)) < 1e-9);
  CHECK_THROWS(eval_P_m(p, td, 8, 0.5));
}

TEST_CASE("period matrix") {
  const HGParams p = ref_params();
  const PeriodMatrixResult r = period_matrix(p, unit_t1mt(), 7);
  CHECK_FALSE(r.degenerate);
  CHECK(r.inner_relative_det(0.5) > 1e-10);
  CHECK(std::abs(r.xi - xi_of(p)) < 1e-15);
  const auto ms = admissible_m(p, 5);
  CHECK(ms == std::vector<long>{3, 5, 7, 9, 11});

  // l | m would zero the root-of-unity prefactor; such m is never admissible
  CHECK_THROWS_AS(period_matrix(p, unit_t1mt(), 8), HypothesisError);
  CHECK_THROWS_AS(period_matrix(p, unit_t1mt(), 1), HypothesisError);
}

TEST_CASE("regulator recursion") {
  const HGParams p = ref_params();
  const RegulatorRecursionState st = regulator_recursion(p, unit_t1mt(), 4);
  CHECK(st.C_at(-1).is_zero());
  CHECK(st.D_at(-1) == SFn(1L));
  CHECK(st.C_at(0) == SFn(QRatFn(1L) / (lam - QRatFn(1L))));
  CHECK(st.D_at(0).is_zero());

  const auto& ref = fixture("C1_D1_ref").at("value");
  const Rational s = p.mu;
  CHECK(at_s(st.C_at(1), s) == ratfn_from_json(ref.at("C")));
  CHECK(at_s(st.D_at(1), s) == ratfn_from_json(ref.at("D")));
  const auto [C1, D1] = instantiate_CD(p, 1, s);
  CHECK(C1 == ratfn_from_json(ref.at("C")));
  CHECK(D1 == ratfn_from_json(ref.at("D")));

  const auto [Cs, Ds] = recursion_by_products(p, 4);
  for (int i = -1; i <= 4; ++i) {
    CHECK(Cs[static_cast<std::size_t>(i + 1)] == st.C_at(i));
    CHECK(Ds[static_cast<std::size_t>(i + 1)] == st.D_at(i));
  }
  for (int r = 0; r <= 2; ++r) {
    const QRatFn e1 = at_s(st.E1(r), s);
    CHECK(poles_only_at_0_1(e1));
  }
}

TEST_CASE("three-term relations") {
  const HGParams p = ref_params();
  const auto pts = exterior_samples(40, 11);
  CHECK(check_three_term_congruence(p, -1, pts).fit_residual < 1e-12);
  for (int i = 1; i <= 3; ++i) CHECK(check_three_term_congruence(p, i, pts).ok(1e-6));

  // the i = 1 remainder against the exact series oracle
  int val = 0;
  const auto coeffs = oracle::three_term_remainder_series(p.alpha, p.beta, p.mu, 1, 36, &val);
  CHECK(val == 0);
  CHECK(to_string(coeffs.at(0)) == fixture("three_term_remainder_i1").at("value").at("coeffs").at(0));
}

TEST_CASE("regulator congruences") {
  const HGParams p = ref_params();
  const auto pts = exterior_samples(60, 5);
  const FitReport f1 = check_regulator_congruence(p, unit_t1mt(), 7, 2, pts, Lift::phi1);
  CHECK(f1.ok(1e-5));
  const FitReport f2 = check_regulator_congruence(p, unit_t1mt(), 7, 2, pts, Lift::phi2);
  CHECK(f2.ok(1e-5));
  const FitReport unit = check_regulator_congruence(p, derive_ab(QPoly(1L), QPoly()), 7, 0, pts);
  CHECK(unit.ok(1e-10));
  REQUIRE(unit.c1.has_value());
  CHECK(std::abs(*unit.c1 - 0.5) < 1e-10);
  const FitReport literal = check_regulator_congruence(p, unit_t1mt(), 7, 2, pts, Lift::phi1, true);
  CHECK_FALSE(literal.ok(1e-5));
}

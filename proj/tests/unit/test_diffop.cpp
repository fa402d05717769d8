#include <random>

#include "doctest.h"
#include "hgperiod/diffop.hpp"
#include "hgperiod/functions.hpp"
#include "hgperiod/period_reg.hpp"
#include "hgperiod/theta_data.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hgp;
using hgp::test::q;
using hgp::test::ref_params;

namespace {
const QRatFn lam = QRatFn::x();

// jet of lambda^n at z, as many derivatives as needed
std::vector<cplx> monomial_jet(int n, cplx z, int count) {
  std::vector<cplx> jet;
  for (int k = 0; k < count; ++k) {
    double c = 1;
    for (int j = 0; j < k; ++j) c *= (n - j);
    jet.push_back(k > n ? cplx(0) : c * std::pow(z, n - k));
  }
  return jet;
}
}  // namespace

TEST_CASE("composition follows the Leibniz rule") {
  const DiffOperator d = DiffOperator::derivation(Basis::d);
  const DiffOperator x = DiffOperator::scalar(lam, Basis::d);
  CHECK(compose(d, x) == DiffOperator(Basis::d, {QRatFn(1L), lam}));
  const DiffOperator L = build_D(ref_params());
  CHECK(compose(L, DiffOperator::identity(Basis::d)) == L);
  CHECK(compose(DiffOperator::identity(Basis::d), L) == L);
}

TEST_CASE("basis conversion round-trips") {
  const DiffOperator P = build_P_HG(ref_params());
  CHECK(to_D_basis(to_d_basis(P)) == P);
  CHECK(to_d_basis(P).order() == 2);
}

TEST_CASE("hypergeometric operators and their theta factors") {
  const HGParams p = ref_params();
  const DiffOperator P = build_P_HG(p), Q = build_Q_HG(p);
  CHECK(P.order() == 2);
  CHECK(Q.order() == 3);
  CHECK(to_d_basis(P) == lam * build_D(p));
  CHECK(Q == compose(build_theta_lambda(p), P));
  CHECK(to_D_basis(Q) == oracle::hand_Q_HG(p.alpha, p.beta, p.mu));
}

TEST_CASE("operators applied to monomials match hand expansion") {
  const HGParams p = ref_params();
  const DiffOperator L = build_D(p);
  const cplx z(0.3, 0.2);
  for (int n = 0; n <= 2; ++n) {
    const auto jet = monomial_jet(n, z, 3);
    cplx want = 0;
    for (int k = 0; k <= L.order(); ++k) want += L.coeff(k).eval(z) * jet[k];
    CHECK(std::abs(apply(L, z, jet) - want) < 1e-14);
  }
}

TEST_CASE("numerical annihilation") {
  const HGParams p = ref_params();
  const DiffOperator L = build_D(p);
  CHECK(std::abs(apply(L, make_F(p), 0.5)) < 1e-9 * std::abs(eval_F_mu(p, 0.5)));
  CHECK(std::abs(apply(build_Q_HG(p), make_F(p), 0.5)) < 1e-8);
  CHECK(std::abs(apply(build_H_annihilator(p), make_H(p), -1.4)) < 1e-8 * std::abs(eval_H_mu(p, -1.4)));
  // The order-three operator built with theta_lambda leaves a residue on H_mu;
  // theta_H is the factor that kills it.
  CHECK(std::abs(apply(build_Q_HG(p), make_H(p), -1.4)) > 1e-3);
}

TEST_CASE("right Euclidean division") {
  const HGParams p = ref_params();
  const DiffOperator D = build_D(p);
  const Division self = right_divide(D, D);
  CHECK(self.quotient == DiffOperator::identity(Basis::d));
  CHECK(self.remainder.is_zero());
  const DiffOperator d = DiffOperator::derivation(Basis::d);
  const Division dd = right_divide(compose(d, D), D);
  CHECK(dd.quotient == d);
  CHECK(dd.remainder.is_zero());

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int k = 0; k < 10; ++k) {
    std::vector<QRatFn> co;
    for (int i = 0; i < 5; ++i) co.push_back(QRatFn(QPoly(std::vector<Rational>{Rational(c(rng)), Rational(c(rng))})));
    const DiffOperator L(Basis::d, co);
    const Division r = right_divide(L, D);
    CHECK(r.remainder.order() < 2);
    CHECK(compose(r.quotient, D) + r.remainder == L);
  }
}

TEST_CASE("Theta") {
  const HGParams p = ref_params();
  const ThetaData td = derive_ab(QPoly(1L), poly_from({0, 1, -1}));
  const ThetaConstruction tc = construct_Theta(p, td);
  CHECK(tc.theta.order() <= 1);
  for (const auto& c : tc.theta.coeffs()) CHECK(poles_only_at_0_1(c));
  for (double x : {0.3, 0.5, 0.7}) {
    const cplx lhs = 2.0 * std::numbers::pi * cplx(0, 1) * apply(tc.theta, make_F(p), x);
    const cplx rhs = eval_P_m(p, td, p.m(), x);
    CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(rhs)));
  }

  const ThetaData unit = derive_ab(QPoly(1L), QPoly());
  const DiffOperator t1 = build_Theta(p, unit);
  CHECK(t1 == DiffOperator::scalar(QRatFn(Rational(1, 2)), Basis::d));
}

TEST_CASE("operators serialize losslessly") {
  const DiffOperator Q = build_Q_HG(ref_params());
  CHECK(diffop_from_json(nlohmann::json::parse(to_json(Q).dump())) == Q);
  CHECK(to_string(DiffOperator(Basis::d, {QRatFn(Rational(1, 2)), lam})).find("∂") != std::string::npos);
}

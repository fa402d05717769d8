#pragma once

// Reference values computed without the library's series, gamma or
// quadrature code: Boost.Math special functions and integrators, plain
// long-double series, and exact power-series arithmetic over Q.

#include <complex>
#include <string>
#include <vector>

#include "hgperiod/diffop.hpp"
#include "hgperiod/params.hpp"
#include "hgperiod/rational_function.hpp"
#include "json.hpp"

namespace hgp::oracle {

using lcplx = std::complex<long double>;

double gamma_half_by_quadrature();  // ∫_0^∞ t^{-1/2} e^{-t} dt
double beta_by_quadrature(double a, double b);
double gamma_ratio(const std::vector<double>& numer, const std::vector<double>& denom);

// 2F1(a, b; b; x) = (1 - x)^{-a}
double hyp2f1_binomial(double a, double x);
// Plain summation, |z| <= 0.95.
lcplx hyp2f1_series(long double a, long double b, long double c, lcplx z);
// 2F1(a, b; a + b; t) for real t in [0, 1), logarithmic expansion near 1.
long double hyp2f1_balanced(long double a, long double b, long double t);

// 3F2(a, b, c; d, e; x) as (1/B(c, e - c)) ∫_0^1 2F1(a, b; d; x t) t^{c-1} (1 - t)^{e-c-1} dt.
double hyp3f2_euler(double a, double b, double c, double d, double e, double x);
// ∫_0^1 t^{b-1} (1 - t)^{c-b-1} (1 - x t)^{-a} dt
lcplx int_rep_2f1_integral(double a, double b, double c, lcplx x);

// F_mu(lambda) = (lambda - 1)^mu ∫_0^1 (1 - u)^{mu-1} 2F1(alpha, beta; 1; (1 - lambda) u) du
lcplx F_mu_by_quadrature(double alpha, double beta, double mu, lcplx lambda);
// B(1-alpha, 1-beta) ∫_0^1 (lambda - t)^{nu-1} t^{1-alpha-beta} 2F1(1-alpha, 1-beta; 2-alpha-beta; t) dt
lcplx H_by_quadrature(double alpha, double beta, double nu, lcplx lambda);
// (1/l) B(1-alpha, 1-beta) ∫_0^1 (lambda - t)^{mu-1} [p0(t) + sum_i (mu+i-1) b_i(lambda) (lambda-t)^{i-1}] kernel(t) dt
lcplx Q_m_by_quadrature(const HGParams& p, const std::vector<double>& p0, const std::vector<double>& p1,
                        lcplx lambda);

// theta_lambda ∘ P_HG multiplied out by hand in the D basis.
DiffOperator hand_Q_HG(const Rational& alpha, const Rational& beta, const Rational& mu);

// a_i, b_i for p0 = 1, p1 = t(1 - t) written out by hand.
struct HandAB {
  std::vector<QPoly> a, b;
};
HandAB hand_ab_unit_t1mt();

// C_i(s0), D_i(s0) by applying the three-term step matrix i + 1 times.
std::pair<QRatFn, QRatFn> step_matrix_CD(const Rational& alpha, const Rational& beta, const Rational& s0, int i);

// Exact remainder Φ(s+i) - (λ-1) C_i Φ(s) - D_i Φ(s-1) as a power series in
// x = 1/(1-λ), s = mu; Φ(s) = 3F2(1, 1, 1-s; 2-alpha, 2-beta; x).  Returns the
// first `terms` coefficients (index 0 = x^0) after clearing the x-poles
// introduced by C_i, D_i; `valuation` receives the lowest power present.
std::vector<Rational> three_term_remainder_series(const Rational& alpha, const Rational& beta, const Rational& mu,
                                                  int i, int terms, int* valuation);

// Fixture document with every derived reference value.
nlohmann::json generate_fixtures();

// Compares two fixture documents entry by entry; returns mismatching ids.
std::vector<std::string> compare_fixtures(const nlohmann::json& stored, const nlohmann::json& fresh,
                                          double rel_tol = 1e-12);

}  // namespace hgp::oracle

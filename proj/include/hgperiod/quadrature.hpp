#pragma once

#include <functional>

#include "hgperiod/params.hpp"

namespace hgp {

struct QuadResult {
  cplx value;
  double est_error = 0.0;
  int levels = 0;
  int evaluations = 0;
};

// Integrand on (0,1) receiving both t and 1 - t, so that factors vanishing at
// t = 1 can be formed without cancellation.
using Integrand01 = std::function<cplx(double t, double one_minus_t)>;

// t^left (1-t)^right smooth(t, 1-t)
struct WeightedIntegrand {
  double exponent_left = 0.0;
  double exponent_right = 0.0;
  Integrand01 smooth;
};

inline constexpr int kMaxQuadLevels = 12;

// Tanh-sinh rule with step halving.  The error estimate is the difference
// between the last two levels; success when it is below tol * max(1, |value|).
QuadResult integrate_01(const Integrand01& f, double tol);
QuadResult integrate_01(const WeightedIntegrand& w, double tol);

// 2F1(a, b; a + b; t) for real 0 <= t < 1, together with (1 - t) times its
// derivative.  Near t = 1 the logarithmic expansion in 1 - t is used.
struct BalancedHyp {
  double value;
  double one_minus_t_derivative;
};
BalancedHyp hyp2f1_balanced(double a, double b, double t, double one_minus_t);

double verify_int_rep_2F1(const Rational& a, const Rational& b, const Rational& c, cplx x, double tol = 1e-12);
double verify_int_rep_3F2(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                          const Rational& e, cplx x, double tol = 1e-12);
// Integral form of H_mu against the series; the t^{1-a-b} 2F1 kernel is f3.
double verify_H_integral(const HGParams& p, cplx lambda, double tol = 1e-12);
// The integral side alone.
cplx H_integral(const HGParams& p, cplx lambda, double tol = 1e-12);

}  // namespace hgp

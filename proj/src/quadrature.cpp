#include "hgperiod/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "hgperiod/errors.hpp"
#include "hgperiod/functions.hpp"
#include "hgperiod/hg_core.hpp"

namespace hgp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUMax = 6.5;

double d(const Rational& q) { return q.get_d(); }

struct Node {
  double t, omt, w;
};

// Abscissa and weight (without the step factor) at u.
bool node(double u, Node& n) {
  const double s = kPi * std::sinh(u);
  if (std::abs(s) > 700.0) return false;
  const double e = std::exp(-std::abs(s));
  const double small = e / (1.0 + e), large = 1.0 / (1.0 + e);
  n.t = s >= 0 ? large : small;
  n.omt = s >= 0 ? small : large;
  if (n.t <= 0.0 || n.omt <= 0.0) return false;
  n.w = kPi * std::cosh(u) * n.t * n.omt;
  return true;
}

}  // namespace

QuadResult integrate_01(const Integrand01& f, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  QuadResult r;
  double h = 1.0;
  cplx sum = 0.0;
  auto add = [&](double u) {
    Node n;
    if (!node(u, n)) return;
    const cplx v = f(n.t, n.omt);
    ++r.evaluations;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw IntegrationError("integrand is not finite");
    sum += n.w * v;
  };
  for (double u = -kUMax; u <= kUMax + 1e-12; u += h) add(u);
  cplx prev = h * sum;
  for (int level = 1; level <= kMaxQuadLevels; ++level) {
    h *= 0.5;
    for (double u = -kUMax + h; u < kUMax; u += 2.0 * h) add(u);
    const cplx cur = h * sum;
    r.levels = level;
    r.value = cur;
    r.est_error = std::abs(cur - prev);
    if (level >= 3 && r.est_error <= tol * std::max(1.0, std::abs(cur))) return r;
    prev = cur;
  }
  throw NonConvergenceError("tanh-sinh quadrature missed its tolerance after " + std::to_string(kMaxQuadLevels) +
                            " levels (last difference " + std::to_string(r.est_error) + ")");
}

QuadResult integrate_01(const WeightedIntegrand& w, double tol) {
  if (!(w.exponent_left > -1.0 && w.exponent_right > -1.0))
    throw DomainError("endpoint exponents must exceed -1 for integrability");
  return integrate_01(
      [&](double t, double omt) {
        return std::pow(t, w.exponent_left) * std::pow(omt, w.exponent_right) * w.smooth(t, omt);
      },
      tol);
}

BalancedHyp hyp2f1_balanced(double a, double b, double t, double omt) {
  const double c = a + b;
  if (t < 0.5) {
    const double f = hyp2f1(a, b, c, t).real();
    const double fp = a * b / c * hyp2f1(a + 1, b + 1, c + 1, t).real();
    return {f, omt * fp};
  }
  // sum_n (a)_n (b)_n / n!^2 [2 psi(n+1) - psi(a+n) - psi(b+n) - ln(1-t)] (1-t)^n
  const double pref = std::exp(std::lgamma(c) - std::lgamma(a) - std::lgamma(b));
  const double L = std::log(omt);
  double coef = 1.0, pw = 1.0;
  double k = 2.0 * digamma(1.0) - digamma(a) - digamma(b);
  double val = 0.0, der = 0.0;
  for (int n = 0; n < 2000; ++n) {
    const double term = coef * (k - L) * pw;
    // (1-t) d/dt of coef (k - L) (1-t)^n is coef (1 - n (k - L)) (1-t)^n
    const double dterm = coef * (1.0 - n * (k - L)) * pw;
    val += term;
    der += dterm;
    if (n > 2 && std::abs(coef * pw) * (std::abs(k - L) + n + 1.0) < 1e-17 * (std::abs(val) + std::abs(der))) break;
    coef *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0));
    k += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (b + n);
    pw *= omt;
  }
  return {pref * val, pref * der};
}

double verify_int_rep_2F1(const Rational& a, const Rational& b, const Rational& c, cplx x, double tol) {
  if (!(sgn(b) > 0 && c - b > 0)) throw DomainError("integral form needs b > 0 and c - b > 0");
  if (!(std::abs(x) < 1.0)) throw DomainError("integral form check needs |x| < 1");
  const double ad = d(a), bd = d(b), cd = d(c);
  const QuadResult q = integrate_01(
      WeightedIntegrand{bd - 1.0, cd - bd - 1.0, [&](double t, double) { return std::pow(1.0 - x * t, -ad); }}, tol);
  const cplx series = beta(bd, cd - bd) * hyp2f1(ad, bd, cd, x);
  return std::abs(q.value - series) / std::max(std::abs(series), std::abs(q.value));
}

double verify_int_rep_3F2(const Rational& a, const Rational& b, const Rational& c, const Rational& d_,
                          const Rational& e, cplx x, double tol) {
  if (!(sgn(c) > 0 && e - c > 0)) throw DomainError("integral form needs c > 0 and e - c > 0");
  if (!(std::abs(x) < 1.0)) throw DomainError("integral form check needs |x| < 1");
  const double ad = d(a), bd = d(b), cd = d(c), dd = d(d_), ed = d(e);
  const QuadResult q = integrate_01(
      WeightedIntegrand{cd - 1.0, ed - cd - 1.0, [&](double t, double) { return hyp2f1(ad, bd, dd, x * t); }}, tol);
  const cplx series = beta(cd, ed - cd) * hyp3f2(ad, bd, cd, dd, ed, x);
  return std::abs(q.value - series) / std::max(std::abs(series), std::abs(q.value));
}

cplx H_integral(const HGParams& p, cplx lambda, double tol) {
  if (is_integer(p.mu)) throw HypothesisError("the H integral check runs only for non-integral mu");
  if (lambda.imag() == 0.0 && lambda.real() >= 0.0 && lambda.real() <= 1.0)
    throw DomainError("lambda must stay off [0, 1]");
  const double a = d(p.alpha), b = d(p.beta), mu = d(p.mu);
  const double e = 1.0 - a - b;
  const QuadResult q = integrate_01(
      [&](double t, double omt) {
        const BalancedHyp f = hyp2f1_balanced(1.0 - a, 1.0 - b, t, omt);
        return std::pow(lambda - t, mu - 1.0) * std::pow(t, e) * f.value;
      },
      tol);
  return beta(1.0 - a, 1.0 - b) * q.value;
}

double verify_H_integral(const HGParams& p, cplx lambda, double tol) {
  if (!(std::abs(1.0 - lambda) > 1.0)) throw DomainError("H integral check needs |1 - lambda| > 1");
  const cplx lhs = H_integral(p, lambda, tol);
  const cplx rhs = eval_H_mu(p, lambda);
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
}

}  // namespace hgp

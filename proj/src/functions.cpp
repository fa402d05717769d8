#include "hgperiod/functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hgperiod/errors.hpp"

namespace hgp {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kTwoPiI(0.0, 2.0 * kPi);

double d(const Rational& q) { return q.get_d(); }

std::optional<cplx> shift_anchor(Anchor anchor, cplx offset, double sign = 1.0) {
  if (!anchor) return std::nullopt;
  return sign * (*anchor - offset);
}

}  // namespace

std::string to_string(FunctionKind k) {
  switch (k) {
    case FunctionKind::f1: return "f1";
    case FunctionKind::f2: return "f2";
    case FunctionKind::f3: return "f3";
    case FunctionKind::F_mu: return "F_mu";
    case FunctionKind::G_mu: return "G_mu";
    case FunctionKind::H_mu: return "H_mu";
    case FunctionKind::pFq_raw: return "pFq";
    case FunctionKind::P_m: return "P_m";
    case FunctionKind::Q_m: return "Q_m";
  }
  return "?";
}

cplx anchored_log(cplx w, std::optional<cplx> w_anchor) {
  if (!w_anchor || *w_anchor == w) return std::log(w);
  if (*w_anchor == cplx(0.0)) throw DomainError("branch anchor sits on the branch point");
  return std::log(*w_anchor) + std::log(w / *w_anchor);
}

cplx anchored_pow(cplx w, cplx exponent, std::optional<cplx> w_anchor) {
  if (w == cplx(0.0)) {
    if (exponent == cplx(0.0)) return 1.0;
    if (exponent.real() > 0.0) return 0.0;
    throw PoleError("zero raised to a power with non-positive real part");
  }
  return std::exp(exponent * anchored_log(w, w_anchor));
}

cplx eval_f1(const Rational& a, const Rational& b, cplx t) {
  if (!(std::abs(t) < 1.0)) throw DomainError("f1 needs |t| < 1");
  return hyp2f1(d(a), d(b), d(a + b), t);
}

cplx eval_f2(const Rational& a, const Rational& b, cplx t) {
  if (!(std::abs(1.0 - t) < 1.0)) throw DomainError("f2 needs |1 - t| < 1");
  return hyp2f1(d(a), d(b), 1.0, 1.0 - t);
}

cplx eval_f3(const Rational& a, const Rational& b, cplx t, Anchor anchor) {
  if (!(std::abs(t) < 1.0)) throw DomainError("f3 needs |t| < 1");
  const Rational e = 1 - a - b;
  return anchored_pow(t, d(e), anchor) * hyp2f1(d(1 - a), d(1 - b), d(2 - a - b), t);
}

double check_kummer_relation(const Rational& a, const Rational& b, cplx t) {
  if (is_integer(Rational(a + b))) throw DomainError("Kummer relation degenerates when alpha + beta is an integer");
  if (is_integer(a) || is_integer(b)) throw DomainError("Kummer relation needs alpha, beta not integers");
  if (!(std::abs(t) < 1.0 && std::abs(1.0 - t) < 1.0)) throw DomainError("t must lie in |t| < 1, |1 - t| < 1");
  if (t.imag() == 0.0 && t.real() <= 0.0) throw DomainError("t on the non-positive real axis");
  const double ad = d(a), bd = d(b);
  const cplx e = std::exp(kTwoPiI * (ad + bd));
  const cplx ea = std::exp(kTwoPiI * ad), eb = std::exp(kTwoPiI * bd);
  const cplx t1 = beta(ad, bd) * eval_f1(a, b, t);
  const cplx t2 = kTwoPiI * (1.0 - e) / ((1.0 - ea) * (1.0 - eb)) * eval_f2(a, b, t);
  const cplx t3 = -beta(1.0 - ad, 1.0 - bd) * eval_f3(a, b, t);
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
  return std::abs(t1 + t2 + t3) / scale;
}

cplx F_nu(const Rational& a, const Rational& b, const Rational& nu, cplx lambda, Anchor anchor) {
  const cplx z = 1.0 - lambda;
  if (!(std::abs(z) < 1.0)) throw DomainError("F_mu needs |1 - lambda| < 1");
  if (is_zero(nu)) throw PoleError("F_nu undefined at nu = 0");
  const cplx pw = anchored_pow(lambda - 1.0, d(nu), shift_anchor(anchor, 1.0));
  if (pw == cplx(0.0)) return 0.0;
  return pw / d(nu) * hyp2f1(d(a), d(b), d(nu + 1), z);
}

cplx G_prefactor(const Rational& a, const Rational& b, const Rational& nu) {
  const Rational low = a + b - nu;
  if (is_integer(low) && sgn(low) <= 0)
    throw PoleError("G_mu degenerates: alpha + beta - mu is a non-positive integer");
  const cplx sign = std::exp(cplx(0.0, kPi * d(nu)));
  return sign * gamma_product({d(nu), d(nu + 1 - a - b)}, {d(nu + 1 - a), d(nu + 1 - b)});
}

cplx G_nu(const Rational& a, const Rational& b, const Rational& nu, cplx lambda) {
  if (!(std::abs(lambda) < 1.0)) throw DomainError("G_mu needs |lambda| < 1");
  return G_prefactor(a, b, nu) * hyp2f1(d(a - nu), d(b - nu), d(a + b - nu), lambda);
}

cplx H_nu(const Rational& a, const Rational& b, const Rational& nu, cplx lambda, Anchor anchor) {
  const cplx w = 1.0 - lambda;
  if (!(std::abs(w) > 1.0)) throw DomainError("H_mu needs |1 - lambda| > 1");
  const cplx pw = anchored_pow(lambda - 1.0, d(nu - 1), shift_anchor(anchor, 1.0));
  const double c = 1.0 / (d(1 - a) * d(1 - b));
  return c * pw * hyp3f2(1.0, 1.0, d(1 - nu), d(2 - a), d(2 - b), 1.0 / w);
}

cplx eval_F_mu(const HGParams& p, cplx lambda, int shift, Anchor anchor) {
  return F_nu(p.alpha, p.beta, p.nu(shift), lambda, anchor);
}
cplx eval_G_mu(const HGParams& p, cplx lambda, int shift) { return G_nu(p.alpha, p.beta, p.nu(shift), lambda); }
cplx eval_H_mu(const HGParams& p, cplx lambda, int shift, Anchor anchor) {
  return H_nu(p.alpha, p.beta, p.nu(shift), lambda, anchor);
}

AnalyticFunction::AnalyticFunction(FunctionKind kind, DomainTag tag, std::function<cplx(cplx, Anchor)> f,
                                   std::function<double(cplx)> margin)
    : kind_(kind), tag_(tag), f_(std::move(f)), margin_(std::move(margin)) {}

cplx AnalyticFunction::at(cplx z, Anchor anchor) const {
  if (!in_domain(z)) throw DomainError(to_string(kind_) + " evaluated outside its domain");
  return f_(z, anchor);
}

AnalyticFunction AnalyticFunction::custom(std::function<cplx(cplx)> f, std::function<double(cplx)> margin) {
  if (!margin) margin = [](cplx) { return std::numeric_limits<double>::infinity(); };
  return AnalyticFunction(FunctionKind::pFq_raw, DomainTag::custom,
                          [f = std::move(f)](cplx z, Anchor) { return f(z); }, std::move(margin));
}

double margin_disc_at_1(cplx z) { return std::min(1.0 - std::abs(1.0 - z), std::abs(1.0 - z)); }
double margin_exterior_of_1(cplx z) { return std::abs(1.0 - z) - 1.0; }

AnalyticFunction make_f1(const Rational& a, const Rational& b) {
  return {FunctionKind::f1, DomainTag::disc_at_0, [=](cplx t, Anchor) { return eval_f1(a, b, t); },
          [](cplx t) { return 1.0 - std::abs(t); }};
}
AnalyticFunction make_f2(const Rational& a, const Rational& b) {
  return {FunctionKind::f2, DomainTag::disc_at_1, [=](cplx t, Anchor) { return eval_f2(a, b, t); },
          [](cplx t) { return 1.0 - std::abs(1.0 - t); }};
}
AnalyticFunction make_f3(const Rational& a, const Rational& b) {
  return {FunctionKind::f3, DomainTag::disc_at_0, [=](cplx t, Anchor an) { return eval_f3(a, b, t, an); },
          [](cplx t) { return std::min(1.0 - std::abs(t), std::abs(t)); }};
}
AnalyticFunction make_F(const HGParams& p, int shift) {
  return {FunctionKind::F_mu, DomainTag::disc_at_1,
          [p, shift](cplx l, Anchor an) { return eval_F_mu(p, l, shift, an); }, margin_disc_at_1};
}
AnalyticFunction make_G(const HGParams& p, int shift) {
  return {FunctionKind::G_mu, DomainTag::disc_at_0, [p, shift](cplx l, Anchor) { return eval_G_mu(p, l, shift); },
          [](cplx l) { return 1.0 - std::abs(l); }};
}
AnalyticFunction make_H(const HGParams& p, int shift) {
  return {FunctionKind::H_mu, DomainTag::exterior_of_1,
          [p, shift](cplx l, Anchor an) { return eval_H_mu(p, l, shift, an); }, margin_exterior_of_1};
}

cplx derivative(const AnalyticFunction& fn, cplx z, int order, const CauchyOptions& opt) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (order == 0) return fn(z);
  if (opt.nodes < order + 2) throw std::invalid_argument("too few Cauchy nodes for this order");
  const double margin = fn.margin(z);
  if (!(margin > 0.0)) throw DomainError("derivative requested outside the domain");
  double r = opt.radius > 0.0 ? opt.radius : std::min(0.05, 0.5 * margin);
  if (r >= margin) throw DomainError("Cauchy circle leaves the domain");
  cplx acc = 0.0;
  for (int j = 0; j < opt.nodes; ++j) {
    const cplx w = std::polar(1.0, 2.0 * kPi * j / opt.nodes);
    acc += fn.at(z + r * w, z) * std::pow(w, -order);
  }
  return acc * std::tgamma(order + 1.0) / (static_cast<double>(opt.nodes) * std::pow(r, order));
}

}  // namespace hgp

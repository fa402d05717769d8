#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hgperiod/hg_core.hpp"
#include "hgperiod/params.hpp"

namespace hgp {

enum class FunctionKind { f1, f2, f3, F_mu, G_mu, H_mu, pFq_raw, P_m, Q_m };
enum class DomainTag { disc_at_0, disc_at_1, exterior_of_1, custom };

std::string to_string(FunctionKind k);

// Fractional powers are principal at the evaluation point unless an anchor is
// given, in which case the power is continued from its principal value at the
// anchor (log w = Log w_a + Log(w / w_a)).  Differentiating on a small circle
// around a point on a principal cut needs this.
using Anchor = std::optional<cplx>;

cplx anchored_log(cplx w, std::optional<cplx> w_anchor);
cplx anchored_pow(cplx w, cplx exponent, std::optional<cplx> w_anchor);

// Kummer solutions at t = 0 and t = 1.
cplx eval_f1(const Rational& a, const Rational& b, cplx t);
cplx eval_f2(const Rational& a, const Rational& b, cplx t);
cplx eval_f3(const Rational& a, const Rational& b, cplx t, Anchor anchor = std::nullopt);

// Normalized residual of the three-term relation among f1, f2, f3.
double check_kummer_relation(const Rational& a, const Rational& b, cplx t);

// Evaluators at an arbitrary index nu; the HGParams overloads use nu = mu + shift.
cplx F_nu(const Rational& a, const Rational& b, const Rational& nu, cplx lambda, Anchor anchor = std::nullopt);
cplx G_nu(const Rational& a, const Rational& b, const Rational& nu, cplx lambda);
cplx H_nu(const Rational& a, const Rational& b, const Rational& nu, cplx lambda, Anchor anchor = std::nullopt);

cplx eval_F_mu(const HGParams& p, cplx lambda, int shift = 0, Anchor anchor = std::nullopt);
cplx eval_G_mu(const HGParams& p, cplx lambda, int shift = 0);
cplx eval_H_mu(const HGParams& p, cplx lambda, int shift = 0, Anchor anchor = std::nullopt);

// Constant in front of the series in G_nu.
cplx G_prefactor(const Rational& a, const Rational& b, const Rational& nu);

// Evaluator handle.  margin(z) is the distance from z to the nearest point
// where the representation stops being holomorphic (domain boundary or branch
// point); it is <= 0 outside the domain.
class AnalyticFunction {
 public:
  AnalyticFunction(FunctionKind kind, DomainTag tag, std::function<cplx(cplx, Anchor)> f,
                   std::function<double(cplx)> margin);

  cplx operator()(cplx z) const { return at(z, std::nullopt); }
  cplx at(cplx z, Anchor anchor) const;
  bool in_domain(cplx z) const { return margin_(z) > 0.0; }
  double margin(cplx z) const { return margin_(z); }
  FunctionKind kind() const { return kind_; }
  DomainTag domain() const { return tag_; }

  static AnalyticFunction custom(std::function<cplx(cplx)> f, std::function<double(cplx)> margin = {});

 private:
  FunctionKind kind_;
  DomainTag tag_;
  std::function<cplx(cplx, Anchor)> f_;
  std::function<double(cplx)> margin_;
};

AnalyticFunction make_f1(const Rational& a, const Rational& b);
AnalyticFunction make_f2(const Rational& a, const Rational& b);
AnalyticFunction make_f3(const Rational& a, const Rational& b);
AnalyticFunction make_F(const HGParams& p, int shift = 0);
AnalyticFunction make_G(const HGParams& p, int shift = 0);
AnalyticFunction make_H(const HGParams& p, int shift = 0);

double margin_disc_at_1(cplx z);      // |1-z| < 1, branch point at 1
double margin_exterior_of_1(cplx z);  // |1-z| > 1

struct CauchyOptions {
  double radius = 0.0;  // 0 selects min(0.05, margin / 2)
  int nodes = 32;
};

// order-th derivative by the trapezoid rule on a circle around z.
cplx derivative(const AnalyticFunction& fn, cplx z, int order = 1, const CauchyOptions& opt = {});

}  // namespace hgp

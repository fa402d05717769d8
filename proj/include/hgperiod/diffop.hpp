#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hgperiod/params.hpp"
#include "hgperiod/rational_function.hpp"
#include "hgperiod/theta_data.hpp"
#include "json.hpp"

namespace hgp {

class AnalyticFunction;

// d: the derivation d/dlambda.  D: the Euler derivation lambda d/dlambda.
enum class Basis { d, D };

// sum_i coeffs[i] * X^i with X the basis derivation.  Coefficients are stored
// on the left.
class DiffOperator {
 public:
  DiffOperator() = default;
  DiffOperator(Basis basis, std::vector<QRatFn> coeffs);

  static DiffOperator identity(Basis basis) { return scalar(QRatFn(1L), basis); }
  static DiffOperator scalar(QRatFn c, Basis basis) { return DiffOperator(basis, {std::move(c)}); }
  static DiffOperator derivation(Basis basis) { return DiffOperator(basis, {QRatFn(), QRatFn(1L)}); }
  // X^k
  static DiffOperator power(Basis basis, int k);

  Basis basis() const { return basis_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for the zero operator
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<QRatFn>& coeffs() const { return coeffs_; }
  QRatFn coeff(int i) const;
  const QRatFn& leading() const { return coeffs_.back(); }

  DiffOperator operator-() const;
  friend DiffOperator operator+(const DiffOperator& x, const DiffOperator& y);
  friend DiffOperator operator-(const DiffOperator& x, const DiffOperator& y) { return x + (-y); }
  // left multiplication by a function
  friend DiffOperator operator*(const QRatFn& c, const DiffOperator& x);
  friend bool operator==(const DiffOperator& x, const DiffOperator& y) {
    return x.basis_ == y.basis_ && x.coeffs_ == y.coeffs_;
  }

 private:
  void trim();
  Basis basis_ = Basis::d;
  std::vector<QRatFn> coeffs_;
};

// Image of f under the basis derivation: f' or lambda f'.
QRatFn apply_derivation(Basis basis, const QRatFn& f);

DiffOperator compose(const DiffOperator& L, const DiffOperator& M);

struct Division {
  DiffOperator quotient;
  DiffOperator remainder;
};
// L = quotient ∘ D + remainder with order(remainder) < order(D).
Division right_divide(const DiffOperator& L, const DiffOperator& D);

DiffOperator to_d_basis(const DiffOperator& L);
DiffOperator to_D_basis(const DiffOperator& L);

// Numerical application.  jet[i] is the i-th d/dlambda derivative at lambda.
cplx apply(const DiffOperator& L, cplx lambda, const std::vector<cplx>& jet);
// Same, derivatives taken on a Cauchy circle.
cplx apply(const DiffOperator& L, const AnalyticFunction& f, cplx lambda);
// Sum of the magnitudes of the individual terms; the natural scale for residuals.
double apply_scale(const DiffOperator& L, cplx lambda, const std::vector<cplx>& jet);

std::string to_string(const DiffOperator& L);
nlohmann::json to_json(const DiffOperator& L);
DiffOperator diffop_from_json(const nlohmann::json& j);

// True when every denominator divides lambda^a (lambda - 1)^b.
bool poles_only_at_0_1(const QRatFn& f);

// The second-order operator annihilating F_mu and G_mu (d basis).
DiffOperator build_D(const HGParams& p);
// D_lambda(D_lambda - mu + alpha + beta - 1) - lambda (D_lambda - mu + alpha)(D_lambda - mu + beta), D basis.
DiffOperator build_P_HG(const HGParams& p);
// (1 - lambda) D_lambda + (mu - 1) lambda, D basis.
DiffOperator build_theta_lambda(const HGParams& p);
// compose(theta_lambda, P_HG).
DiffOperator build_Q_HG(const HGParams& p);
// First-order factor killing lambda (lambda - 1)^(mu - 1): (1 - lambda)(D_lambda - 1) + (mu - 1) lambda.
DiffOperator build_theta_H(const HGParams& p);
// compose(theta_H, P_HG): third-order operator annihilating F_mu, G_mu and H_mu.
DiffOperator build_H_annihilator(const HGParams& p);

struct ThetaConstruction {
  int N = 0;
  DiffOperator theta1;
  DiffOperator theta2;
  std::vector<DiffOperator> steps;  // step j maps F_{mu+j} to F_{mu+j+1}
  DiffOperator product;             // theta1 ∘ theta2
  Division reduced;                 // product divided by build_D(p)
  DiffOperator theta;               // the remainder, order <= 1
};

// N < 0 selects the default max(deg p0, deg p1).
ThetaConstruction construct_Theta(const HGParams& p, const ThetaData& td, int N = -1);
DiffOperator build_Theta(const HGParams& p, const ThetaData& td, int N = -1);
// d/dlambda ∘ Theta reduced modulo build_D(p).
DiffOperator derivative_of_Theta(const HGParams& p, const DiffOperator& theta);

}  // namespace hgp

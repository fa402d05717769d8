#pragma once

#include <optional>
#include <vector>

#include "hgperiod/continuation.hpp"
#include "hgperiod/diffop.hpp"
#include "hgperiod/functions.hpp"
#include "hgperiod/sfn.hpp"
#include "hgperiod/theta_data.hpp"

namespace hgp {

// m must satisfy m ≡ k (mod l), m > 0; mu_m = m / l.
Rational mu_of(const HGParams& p, long m);

// (2 pi i / l) sum_i (a_i + b_i ∂) F_{mu_m + i}(lambda), ∂F_nu = (nu - 1) F_{nu - 1}.
cplx eval_P_m(const HGParams& p, const ThetaData& td, long m, cplx lambda, Anchor anchor = std::nullopt);
// (1 / l) sum_i (a_i + b_i ∂) H_{mu_m + i}(lambda).
cplx eval_Q_m(const HGParams& p, const ThetaData& td, long m, cplx lambda, Anchor anchor = std::nullopt);
AnalyticFunction make_P(const HGParams& p, const ThetaData& td, long m);
AnalyticFunction make_Q(const HGParams& p, const ThetaData& td, long m);

// (Theta f)(lambda) for f in {F_mu, G_mu}, using exact jets from the recurrences.
cplx apply_first_order(const DiffOperator& theta, cplx lambda, const std::array<cplx, 2>& jet);

struct PeriodMatrixResult {
  HGParams params;  // mu = m / l
  long m = 0;
  DiffOperator theta;
  DiffOperator dtheta;  // ∂∘Theta reduced modulo the hypergeometric operator
  cplx zeta_m;          // zeta^m, zeta = e^{2 pi i / l}
  cplx prefactor_zeta;  // 2 pi i (1 - zeta^m)
  cplx xi;
  bool degenerate = false;  // l | m

  Mat2 inner(cplx lambda) const;  // [[ΘF, ΘG], [∂ΘF, ∂ΘG]]
  Mat2 full(cplx lambda) const;
  // |det inner| / (|ΘF||∂ΘG| + |ΘG||∂ΘF|)
  double inner_relative_det(cplx lambda) const;
};

PeriodMatrixResult period_matrix(const HGParams& p, const ThetaData& td, long m);

// Admissible m: m ≡ k (mod l), m > l, in increasing order.
std::vector<long> admissible_m(const HGParams& p, int count);

struct RegulatorRecursionState {
  HGParams params;
  Rational a_lower;  // 2 - alpha
  Rational b_lower;  // 2 - beta
  int depth = 0;
  SFn A, B;
  std::vector<SFn> C, D;  // C[i + 1] = C_i, i = -1 .. depth
  std::vector<SFn> e;     // e[i + 1] = e_i, i = -1 .. N

  const SFn& C_at(int i) const { return C.at(static_cast<std::size_t>(i + 1)); }
  const SFn& D_at(int i) const { return D.at(static_cast<std::size_t>(i + 1)); }
  SFn E1(int r) const;
  SFn E2(int r) const;
};

inline SFn shift_s(const SFn& f, long k) { return f.shifted(k); }
inline QRatFn at_s(const SFn& f, const Rational& s) { return f.at(s); }

// Builds C_i, D_i for i <= depth (default: enough for E^{(n)} with n = default_n).
RegulatorRecursionState regulator_recursion(const HGParams& p, const ThetaData& td, int depth);

// The same families from left-associated matrix products
// Pi_i(s) = Pi_{i-1}(s) M(s + i), (C_i, D_i) = Pi_i(s) (0, 1).
std::pair<std::vector<SFn>, std::vector<SFn>> recursion_by_products(const HGParams& p, int depth);

// C_i, D_i at s = s0 directly in Q(lambda) from the product M(s0) ... M(s0 + i).
std::pair<QRatFn, QRatFn> instantiate_CD(const HGParams& p, int i, const Rational& s0);

// Default depth for the (λ-1)^{n+1} prefactor: keeps mu - n in (1, 2].
int default_n(const HGParams& p);

struct FitReport {
  double fit_residual = 0.0;           // in-sample, normalized
  double validation_residual = 0.0;    // held-out half
  double condition_number = 0.0;
  int degree = 0;                      // basis x^j, |j| <= degree, x = 1/(1-λ)
  std::optional<cplx> c1;              // joint scalar unknown when present
  bool ok(double threshold) const { return fit_residual < threshold && validation_residual < threshold; }
};

// λ with |1/(1-λ)| in [0.25, 0.7], deterministic in seed.
std::vector<cplx> exterior_samples(int count, unsigned long seed);
std::vector<cplx> interior_samples(int count, unsigned long seed);  // |1-λ| < 1, |λ| < 1 lens

// Φ(s + i) - (λ-1) C_i(s) Φ(s) - D_i(s) Φ(s-1) at s = mu, Φ(s) = 3F2(1,1,1-s; a,b; x),
// fitted by a Laurent polynomial in x.
FitReport check_three_term_congruence(const HGParams& p, int i, const std::vector<cplx>& samples);
// Raw remainder value at one λ (normalized scale in second).
std::pair<cplx, double> three_term_remainder(const HGParams& p, int i, cplx lambda);

enum class Lift { phi1, phi2 };

// Q_m (or Q_{m-l} for phi2) against (1/l)(λ-1)^{r+1}[E1^{(r)}(s) H_s + E2^{(r)}(s) H_{s-1}],
// s = mu_m - n, r = n (phi1) or n - 1 (phi2); C1 and the remainder divided by
// (λ-1)^{mu-1} are fitted jointly.  literal = true uses the uncorrected form
// (1-λ)^r [E1^{(r)}(mu) H_mu + E2^{(r)}(mu) H_{mu-1}] as a negative control.
FitReport check_regulator_congruence(const HGParams& p, const ThetaData& td, long m, int n,
                                     const std::vector<cplx>& samples, Lift lift = Lift::phi1,
                                     bool literal = false);

// Laurent-polynomial least squares: y ≈ sum_k c_k extra_k + sum_{|j|<=deg} b_j x^j.
FitReport fit_laurent(const std::vector<cplx>& x, const std::vector<cplx>& y,
                      const std::vector<std::vector<cplx>>& extra, int max_degree);

}  // namespace hgp

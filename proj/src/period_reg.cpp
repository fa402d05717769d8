#include "hgperiod/period_reg.hpp"

#include <algorithm>
#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hgperiod/errors.hpp"

namespace hgp {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kTwoPiI(0.0, 2.0 * kPi);

double d(const Rational& q) { return q.get_d(); }
QRatFn lam() { return QRatFn::x(); }
QRatFn one_over_lm1() { return QRatFn(QPoly(1L), QPoly::x() - QPoly(1L)); }

SFn spoly(std::vector<QRatFn> c) { return SFn(SFn::Num(std::move(c))); }

// A(s), B(s) with a = 2 - alpha, b = 2 - beta; denominator (s + a - 1)(s + b - 1).
SFn A_of(const Rational& a, const Rational& b) {
  const QRatFn x = QRatFn(1L) / (QRatFn(1L) - lam());
  return spoly({QRatFn(), QRatFn(a + b - 3), QRatFn(2L) - x}) * SFn::inverse_linear({1 - a, 1 - b});
}

SFn B_of(const Rational& a, const Rational& b) {
  return spoly({QRatFn(), lam(), -lam()}) * SFn::inverse_linear({1 - a, 1 - b});
}

QRatFn A_at(const Rational& a, const Rational& b, const Rational& s) {
  const Rational den = (a + s - 1) * (b + s - 1);
  if (is_zero(den)) throw PoleError("a + s - 1 or b + s - 1 vanishes at an instantiated shift");
  const QRatFn x = QRatFn(1L) / (QRatFn(1L) - lam());
  return QRatFn(s / den) * (QRatFn(a + b + 2 * s - 3) - QRatFn(s) * x);
}

QRatFn B_at(const Rational& a, const Rational& b, const Rational& s) {
  const Rational den = (a + s - 1) * (b + s - 1);
  if (is_zero(den)) throw PoleError("a + s - 1 or b + s - 1 vanishes at an instantiated shift");
  return QRatFn(s * (1 - s) / den) * lam();
}

void require_admissible(const HGParams& p, long m) {
  if (m <= 0) throw HypothesisError("m must be positive");
  long r = m % p.l;
  if (r < 0) r += p.l;
  if (r != p.k) throw HypothesisError("m must satisfy m ≡ k (mod l)");
}

std::vector<QRatFn> e_coeffs(const ThetaData& td, int i) {
  // e_i(s) = c0 + c1 s
  if (i == -1) {
    const QRatFn b0 = QRatFn(td.b_at(0)) * one_over_lm1();
    return {-b0, b0};
  }
  QRatFn c = QRatFn(1L);
  for (int k = 0; k < i; ++k) c = c * (QRatFn(1L) - lam());
  if (i % 2 == 1) c = -c;
  const QRatFn ai(td.a_at(i)), bi1(td.b_at(i + 1));
  return {c * (ai + QRatFn(Rational(i)) * bi1), c * bi1};
}

QRatFn e_at(const ThetaData& td, int i, const Rational& s) {
  const auto c = e_coeffs(td, i);
  return c[0] + c[1] * QRatFn(s);
}

int theta_top(const ThetaData& td) { return std::max(static_cast<int>(td.a.size()), static_cast<int>(td.b.size())); }

// E1^{(r)}(s), E2^{(r)}(s) at a rational s, via instantiated C_i, D_i.
std::pair<QRatFn, QRatFn> E_at(const HGParams& p, const ThetaData& td, int r, const Rational& s) {
  QRatFn e1, e2;
  for (int i = -1; i <= theta_top(td); ++i) {
    const QRatFn ei = e_at(td, i, s + r);
    if (ei.is_zero_rf()) continue;
    if (r + i < -1) continue;
    const auto [c, dd] = instantiate_CD(p, r + i, s);
    e1 = e1 + ei * c;
    e2 = e2 + ei * dd;
  }
  return {e1, e2};
}

}  // namespace

Rational mu_of(const HGParams& p, long m) {
  require_admissible(p, m);
  Rational mu(m, p.l);
  mu.canonicalize();
  return mu;
}

cplx eval_P_m(const HGParams& p, const ThetaData& td, long m, cplx lambda, Anchor anchor) {
  const Rational nu = mu_of(p, m);
  cplx acc = 0.0;
  const int top = theta_top(td);
  for (int i = 0; i < top; ++i) {
    const QPoly ai = td.a_at(i), bi = td.b_at(i);
    if (!ai.is_zero_poly()) acc += ai.eval(lambda) * F_nu(p.alpha, p.beta, nu + i, lambda, anchor);
    if (!bi.is_zero_poly())
      acc += bi.eval(lambda) * d(nu + i - 1) * F_nu(p.alpha, p.beta, nu + i - 1, lambda, anchor);
  }
  return kTwoPiI / static_cast<double>(p.l) * acc;
}

cplx eval_Q_m(const HGParams& p, const ThetaData& td, long m, cplx lambda, Anchor anchor) {
  const Rational nu = mu_of(p, m);
  cplx acc = 0.0;
  const int top = theta_top(td);
  for (int i = 0; i < top; ++i) {
    const QPoly ai = td.a_at(i), bi = td.b_at(i);
    if (!ai.is_zero_poly()) acc += ai.eval(lambda) * H_nu(p.alpha, p.beta, nu + i, lambda, anchor);
    if (!bi.is_zero_poly())
      acc += bi.eval(lambda) * d(nu + i - 1) * H_nu(p.alpha, p.beta, nu + i - 1, lambda, anchor);
  }
  return acc / static_cast<double>(p.l);
}

AnalyticFunction make_P(const HGParams& p, const ThetaData& td, long m) {
  mu_of(p, m);
  return {FunctionKind::P_m, DomainTag::disc_at_1,
          [p, td, m](cplx l, Anchor an) { return eval_P_m(p, td, m, l, an); }, margin_disc_at_1};
}

AnalyticFunction make_Q(const HGParams& p, const ThetaData& td, long m) {
  mu_of(p, m);
  return {FunctionKind::Q_m, DomainTag::exterior_of_1,
          [p, td, m](cplx l, Anchor an) { return eval_Q_m(p, td, m, l, an); }, margin_exterior_of_1};
}

cplx apply_first_order(const DiffOperator& theta, cplx lambda, const std::array<cplx, 2>& jet) {
  if (theta.order() > 1) throw std::invalid_argument("expected an operator of order <= 1");
  return apply(theta, lambda, {jet[0], jet[1]});
}

PeriodMatrixResult period_matrix(const HGParams& p, const ThetaData& td, long m) {
  PeriodMatrixResult r;
  const Rational mu = mu_of(p, m);
  if (m <= p.l) throw HypothesisError("the period matrix needs m > l");
  r.params = HGParams::make(p.alpha, p.beta, mu, p.l);
  r.m = m;
  r.theta = build_Theta(r.params, td);
  r.dtheta = derivative_of_Theta(r.params, r.theta);
  r.degenerate = m % p.l == 0;
  r.zeta_m = r.degenerate ? cplx(1.0) : std::polar(1.0, 2.0 * kPi * static_cast<double>(m % p.l) / p.l);
  r.prefactor_zeta = kTwoPiI * (1.0 - r.zeta_m);
  r.xi = xi_of(r.params);
  return r;
}

Mat2 PeriodMatrixResult::inner(cplx lambda) const {
  const auto f = F_jet(params, lambda), g = G_jet(params, lambda);
  return Mat2{{{apply_first_order(theta, lambda, f), apply_first_order(theta, lambda, g)},
               {apply_first_order(dtheta, lambda, f), apply_first_order(dtheta, lambda, g)}}};
}

Mat2 PeriodMatrixResult::full(cplx lambda) const {
  const double mu = d(params.mu);
  const Mat2 diag{{{1.0, 0.0}, {0.0, 1.0 / (mu - 1.0)}}};
  const Mat2 right{{{1.0, xi}, {0.0, 1.0 - xi}}};
  Mat2 out = mat_mul(mat_mul(diag, inner(lambda)), right);
  for (auto& row : out)
    for (auto& v : row) v *= prefactor_zeta;
  return out;
}

double PeriodMatrixResult::inner_relative_det(cplx lambda) const {
  const Mat2 w = inner(lambda);
  const double scale = std::abs(w[0][0] * w[1][1]) + std::abs(w[0][1] * w[1][0]);
  return scale == 0.0 ? 0.0 : std::abs(mat_det(w)) / scale;
}

std::vector<long> admissible_m(const HGParams& p, int count) {
  std::vector<long> out;
  for (long m = p.k; static_cast<int>(out.size()) < count; m += p.l)
    if (m > p.l) out.push_back(m);
  return out;
}

RegulatorRecursionState regulator_recursion(const HGParams& p, const ThetaData& td, int depth) {
  RegulatorRecursionState st;
  st.params = p;
  st.a_lower = 2 - p.alpha;
  st.b_lower = 2 - p.beta;
  st.depth = depth;
  st.A = A_of(st.a_lower, st.b_lower);
  st.B = B_of(st.a_lower, st.b_lower);
  st.C.push_back(SFn());
  st.D.push_back(SFn(1L));
  const SFn inv(one_over_lm1());
  for (int i = -1; i < depth; ++i) {
    const SFn cs = shift_s(st.C.back(), 1), ds = shift_s(st.D.back(), 1);
    st.C.push_back(st.A * cs + ds * inv);
    st.D.push_back(st.B * cs);
  }
  for (int i = -1; i <= theta_top(td); ++i) st.e.push_back(spoly(e_coeffs(td, i)));
  return st;
}

SFn RegulatorRecursionState::E1(int r) const {
  SFn acc;
  for (int i = -1; i + 1 < static_cast<int>(e.size()); ++i) {
    const SFn& ei = e[static_cast<std::size_t>(i + 1)];
    if (ei.is_zero() || r + i < -1) continue;
    if (r + i > depth) throw std::out_of_range("recursion depth too small for this E");
    acc = acc + shift_s(ei, r) * C_at(r + i);
  }
  return acc;
}

SFn RegulatorRecursionState::E2(int r) const {
  SFn acc;
  for (int i = -1; i + 1 < static_cast<int>(e.size()); ++i) {
    const SFn& ei = e[static_cast<std::size_t>(i + 1)];
    if (ei.is_zero() || r + i < -1) continue;
    if (r + i > depth) throw std::out_of_range("recursion depth too small for this E");
    acc = acc + shift_s(ei, r) * D_at(r + i);
  }
  return acc;
}

std::pair<std::vector<SFn>, std::vector<SFn>> recursion_by_products(const HGParams& p, int depth) {
  const Rational a = 2 - p.alpha, b = 2 - p.beta;
  const SFn A = A_of(a, b), B = B_of(a, b), inv(one_over_lm1());
  std::vector<SFn> C{SFn()}, D{SFn(1L)};
  // Pi = [[p00, p01], [p10, p11]]
  SFn p00(1L), p01, p10, p11(1L);
  for (int i = 0; i <= depth; ++i) {
    const SFn Ai = shift_s(A, i), Bi = shift_s(B, i);
    const SFn n00 = p00 * Ai + p01 * Bi, n01 = p00 * inv;
    const SFn n10 = p10 * Ai + p11 * Bi, n11 = p10 * inv;
    p00 = n00;
    p01 = n01;
    p10 = n10;
    p11 = n11;
    C.push_back(p01);
    D.push_back(p11);
  }
  return {C, D};
}

std::pair<QRatFn, QRatFn> instantiate_CD(const HGParams& p, int i, const Rational& s0) {
  if (i < -1) throw std::invalid_argument("index below -1");
  const Rational a = 2 - p.alpha, b = 2 - p.beta;
  QRatFn c, dd(1L);
  const QRatFn inv = one_over_lm1();
  for (int j = i; j >= 0; --j) {
    const Rational s = s0 + j;
    const QRatFn nc = A_at(a, b, s) * c + inv * dd;
    const QRatFn nd = B_at(a, b, s) * c;
    c = nc;
    dd = nd;
  }
  return {c, dd};
}

int default_n(const HGParams& p) {
  // largest n with mu - n > 1
  mpz_class fl;
  mpz_cdiv_q(fl.get_mpz_t(), p.mu.get_num_mpz_t(), p.mu.get_den_mpz_t());
  return std::max(0, static_cast<int>(fl.get_si()) - 2);
}

std::vector<cplx> exterior_samples(int count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rad(0.25, 0.7), ang(-kPi, kPi);
  std::vector<cplx> out;
  for (int i = 0; i < count; ++i) out.push_back(1.0 - 1.0 / std::polar(rad(rng), ang(rng)));
  return out;
}

std::vector<cplx> interior_samples(int count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rad(0.0, 0.3), ang(-kPi, kPi);
  std::vector<cplx> out;
  for (int i = 0; i < count; ++i) out.push_back(0.5 + std::polar(rad(rng), ang(rng)));
  return out;
}

FitReport fit_laurent(const std::vector<cplx>& x, const std::vector<cplx>& y,
                      const std::vector<std::vector<cplx>>& extra, int max_degree) {
  const std::size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("fit: size mismatch");
  std::vector<std::size_t> train, test;
  for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? train : test).push_back(i);

  FitReport best;
  best.validation_residual = std::numeric_limits<double>::infinity();
  best.fit_residual = std::numeric_limits<double>::infinity();
  for (int deg = 0; deg <= max_degree; ++deg) {
    const std::size_t cols = extra.size() + static_cast<std::size_t>(2 * deg + 1);
    if (cols * 2 > train.size() + 1) break;
    auto row = [&](std::size_t i) {
      Eigen::RowVectorXcd r(static_cast<Eigen::Index>(cols));
      std::size_t c = 0;
      for (const auto& e : extra) r(static_cast<Eigen::Index>(c++)) = e[i];
      for (int j = -deg; j <= deg; ++j) r(static_cast<Eigen::Index>(c++)) = std::pow(x[i], j);
      return r;
    };
    Eigen::MatrixXcd M(static_cast<Eigen::Index>(train.size()), static_cast<Eigen::Index>(cols));
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(train.size()));
    for (std::size_t k = 0; k < train.size(); ++k) {
      M.row(static_cast<Eigen::Index>(k)) = row(train[k]);
      rhs(static_cast<Eigen::Index>(k)) = y[train[k]];
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXcd sol = svd.solve(rhs);
    const auto& sv = svd.singularValues();
    const double cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
    const double in_res = rhs.norm() > 0 ? (M * sol - rhs).norm() / rhs.norm() : 0.0;
    double num = 0.0, den = 0.0;
    for (std::size_t i : test) {
      num += std::norm((row(i) * sol)(0) - y[i]);
      den += std::norm(y[i]);
    }
    const double out_res = den > 0 ? std::sqrt(num / den) : 0.0;
    if (out_res < best.validation_residual * 0.5 || (out_res <= best.validation_residual && deg == 0)) {
      best.validation_residual = out_res;
      best.fit_residual = in_res;
      best.condition_number = cond;
      best.degree = deg;
      if (!extra.empty()) best.c1 = sol(0);
    }
  }
  return best;
}

std::pair<cplx, double> three_term_remainder(const HGParams& p, int i, cplx lambda) {
  const Rational s = p.mu;
  const double a = d(2 - p.alpha), b = d(2 - p.beta);
  const cplx x = 1.0 / (1.0 - lambda);
  if (!(std::abs(x) < 1.0)) throw DomainError("three-term check needs |1/(1-lambda)| < 1");
  auto phi = [&](const Rational& t) { return hyp3f2(1.0, 1.0, d(1 - t), a, b, x); };
  const auto [c, dd] = instantiate_CD(p, i, s);
  const cplx t0 = phi(s + i);
  const cplx t1 = (lambda - 1.0) * c.eval(lambda) * phi(s);
  const cplx t2 = dd.eval(lambda) * phi(s - 1);
  return {t0 - t1 - t2, std::abs(t0) + std::abs(t1) + std::abs(t2)};
}

FitReport check_three_term_congruence(const HGParams& p, int i, const std::vector<cplx>& samples) {
  std::vector<cplx> xs, ys;
  double scale = 0.0, raw = 0.0;
  for (const cplx& l : samples) {
    const auto [r, sc] = three_term_remainder(p, i, l);
    xs.push_back(1.0 / (1.0 - l));
    ys.push_back(r);
    scale += sc * sc;
    raw += std::norm(r);
  }
  if (raw <= 1e-24 * scale) {
    FitReport z;
    z.fit_residual = z.validation_residual = std::sqrt(raw / scale);
    return z;
  }
  return fit_laurent(xs, ys, {}, i + 3);
}

FitReport check_regulator_congruence(const HGParams& p, const ThetaData& td, long m, int n,
                                     const std::vector<cplx>& samples, Lift lift, bool literal) {
  const Rational mu = mu_of(p, m);
  const long mq = lift == Lift::phi1 ? m : m - p.l;
  const int r = lift == Lift::phi1 ? n : n - 1;
  if (r < 0) throw std::invalid_argument("the second lift needs n >= 1");
  const Rational mu_q = mu_of(p, mq);
  const Rational s = literal ? mu_q : mu - n;
  const auto [e1, e2] = E_at(p, td, r, s);
  std::vector<cplx> xs, ys, model;
  for (const cplx& l : samples) {
    const cplx q = eval_Q_m(p, td, mq, l);
    const cplx hs = H_nu(p.alpha, p.beta, s, l), hs1 = H_nu(p.alpha, p.beta, s - 1, l);
    cplx t = e1.eval(l) * hs + e2.eval(l) * hs1;
    t *= literal ? std::pow(1.0 - l, static_cast<double>(r)) : std::pow(l - 1.0, static_cast<double>(r + 1));
    const cplx norm = std::pow(l - 1.0, d(mu_q) - 1.0);
    xs.push_back(1.0 / (1.0 - l));
    ys.push_back(q / norm);
    model.push_back(t / norm);
  }
  // The remainder degree in x tracks the theta polynomials, not n; one
  // degree of slack keeps the fit honest against the uncorrected form.
  const int rem = std::max({td.p0.degree(), td.p1.degree() - 1, 0});
  return fit_laurent(xs, ys, {model}, rem + 1);
}

}  // namespace hgp

#include "hgperiod/continuation.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>

#include "hgperiod/errors.hpp"

namespace hgp {

namespace {

constexpr double kPi = std::numbers::pi;
namespace ode = boost::numeric::odeint;
using State = std::vector<double>;

// Coefficients of a d-basis operator with double-precision polynomial parts.
struct NumericOperator {
  std::vector<std::vector<double>> num, den;

  explicit NumericOperator(const DiffOperator& L) {
    const DiffOperator Ld = to_d_basis(L);
    for (const auto& c : Ld.coeffs()) {
      num.push_back(convert(c.num()));
      den.push_back(convert(c.den()));
    }
  }
  static std::vector<double> convert(const QPoly& p) {
    std::vector<double> v;
    for (const auto& c : p.coeffs()) v.push_back(c.get_d());
    return v;
  }
  static cplx horner(const std::vector<double>& c, cplx z) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  cplx coeff(std::size_t i, cplx z) const { return horner(num[i], z) / horner(den[i], z); }
  std::size_t order() const { return num.size() - 1; }
};

}  // namespace

double Segment::length() const { return kind == Kind::line ? std::abs(to - from) : radius * std::abs(dtheta); }

cplx Segment::point(double s) const {
  if (kind == Kind::line) {
    const double len = length();
    return len == 0.0 ? from : from + (to - from) * (s / len);
  }
  const double dir = dtheta >= 0 ? 1.0 : -1.0;
  return center + std::polar(radius, theta0 + dir * s / radius);
}

cplx Segment::tangent(double s) const {
  if (kind == Kind::line) {
    const double len = length();
    return len == 0.0 ? cplx(0.0) : (to - from) / len;
  }
  const double dir = dtheta >= 0 ? 1.0 : -1.0;
  return cplx(0.0, dir) * std::polar(1.0, theta0 + dir * s / radius);
}

PathSpec PathSpec::circle(cplx center, double radius, int turns, double start_angle) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
  PathSpec p;
  Segment s;
  s.kind = Segment::Kind::arc;
  s.center = center;
  s.radius = radius;
  s.theta0 = start_angle;
  s.dtheta = 2.0 * kPi * turns;
  p.segs_.push_back(s);
  return p;
}

PathSpec PathSpec::polyline(const std::vector<cplx>& points) {
  if (points.empty()) throw std::invalid_argument("polyline needs at least one point");
  PathSpec p;
  if (points.size() == 1) {
    Segment s;
    s.from = s.to = points[0];
    p.segs_.push_back(s);
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    Segment s;
    s.from = points[i - 1];
    s.to = points[i];
    p.segs_.push_back(s);
  }
  return p;
}

PathSpec PathSpec::then(const PathSpec& next) const {
  if (std::abs(end_point() - next.base_point()) > 1e-12) throw std::invalid_argument("paths do not join");
  PathSpec p = *this;
  p.segs_.insert(p.segs_.end(), next.segs_.begin(), next.segs_.end());
  return p;
}

cplx PathSpec::base_point() const { return segs_.front().point(0.0); }
cplx PathSpec::end_point() const { return segs_.back().point(segs_.back().length()); }

double PathSpec::length() const {
  double acc = 0.0;
  for (const auto& s : segs_) acc += s.length();
  return acc;
}

void PathSpec::validate(const std::vector<cplx>& singular, double min_dist) const {
  for (const auto& s : segs_) {
    const double len = s.length();
    const int n = std::max(2, static_cast<int>(len / (0.1 * min_dist)) + 1);
    for (int i = 0; i <= n; ++i) {
      const cplx z = s.point(len * i / n);
      for (const auto& q : singular)
        if (std::abs(z - q) < min_dist) throw DomainError("path passes too close to a singular point");
    }
  }
}

std::vector<cplx> integrate_ode(const DiffOperator& L, const std::vector<cplx>& jet, const PathSpec& path,
                                double tol) {
  const NumericOperator op(L);
  const std::size_t n = op.order();
  if (n < 1) throw std::invalid_argument("operator must have positive order");
  if (jet.size() != n) throw std::invalid_argument("initial jet length must equal the operator order");
  path.validate();

  State y(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    y[2 * i] = jet[i].real();
    y[2 * i + 1] = jet[i].imag();
  }
  for (const auto& seg : path.segments()) {
    const double len = seg.length();
    if (len == 0.0) continue;
    auto rhs = [&](const State& x, State& dxds, double s) {
      const cplx z = seg.point(s), dz = seg.tangent(s);
      cplx top = 0.0;
      for (std::size_t i = 0; i < n; ++i) top += op.coeff(i, z) * cplx(x[2 * i], x[2 * i + 1]);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const cplx v = cplx(x[2 * i + 2], x[2 * i + 3]) * dz;
        dxds[2 * i] = v.real();
        dxds[2 * i + 1] = v.imag();
      }
      const cplx last = -top / op.coeff(n, z) * dz;
      dxds[2 * n - 2] = last.real();
      dxds[2 * n - 1] = last.imag();
    };
    try {
      auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_fehlberg78<State>());
      ode::integrate_adaptive(stepper, rhs, y, 0.0, len, std::min(0.01, len));
    } catch (const std::exception& e) {
      throw IntegrationError(std::string("continuation failed: ") + e.what());
    }
    for (double v : y)
      if (!std::isfinite(v)) throw IntegrationError("continuation produced a non-finite state");
  }
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = cplx(y[2 * i], y[2 * i + 1]);
  return out;
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

Mat2 mat_identity() { return Mat2{{{1.0, 0.0}, {0.0, 1.0}}}; }

cplx mat_det(const Mat2& x) { return x[0][0] * x[1][1] - x[0][1] * x[1][0]; }

std::array<cplx, 2> mat_eigenvalues(const Mat2& x) {
  const cplx tr = x[0][0] + x[1][1];
  const cplx disc = std::sqrt(tr * tr - 4.0 * mat_det(x));
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

double mat_max_diff(const Mat2& x, const Mat2& y) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(x[i][j] - y[i][j]));
  return m;
}

PathSpec loop_around_zero(cplx base) { return PathSpec::circle(0.0, std::abs(base), 1, std::arg(base)); }

PathSpec loop_around_one(cplx base) {
  return PathSpec::circle(1.0, std::abs(base - 1.0), 1, std::arg(base - 1.0));
}

PathSpec loop_around_infinity(cplx base) {
  const cplx center = 0.5;
  const cplx low = center + cplx(0.0, -2.0);
  return PathSpec::polyline({base, low})
      .then(PathSpec::circle(center, 2.0, -1, -kPi / 2))
      .then(PathSpec::polyline({low, base}));
}

std::array<cplx, 2> F_jet(const HGParams& p, cplx lambda) {
  return {eval_F_mu(p, lambda), Rational(p.mu - 1).get_d() * eval_F_mu(p, lambda, -1)};
}

std::array<cplx, 2> G_jet(const HGParams& p, cplx lambda) {
  return {eval_G_mu(p, lambda), Rational(p.mu - 1).get_d() * eval_G_mu(p, lambda, -1)};
}

double relative_wronskian(const HGParams& p, cplx lambda) {
  const auto f = F_jet(p, lambda), g = G_jet(p, lambda);
  return std::abs(f[0] * g[1] - g[0] * f[1]) / (std::abs(f[0] * g[1]) + std::abs(g[0] * f[1]));
}

MonodromyMatrix monodromy_along(const HGParams& p, const PathSpec& loop, double tol) {
  const cplx base = loop.base_point();
  if (std::abs(loop.end_point() - base) > 1e-9) throw std::invalid_argument("monodromy needs a closed loop");
  if (!(std::abs(base) < 1.0 && std::abs(1.0 - base) < 1.0))
    throw DomainError("base point must lie in |lambda| < 1, |1 - lambda| < 1");
  const auto f = F_jet(p, base), g = G_jet(p, base);
  if (relative_wronskian(p, base) < 1e-8) throw DomainError("basis is ill-conditioned at this base point");
  const DiffOperator D = build_D(p);
  const auto fc = integrate_ode(D, {f[0], f[1]}, loop, tol);
  const auto gc = integrate_ode(D, {g[0], g[1]}, loop, tol);
  // W M = Wc with W = [[F, G], [F', G']]
  const cplx det = f[0] * g[1] - g[0] * f[1];
  const Mat2 winv{{{g[1] / det, -g[0] / det}, {-f[1] / det, f[0] / det}}};
  const Mat2 wc{{{fc[0], gc[0]}, {fc[1], gc[1]}}};
  MonodromyMatrix m;
  m.entries = mat_mul(winv, wc);
  if (std::abs(m.det()) == 0.0) throw IntegrationError("singular monodromy matrix");
  return m;
}

MonodromyMatrix monodromy_at_zero(const HGParams& p, double tol) { return monodromy_along(p, loop_around_zero(), tol); }
MonodromyMatrix monodromy_at_one(const HGParams& p, double tol) { return monodromy_along(p, loop_around_one(), tol); }
MonodromyMatrix monodromy_at_infinity(const HGParams& p, double tol) {
  return monodromy_along(p, loop_around_infinity(), tol);
}

cplx xi_of(const HGParams& p) {
  const Rational e = frac(Rational(p.mu - p.alpha - p.beta));
  return std::polar(1.0, 2.0 * kPi * e.get_d());
}

cplx H_monodromy_at_infinity(const HGParams& p, double tol) {
  const cplx base = -1.5;
  const double mu = p.mu.get_d();
  const std::vector<cplx> jet{eval_H_mu(p, base), (mu - 1.0) * eval_H_mu(p, base, -1),
                              (mu - 1.0) * (mu - 2.0) * eval_H_mu(p, base, -2)};
  const auto out = integrate_ode(build_H_annihilator(p), jet, PathSpec::circle(0.5, 2.0, -1, kPi), tol);
  return out[0] / jet[0];
}

std::vector<Rational> laurent_coefficients(const HGParams& p, int n_min, int n_max) {
  std::vector<Rational> out;
  Rational a = 0;
  for (int n = std::min(n_min, 0); n <= n_max; ++n) {
    if (n <= 0) {
      a = 0;  // bounded-below solution: zero propagates upward until n = 1
    } else if (n == 1) {
      a = 1;
    } else {
      // (n-1)^2 (n-1+mu) a_n = (n-1)(n-2+alpha)(n-2+beta) a_{n-1}
      a = a * (n - 1) * (n - 2 + p.alpha) * (n - 2 + p.beta) / ((n - 1) * (n - 1) * (n - 1 + p.mu));
    }
    if (n >= n_min) out.push_back(a);
  }
  return out;
}

double laurent_solution_check(const HGParams& p, cplx z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("Laurent check needs |z| < 1");
  if (z == cplx(0.0)) return 0.0;
  const double al = p.alpha.get_d(), be = p.beta.get_d(), mu = p.mu.get_d();
  cplx sum = 0.0, term = z;  // a_1 z
  for (int n = 1; n < 100000; ++n) {
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) && n > 5) {
      const cplx ref = z * hyp2f1(al, be, 1.0 + mu, z);
      return std::abs(sum - ref) / std::abs(ref);
    }
    const double m = n + 1;
    term *= z * (m - 2 + al) * (m - 2 + be) / ((m - 1) * (m - 1 + mu));
  }
  throw NonConvergenceError("Laurent series did not converge");
}

}  // namespace hgp

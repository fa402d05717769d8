#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hgperiod/diffop.hpp"
#include "hgperiod/functions.hpp"
#include "hgperiod/params.hpp"

namespace hgp {

struct Segment {
  enum class Kind { line, arc };
  Kind kind = Kind::line;
  cplx from, to;  // line endpoints
  cplx center;    // arc data
  double radius = 0.0, theta0 = 0.0, dtheta = 0.0;

  double length() const;
  cplx point(double s) const;    // s is arc length from the start
  cplx tangent(double s) const;  // unit speed
};

class PathSpec {
 public:
  // turns > 0 counterclockwise, < 0 clockwise; starts at center + radius e^{i start_angle}.
  static PathSpec circle(cplx center, double radius, int turns, double start_angle = 0.0);
  static PathSpec polyline(const std::vector<cplx>& points);

  PathSpec then(const PathSpec& next) const;
  cplx base_point() const;
  cplx end_point() const;
  double length() const;
  const std::vector<Segment>& segments() const { return segs_; }
  // Throws DomainError if the path comes within min_dist of a singular point.
  void validate(const std::vector<cplx>& singular = {0.0, 1.0}, double min_dist = 0.05) const;

 private:
  std::vector<Segment> segs_;
};

// Transports the jet (f, f', ..., f^{(n-1)}) of a solution of L f = 0 along
// the path (n = order of L).  Adaptive Runge-Kutta-Fehlberg 7(8).
std::vector<cplx> integrate_ode(const DiffOperator& L, const std::vector<cplx>& jet, const PathSpec& path,
                                double tol = 1e-10);

using Mat2 = std::array<std::array<cplx, 2>, 2>;
Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_identity();
cplx mat_det(const Mat2& x);
std::array<cplx, 2> mat_eigenvalues(const Mat2& x);
double mat_max_diff(const Mat2& x, const Mat2& y);

// (F_mu, G_mu) continued along a loop equals (F_mu, G_mu) M.
struct MonodromyMatrix {
  Mat2 entries;
  std::pair<FunctionKind, FunctionKind> basis_labels{FunctionKind::F_mu, FunctionKind::G_mu};
  cplx det() const { return mat_det(entries); }
  std::array<cplx, 2> eigenvalues() const { return mat_eigenvalues(entries); }
};

// Loops based at a point of the lens |lambda| < 1, |1 - lambda| < 1.
PathSpec loop_around_zero(cplx base = 0.5);
PathSpec loop_around_one(cplx base = 0.5);
// Down to base - 2i, clockwise around the circle |lambda - 1/2| = 2, back up.
// Clockwise in lambda is counterclockwise around infinity; with this choice
// the product T0 T1 Tinf is the identity.
PathSpec loop_around_infinity(cplx base = 0.5);

// Jet (f, f') of F_mu or G_mu from the exact index-lowering recurrences.
std::array<cplx, 2> F_jet(const HGParams& p, cplx lambda);
std::array<cplx, 2> G_jet(const HGParams& p, cplx lambda);

// Wronskian determinant at lambda relative to |F||G'| + |G||F'|.
double relative_wronskian(const HGParams& p, cplx lambda);

MonodromyMatrix monodromy_along(const HGParams& p, const PathSpec& loop, double tol = 1e-10);
MonodromyMatrix monodromy_at_zero(const HGParams& p, double tol = 1e-10);
MonodromyMatrix monodromy_at_one(const HGParams& p, double tol = 1e-10);
MonodromyMatrix monodromy_at_infinity(const HGParams& p, double tol = 1e-10);

// xi = e^{2 pi i (mu - alpha - beta)}, exponent reduced mod Z exactly first.
cplx xi_of(const HGParams& p);

// Ratio continued/original of H_mu after one positive loop around infinity,
// based at -3/2 (a point where the series for H_mu converges).
cplx H_monodromy_at_infinity(const HGParams& p, double tol = 1e-10);

// Coefficients a_n of the Laurent solution z 2F1(alpha, beta; 1 + mu; z), from
// the two-term recurrence with a_1 = 1; a_n = 0 for n <= 0.
std::vector<Rational> laurent_coefficients(const HGParams& p, int n_min, int n_max);
double laurent_solution_check(const HGParams& p, cplx z);

}  // namespace hgp

#include "hgperiod/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "hgperiod/continuation.hpp"
#include "hgperiod/errors.hpp"
#include "hgperiod/period_reg.hpp"
#include "hgperiod/quadrature.hpp"
#include "oracles.hpp"

namespace hgp {

namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;
const cplx kTwoPiI(0.0, 2.0 * kPi);
constexpr double kInf = std::numeric_limits<double>::infinity();

// Thresholds of the exit gate.
constexpr double kOdeTol = 1e-9;
constexpr double kRecurrenceTol = 1e-9;
constexpr double kKummerTol = 1e-10;
constexpr double kIntRepTol = 1e-8;
constexpr double kThetaTol = 1e-8;
constexpr double kMonodromyTol = 1e-6;
constexpr double kLoopProductTol = 1e-5;
constexpr double kDetFloor = 1e-10;
constexpr double kLaurentTol = 1e-12;
constexpr double kThreeTermTol = 1e-6;
constexpr double kRegulatorTol = 1e-5;

const CauchyOptions kCauchy{0.0, 48};

double d(const Rational& q) { return q.get_d(); }

double rel(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

Rational frac_of(long p, long q) {
  Rational x(p, q);
  x.canonicalize();
  return x;
}

struct Worst {
  double value = 0.0;
  int count = 0;
  void add(double r) {
    value = std::isfinite(r) ? std::max(value, r) : kInf;
    ++count;
  }
};

CheckRecord below(std::string id, json params, const Worst& w, double threshold, std::string note = {}) {
  CheckRecord r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.samples = w.count;
  r.residual = w.value;
  r.threshold = threshold;
  r.pass = w.value < threshold;
  r.note = std::move(note);
  return r;
}

HGParams reference() { return HGParams::make(Rational(1, 3), Rational(1, 5), Rational(7, 2)); }

std::vector<cplx> jet(const AnalyticFunction& f, cplx z, int order) {
  std::vector<cplx> out{f(z)};
  for (int k = 1; k <= order; ++k) out.push_back(derivative(f, z, k, kCauchy));
  return out;
}

QPoly P(std::vector<Rational> c) { return QPoly(std::move(c)); }

std::vector<std::pair<std::string, ThetaData>> theta_choices() {
  std::vector<std::pair<std::string, ThetaData>> out;
  out.emplace_back("1, t(1-t)", derive_ab(P({1}), P({0, 1, -1})));
  out.emplace_back("1, 0", derive_ab(P({1}), QPoly()));
  out.emplace_back("2-t+3t^2, t(1-t)", derive_ab(P({2, -1, 3}), P({0, 1, -1})));
  out.emplace_back("t^3, t(1-t)^2", derive_ab(P({0, 0, 0, 1}), P({0, 1, -2, 1})));
  out.emplace_back("1+t, (t-t^3)/2", derive_ab(P({1, 1}), P({0, Rational(1, 2), 0, Rational(-1, 2)})));
  return out;
}

json params_list(const std::vector<HGParams>& ps) {
  json j = json::array();
  for (const auto& p : ps) j.push_back(params_json(p));
  return j;
}

// ---------------------------------------------------------------- criterion 1

CheckRecord ode_FG(std::uint64_t seed, bool use_G) {
  const auto ps = random_params(20, seed);
  Worst w;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const DiffOperator L = build_D(ps[i]);
    const AnalyticFunction f = use_G ? make_G(ps[i]) : make_F(ps[i]);
    for (cplx l : interior_samples(50, seed + 100 + i)) {
      const auto j = jet(f, l, 2);
      w.add(std::abs(apply(L, l, j)) / apply_scale(L, l, j));
    }
  }
  return below(use_G ? "ode.G_mu" : "ode.F_mu", params_list(ps), w, kOdeTol);
}

CheckRecord ode_H(std::uint64_t seed) {
  const auto ps = random_params(20, seed);
  Worst w;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const DiffOperator L = build_D(ps[i]);
    const AnalyticFunction f = make_H(ps[i]);
    for (cplx l : exterior_samples(50, seed + 200 + i)) {
      const auto j = jet(f, l, 2);
      const cplx forcing = std::pow(l - 1.0, d(ps[i].mu) - 1.0);
      w.add(std::abs(apply(L, l, j) + forcing) / (apply_scale(L, l, j) + std::abs(forcing)));
    }
  }
  return below("ode.H_mu_forced", params_list(ps), w, kOdeTol);
}

// ---------------------------------------------------------------- criterion 2

CheckRecord recurrence(std::uint64_t seed, FunctionKind kind) {
  const auto ps = random_params(20, seed);
  const ThetaData td = derive_ab(P({2, -1, 3}), P({0, 1, -1}));
  Worst w;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const HGParams& p = ps[i];
    const double mu1 = d(p.mu) - 1.0;
    const bool exterior = kind == FunctionKind::H_mu || kind == FunctionKind::Q_m;
    const auto pts = exterior ? exterior_samples(50, seed + 300 + i) : interior_samples(50, seed + 300 + i);
    for (cplx l : pts) {
      cplx lhs, rhs;
      switch (kind) {
        case FunctionKind::F_mu:
          lhs = derivative(make_F(p), l, 1, kCauchy);
          rhs = mu1 * eval_F_mu(p, l, -1);
          break;
        case FunctionKind::G_mu:
          lhs = derivative(make_G(p), l, 1, kCauchy);
          rhs = mu1 * eval_G_mu(p, l, -1);
          break;
        case FunctionKind::H_mu:
          lhs = derivative(make_H(p), l, 1, kCauchy);
          rhs = mu1 * eval_H_mu(p, l, -1);
          break;
        case FunctionKind::P_m:
          lhs = derivative(make_P(p, td, p.m()), l, 1, kCauchy);
          rhs = mu1 * eval_P_m(p, td, p.m() - p.l, l);
          break;
        default:
          lhs = derivative(make_Q(p, td, p.m()), l, 1, kCauchy);
          rhs = mu1 * eval_Q_m(p, td, p.m() - p.l, l);
          break;
      }
      w.add(rel(lhs, rhs));
    }
  }
  return below("recurrence." + to_string(kind), params_list(ps), w, kRecurrenceTol);
}

// ---------------------------------------------------------------- criterion 3

CheckRecord kummer(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den(2, 9);
  std::uniform_real_distribution<double> tt(0.05, 0.95);
  json params = json::array();
  Worst w;
  int pairs = 0;
  while (pairs < 10) {
    const long qa = den(rng), qb = den(rng);
    const Rational a = frac_of(std::uniform_int_distribution<long>(1, qa - 1)(rng), qa);
    const Rational b = frac_of(std::uniform_int_distribution<long>(1, qb - 1)(rng), qb);
    if (is_integer(Rational(a + b))) continue;
    ++pairs;
    params.push_back({{"alpha", to_string(a)}, {"beta", to_string(b)}});
    for (int k = 0; k < 20; ++k) w.add(check_kummer_relation(a, b, tt(rng)));
  }
  return below("kummer.real_t", params, w, kKummerTol);
}

// ---------------------------------------------------------------- criterion 4

Rational random_rational(std::mt19937_64& rng, long lo_num, long hi_num, long q) {
  return frac_of(std::uniform_int_distribution<long>(lo_num, hi_num)(rng), q);
}

cplx random_disc(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> r(0.0, rmax), a(-kPi, kPi);
  return std::polar(r(rng), a(rng));
}

CheckRecord int_rep_2F1(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  json params = json::array();
  Worst w;
  for (int k = 0; k < 20; ++k) {
    const Rational a = random_rational(rng, -6, 12, 6);
    const Rational b = random_rational(rng, 1, 12, 6);
    const Rational c = b + random_rational(rng, 1, 12, 6);
    const cplx x = random_disc(rng, 0.7);
    params.push_back({{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"x", {x.real(), x.imag()}}});
    w.add(verify_int_rep_2F1(a, b, c, x));
  }
  return below("int_rep.2F1", params, w, kIntRepTol);
}

CheckRecord int_rep_3F2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  json params = json::array();
  Worst w;
  for (int k = 0; k < 20; ++k) {
    const Rational a = random_rational(rng, -6, 12, 6), b = random_rational(rng, 1, 12, 5);
    const Rational c = random_rational(rng, 1, 12, 6);
    const Rational dd = random_rational(rng, 2, 15, 7);
    const Rational e = c + random_rational(rng, 1, 12, 6);
    const cplx x = random_disc(rng, 0.7);
    params.push_back({{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"d", to_string(dd)},
                      {"e", to_string(e)}, {"x", {x.real(), x.imag()}}});
    w.add(verify_int_rep_3F2(a, b, c, dd, e, x));
  }
  return below("int_rep.3F2", params, w, kIntRepTol);
}

CheckRecord int_rep_H(std::uint64_t seed) {
  const auto ps = random_params(20, seed);
  const auto pts = exterior_samples(20, seed + 7);
  Worst w;
  for (std::size_t i = 0; i < ps.size(); ++i) w.add(verify_H_integral(ps[i], pts[i]));
  return below("int_rep.H_mu", params_list(ps), w, kIntRepTol);
}

// ---------------------------------------------------------------- criterion 5

HGParams random_rational_params(std::mt19937_64& rng) {
  const Rational a = random_rational(rng, -9, 9, 7), b = random_rational(rng, -9, 9, 5);
  const Rational mu = random_rational(rng, -20, 20, 3);
  return HGParams::unchecked(a, b, mu);
}

CheckRecord factorization_Q(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  json params = json::array();
  Worst w;
  for (int k = 0; k < 10; ++k) {
    const HGParams p = random_rational_params(rng);
    params.push_back(params_json(p));
    const DiffOperator q = build_Q_HG(p);
    const bool ok = q == oracle::hand_Q_HG(p.alpha, p.beta, p.mu) &&
                    q == compose(build_theta_lambda(p), build_P_HG(p)) && q.order() == 3;
    w.add(ok ? 0.0 : 1.0);
  }
  return below("factorization.Q_HG", params, w, 0.5, "exact coefficient equality; residual counts mismatches");
}

CheckRecord factorization_P(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  json params = json::array();
  Worst w;
  for (int k = 0; k < 10; ++k) {
    const HGParams p = random_rational_params(rng);
    params.push_back(params_json(p));
    const DiffOperator lamD = to_D_basis(QRatFn::x() * build_D(p));
    w.add(build_P_HG(p) == lamD && build_P_HG(p).order() == 2 ? 0.0 : 1.0);
  }
  return below("factorization.P_HG", params, w, 0.5, "exact coefficient equality; residual counts mismatches");
}

// ---------------------------------------------------------------- criterion 6

CheckRecord theta(std::uint64_t seed) {
  std::vector<HGParams> ps{reference()};
  for (const auto& p : random_params(2, seed)) ps.push_back(p);
  Worst w;
  std::string note;
  for (const auto& [name, td] : theta_choices()) {
    for (const auto& p : ps) {
      const ThetaConstruction c = construct_Theta(p, td);
      bool shape = c.theta.order() <= 1;
      for (const auto& q : c.theta.coeffs()) shape = shape && poles_only_at_0_1(q);
      if (!shape) {
        w.add(kInf);
        note += "bad remainder shape for " + name + "; ";
        continue;
      }
      for (cplx l : interior_samples(30, seed + 11)) {
        const cplx lhs = kTwoPiI * apply_first_order(c.theta, l, F_jet(p, l));
        w.add(rel(lhs, eval_P_m(p, td, p.m(), l)));
      }
    }
  }
  return below("theta.matches_P_m", params_list(ps), w, kThetaTol, note);
}

// ---------------------------------------------------------------- criterion 7

std::vector<HGParams> monodromy_params(std::uint64_t seed) {
  std::vector<HGParams> ps{reference()};
  for (const auto& p : random_params(2, seed)) ps.push_back(p);
  return ps;
}

CheckRecord monodromy_zero(std::uint64_t seed) {
  const auto ps = monodromy_params(seed);
  Worst w;
  for (const auto& p : ps) {
    const cplx xi = xi_of(p);
    const Mat2 expect{{{xi, 0.0}, {1.0 - xi, 1.0}}};
    w.add(mat_max_diff(monodromy_at_zero(p).entries, expect));
  }
  return below("monodromy.zero", params_list(ps), w, kMonodromyTol);
}

CheckRecord monodromy_infinity(std::uint64_t seed) {
  const auto ps = monodromy_params(seed);
  Worst w;
  for (const auto& p : ps) {
    const auto ev = monodromy_at_infinity(p).eigenvalues();
    const cplx e1 = std::exp(kTwoPiI * d(p.alpha - p.mu)), e2 = std::exp(kTwoPiI * d(p.beta - p.mu));
    w.add(std::min(std::max(std::abs(ev[0] - e1), std::abs(ev[1] - e2)),
                   std::max(std::abs(ev[0] - e2), std::abs(ev[1] - e1))));
  }
  return below("monodromy.infinity_eigenvalues", params_list(ps), w, kMonodromyTol);
}

CheckRecord monodromy_H(std::uint64_t seed) {
  const auto ps = monodromy_params(seed);
  Worst w;
  for (const auto& p : ps) w.add(std::abs(H_monodromy_at_infinity(p) - std::exp(-kTwoPiI * d(p.mu))));
  return below("monodromy.H_mu_infinity", params_list(ps), w, kMonodromyTol);
}

CheckRecord monodromy_product(std::uint64_t seed) {
  const auto ps = monodromy_params(seed);
  Worst w;
  for (const auto& p : ps) {
    const Mat2 prod = mat_mul(mat_mul(monodromy_at_zero(p).entries, monodromy_at_one(p).entries),
                              monodromy_at_infinity(p).entries);
    w.add(mat_max_diff(prod, mat_identity()));
  }
  return below("monodromy.loop_product", params_list(ps), w, kLoopProductTol);
}

// ---------------------------------------------------------------- criterion 8

CheckRecord period_nondegenerate(std::uint64_t seed) {
  std::vector<HGParams> ps{reference()};
  for (const auto& p : random_params(4, seed)) ps.push_back(p);
  const ThetaData td = derive_ab(P({1}), P({0, 1, -1}));
  const auto grid = interior_samples(30, seed + 5);
  double worst_best = kInf;
  json params = json::array();
  for (const auto& p : ps) {
    double best = 0.0;
    long best_m = 0;
    for (long m : admissible_m(p, 5)) {
      const PeriodMatrixResult r = period_matrix(p, td, m);
      double lo = kInf;
      for (cplx l : grid) lo = std::min(lo, r.inner_relative_det(l));
      if (lo > best) {
        best = lo;
        best_m = m;
      }
    }
    json pj = params_json(p);
    pj["best_m"] = best_m;
    params.push_back(pj);
    worst_best = std::min(worst_best, best);
  }
  CheckRecord rec;
  rec.check_id = "period.nondegenerate_some_m";
  rec.params = params;
  rec.samples = static_cast<int>(ps.size() * grid.size() * 5);
  rec.residual = worst_best;
  rec.threshold = kDetFloor;
  rec.pass = worst_best > kDetFloor;
  rec.note = "residual is the smallest relative determinant at the best m; it must exceed the threshold";
  return rec;
}

// ---------------------------------------------------------------- criterion 9

CheckRecord laurent(std::uint64_t seed) {
  std::vector<HGParams> ps{reference()};
  for (const auto& p : random_params(2, seed)) ps.push_back(p);
  std::mt19937_64 rng(seed);
  Worst w;
  for (const auto& p : ps)
    for (int k = 0; k < 10; ++k) w.add(laurent_solution_check(p, random_disc(rng, 0.8)));
  return below("laurent.recurrence", params_list(ps), w, kLaurentTol);
}

// ---------------------------------------------------------------- criterion 10

CheckRecord recursion_initial(std::uint64_t) {
  const HGParams p = reference();
  const RegulatorRecursionState st = regulator_recursion(p, derive_ab(P({1}), P({0, 1, -1})), 1);
  const QRatFn inv(QPoly(1L), QPoly::x() - QPoly(1L));
  const bool ok = st.C_at(-1).is_zero() && st.D_at(-1) == SFn(1L) && st.C_at(0) == SFn(inv) && st.D_at(0).is_zero();
  Worst w;
  w.add(ok ? 0.0 : 1.0);
  return below("recursion.initial_C0_D0", json::array({params_json(p)}), w, 0.5, "exact equality");
}

CheckRecord three_term(std::uint64_t seed, int i) {
  const HGParams p = reference();
  const FitReport f = check_three_term_congruence(p, i, exterior_samples(40, seed + 17));
  Worst w;
  w.add(std::max(f.fit_residual, f.validation_residual));
  w.count = 40;
  return below("recursion.three_term_i" + std::to_string(i), json::array({params_json(p)}), w, kThreeTermTol,
               "Laurent degree " + std::to_string(f.degree) + ", condition " + std::to_string(f.condition_number));
}

CheckRecord regulator(std::uint64_t seed, Lift lift, int n) {
  const HGParams p = reference();
  const ThetaData td = derive_ab(P({1}), P({0, 1, -1}));
  const FitReport f = check_regulator_congruence(p, td, p.m(), n, exterior_samples(60, seed + 23), lift);
  Worst w;
  w.add(std::max(f.fit_residual, f.validation_residual));
  w.count = 60;
  json pj = params_json(p);
  pj["n"] = n;
  pj["lift"] = lift == Lift::phi1 ? "phi1" : "phi2";
  std::string note = "C1 = " + std::to_string(f.c1->real()) + (f.c1->imag() >= 0 ? "+" : "") +
                     std::to_string(f.c1->imag()) + "i, Laurent degree " + std::to_string(f.degree);
  CheckRecord r = below(std::string("regulator.") + (lift == Lift::phi1 ? "phi1" : "phi2") + "_n" + std::to_string(n),
                        json::array({pj}), w, kRegulatorTol, note);
  if (!r.pass)
    r.note += "; rational-remainder fit failed, the congruence may still hold modulo algebraic functions";
  return r;
}

// ---------------------------------------------------------------- properties

CheckRecord pochhammer_split(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nn(0, 12);
  Worst w;
  bool exact = true;
  for (int k = 0; k < 100; ++k) {
    const int n = nn(rng), m = nn(rng);
    const Rational a = random_rational(rng, -30, 30, 7);
    exact = exact && pochhammer(a, n + m) == pochhammer(a, n) * pochhammer(Rational(a + n), m);
    const cplx z = random_disc(rng, 5.0);
    w.add(rel(pochhammer(z, n + m), pochhammer(z, n) * pochhammer(z + double(n), m)));
  }
  if (!exact) w.add(kInf);
  return below("property.pochhammer_split", json::array(), w, 1e-13);
}

CheckRecord contiguity(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> par(0.1, 3.0);
  Worst w;
  for (int k = 0; k < 30; ++k) {
    const double a = par(rng), b = par(rng), c = par(rng);
    const auto f = AnalyticFunction::custom([=](cplx x) { return hyp2f1(a, b, c, x); },
                                            [](cplx x) { return 1.0 - std::abs(x); });
    const cplx x = random_disc(rng, 0.6);
    w.add(rel(derivative(f, x, 1, kCauchy), a * b / c * hyp2f1(a + 1, b + 1, c + 1, x)));
  }
  return below("property.contiguity_2F1", json::array(), w, 1e-9);
}

CheckRecord est_error_honest(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> par(-2.5, 3.0), low(0.3, 4.0);
  Worst w;
  for (int k = 0; k < 100; ++k) {
    HGSeriesSpec s;
    const int p = 2 + k % 2;
    for (int i = 0; i < p; ++i) s.upper.push_back(par(rng));
    for (int i = 0; i + 1 < p; ++i) s.lower.push_back(low(rng));
    const cplx x = random_disc(rng, 0.85);
    const SeriesResult r1 = eval_pFq(s, x, {1e-8, 10000});
    const SeriesResult r2 = eval_pFq(s, x, {1e-10, 10000});
    w.add(r1.est_error > 0 ? std::abs(r1.value - r2.value) / r1.est_error : std::abs(r1.value - r2.value));
  }
  return below("property.est_error_honest", json::array(), w, 1.0,
               "residual is the worst |change| / est_error at tolerance/100");
}

CheckRecord f1_f3_basis(std::uint64_t) {
  Worst w;
  double worst = kInf;
  for (auto [a, b] : {std::pair{Rational(1, 4), Rational(1, 3)}, {Rational(1, 5), Rational(2, 5)},
                      {Rational(2, 3), Rational(4, 7)}}) {
    const cplx t1 = 0.3, t2 = 0.6;
    const cplx m00 = eval_f1(a, b, t1), m01 = eval_f3(a, b, t1), m10 = eval_f1(a, b, t2), m11 = eval_f3(a, b, t2);
    const double det = std::abs(m00 * m11 - m01 * m10) / (std::abs(m00 * m11) + std::abs(m01 * m10));
    worst = std::min(worst, det);
    ++w.count;
  }
  CheckRecord r = below("property.f1_f3_independent", json::array(), w, 1e-10);
  r.residual = worst;
  r.pass = worst > 1e-10;
  r.note = "residual is the smallest relative determinant; it must exceed the threshold";
  return r;
}

CheckRecord kummer_complex(std::uint64_t) {
  Worst w;
  w.add(check_kummer_relation(Rational(1, 4), Rational(1, 3), 0.5));
  w.add(check_kummer_relation(Rational(1, 5), Rational(2, 5), cplx(0.3, 0.1)));
  w.add(check_kummer_relation(Rational(2, 3), Rational(3, 4), cplx(0.5, -0.3)));
  return below("property.kummer_complex_t", json::array(), w, kKummerTol);
}

DiffOperator random_operator(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> ord(0, max_order), deg(0, 3), num(-5, 5), den(1, 4);
  std::vector<QRatFn> c;
  const int o = ord(rng);
  for (int i = 0; i <= o; ++i) {
    std::vector<Rational> n, dd;
    for (int k = 0, e = deg(rng); k <= e; ++k) n.push_back(frac_of(num(rng), den(rng)));
    dd.push_back(1);
    if (deg(rng) > 1) dd = {frac_of(num(rng), 1), 1};
    if (dd.size() == 2 && dd[0] == 0 && deg(rng) == 3) dd = {0, -1, 1};
    c.push_back(QRatFn(QPoly(n), QPoly(dd)));
  }
  if (c.back().is_zero_rf()) c.back() = QRatFn(1L);
  return DiffOperator(Basis::d, c);
}

CheckRecord division_invariant(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Worst w;
  for (int k = 0; k < 25; ++k) {
    const DiffOperator L = random_operator(rng, 5);
    const DiffOperator D = build_D(random_rational_params(rng));
    const Division q = right_divide(L, D);
    w.add(compose(q.quotient, D) + q.remainder == L && q.remainder.order() < D.order() ? 0.0 : 1.0);
  }
  return below("property.division_invariant", json::array(), w, 0.5, "exact; residual counts failures");
}

CheckRecord basis_round_trip(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Worst w;
  for (int k = 0; k < 25; ++k) {
    const DiffOperator L = random_operator(rng, 4);
    w.add(to_d_basis(to_D_basis(L)) == L ? 0.0 : 1.0);
    const DiffOperator M = to_D_basis(L);
    w.add(to_D_basis(to_d_basis(M)) == M ? 0.0 : 1.0);
  }
  return below("property.basis_round_trip", json::array(), w, 0.5, "exact; residual counts failures");
}

CheckRecord theta2_steps(std::uint64_t seed) {
  std::vector<HGParams> ps{reference()};
  for (const auto& p : random_params(2, seed)) ps.push_back(p);
  const ThetaData td = derive_ab(P({0, 0, 0, 1}), P({0, 1, -2, 1}));
  Worst w;
  for (const auto& p : ps) {
    const ThetaConstruction c = construct_Theta(p, td);
    for (std::size_t j = 0; j < c.steps.size(); ++j) {
      const int s = static_cast<int>(j);
      for (cplx l : interior_samples(10, seed + j)) {
        const std::vector<cplx> jt{eval_F_mu(p, l, s), d(p.mu + s - 1) * eval_F_mu(p, l, s - 1)};
        w.add(rel(apply(c.steps[j], l, jt), eval_F_mu(p, l, s + 1)));
      }
    }
  }
  return below("property.theta2_step_identity", params_list(ps), w, 1e-9);
}

CheckRecord path_homotopy(std::uint64_t) {
  const HGParams p = reference();
  const PathSpec square = PathSpec::polyline({0.5, cplx(0.5, 0.5), cplx(-0.5, 0.5), cplx(-0.5, -0.5), cplx(0.5, -0.5), 0.5});
  const PathSpec hexagon = PathSpec::polyline(
      {0.5, cplx(0.3, 0.6), cplx(-0.3, 0.7), cplx(-0.8, 0.0), cplx(-0.3, -0.7), cplx(0.3, -0.6), 0.5});
  Worst w;
  w.add(mat_max_diff(monodromy_along(p, square).entries, monodromy_along(p, hexagon).entries));
  w.add(mat_max_diff(monodromy_along(p, square).entries, monodromy_at_zero(p).entries));
  return below("property.path_homotopy", json::array({params_json(p)}), w, kMonodromyTol);
}

CheckRecord base_point_eigenvalues(std::uint64_t seed) {
  std::vector<HGParams> ps{reference()};
  for (const auto& p : random_params(2, seed)) ps.push_back(p);
  Worst w;
  for (const auto& p : ps) {
    const auto a = monodromy_at_infinity(p).eigenvalues();
    const auto b = monodromy_along(p, loop_around_infinity(cplx(0.45, 0.1))).eigenvalues();
    w.add(std::min(std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1])),
                   std::max(std::abs(a[0] - b[1]), std::abs(a[1] - b[0]))));
  }
  return below("property.base_point_eigenvalues", params_list(ps), w, kMonodromyTol);
}

CheckRecord wronskian(std::uint64_t seed) {
  const auto ps = random_params(20, seed);
  double worst = kInf;
  for (const auto& p : ps) worst = std::min(worst, relative_wronskian(p, 0.5));
  CheckRecord r;
  r.check_id = "property.basis_wronskian";
  r.params = params_list(ps);
  r.samples = static_cast<int>(ps.size());
  r.residual = worst;
  r.threshold = 1e-8;
  r.pass = worst > 1e-8;
  r.note = "residual is the smallest relative Wronskian at 1/2; it must exceed the threshold";
  return r;
}

CheckRecord xi_mod_Z(std::uint64_t seed) {
  const auto ps = random_params(10, seed);
  Worst w;
  for (const auto& p : ps) w.add(std::abs(xi_of(p) - xi_of(HGParams::make(p.alpha, p.beta, p.mu + 1, p.l))));
  return below("property.xi_depends_on_mu_mod_Z", params_list(ps), w, 1e-8);
}

CheckRecord quadrature_halving(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ex(-0.7, 2.0), fr(0.0, 6.0);
  Worst w;
  for (int k = 0; k < 50; ++k) {
    WeightedIntegrand wi;
    wi.exponent_left = ex(rng);
    wi.exponent_right = ex(rng);
    const double f = fr(rng);
    wi.smooth = [f](double t, double) { return cplx(std::cos(f * t), std::sin(t)); };
    const QuadResult a = integrate_01(wi, 1e-8), b = integrate_01(wi, 5e-9);
    w.add(a.est_error > 0 ? std::abs(a.value - b.value) / a.est_error : std::abs(a.value - b.value) * 1e12);
  }
  return below("property.quadrature_halving", json::array(), w, 1.0,
               "residual is the worst |change| / est_error when the tolerance is halved");
}

CheckRecord H_branch_continuity(std::uint64_t) {
  const HGParams p = reference();
  std::vector<double> res;
  for (int k = 0; k < 30; ++k) {
    const double th = 0.1 + (kPi - 0.2) * k / 29.0;
    res.push_back(verify_H_integral(p, 1.0 + std::polar(2.0, th)));
  }
  std::vector<double> sorted = res;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2], worst = sorted.back();
  // below 1e-13 every value is rounding noise
  const double ratio = worst < 1e-13 ? 0.0 : worst / median;
  Worst w;
  w.add(ratio);
  w.count = static_cast<int>(res.size());
  return below("property.H_branch_continuity", json::array({params_json(p)}), w, 10.0,
               "residual is max / median of the H integral residuals on an upper half-plane arc");
}

CheckRecord recursion_association(std::uint64_t) {
  const HGParams p = reference();
  const RegulatorRecursionState st = regulator_recursion(p, derive_ab(P({1}), P({0, 1, -1})), 4);
  const auto [C, D] = recursion_by_products(p, 4);
  Worst w;
  for (int i = -1; i <= 4; ++i) {
    const auto k = static_cast<std::size_t>(i + 1);
    w.add(C[k] == st.C_at(i) && D[k] == st.D_at(i) ? 0.0 : 1.0);
  }
  return below("property.recursion_association", json::array({params_json(p)}), w, 0.5, "exact");
}

CheckRecord literal_rejected(std::uint64_t seed) {
  const HGParams p = reference();
  const ThetaData td = derive_ab(P({1}), P({0, 1, -1}));
  const auto pts = exterior_samples(60, seed + 23);
  const int n = default_n(p);
  const FitReport good = check_regulator_congruence(p, td, p.m(), n, pts);
  const FitReport lit = check_regulator_congruence(p, td, p.m(), n, pts, Lift::phi1, true);
  Worst w;
  w.add(good.fit_residual / lit.fit_residual);
  w.count = 60;
  CheckRecord r = below("property.uncorrected_regulator_rejected", json::array({params_json(p)}), w, 1e-3,
                        "residual is corrected / uncorrected fit residual");
  r.pass = r.pass && lit.fit_residual > kRegulatorTol;
  return r;
}

CheckRecord unit_theta_regulator(std::uint64_t seed) {
  const HGParams p = reference();
  const FitReport f = check_regulator_congruence(p, derive_ab(P({1}), QPoly()), p.m(), 0, exterior_samples(60, seed));
  Worst w;
  w.add(std::max(f.fit_residual, f.validation_residual));
  w.add(std::abs(*f.c1 - 1.0 / static_cast<double>(p.l)));
  return below("property.regulator_unit_theta", json::array({params_json(p)}), w, 1e-10, "also checks C1 = 1/l");
}

CheckRecord theta_reconstruction(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, 4), c(-6, 6);
  Worst w;
  for (int k = 0; k < 20; ++k) {
    std::vector<Rational> p0, q;
    for (int i = 0, e = deg(rng); i <= e; ++i) p0.push_back(c(rng));
    for (int i = 0, e = deg(rng); i <= e; ++i) q.push_back(c(rng));
    const QPoly p1 = P({0, 1, -1}) * QPoly(q);
    const ThetaData td = derive_ab(QPoly(p0), p1);
    bool ok = true;
    for (int li = -3; li <= 3 && ok; ++li)
      for (int ti = -3; ti <= 3 && ok; ++ti) {
        const Rational lam(li), t = frac_of(ti, 2);
        Rational sa = 0, sb = 0, pw = 1;
        for (int i = 0; i <= td.degree_bound(); ++i) {
          sa += td.a_at(i)(lam) * pw;
          sb += td.b_at(i)(lam) * pw;
          pw *= lam - t;
        }
        ok = sa == QPoly(p0)(t) && sb == p1(t);
      }
    w.add(ok ? 0.0 : 1.0);
  }
  return below("property.theta_data_reconstruction", json::array(), w, 0.5, "exact");
}

}  // namespace

json params_json(const HGParams& p) {
  return {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"mu", to_string(p.mu)}, {"l", p.l}, {"k", p.k}};
}

json to_json(const CheckRecord& r) {
  json j{{"check_id", r.check_id}, {"params", r.params},       {"samples", r.samples},
         {"residual", r.residual}, {"threshold", r.threshold}, {"pass", r.pass}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::vector<HGParams> random_params(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den(2, 9), lden(2, 7);
  std::vector<HGParams> out;
  while (static_cast<int>(out.size()) < count) {
    const long qa = den(rng), qb = den(rng), l = lden(rng);
    const Rational a = frac_of(std::uniform_int_distribution<long>(1, qa - 1)(rng), qa);
    const Rational b = frac_of(std::uniform_int_distribution<long>(1, qb - 1)(rng), qb);
    const Rational mu = frac_of(std::uniform_int_distribution<long>(2 * l + 1, 11 * l / 2)(rng), l);
    const HGParams p = HGParams::unchecked(a, b, mu);
    if (p.violation() || p.l < 2) continue;
    out.push_back(p);
  }
  return out;
}

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> reg = [] {
    std::vector<CheckSpec> r;
    auto add = [&](std::string id, int crit, std::function<CheckRecord(std::uint64_t)> f) {
      r.push_back({std::move(id), crit, crit > 0 ? "acceptance" : "properties", std::move(f)});
    };
    add("ode.F_mu", 1, [](auto s) { return ode_FG(s, false); });
    add("ode.G_mu", 1, [](auto s) { return ode_FG(s, true); });
    add("ode.H_mu_forced", 1, ode_H);
    add("recurrence.F_mu", 2, [](auto s) { return recurrence(s, FunctionKind::F_mu); });
    add("recurrence.G_mu", 2, [](auto s) { return recurrence(s, FunctionKind::G_mu); });
    add("recurrence.H_mu", 2, [](auto s) { return recurrence(s, FunctionKind::H_mu); });
    add("recurrence.P_m", 2, [](auto s) { return recurrence(s, FunctionKind::P_m); });
    add("recurrence.Q_m", 2, [](auto s) { return recurrence(s, FunctionKind::Q_m); });
    add("kummer.real_t", 3, kummer);
    add("int_rep.2F1", 4, int_rep_2F1);
    add("int_rep.3F2", 4, int_rep_3F2);
    add("int_rep.H_mu", 4, int_rep_H);
    add("factorization.Q_HG", 5, factorization_Q);
    add("factorization.P_HG", 5, factorization_P);
    add("theta.matches_P_m", 6, theta);
    add("monodromy.zero", 7, monodromy_zero);
    add("monodromy.infinity_eigenvalues", 7, monodromy_infinity);
    add("monodromy.H_mu_infinity", 7, monodromy_H);
    add("monodromy.loop_product", 7, monodromy_product);
    add("period.nondegenerate_some_m", 8, period_nondegenerate);
    add("laurent.recurrence", 9, laurent);
    add("recursion.initial_C0_D0", 10, recursion_initial);
    for (int i : {1, 2, 3})
      add("recursion.three_term_i" + std::to_string(i), 10, [i](auto s) { return three_term(s, i); });
    add("regulator.phi1_n2", 10, [](auto s) { return regulator(s, Lift::phi1, 2); });
    add("regulator.phi2_n2", 10, [](auto s) { return regulator(s, Lift::phi2, 2); });

    add("property.pochhammer_split", 0, pochhammer_split);
    add("property.contiguity_2F1", 0, contiguity);
    add("property.est_error_honest", 0, est_error_honest);
    add("property.f1_f3_independent", 0, f1_f3_basis);
    add("property.kummer_complex_t", 0, kummer_complex);
    add("property.division_invariant", 0, division_invariant);
    add("property.basis_round_trip", 0, basis_round_trip);
    add("property.theta2_step_identity", 0, theta2_steps);
    add("property.path_homotopy", 0, path_homotopy);
    add("property.base_point_eigenvalues", 0, base_point_eigenvalues);
    add("property.basis_wronskian", 0, wronskian);
    add("property.xi_depends_on_mu_mod_Z", 0, xi_mod_Z);
    add("property.quadrature_halving", 0, quadrature_halving);
    add("property.H_branch_continuity", 0, H_branch_continuity);
    add("property.recursion_association", 0, recursion_association);
    add("property.uncorrected_regulator_rejected", 0, literal_rejected);
    add("property.regulator_unit_theta", 0, unit_theta_regulator);
    add("property.theta_data_reconstruction", 0, theta_reconstruction);
    add("property.regulator_phi1_n0", 0, [](auto s) { return regulator(s, Lift::phi1, 0); });
    add("property.regulator_phi1_n1", 0, [](auto s) { return regulator(s, Lift::phi1, 1); });
    return r;
  }();
  return reg;
}

std::vector<const CheckSpec*> select_checks(const std::string& suite) {
  std::vector<const CheckSpec*> out;
  for (const auto& c : check_registry())
    if (suite == "all" || suite == c.suite || suite == c.id) out.push_back(&c);
  if (out.empty()) throw std::invalid_argument("unknown suite or check id: " + suite);
  return out;
}

std::vector<CheckRecord> run_checks(const std::vector<const CheckSpec*>& checks, std::uint64_t seed,
                                    unsigned workers) {
  std::vector<CheckRecord> out(checks.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, checks.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      try {
        out[i] = checks[i]->run(seed);
        out[i].check_id = checks[i]->id;
      } catch (const std::exception& e) {
        out[i].check_id = checks[i]->id;
        out[i].residual = kInf;
        out[i].pass = false;
        out[i].note = std::string("error: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

CheckRecord check_fixtures(const std::string& path) {
  CheckRecord r;
  r.check_id = "fixtures.current";
  r.threshold = 0.5;
  std::ifstream in(path);
  if (!in) {
    r.residual = kInf;
    r.note = "cannot read " + path;
    return r;
  }
  const json stored = json::parse(in);
  const json fresh = oracle::generate_fixtures();
  const auto bad = oracle::compare_fixtures(stored, fresh);
  r.samples = static_cast<int>(fresh.at("entries").size());
  r.residual = static_cast<double>(bad.size());
  r.pass = bad.empty();
  for (const auto& b : bad) r.note += b + "; ";
  return r;
}

}  // namespace hgp

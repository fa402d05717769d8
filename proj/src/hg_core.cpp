#include "hgperiod/hg_core.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "hgperiod/errors.hpp"

namespace hgp {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 671/128, 15 terms.
constexpr double kLanczosG = 5.2421875;
constexpr std::array<double, 15> kLanczos = {
    0.999999999999997092,    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,   .339946499848118887e-4,
    .465236289270485756e-4,  -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,  -.164318106536763890e-3,
    .844182239838527433e-4,  -.261908384015814087e-4, .368991826595316234e-5};

cplx log_gamma_right(cplx z) {
  cplx ser = kLanczos[0];
  for (std::size_t j = 1; j < kLanczos.size(); ++j) ser += kLanczos[j] / (z + static_cast<double>(j));
  const cplx t = z + kLanczosG;
  return (z + 0.5) * std::log(t) - t + std::log(2.5066282746310005 * ser / z);
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(cplx z, const char* what) {
  if (!finite(z)) throw DomainError(std::string(what) + " is not finite");
}

}  // namespace

void TruncationPolicy::validate() const {
  if (!(relative_tolerance > 0.0 && relative_tolerance < 1.0))
    throw std::invalid_argument("relative_tolerance must lie in (0, 1)");
  if (max_terms < 1) throw std::invalid_argument("max_terms must be positive");
}

cplx pochhammer(cplx a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  cplx p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + static_cast<double>(i);
  return p;
}

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational p = 1;
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::nearbyint(z.real()) == z.real();
}

cplx log_gamma(cplx z) {
  require_finite(z, "gamma argument");
  if (is_nonpositive_integer(z)) throw PoleError("gamma pole at " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    // reflection; any branch of the log is fine since callers exponentiate
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

cplx gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() == std::nearbyint(z.real()) && z.real() < 171.0)
    return std::tgamma(z.real());
  return std::exp(log_gamma(z));
}

cplx beta(cplx a, cplx b) { return gamma_product({a, b}, {a + b}); }

cplx gamma_product(const std::vector<cplx>& numer, const std::vector<cplx>& denom) {
  cplx acc = 0.0;
  for (const auto& z : numer) acc += log_gamma(z);
  for (const auto& z : denom) {
    // 1/Gamma vanishes at its poles
    if (is_nonpositive_integer(z)) return 0.0;
    acc -= log_gamma(z);
  }
  return std::exp(acc);
}

double digamma(double x) {
  if (!std::isfinite(x)) throw DomainError("digamma argument is not finite");
  if (x <= 0.0 && x == std::nearbyint(x)) throw PoleError("digamma pole");
  double acc = 0.0;
  if (x < 0.0) {
    acc -= kPi / std::tan(kPi * x);
    x = 1.0 - x;
  }
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  // Bernoulli tail
  const double tail =
      r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * 691.0 / 32760)))));
  return acc + std::log(x) - 0.5 / x - tail;
}

SeriesResult eval_pFq(const HGSeriesSpec& spec, cplx x, const TruncationPolicy& policy) {
  policy.validate();
  if (spec.upper.size() != spec.lower.size() + 1)
    throw std::invalid_argument("pFq needs exactly one more upper than lower parameter");
  require_finite(x, "pFq argument");
  for (const auto& b : spec.lower) {
    require_finite(b, "lower parameter");
    if (is_nonpositive_integer(b)) throw PoleError("pFq lower parameter is a non-positive integer");
  }
  for (const auto& a : spec.upper) require_finite(a, "upper parameter");

  const double ax = std::abs(x);
  const double eps = std::numeric_limits<double>::epsilon();
  if (x == cplx(1.0, 0.0)) {
    cplx balance = 0.0;
    for (const auto& b : spec.lower) balance += b;
    for (const auto& a : spec.upper) balance -= a;
    if (!(balance.real() > 0.0)) throw DomainError("pFq at x = 1 diverges for this parameter balance");
    bool terminating = false;
    for (const auto& z : spec.upper) terminating = terminating || is_nonpositive_integer(z);
    if (spec.upper.size() == 2 && !terminating) {
      const cplx a = spec.upper[0], b = spec.upper[1], c = spec.lower[0];
      SeriesResult r;
      r.value = gamma_product({c, c - a - b}, {c - a, c - b});
      r.est_error = 1e-13 * std::abs(r.value);
      return r;
    }
  } else if (ax >= 1.0) {
    throw DomainError("pFq series requires |x| < 1 (continuation is a separate step)");
  }

  cplx sum = 1.0, term = 1.0;
  double abs_sum = 1.0;
  int small_run = 0;
  const double s_re = [&] {
    cplx s = 0.0;
    for (const auto& b : spec.lower) s += b;
    for (const auto& a : spec.upper) s -= a;
    return s.real();
  }();
  for (int n = 0; n < policy.max_terms; ++n) {
    cplx ratio = x / static_cast<double>(n + 1);
    for (const auto& a : spec.upper) ratio *= a + static_cast<double>(n);
    for (const auto& b : spec.lower) ratio /= b + static_cast<double>(n);
    const cplx next = term * ratio;
    if (!finite(next)) throw NonConvergenceError("pFq series overflowed");
    term = next;
    sum += term;
    abs_sum += std::abs(term);
    const double at = std::abs(term);
    if (at < policy.relative_tolerance * std::abs(sum) || at == 0.0) {
      ++small_run;
    } else {
      small_run = 0;
    }
    if (small_run >= 3) {
      const double rho_here = std::abs(ratio);
      SeriesResult r;
      r.terms_used = n + 2;
      // upper bound for the omitted tail under a geometric majorant
      cplx nxt = x / static_cast<double>(n + 2);
      for (const auto& a : spec.upper) nxt *= a + static_cast<double>(n + 1);
      for (const auto& b : spec.lower) nxt /= b + static_cast<double>(n + 1);
      const double t_next = std::abs(term * nxt);
      const double rho = std::max(rho_here, ax);
      if (rho < 1.0) {
        r.value = sum;
        r.est_error = 2.0 * t_next / (1.0 - rho) + eps * abs_sum;
        return r;
      }
      if (ax == 1.0 && s_re > 0.0) {
        // algebraic tail t_n ~ C n^{-1-s}: remaining sum ~ t_n * n / s
        const double nn = n + 1.0;
        const cplx tail = term * (nn / s_re);
        if (std::abs(tail) * (2.0 + s_re) / nn < policy.relative_tolerance * std::abs(sum)) {
          r.value = sum + tail;
          r.est_error = std::abs(tail) * (2.0 + s_re) / nn + eps * abs_sum;
          return r;
        }
        small_run = 0;
        continue;
      }
      r.value = sum;
      r.est_error = 2.0 * t_next + eps * abs_sum;
      return r;
    }
  }
  throw NonConvergenceError("pFq series did not converge within " + std::to_string(policy.max_terms) + " terms");
}

}  // namespace hgp

#include "hgperiod/params.hpp"

#include "hgperiod/errors.hpp"

namespace hgp {

namespace {

HGParams build(const Rational& alpha, const Rational& beta, const Rational& mu, std::optional<long> l) {
  HGParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.mu = mu;
  p.alpha0 = 0;
  if (l) {
    if (*l <= 0) throw HypothesisError("l must be a positive integer");
    p.l = *l;
  } else {
    if (!mu.get_den().fits_slong_p()) throw HypothesisError("denominator of mu is too large");
    p.l = mu.get_den().get_si();
  }
  Rational m = mu * p.l;
  if (!is_integer(m)) throw HypothesisError("mu * l must be an integer (mu = m/l)");
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), m.get_num_mpz_t(), static_cast<unsigned long>(p.l));
  p.k = r.get_si();
  p.q_chi = Rational(p.k, p.l);
  p.q_chi.canonicalize();
  return p;
}

}  // namespace

HGParams HGParams::make(const Rational& alpha, const Rational& beta, const Rational& mu, std::optional<long> l) {
  HGParams p = build(alpha, beta, mu, l);
  p.validate();
  return p;
}

HGParams HGParams::unchecked(const Rational& alpha, const Rational& beta, const Rational& mu,
                             std::optional<long> l) {
  return build(alpha, beta, mu, l);
}

std::optional<std::string> HGParams::violation() const {
  auto in_unit = [](const Rational& x) { return sgn(x) >= 0 && x < 1; };
  if (!in_unit(alpha)) return "alpha^chi must be a rational number in [0, 1)";
  if (!in_unit(beta)) return "beta^chi must be a rational number in [0, 1)";
  if (!is_zero(alpha0)) return "alpha_0^chi = 0 is required";
  const std::string cong = "q^chi not≡ 0, alpha^chi, beta^chi, alpha^chi+beta^chi (mod Z) violated: ";
  if (is_integer(mu)) return cong + "mu ≡ 0 (mod Z)";
  if (congruent_mod_1(mu, alpha)) return cong + "mu ≡ alpha^chi (mod Z)";
  if (congruent_mod_1(mu, beta)) return cong + "mu ≡ beta^chi (mod Z)";
  if (congruent_mod_1(mu, Rational(alpha + beta))) return cong + "mu ≡ alpha^chi+beta^chi (mod Z)";
  if (!(mu > 1)) return "mu > 1 is required";
  return std::nullopt;
}

void HGParams::validate() const {
  if (auto v = violation()) throw HypothesisError(*v);
}

long HGParams::m() const {
  Rational mm = mu * l;
  return mm.get_num().get_si();
}

std::string HGParams::describe() const {
  return "alpha=" + to_string(alpha) + " beta=" + to_string(beta) + " mu=" + to_string(mu) +
         " l=" + std::to_string(l) + " k=" + std::to_string(k);
}

}  // namespace hgp

#pragma once

#include <optional>
#include <string>

#include "hgperiod/rational.hpp"

namespace hgp {

// Exact parameter bundle.  mu = m/l and q_chi = k/l with 0 <= k < l, so the
// congruence mu ≡ q_chi (mod Z) holds by construction.
struct HGParams {
  Rational alpha;
  Rational beta;
  Rational mu;
  Rational q_chi;
  Rational alpha0;
  long k = 0;
  long l = 1;

  // Builds and validates; l defaults to the denominator of mu.
  static HGParams make(const Rational& alpha, const Rational& beta, const Rational& mu,
                       std::optional<long> l = std::nullopt);
  // Same bookkeeping without the hypothesis checks (oracles, negative tests).
  static HGParams unchecked(const Rational& alpha, const Rational& beta, const Rational& mu,
                            std::optional<long> l = std::nullopt);

  // Throws HypothesisError naming the first violated hypothesis.
  void validate() const;
  std::optional<std::string> violation() const;

  long m() const;  // mu * l
  Rational nu(int shift) const { return mu + shift; }
  std::string describe() const;
};

}  // namespace hgp

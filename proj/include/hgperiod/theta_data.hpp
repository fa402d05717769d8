#pragma once

#include <vector>

#include "hgperiod/rational_function.hpp"

namespace hgp {

// Input operator p0(t) + p1(t) d/dt together with its re-expansion around
// lambda: a_i = (-1)^i/i! p0^{(i)}(lambda), b_i likewise from p1, so that
// p0(t) = sum a_i(lambda) (lambda - t)^i.
struct ThetaData {
  QPoly p0;
  QPoly p1;
  std::vector<QPoly> a;
  std::vector<QPoly> b;

  int degree_bound() const { return std::max({p0.degree(), p1.degree(), 0}); }
  QPoly a_at(int i) const { return i >= 0 && i < static_cast<int>(a.size()) ? a[i] : QPoly(); }
  QPoly b_at(int i) const { return i >= 0 && i < static_cast<int>(b.size()) ? b[i] : QPoly(); }
};

// Throws HypothesisError unless t(1-t) divides p1 (skip with check_p1 = false).
ThetaData derive_ab(const QPoly& p0, const QPoly& p1, bool check_p1 = true);
bool satisfies_p1(const QPoly& p1);

// Polynomial from a coefficient list, lowest degree first.
QPoly poly_from(const std::vector<Rational>& coeffs);

}  // namespace hgp

#include "hgperiod/theta_data.hpp"

#include "hgperiod/errors.hpp"

namespace hgp {

QPoly poly_from(const std::vector<Rational>& coeffs) { return QPoly(coeffs); }

bool satisfies_p1(const QPoly& p1) { return is_zero(p1(Rational(0))) && is_zero(p1(Rational(1))); }

ThetaData derive_ab(const QPoly& p0, const QPoly& p1, bool check_p1) {
  if (check_p1 && !satisfies_p1(p1)) throw HypothesisError("condition P1 violated: t(1-t) does not divide p1");
  ThetaData td;
  td.p0 = p0;
  td.p1 = p1;
  auto expand = [](const QPoly& p) {
    std::vector<QPoly> out;
    QPoly deriv = p;
    Rational fact = 1;
    for (int i = 0; i <= p.degree(); ++i) {
      if (i > 0) {
        deriv = deriv.derivative();
        fact *= i;
      }
      Rational c = (i % 2 == 0 ? Rational(1) : Rational(-1)) / fact;
      out.push_back(deriv.scaled(c));
    }
    return out;
  };
  td.a = expand(p0);
  td.b = expand(p1);
  return td;
}

}  // namespace hgp

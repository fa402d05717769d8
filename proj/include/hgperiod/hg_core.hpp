#pragma once

#include <vector>

#include "hgperiod/rational.hpp"

namespace hgp {

struct TruncationPolicy {
  double relative_tolerance = 1e-13;
  int max_terms = 10000;
  void validate() const;
};

// upper has one more entry than lower.
struct HGSeriesSpec {
  std::vector<cplx> upper;
  std::vector<cplx> lower;
};

struct SeriesResult {
  cplx value;
  double est_error = 0.0;
  int terms_used = 0;
};

cplx pochhammer(cplx a, int n);
Rational pochhammer(const Rational& a, int n);

// True when z is 0, -1, -2, ... (exactly, no tolerance).
bool is_nonpositive_integer(cplx z);

cplx log_gamma(cplx z);
cplx gamma(cplx z);
cplx beta(cplx a, cplx b);
cplx gamma_product(const std::vector<cplx>& numer, const std::vector<cplx>& denom);

// Real digamma; poles at non-positive integers.
double digamma(double x);

// Sums the series for |x| < 1, or x == 1 when Re(sum lower - sum upper) > 0.
SeriesResult eval_pFq(const HGSeriesSpec& spec, cplx x, const TruncationPolicy& policy = {});

inline cplx hyp2f1(cplx a, cplx b, cplx c, cplx x, const TruncationPolicy& policy = {}) {
  return eval_pFq({{a, b}, {c}}, x, policy).value;
}
inline cplx hyp3f2(cplx a, cplx b, cplx c, cplx d, cplx e, cplx x, const TruncationPolicy& policy = {}) {
  return eval_pFq({{a, b, c}, {d, e}}, x, policy).value;
}

}  // namespace hgp

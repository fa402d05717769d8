#include "hgperiod/sfn.hpp"

#include "hgperiod/errors.hpp"

namespace hgp {

namespace {

SFn::Num linear(const Rational& r) { return SFn::Num(std::vector<QRatFn>{QRatFn(Rational(-r)), QRatFn(1L)}); }

SFn::Num times_factors(SFn::Num n, const Rational& r, int k) {
  for (int i = 0; i < k; ++i) n = n * linear(r);
  return n;
}

}  // namespace

SFn::SFn(Num num, Roots den) : num_(std::move(num)), den_(std::move(den)) { cancel(); }

SFn SFn::inverse_linear(const std::vector<Rational>& roots) {
  Roots r;
  for (const auto& x : roots) ++r[x];
  return SFn(Num(QRatFn(1L)), std::move(r));
}

SFn SFn::s() { return SFn(Num::x()); }

void SFn::cancel() {
  for (auto it = den_.begin(); it != den_.end();) {
    if (num_.is_zero_poly()) {
      den_.clear();
      return;
    }
    while (it->second > 0 && num_(QRatFn(it->first)).is_zero_rf()) {
      num_ = num_.divmod(linear(it->first)).first;
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
  for (const auto& c : num_.coeffs()) check_size(c);
}

QPoly SFn::den() const {
  QPoly d(1L);
  for (const auto& [r, k] : den_)
    for (int i = 0; i < k; ++i) d = d * QPoly(std::vector<Rational>{-r, Rational(1)});
  return d;
}

SFn SFn::shifted(long k) const {
  Roots d;
  for (const auto& [r, m] : den_) d[r - k] = m;
  return SFn(num_.shifted(QRatFn(Rational(k))), std::move(d));
}

QRatFn SFn::at(const Rational& s) const {
  QRatFn den(1L);
  for (const auto& [r, k] : den_) {
    if (r == s) throw PoleError("pole of an s-function at s = " + hgp::to_string(s));
    for (int i = 0; i < k; ++i) den = den * QRatFn(Rational(s - r));
  }
  return num_(QRatFn(s)) / den;
}

SFn operator+(const SFn& x, const SFn& y) {
  SFn::Roots l = x.den_;
  for (const auto& [r, k] : y.den_) l[r] = std::max(l[r], k);
  SFn::Num nx = x.num_, ny = y.num_;
  for (const auto& [r, k] : l) {
    const auto ix = x.den_.find(r), iy = y.den_.find(r);
    nx = times_factors(nx, r, k - (ix == x.den_.end() ? 0 : ix->second));
    ny = times_factors(ny, r, k - (iy == y.den_.end() ? 0 : iy->second));
  }
  return SFn(nx + ny, std::move(l));
}

SFn operator*(const SFn& x, const SFn& y) {
  if (x.is_zero() || y.is_zero()) return SFn();
  SFn::Roots d = x.den_;
  for (const auto& [r, k] : y.den_) d[r] += k;
  return SFn(x.num_ * y.num_, std::move(d));
}

std::string SFn::to_string() const {
  std::string out = "[";
  for (int i = 0; i <= num_.degree(); ++i) {
    if (i) out += ", ";
    out += hgp::to_string(num_.coeffs()[static_cast<std::size_t>(i)]);
  }
  out += "] / prod(s - r)";
  for (const auto& [r, k] : den_) out += " r=" + hgp::to_string(r) + "^" + std::to_string(k);
  return out;
}

}  // namespace hgp

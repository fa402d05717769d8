#pragma once

#include <string>
#include <utility>

#include "hgperiod/polynomial.hpp"

namespace hgp {

// num/den over F, kept reduced with a monic denominator so that equality is
// structural.
template <class F>
class RationalFunction {
 public:
  using Poly = Polynomial<F>;

  RationalFunction() : num_(), den_(F(1L)) {}
  RationalFunction(long c) : num_(F(c)), den_(F(1L)) {}  // NOLINT
  RationalFunction(F c) : num_(std::move(c)), den_(F(1L)) {}  // NOLINT
  RationalFunction(Poly p) : num_(std::move(p)), den_(F(1L)) {}  // NOLINT
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction x() { return RationalFunction(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero_rf() const { return num_.is_zero_poly(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  template <class T>
  T eval(const T& at) const {
    return num_.eval(at) / den_.eval(at);
  }
  F operator()(const F& at) const { return num_(at) / den_(at); }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  // f(x + c)
  RationalFunction shifted(const F& c) const { return RationalFunction(num_.shifted(c), den_.shifted(c)); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero_rf() || b.is_zero_rf()) return {};
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero_rf()) throw std::domain_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (den_.is_zero_poly()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero_poly()) {
      den_ = Poly(F(1L));
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    F inv = F(1L) / den_.lead();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  Poly num_;
  Poly den_;
};

template <class F>
bool is_zero(const RationalFunction<F>& r) {
  return r.is_zero_rf();
}

// Q(lambda)
using QRatFn = RationalFunction<Rational>;

std::string to_string(const QRatFn& f, std::string_view var = "λ");
void check_size(const QRatFn& f);

}  // namespace hgp

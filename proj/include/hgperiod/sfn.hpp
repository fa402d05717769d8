#pragma once

#include <map>
#include <string>

#include "hgperiod/rational_function.hpp"

namespace hgp {

// Rational functions of s whose denominators split over Q into linear factors
// free of lambda: num(s) / prod (s - r)^k with num in Q(lambda)[s].  This is
// the shape of everything the three-term recursion produces, and it avoids
// Euclid over Q(lambda)[s].  Common factors are cancelled, so equality is
// structural.
class SFn {
 public:
  using Num = Polynomial<QRatFn>;
  using Roots = std::map<Rational, int>;

  SFn() = default;
  SFn(long c) : num_(QRatFn(c)) {}  // NOLINT
  SFn(QRatFn c) : num_(std::move(c)) {}  // NOLINT
  explicit SFn(Num num, Roots den = {});

  // 1 / prod (s - r_i)
  static SFn inverse_linear(const std::vector<Rational>& roots);
  static SFn s();

  const Num& num() const { return num_; }
  const Roots& den_roots() const { return den_; }
  QPoly den() const;
  bool is_zero() const { return num_.is_zero_poly(); }

  SFn shifted(long k) const;           // f(s + k)
  QRatFn at(const Rational& s) const;  // throws PoleError at a pole

  SFn operator-() const { return SFn(-num_, den_); }
  friend SFn operator+(const SFn& x, const SFn& y);
  friend SFn operator-(const SFn& x, const SFn& y) { return x + (-y); }
  friend SFn operator*(const SFn& x, const SFn& y);
  friend bool operator==(const SFn& x, const SFn& y) { return x.den_ == y.den_ && x.num_ == y.num_; }

  std::string to_string() const;

 private:
  void cancel();
  Num num_;
  Roots den_;
};

}  // namespace hgp

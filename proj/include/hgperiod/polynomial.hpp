#pragma once

// Dense univariate polynomials over an exact field F.  F must provide
// + - * /, construction from long, and an is_zero overload visible here or
// through ADL.  Used with F = Rational and F = RationalFunction<Rational>
// (the latter gives the bivariate field Q(lambda)(s)).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgperiod/rational.hpp"

namespace hgp {

template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(F c) {  // NOLINT: constants convert implicitly
    if (!is_zero(c)) coeffs_.push_back(std::move(c));
  }
  Polynomial(long c) : Polynomial(F(c)) {}  // NOLINT
  explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial x() { return Polynomial(std::vector<F>{F(0L), F(1L)}); }
  static Polynomial monomial(F c, std::size_t n) {
    std::vector<F> v(n + 1, F(0L));
    v[n] = std::move(c);
    return Polynomial(std::move(v));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero_poly() const { return coeffs_.empty(); }
  const std::vector<F>& coeffs() const { return coeffs_; }
  F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0L); }
  const F& lead() const { return coeffs_.back(); }

  template <class T>
  T eval(const T& at) const {
    T acc = T(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + convert<T>(*it);
    return acc;
  }

  F operator()(const F& at) const {
    F acc(0L);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at;
      acc = acc + *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<F> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      F c = coeffs_[i] * F(static_cast<long>(i));
      d.push_back(std::move(c));
    }
    return Polynomial(std::move(d));
  }

  // p(x + c)
  Polynomial shifted(const F& c) const {
    Polynomial acc;
    Polynomial lin(std::vector<F>{c, F(1L)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Polynomial(*it);
    return acc;
  }

  Polynomial operator-() const {
    std::vector<F> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
      F n = F(0L) - c;
      v.push_back(std::move(n));
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0L));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0L));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        F t = a.coeffs_[i] * b.coeffs_[j];
        v[i + j] = v[i + j] + t;
      }
    }
    return Polynomial(std::move(v));
  }

  Polynomial scaled(const F& c) const {
    std::vector<F> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) {
      F t = x * c;
      v.push_back(std::move(t));
    }
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero_poly()) throw std::domain_error("polynomial division by zero");
    Polynomial r = *this;
    std::vector<F> q(std::max(0, degree() - d.degree() + 1), F(0L));
    while (!r.is_zero_poly() && r.degree() >= d.degree()) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
      F c = r.lead() / d.lead();
      q[shift] = c;
      r = r - monomial(c, shift) * d;
    }
    return {Polynomial(std::move(q)), std::move(r)};
  }

  Polynomial monic() const {
    if (coeffs_.empty()) return {};
    F inv = F(1L) / lead();
    return scaled(inv);
  }

  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero_poly()) {
      Polynomial r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  template <class T>
  static T convert(const F& c) {
    if constexpr (std::is_same_v<F, Rational> && !std::is_same_v<T, Rational>)
      return T(c.get_d());
    else
      return T(c);
  }

  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

template <class F>
bool is_zero(const Polynomial<F>& p) {
  return p.is_zero_poly();
}

using QPoly = Polynomial<Rational>;

// "1/2 - 3*x + x^2" style text, variable name configurable.
std::string to_string(const QPoly& p, std::string_view var = "λ");

void check_size(const QPoly& p);

}  // namespace hgp

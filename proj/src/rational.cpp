#include "hgperiod/rational.hpp"

#include <cctype>
#include <string>

#include "hgperiod/errors.hpp"
#include "hgperiod/rational_function.hpp"

namespace hgp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = strip(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not an exact fraction: '" + std::string(text) + "' (use p/q, no decimals)");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  if (!s.empty() && s.front() == '-') q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational frac(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(fl);
}

void check_size(const Rational& q) {
  if (mpz_sizeinbase(q.get_num_mpz_t(), 10) > kMaxCoefficientDigits ||
      mpz_sizeinbase(q.get_den_mpz_t(), 10) > kMaxCoefficientDigits)
    throw BlowUpError("exact coefficient exceeded " + std::to_string(kMaxCoefficientDigits) + " digits");
}

void check_size(const QPoly& p) {
  for (const auto& c : p.coeffs()) check_size(c);
}

void check_size(const QRatFn& f) {
  check_size(f.num());
  check_size(f.den());
}

std::string to_string(const QPoly& p, std::string_view var) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = a == 1;
    if (i == 0 || !unit) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string to_string(const QRatFn& f, std::string_view var) {
  std::string n = to_string(f.num(), var);
  if (f.is_polynomial()) {
    // denominator is the constant 1 after normalization
    return n;
  }
  std::string d = to_string(f.den(), var);
  if (f.num().degree() > 0 && f.num().coeffs().size() > 1) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

}  // namespace hgp

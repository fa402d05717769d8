#include "hgperiod/diffop.hpp"

#include "hgperiod/errors.hpp"
#include "hgperiod/functions.hpp"

namespace hgp {

namespace {

QRatFn lam() { return QRatFn::x(); }
QRatFn cst(const Rational& c) { return QRatFn(c); }

Rational binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

void require_same_basis(const DiffOperator& x, const DiffOperator& y) {
  if (x.basis() != y.basis()) throw std::invalid_argument("operators are expressed in different bases");
}

std::string basis_symbol(Basis b) { return b == Basis::d ? "∂" : "D"; }

}  // namespace

DiffOperator::DiffOperator(Basis basis, std::vector<QRatFn> coeffs) : basis_(basis), coeffs_(std::move(coeffs)) {
  trim();
}

void DiffOperator::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero_rf()) coeffs_.pop_back();
  for (const auto& c : coeffs_) check_size(c);
}

DiffOperator DiffOperator::power(Basis basis, int k) {
  std::vector<QRatFn> c(static_cast<std::size_t>(k + 1));
  c.back() = QRatFn(1L);
  return DiffOperator(basis, std::move(c));
}

QRatFn DiffOperator::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : QRatFn();
}

DiffOperator DiffOperator::operator-() const {
  std::vector<QRatFn> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return DiffOperator(basis_, std::move(c));
}

DiffOperator operator+(const DiffOperator& x, const DiffOperator& y) {
  require_same_basis(x, y);
  std::vector<QRatFn> c(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeff(static_cast<int>(i)) + y.coeff(static_cast<int>(i));
  return DiffOperator(x.basis_, std::move(c));
}

DiffOperator operator*(const QRatFn& f, const DiffOperator& x) {
  std::vector<QRatFn> c;
  c.reserve(x.coeffs_.size());
  for (const auto& a : x.coeffs_) c.push_back(f * a);
  return DiffOperator(x.basis_, std::move(c));
}

QRatFn apply_derivation(Basis basis, const QRatFn& f) {
  return basis == Basis::d ? f.derivative() : lam() * f.derivative();
}

DiffOperator compose(const DiffOperator& L, const DiffOperator& M) {
  require_same_basis(L, M);
  if (L.is_zero() || M.is_zero()) return DiffOperator(L.basis(), {});
  const int ol = L.order(), om = M.order();
  std::vector<QRatFn> out(static_cast<std::size_t>(ol + om + 1));
  for (int j = 0; j <= om; ++j) {
    // iterated derivations of M_j
    std::vector<QRatFn> dj{M.coeff(j)};
    for (int k = 1; k <= ol; ++k) dj.push_back(apply_derivation(L.basis(), dj.back()));
    for (int i = 0; i <= ol; ++i) {
      const QRatFn& li = L.coeffs()[static_cast<std::size_t>(i)];
      if (li.is_zero_rf()) continue;
      for (int k = 0; k <= i; ++k) {
        if (dj[static_cast<std::size_t>(k)].is_zero_rf()) continue;
        out[static_cast<std::size_t>(i - k + j)] =
            out[static_cast<std::size_t>(i - k + j)] + li * dj[static_cast<std::size_t>(k)] * cst(binom(i, k));
      }
    }
  }
  return DiffOperator(L.basis(), std::move(out));
}

Division right_divide(const DiffOperator& L, const DiffOperator& D) {
  require_same_basis(L, D);
  if (D.is_zero()) throw std::domain_error("right division by the zero operator");
  DiffOperator q(L.basis(), {});
  DiffOperator r = L;
  while (!r.is_zero() && r.order() >= D.order()) {
    const int k = r.order() - D.order();
    const QRatFn c = r.leading() / D.leading();
    const DiffOperator term = c * DiffOperator::power(L.basis(), k);
    q = q + term;
    r = r - compose(term, D);
  }
  return {q, r};
}

DiffOperator to_d_basis(const DiffOperator& L) {
  if (L.basis() == Basis::d) return L;
  // D = lambda ∂ in the d basis
  const DiffOperator Dd(Basis::d, {QRatFn(), lam()});
  DiffOperator acc(Basis::d, {});
  DiffOperator pw = DiffOperator::identity(Basis::d);
  for (int i = 0; i <= L.order(); ++i) {
    if (i > 0) pw = compose(Dd, pw);
    acc = acc + L.coeff(i) * pw;
  }
  return acc;
}

DiffOperator to_D_basis(const DiffOperator& L) {
  if (L.basis() == Basis::D) return L;
  // ∂ = lambda^{-1} D in the D basis
  const DiffOperator dD(Basis::D, {QRatFn(), QRatFn(QPoly(1L), QPoly::x())});
  DiffOperator acc(Basis::D, {});
  DiffOperator pw = DiffOperator::identity(Basis::D);
  for (int i = 0; i <= L.order(); ++i) {
    if (i > 0) pw = compose(dD, pw);
    acc = acc + L.coeff(i) * pw;
  }
  return acc;
}

cplx apply(const DiffOperator& L, cplx lambda, const std::vector<cplx>& jet) {
  const DiffOperator Ld = to_d_basis(L);
  if (static_cast<int>(jet.size()) <= Ld.order()) throw std::invalid_argument("jet too short for operator order");
  cplx acc = 0.0;
  for (int i = 0; i <= Ld.order(); ++i) acc += Ld.coeff(i).eval(lambda) * jet[static_cast<std::size_t>(i)];
  return acc;
}

double apply_scale(const DiffOperator& L, cplx lambda, const std::vector<cplx>& jet) {
  const DiffOperator Ld = to_d_basis(L);
  double acc = 0.0;
  for (int i = 0; i <= Ld.order(); ++i) acc += std::abs(Ld.coeff(i).eval(lambda) * jet[static_cast<std::size_t>(i)]);
  return acc;
}

cplx apply(const DiffOperator& L, const AnalyticFunction& f, cplx lambda) {
  std::vector<cplx> jet;
  for (int i = 0; i <= L.order(); ++i) jet.push_back(derivative(f, lambda, i));
  return apply(L, lambda, jet);
}

std::string to_string(const DiffOperator& L) {
  if (L.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= L.order(); ++i) {
    const QRatFn c = L.coeff(i);
    if (c.is_zero_rf()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = to_string(c);
    if (i == 0) {
      out += cs;
      continue;
    }
    const bool compound = cs.find_first_of("+-/") != std::string::npos && cs != "-1";
    out += compound ? "(" + cs + ")" : cs;
    out += "·" + basis_symbol(L.basis());
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

nlohmann::json to_json(const DiffOperator& L) {
  nlohmann::json j;
  j["basis"] = L.basis() == Basis::d ? "d" : "D";
  auto poly = [](const QPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
  };
  j["coeffs"] = nlohmann::json::array();
  for (const auto& c : L.coeffs()) j["coeffs"].push_back({{"num", poly(c.num())}, {"den", poly(c.den())}});
  return j;
}

DiffOperator diffop_from_json(const nlohmann::json& j) {
  const std::string b = j.at("basis").get<std::string>();
  if (b != "d" && b != "D") throw std::invalid_argument("unknown operator basis '" + b + "'");
  auto poly = [](const nlohmann::json& a) {
    std::vector<Rational> c;
    for (const auto& s : a) c.push_back(parse_rational(s.get<std::string>()));
    return QPoly(c);
  };
  std::vector<QRatFn> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(poly(c.at("num")), poly(c.at("den")));
  return DiffOperator(b == "d" ? Basis::d : Basis::D, std::move(coeffs));
}

bool poles_only_at_0_1(const QRatFn& f) {
  QPoly den = f.den();
  const QPoly x = QPoly::x();
  const QPoly xm1 = x - QPoly(1L);
  for (const QPoly& fac : {x, xm1}) {
    while (den.degree() > 0) {
      auto [q, r] = den.divmod(fac);
      if (!r.is_zero_poly()) break;
      den = q;
    }
  }
  return den.degree() == 0;
}

DiffOperator build_D(const HGParams& p) {
  const Rational &a = p.alpha, &b = p.beta, &m = p.mu;
  const QRatFn l = lam();
  return DiffOperator(Basis::d, {cst(-(a - m) * (b - m)), cst(a + b - m) - cst(a + b - 2 * m + 1) * l,
                                 l - l * l});
}

DiffOperator build_P_HG(const HGParams& p) {
  const Rational &a = p.alpha, &b = p.beta, &m = p.mu;
  const QRatFn l = lam();
  return DiffOperator(Basis::D, {-l * cst((a - m) * (b - m)), cst(a + b - m - 1) - l * cst(a + b - 2 * m),
                                 QRatFn(1L) - l});
}

DiffOperator build_theta_lambda(const HGParams& p) {
  const QRatFn l = lam();
  return DiffOperator(Basis::D, {cst(p.mu - 1) * l, QRatFn(1L) - l});
}

DiffOperator build_Q_HG(const HGParams& p) { return compose(build_theta_lambda(p), build_P_HG(p)); }

DiffOperator build_theta_H(const HGParams& p) {
  const QRatFn l = lam();
  return DiffOperator(Basis::D, {l - QRatFn(1L) + cst(p.mu - 1) * l, QRatFn(1L) - l});
}

DiffOperator build_H_annihilator(const HGParams& p) { return compose(build_theta_H(p), build_P_HG(p)); }

ThetaConstruction construct_Theta(const HGParams& p, const ThetaData& td, int N) {
  ThetaConstruction out;
  const int bound = td.degree_bound();
  if (N < 0) N = bound;
  if (N < bound) throw std::invalid_argument("N must be at least max(deg p0, deg p1)");
  out.N = N;
  const Rational &a = p.alpha, &b = p.beta, &mu = p.mu;
  const QRatFn l = lam();

  std::vector<QRatFn> c1(static_cast<std::size_t>(N + 2));
  const Rational muN = pochhammer(mu, N);
  for (int i = 0; i <= N; ++i) {
    const Rational w = pochhammer(mu, i) / muN / p.l;
    c1[static_cast<std::size_t>(N - i)] = c1[static_cast<std::size_t>(N - i)] + QRatFn(td.a_at(i).scaled(w));
    c1[static_cast<std::size_t>(N + 1 - i)] = c1[static_cast<std::size_t>(N + 1 - i)] + QRatFn(td.b_at(i).scaled(w));
  }
  out.theta1 = DiffOperator(Basis::d, std::move(c1));

  out.theta2 = DiffOperator::identity(Basis::d);
  for (int j = 0; j < N; ++j) {
    const Rational nu = mu + j + 1;
    const Rational div = (a - nu) * (b - nu);
    if (is_zero(div)) throw HypothesisError("degenerate parameters: (alpha - nu)(beta - nu) = 0 in the index shift");
    const Rational w = (mu + j) / div;
    DiffOperator step(Basis::d, {cst(w) * (cst(a + b - nu) - cst(a + b - 2 * nu + 1) * l), cst(w) * (l - l * l)});
    out.theta2 = compose(step, out.theta2);
    out.steps.push_back(std::move(step));
  }
  out.product = compose(out.theta1, out.theta2);
  out.reduced = right_divide(out.product, build_D(p));
  out.theta = out.reduced.remainder;
  return out;
}

DiffOperator build_Theta(const HGParams& p, const ThetaData& td, int N) { return construct_Theta(p, td, N).theta; }

DiffOperator derivative_of_Theta(const HGParams& p, const DiffOperator& theta) {
  return right_divide(compose(DiffOperator::derivation(Basis::d), to_d_basis(theta)), build_D(p)).remainder;
}

}  // namespace hgp

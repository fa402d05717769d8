#include <cmath>
#include <numbers>
#include <map>
#include <random>

#include "hgperiod/theta_data.hpp"
#include "oracles.hpp"

namespace hgp::oracle {

namespace {

using json = nlohmann::json;

json num(lcplx z) { return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())}); }
json num(double x) { return json::array({x, 0.0}); }

json entry(const std::string& id, const std::string& oracle, json args, json value) {
  return json{{"id", id}, {"oracle", oracle}, {"args", std::move(args)}, {"value", std::move(value)}};
}

json exact(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json exact(const std::vector<QPoly>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(exact(p.coeffs()));
  return out;
}

json ratfn(const QRatFn& f) { return json{{"num", exact(f.num().coeffs())}, {"den", exact(f.den().coeffs())}}; }

}  // namespace

nlohmann::json generate_fixtures() {
  json entries = json::array();
  const double pi = std::numbers::pi;

  entries.push_back(entry("gamma_half", "exp-sinh quadrature of t^{-1/2} e^{-t}", {{"z", 0.5}},
                          num(gamma_half_by_quadrature())));
  entries.push_back(entry("beta_third", "tanh-sinh quadrature of t^{-2/3}(1-t)^{-1/3}",
                          {{"a", "1/3"}, {"b", "2/3"}}, num(beta_by_quadrature(1.0 / 3, 2.0 / 3))));

  {
    const double al = 1.0 / 3, be = 1.0 / 5, mu = 3.5;
    const double g = gamma_ratio({mu, mu + 1 - al - be}, {mu + 1 - al, mu + 1 - be});
    entries.push_back(entry("gamma_product_G_prefactor", "Boost tgamma, direct product",
                            {{"alpha", "1/3"}, {"beta", "1/5"}, {"mu", "7/2"}}, num(g)));
    const lcplx sign = std::polar(1.0L, static_cast<long double>(pi * mu));
    entries.push_back(entry("G_prefactor", "e^{i pi mu} times the gamma product",
                            {{"alpha", "1/3"}, {"beta", "1/5"}, {"mu", "7/2"}}, num(sign * (long double)g)));
  }
  {
    const double al = 0.25, be = 1.0 / 3;
    entries.push_back(entry("gamma_product_kummer", "Boost tgamma, direct product",
                            {{"alpha", "1/4"}, {"beta", "1/3"}},
                            num(gamma_ratio({1 - al - be}, {1 - al, 1 - be}))));
  }

  entries.push_back(entry("hyp2f1_binomial", "(1-x)^{-a}", {{"a", 0.5}, {"b", 7}, {"c", 7}, {"x", 0.3}},
                          num(hyp2f1_binomial(0.5, 0.3))));
  entries.push_back(entry("hyp3f2_euler", "Euler integral, Boost pFq kernel, tanh-sinh",
                          {{"upper", {0.2, 0.4, 0.6}}, {"lower", {1.1, 1.3}}, {"x", 0.5}},
                          num(hyp3f2_euler(0.2, 0.4, 0.6, 1.1, 1.3, 0.5))));

  entries.push_back(entry("F_mu_ref", "(lambda-1)^mu ∫ (1-u)^{mu-1} 2F1(alpha,beta;1;(1-lambda)u) du",
                          {{"alpha", "1/3"}, {"beta", "1/5"}, {"mu", "7/2"}, {"lambda", {0.5, 0.0}}},
                          num(F_mu_by_quadrature(1.0 / 3, 0.2, 3.5, 0.5L))));
  entries.push_back(entry("F_mu_transport_end", "same integral at the end of the transport arc",
                          {{"alpha", "1/3"}, {"beta", "1/5"}, {"mu", "7/2"}, {"lambda", {0.6, 0.1}}},
                          num(F_mu_by_quadrature(1.0 / 3, 0.2, 3.5, lcplx(0.6L, 0.1L)))));
  entries.push_back(entry("P_m_unit_theta", "(2 pi i / l) F_mu from the integral oracle",
                          {{"alpha", "1/3"}, {"beta", "1/5"}, {"mu", "7/2"}, {"l", 2}, {"lambda", {0.5, 0.0}}},
                          num(lcplx(0, 2 * pi / 2) * F_mu_by_quadrature(1.0 / 3, 0.2, 3.5, 0.5L))));

  entries.push_back(entry("int_rep_2F1_complex", "tanh-sinh of t^{b-1}(1-t)^{c-b-1}(1-xt)^{-a}",
                          {{"a", "1/3"}, {"b", "1/2"}, {"c", "3/2"}, {"x", {0.3, 0.2}}},
                          num(int_rep_2f1_integral(1.0 / 3, 0.5, 1.5, lcplx(0.3L, 0.2L)))));
  {
    // one admissible tuple: Re c > 0, Re(e - c) > 0
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> n(1, 9);
    auto q = [](long p, long r) {
      Rational x(p, r);
      x.canonicalize();
      return x;
    };
    const Rational a = q(n(rng), 7), b = q(n(rng), 11), c = q(n(rng), 5), d = q(1 + n(rng), 3);
    const Rational e = c + q(n(rng), 4);
    const double I = hyp3f2_euler(a.get_d(), b.get_d(), c.get_d(), d.get_d(), e.get_d(), 0.25);
    entries.push_back(entry("int_rep_3F2_random", "3F2 by Euler integral (seeded tuple)",
                            {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"d", to_string(d)},
                             {"e", to_string(e)}, {"x", 0.25}},
                            num(I)));
  }

  for (const auto& [id, lambda] : std::vector<std::pair<std::string, lcplx>>{
           {"H_mu_at_m1.5", lcplx(-1.5L)}, {"H_mu_at_m1.4", lcplx(-1.4L)}, {"H_mu_at_2.6+0.4i", lcplx(2.6L, 0.4L)}}) {
    entries.push_back(entry(id, "tanh-sinh of the H integral, log expansion of the kernel near t = 1",
                            {{"alpha", "1/3"}, {"beta", "1/5"}, {"mu", "7/2"},
                             {"lambda", {static_cast<double>(lambda.real()), static_cast<double>(lambda.imag())}}},
                            num(H_by_quadrature(1.0 / 3, 0.2, 3.5, lambda))));
  }

  {
    const HGParams p = HGParams::make(Rational(1, 3), Rational(1, 5), Rational(7, 2));
    entries.push_back(entry("Q_m_quadrature", "(1/l) B ∫ (lambda-t)^{mu-1} (theta integrand) dt",
                            {{"alpha", "1/3"}, {"beta", "1/5"}, {"mu", "7/2"}, {"l", 2}, {"m", 7},
                             {"p0", {"1"}}, {"p1", {"0", "1", "-1"}}, {"lambda", {-1.4, 0.0}}},
                            num(Q_m_by_quadrature(p, {1.0}, {0.0, 1.0, -1.0}, -1.4L))));
  }

  {
    const HandAB h = hand_ab_unit_t1mt();
    entries.push_back(entry("theta_data_unit_t1mt", "expansion by hand", {{"p0", {"1"}}, {"p1", {"0", "1", "-1"}}},
                            json{{"a", exact(h.a)}, {"b", exact(h.b)}}));
  }

  {
    const Rational al(1, 3), be(1, 5), mu(7, 2);
    const auto [c1, d1] = step_matrix_CD(al, be, mu, 1);
    entries.push_back(entry("C1_D1_ref", "step matrix applied twice in Q(lambda)",
                            {{"alpha", "1/3"}, {"beta", "1/5"}, {"s", "7/2"}},
                            json{{"C", ratfn(c1)}, {"D", ratfn(d1)}}));
    for (int i : {1, 2}) {
      int v = 0;
      const auto coeffs = three_term_remainder_series(al, be, mu, i, 60, &v);
      std::vector<Rational> trimmed = coeffs;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      // a Laurent polynomial: every computed coefficient past the last nonzero one vanishes
      entries.push_back(entry("three_term_remainder_i" + std::to_string(i),
                              "series-coefficient matching in x = 1/(1-lambda)",
                              {{"alpha", "1/3"}, {"beta", "1/5"}, {"mu", "7/2"}, {"i", i},
                               {"checked_terms", static_cast<int>(coeffs.size())}},
                              json{{"valuation", v}, {"coeffs", exact(trimmed)}}));
    }
  }

  return json{{"format", 1}, {"entries", entries}};
}

std::vector<std::string> compare_fixtures(const nlohmann::json& stored, const nlohmann::json& fresh, double rel_tol) {
  std::vector<std::string> bad;
  std::map<std::string, json> by_id;
  for (const auto& e : stored.at("entries")) by_id[e.at("id").get<std::string>()] = e;
  for (const auto& e : fresh.at("entries")) {
    const std::string id = e.at("id").get<std::string>();
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      bad.push_back(id + " (missing)");
      continue;
    }
    const json& a = it->second.at("value");
    const json& b = e.at("value");
    bool same;
    if (a.is_array() && a.size() == 2 && a[0].is_number()) {
      const double dr = a[0].get<double>() - b[0].get<double>(), di = a[1].get<double>() - b[1].get<double>();
      const double scale = std::max(1e-300, std::hypot(b[0].get<double>(), b[1].get<double>()));
      same = std::hypot(dr, di) <= rel_tol * scale;
    } else {
      same = a == b;
    }
    if (!same) bad.push_back(id);
    by_id.erase(it);
  }
  for (const auto& [id, _] : by_id) bad.push_back(id + " (stale)");
  return bad;
}

}  // namespace hgp::oracle

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "hgperiod/continuation.hpp"
#include "hgperiod/errors.hpp"
#include "hgperiod/period_reg.hpp"
#include "hgperiod/verify.hpp"
#include "oracles.hpp"

using namespace hgp;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string alpha = "1/3", beta = "1/5", mu = "7/2";
  std::optional<long> l;
  std::vector<std::string> p0{"1"}, p1{"0", "1", "-1"};
  std::vector<std::string> lambdas;
  std::string grid;
  std::string format = "json";
  std::string out;
};

void add_params(CLI::App* app, Common& c) {
  app->add_option("--alpha", c.alpha, "alpha^chi as an exact fraction")->capture_default_str();
  app->add_option("--beta", c.beta, "beta^chi as an exact fraction")->capture_default_str();
  app->add_option("--mu", c.mu, "mu as an exact fraction")->capture_default_str();
  app->add_option("--l", c.l, "l (defaults to the denominator of mu)");
}

void add_theta(CLI::App* app, Common& c) {
  app->add_option("--p0", c.p0, "coefficients of p0, lowest degree first")->delimiter(',')->capture_default_str();
  app->add_option("--p1", c.p1, "coefficients of p1, lowest degree first")->delimiter(',')->capture_default_str();
}

void add_points(CLI::App* app, Common& c) {
  app->add_option("--lambda", c.lambdas, "evaluation point: re, re,im or re+imi (repeatable)");
  app->add_option("--grid", c.grid, "points from a to b: 're,im:re,im:count'");
}

void add_output(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app->add_option("--out", c.out, "output file (default stdout)");
}

HGParams params_from(const Common& c) {
  return HGParams::make(parse_rational(c.alpha), parse_rational(c.beta), parse_rational(c.mu), c.l);
}

ThetaData theta_from(const Common& c) {
  std::vector<Rational> a, b;
  for (const auto& s : c.p0) a.push_back(parse_rational(s));
  for (const auto& s : c.p1) b.push_back(parse_rational(s));
  return derive_ab(poly_from(a), poly_from(b));
}

cplx parse_point(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  static const std::regex pair(R"(^([^,]+),([^,]+)$)");
  static const std::regex imag_form(R"(^([-+]?[0-9.eE]+?)([-+][0-9.eE]*)i$)");
  static const std::regex pure_imag(R"(^([-+]?[0-9.eE]*)i$)");
  std::smatch m;
  auto num = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad number: " + t);
    return v;
  };
  if (std::regex_match(s, m, pair)) return {num(m[1]), num(m[2])};
  if (std::regex_match(s, m, imag_form)) return {num(m[1]), num(m[2])};
  if (std::regex_match(s, m, pure_imag)) return {0.0, num(m[1])};
  return {num(s), 0.0};
}

std::vector<cplx> points_from(const Common& c, std::vector<cplx> fallback) {
  std::vector<cplx> pts;
  for (const auto& s : c.lambdas) pts.push_back(parse_point(s));
  if (!c.grid.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(c.grid);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw std::invalid_argument("--grid expects 'a:b:count'");
    const cplx a = parse_point(parts[0]), b = parse_point(parts[1]);
    const int n = std::stoi(parts[2]);
    if (n < 1) throw std::invalid_argument("--grid count must be positive");
    for (int k = 0; k < n; ++k) pts.push_back(n == 1 ? a : a + (b - a) * (static_cast<double>(k) / (n - 1)));
  }
  return pts.empty() ? fallback : pts;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw IoError("cannot open " + c.out + " for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  if (!f) throw IoError("write to " + c.out + " failed");
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Row {
  std::string check_id;
  std::optional<cplx> lambda;
  std::optional<cplx> value;
  std::optional<double> residual;
  bool pass = true;
};

std::string csv(const std::vector<Row>& rows) {
  std::string s = "check_id,lambda_re,lambda_im,value_re,value_im,residual,pass\n";
  for (const auto& r : rows) {
    s += r.check_id + ",";
    s += r.lambda ? g17(r.lambda->real()) + "," + g17(r.lambda->imag()) + "," : ",,";
    s += r.value ? g17(r.value->real()) + "," + g17(r.value->imag()) + "," : ",,";
    s += r.residual ? g17(*r.residual) : "";
    s += r.pass ? ",true\n" : ",false\n";
  }
  return s;
}

// ------------------------------------------------------------------ eval

struct EvalOpts {
  Common c;
  std::string fn = "F_mu";
  long m = 0;
  std::vector<double> upper, lower;
};

struct EvalOut {
  cplx value;
  std::optional<double> est_error;
  std::optional<int> terms;
};

EvalOut with_series(cplx value, cplx prefactor, const HGSeriesSpec& spec, cplx x) {
  const SeriesResult r = eval_pFq(spec, x);
  return {value, std::abs(prefactor) * r.est_error, r.terms_used};
}

EvalOut evaluate(const EvalOpts& o, cplx z) {
  const std::string& fn = o.fn;
  if (fn == "pFq") {
    HGSeriesSpec s;
    for (double u : o.upper) s.upper.push_back(u);
    for (double v : o.lower) s.lower.push_back(v);
    const SeriesResult r = eval_pFq(s, z);
    return {r.value, r.est_error, r.terms_used};
  }
  const Rational a = parse_rational(o.c.alpha), b = parse_rational(o.c.beta);
  const double ad = a.get_d(), bd = b.get_d();
  if (fn == "f1") return with_series(eval_f1(a, b, z), 1.0, {{ad, bd}, {ad + bd}}, z);
  if (fn == "f2") return with_series(eval_f2(a, b, z), 1.0, {{ad, bd}, {1.0}}, 1.0 - z);
  if (fn == "f3")
    return with_series(eval_f3(a, b, z), std::pow(z, 1.0 - ad - bd), {{1 - ad, 1 - bd}, {2 - ad - bd}}, z);
  const HGParams p = params_from(o.c);
  const double mu = p.mu.get_d();
  if (fn == "F_mu")
    return with_series(eval_F_mu(p, z), std::pow(z - 1.0, mu) / mu, {{ad, bd}, {mu + 1}}, 1.0 - z);
  if (fn == "G_mu")
    return with_series(eval_G_mu(p, z), G_prefactor(a, b, p.mu), {{ad - mu, bd - mu}, {ad + bd - mu}}, z);
  if (fn == "H_mu")
    return with_series(eval_H_mu(p, z), std::pow(z - 1.0, mu - 1) / ((1 - ad) * (1 - bd)),
                       {{1.0, 1.0, 1 - mu}, {2 - ad, 2 - bd}}, 1.0 / (1.0 - z));
  const long m = o.m > 0 ? o.m : p.m();
  if (fn == "P_m") return {eval_P_m(p, theta_from(o.c), m, z), std::nullopt, std::nullopt};
  if (fn == "Q_m") return {eval_Q_m(p, theta_from(o.c), m, z), std::nullopt, std::nullopt};
  throw std::invalid_argument("unknown function " + fn);
}

int run_eval(const EvalOpts& o) {
  const auto pts = points_from(o.c, {0.5});
  json arr = json::array();
  std::vector<Row> rows;
  for (cplx z : pts) {
    const EvalOut r = evaluate(o, z);
    json j{{"lambda_re", z.real()}, {"lambda_im", z.imag()}, {"value_re", r.value.real()},
           {"value_im", r.value.imag()}};
    j["est_error"] = r.est_error ? json(*r.est_error) : json(nullptr);
    j["terms_used"] = r.terms ? json(*r.terms) : json(nullptr);
    arr.push_back(j);
    rows.push_back({"eval." + o.fn, z, r.value, r.est_error, true});
  }
  if (o.c.format == "csv") {
    emit(o.c, csv(rows));
  } else {
    emit(o.c, (arr.size() == 1 ? arr[0] : arr).dump(2));
  }
  return kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
  Common c;
  std::string suite = "all";
  std::uint64_t seed = 42;
  unsigned workers = 0;
  std::string fixtures;
};

std::vector<Row> rows_of(const std::vector<CheckRecord>& recs) {
  std::vector<Row> rows;
  for (const auto& r : recs) rows.push_back({r.check_id, std::nullopt, std::nullopt, r.residual, r.pass});
  return rows;
}

int run_verify(const VerifyOpts& o, bool summary) {
  std::vector<CheckRecord> recs = run_checks(select_checks(o.suite), o.seed, o.workers);
  if (!o.fixtures.empty()) recs.push_back(check_fixtures(o.fixtures));
  bool all = true;
  json arr = json::array();
  for (const auto& r : recs) {
    all = all && r.pass;
    arr.push_back(to_json(r));
  }
  if (summary) {
    std::ostringstream s;
    std::map<int, std::pair<int, int>> per;  // criterion -> (pass, total)
    std::map<std::string, int> crit;
    for (const auto& spec : check_registry()) crit[spec.id] = spec.criterion;
    for (const auto& r : recs) {
      auto& e = per[crit.count(r.check_id) ? crit[r.check_id] : 11];
      e.first += r.pass;
      e.second += 1;
    }
    for (const auto& r : recs)
      s << (r.pass ? "PASS " : "FAIL ") << r.check_id << "  residual=" << g17(r.residual)
        << " threshold=" << g17(r.threshold) << " samples=" << r.samples << (r.note.empty() ? "" : "  # " + r.note)
        << "\n";
    s << "\n";
    for (const auto& [k, v] : per)
      s << (k == 0 ? std::string("properties") : "criterion " + std::to_string(k)) << ": " << v.first << "/"
        << v.second << " passed\n";
    emit(o.c, s.str());
  } else if (o.c.format == "csv") {
    emit(o.c, csv(rows_of(recs)));
  } else {
    emit(o.c, json{{"seed", o.seed}, {"suite", o.suite}, {"records", arr}}.dump(2));
  }
  return all ? kOk : kFailed;
}

// ------------------------------------------------------------------ period-matrix

struct PeriodOpts {
  Common c;
  long m = 0;
};

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json mat_json(const Mat2& m) {
  return json::array({json::array({cplx_json(m[0][0]), cplx_json(m[0][1])}),
                      json::array({cplx_json(m[1][0]), cplx_json(m[1][1])})});
}

int run_period(const PeriodOpts& o) {
  const HGParams p = params_from(o.c);
  const ThetaData td = theta_from(o.c);
  long m = o.m;
  if (m == 0) m = p.m() > p.l ? p.m() : admissible_m(p, 1).front();
  const PeriodMatrixResult r = period_matrix(p, td, m);
  json pts = json::array();
  std::vector<Row> rows;
  for (cplx z : points_from(o.c, {0.5})) {
    const Mat2 full = r.full(z), inner = r.inner(z);
    pts.push_back({{"lambda", cplx_json(z)},
                   {"full", mat_json(full)},
                   {"inner", mat_json(inner)},
                   {"inner_relative_det", r.inner_relative_det(z)}});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        rows.push_back({"period.full[" + std::to_string(i) + "][" + std::to_string(j) + "]", z, full[i][j],
                        std::nullopt, true});
  }
  if (o.c.format == "csv") {
    emit(o.c, csv(rows));
    return kOk;
  }
  json j{{"params", params_json(r.params)},
         {"m", r.m},
         {"theta", to_string(r.theta)},
         {"theta_json", to_json(r.theta)},
         {"dtheta", to_string(r.dtheta)},
         {"prefactor_zeta", cplx_json(r.prefactor_zeta)},
         {"xi", cplx_json(r.xi)},
         {"degenerate", r.degenerate},
         {"points", pts}};
  emit(o.c, j.dump(2));
  return kOk;
}

// ------------------------------------------------------------------ regulator

struct RegulatorOpts {
  Common c;
  std::optional<int> n;
  std::string lift = "phi1";
  std::uint64_t seed = 42;
  int samples = 60;
};

int run_regulator(const RegulatorOpts& o) {
  const HGParams p = params_from(o.c);
  const ThetaData td = theta_from(o.c);
  const int n = o.n ? *o.n : default_n(p);
  const Lift lift = o.lift == "phi2" ? Lift::phi2 : Lift::phi1;
  const int r = lift == Lift::phi1 ? n : n - 1;
  const RegulatorRecursionState st = regulator_recursion(p, td, r + static_cast<int>(td.degree_bound()) + 1);
  const Rational s = p.mu - n;
  json cd = json::array();
  for (int i = -1; i <= st.depth; ++i)
    cd.push_back({{"i", i}, {"C", to_string(at_s(st.C_at(i), s))}, {"D", to_string(at_s(st.D_at(i), s))}});
  const FitReport f =
      check_regulator_congruence(p, td, p.m(), n, exterior_samples(o.samples, o.seed), lift);
  CheckRecord rec;
  rec.check_id = std::string("regulator.") + o.lift + "_n" + std::to_string(n);
  rec.params = json::array({params_json(p)});
  rec.samples = o.samples;
  rec.residual = std::max(f.fit_residual, f.validation_residual);
  rec.threshold = 1e-5;
  rec.pass = rec.residual < rec.threshold;
  if (o.c.format == "csv") {
    emit(o.c, csv(rows_of({rec})));
    return rec.pass ? kOk : kFailed;
  }
  json j{{"params", params_json(p)},
         {"n", n},
         {"lift", o.lift},
         {"s", to_string(s)},
         {"C_D_at_s", cd},
         {"E1", to_string(at_s(st.E1(r), s))},
         {"E2", to_string(at_s(st.E2(r), s))},
         {"C1_estimate", cplx_json(f.c1.value_or(0.0))},
         {"fit", {{"residual", f.fit_residual},
                  {"validation_residual", f.validation_residual},
                  {"condition_number", f.condition_number},
                  {"laurent_degree", f.degree}}},
         {"record", to_json(rec)}};
  emit(o.c, j.dump(2));
  return rec.pass ? kOk : kFailed;
}

// ------------------------------------------------------------------ monodromy

struct MonodromyOpts {
  Common c;
  std::string at = "all";
  double tol = 1e-10;
};

int run_monodromy(const MonodromyOpts& o) {
  const HGParams p = params_from(o.c);
  json j{{"params", params_json(p)}, {"xi", cplx_json(xi_of(p))}};
  std::vector<Row> rows;
  auto put = [&](const std::string& name, const MonodromyMatrix& m) {
    const auto ev = m.eigenvalues();
    j[name] = {{"matrix", mat_json(m.entries)}, {"eigenvalues", {cplx_json(ev[0]), cplx_json(ev[1])}},
               {"det", cplx_json(m.det())}};
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        rows.push_back({"monodromy." + name + "[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                        std::nullopt, m.entries[i][k], std::nullopt, true});
  };
  if (o.at == "zero" || o.at == "all") put("zero", monodromy_at_zero(p, o.tol));
  if (o.at == "one" || o.at == "all") put("one", monodromy_at_one(p, o.tol));
  if (o.at == "infinity" || o.at == "all") {
    put("infinity", monodromy_at_infinity(p, o.tol));
    j["H_mu_infinity_factor"] = cplx_json(H_monodromy_at_infinity(p, o.tol));
  }
  if (o.c.format == "csv")
    emit(o.c, csv(rows));
  else
    emit(o.c, j.dump(2));
  return kOk;
}

// ------------------------------------------------------------------ fixtures

int run_fixtures(const std::string& out, const std::string& check) {
  const json fresh = oracle::generate_fixtures();
  if (!check.empty()) {
    std::ifstream in(check);
    if (!in) throw IoError("cannot read " + check);
    const auto bad = oracle::compare_fixtures(json::parse(in), fresh);
    for (const auto& b : bad) std::cerr << "fixture mismatch: " << b << "\n";
    std::cout << (bad.empty() ? "fixtures up to date\n" : "fixtures differ\n");
    return bad.empty() ? kOk : kFailed;
  }
  Common c;
  c.out = out;
  emit(c, fresh.dump(2));
  return kOk;
}

// A config file may name the subcommand with `command = eval`; splice it into
// argv when the command line does not name one.
std::vector<std::string> with_config_command(int argc, char** argv, const std::vector<std::string>& names) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (std::find(names.begin(), names.end(), args[i]) != names.end()) return args;
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  static const std::regex line(R"re(^\s*command\s*=\s*"?([A-Za-z-]+)"?\s*$)re");
  std::smatch m;
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l[0] == '[') break;
    if (std::regex_match(l, m, line)) {
      args.push_back(m[1]);
      break;
    }
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergeometric period and regulator toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file mirroring the flags; [eval] style sections per command");
  std::string command_key;
  app.add_option("--command", command_key, "subcommand named in a config file")->group("");

  EvalOpts eval;
  auto* ev = app.add_subcommand("eval", "evaluate one of the named functions");
  ev->add_option("--fn", eval.fn, "F_mu G_mu H_mu f1 f2 f3 P_m Q_m pFq")
      ->check(CLI::IsMember({"F_mu", "G_mu", "H_mu", "f1", "f2", "f3", "P_m", "Q_m", "pFq"}))
      ->capture_default_str();
  ev->add_option("--m", eval.m, "m for P_m and Q_m (default mu * l)");
  ev->add_option("--upper", eval.upper, "upper parameters for pFq")->delimiter(',');
  ev->add_option("--lower", eval.lower, "lower parameters for pFq")->delimiter(',');
  add_params(ev, eval.c);
  add_theta(ev, eval.c);
  add_points(ev, eval.c);
  add_output(ev, eval.c);

  VerifyOpts ver;
  auto* vf = app.add_subcommand("verify", "run verification suites");
  vf->add_option("--suite", ver.suite, "acceptance, properties, all, or a check id")->capture_default_str();
  vf->add_option("--seed", ver.seed, "random seed")->capture_default_str();
  vf->add_option("--workers", ver.workers, "worker threads (0 = hardware)");
  vf->add_option("--fixtures", ver.fixtures, "also compare this fixture file against regeneration");
  add_output(vf, ver.c);

  VerifyOpts rep;
  auto* rp = app.add_subcommand("report", "plain-text summary of every check");
  rp->add_option("--seed", rep.seed, "random seed")->capture_default_str();
  rp->add_option("--workers", rep.workers, "worker threads (0 = hardware)");
  rp->add_option("--fixtures", rep.fixtures, "fixture file to include");
  rp->add_option("--out", rep.c.out, "output file (default stdout)");

  PeriodOpts per;
  auto* pm = app.add_subcommand("period-matrix", "Theta, xi and the 2x2 period matrix");
  pm->add_option("--m", per.m, "m with m ≡ k (mod l), m > l (default mu * l)");
  add_params(pm, per.c);
  add_theta(pm, per.c);
  add_points(pm, per.c);
  add_output(pm, per.c);

  RegulatorOpts reg;
  auto* rg = app.add_subcommand("regulator", "regulator recursion and congruence fit");
  rg->add_option("--n", reg.n, "exponent n (default: keeps mu - n in (1, 2])");
  rg->add_option("--lift", reg.lift, "phi1 or phi2")->check(CLI::IsMember({"phi1", "phi2"}))->capture_default_str();
  rg->add_option("--seed", reg.seed, "sample seed")->capture_default_str();
  rg->add_option("--samples", reg.samples, "sample count")->check(CLI::Range(20, 2000))->capture_default_str();
  add_params(rg, reg.c);
  add_theta(rg, reg.c);
  add_output(rg, reg.c);

  MonodromyOpts mon;
  auto* mo = app.add_subcommand("monodromy", "monodromy of (F_mu, G_mu)");
  mo->add_option("--at", mon.at, "zero, one, infinity or all")
      ->check(CLI::IsMember({"zero", "one", "infinity", "all"}))
      ->capture_default_str();
  mo->add_option("--tol", mon.tol, "integrator tolerance")->capture_default_str();
  add_params(mo, mon.c);
  add_output(mo, mon.c);

  std::string fix_out = "tests/fixtures/derived_values.json", fix_check;
  auto* fx = app.add_subcommand("fixtures", "regenerate the oracle fixture file");
  fx->add_option("--out", fix_out, "destination")->capture_default_str();
  fx->add_option("--check", fix_check, "compare against this file instead of writing");

  try {
    std::vector<std::string> args =
        with_config_command(argc, argv, {"eval", "verify", "report", "period-matrix", "regulator", "monodromy", "fixtures"});
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::FileError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*ev) return run_eval(eval);
    if (*vf) return run_verify(ver, false);
    if (*rp) return run_verify(rep, true);
    if (*pm) return run_period(per);
    if (*rg) return run_regulator(reg);
    if (*mo) return run_monodromy(mon);
    if (*fx) return run_fixtures(fix_out, fix_check);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kInvalid;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kInvalid;
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kInvalid;
}

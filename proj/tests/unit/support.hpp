#pragma once
#include <cmath>
#include <complex>
#include <fstream>
#include <stdexcept>
#include <string>

#include "hgperiod/params.hpp"
#include "hgperiod/rational.hpp"
#include "json.hpp"

namespace hgp::test {

inline const nlohmann::json& fixture(const std::string& id) {
  static const nlohmann::json doc = [] {
    std::ifstream in(HGP_FIXTURE_FILE);
    if (!in) throw std::runtime_error("fixture file missing: " HGP_FIXTURE_FILE);
    return nlohmann::json::parse(in);
  }();
  for (const auto& e : doc.at("entries"))
    if (e.at("id") == id) return e;
  throw std::runtime_error("no fixture " + id);
}

inline cplx fixture_cplx(const std::string& id) {
  const auto& v = fixture(id).at("value");
  return {v.at(0).get<double>(), v.at(1).get<double>()};
}

inline double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

inline Rational q(const char* s) { return parse_rational(s); }

inline HGParams ref_params() { return HGParams::make(q("1/3"), q("1/5"), q("7/2")); }

}  // namespace hgp::test

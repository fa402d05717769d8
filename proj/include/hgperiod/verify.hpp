#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hgperiod/params.hpp"
#include "json.hpp"

namespace hgp {

struct CheckRecord {
  std::string check_id;
  nlohmann::json params = nlohmann::json::array();
  int samples = 0;
  double residual = 0.0;  // worst case over the samples
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

nlohmann::json to_json(const CheckRecord& r);

struct CheckSpec {
  std::string id;
  int criterion;  // 1..11, or 0 for a property outside the exit gate
  std::string suite;
  std::function<CheckRecord(std::uint64_t seed)> run;
};

// Every registered check in a fixed order.
const std::vector<CheckSpec>& check_registry();

// Suites: "acceptance" (criteria 1-10), "properties", "all", or a single check id.
std::vector<const CheckSpec*> select_checks(const std::string& suite);

// Runs the checks on up to `workers` threads; the result order follows the
// registry regardless of completion order.  A check that throws yields a
// failed record carrying the message.
std::vector<CheckRecord> run_checks(const std::vector<const CheckSpec*>& checks, std::uint64_t seed,
                                    unsigned workers = 0);

// Stored fixture file against a fresh regeneration.
CheckRecord check_fixtures(const std::string& path);

// Parameter sets obeying every hypothesis, mu in (2, 11/2).
std::vector<HGParams> random_params(int count, std::uint64_t seed);

nlohmann::json params_json(const HGParams& p);

}  // namespace hgp

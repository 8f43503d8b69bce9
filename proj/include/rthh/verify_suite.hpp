// Registry of executable checks, each bound to a verbatim anchor from the
// source text, and a concurrent runner with a deterministic merged report.

#ifndef RTHH_VERIFY_SUITE_HPP
#define RTHH_VERIFY_SUITE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rthh/check_report.hpp"
#include "rthh/monoid.hpp"

namespace rthh {

struct SuiteConfig {
  std::size_t max_degree = 4;
  std::int64_t weight_window = 3;
  std::int64_t coord_window = 5;  // enumeration windows of the monoid checks
  std::int64_t iso_window = 4;    // l1 bound of the cellwise isomorphism checks
  std::size_t rank_cap = 4;
  std::uint64_t seed = 1;
  std::size_t random_instances = 20;
  unsigned threads = 1;

  // Throws std::invalid_argument unless every cap is positive.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

struct CheckDescriptor {
  std::string id;
  std::string anchor;  // verbatim
  std::string statement;
  CheckStatus expected = CheckStatus::kPass;
  std::function<CheckReport(const SuiteConfig&)> run;
};

const std::vector<CheckDescriptor>& registry();

// Registry ids in registry order.
std::vector<std::string> check_ids();

// Runs the given ids ("all" expands to the registry) concurrently; reports
// come back in registry order with check = id and the anchor attached.
// Throws std::out_of_range for an unknown id.
std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const SuiteConfig& config);

// {"config", "checks": [...], "summary": {status: count}}
nlohmann::ordered_json suite_report(const std::vector<CheckReport>& reports, const SuiteConfig& config);
std::string summary_table(const std::vector<CheckReport>& reports);

// theta: P -> P (+) Z^k, x -> (x, 0), with P sharp of rank <= 3 generated by
// random vectors of the positive orthant closed under a random coordinate
// permutation of order <= 2, and Z^k carrying +-1. Deterministic in seed.
std::vector<MonoidHom> random_unit_extensions(std::uint64_t seed, std::size_t count);

}  // namespace rthh

#endif  // RTHH_VERIFY_SUITE_HPP

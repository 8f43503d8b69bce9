// rthh: monoid inspection, nerve homology tables and the verification suite.
//
// Exit codes: 0 pass, 1 a check failed, 2 usage or parse error,
// 3 inconclusive results under --strict.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rthh/homology.hpp"
#include "rthh/monoid_checks.hpp"
#include "rthh/nerves.hpp"
#include "rthh/verify_suite.hpp"

using namespace rthh;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// The monoid without its involution, and the involution check separately,
// so that an invalid involution is reported rather than fatal.
std::pair<AffineMonoid, json> load_monoid(const std::string& path) {
  json j = read_json(path);
  json involution = j.is_object() && j.contains("involution") ? j["involution"] : json(nullptr);
  if (j.is_object()) j["involution"] = nullptr;
  AffineMonoid m = [&] {
    try {
      return monoid_from_json(j);
    } catch (const std::exception& e) {
      throw UsageError(path + ": " + e.what());
    }
  }();
  if (involution.is_null()) return {m, json{{"present", false}}};
  j["involution"] = involution;
  try {
    return {monoid_from_json(j), json{{"present", true}, {"valid", true}}};
  } catch (const MonoidParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    return {m, json{{"present", true}, {"valid", false}, {"reason", e.what()}}};
  }
}

void print_fields(const json& j, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items())
    out << k << std::string(width - k.size() + 2, ' ') << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

int monoid_info(const std::string& path, const SuiteConfig& config, const std::string& format) {
  auto [m, involution] = load_monoid(path);
  json report;
  report["ambient_rank"] = m.ambient_rank();
  report["generators"] = m.generators();
  report["units"] = m.unit_basis();
  report["sharp"] = m.is_sharp();
  const Sharpening s = sharpen(m);
  report["sharpening"] = {{"ambient_rank", s.monoid.ambient_rank()}, {"generators", s.monoid.generators()}};
  report["integral"] = true;
  report["fine"] = true;
  try {
    report["saturated"] = is_saturated(m, config.rank_cap);
  } catch (const std::exception& e) {
    report["saturated"] = std::string("unknown: ") + e.what();
  }
  report["involution"] = involution;
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    print_fields(report, std::cout);
  return kExitPass;
}

Vec parse_weight(const std::string& text, std::size_t rank) {
  Vec out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw UsageError("weight must be comma-separated integers: " + text);
    }
  }
  if (out.size() != rank) throw UsageError("weight needs " + std::to_string(rank) + " coordinates");
  return out;
}

struct NerveOptions {
  std::string path;
  std::string kind;
  std::string weight;
  std::int64_t window = 0;
  bool fixed_points = false;
};

int nerve_homology(const NerveOptions& o, const SuiteConfig& config, const std::string& format) {
  auto [m, involution] = load_monoid(o.path);
  if (involution["present"] == true && involution["valid"] == false)
    throw UsageError("invalid involution: " + involution["reason"].get<std::string>());
  const std::size_t cap = config.max_degree;
  const std::size_t depth = o.fixed_points ? 2 * (cap + 1) + 1 : cap + 1;
  const bool needs_window = o.kind == "replete" || o.kind == "real";
  if (needs_window && o.window <= 0) throw UsageError("kind " + o.kind + " needs an explicit --window");
  if (!needs_window && o.weight.empty()) throw UsageError("kind " + o.kind + " needs --weight");
  const CellWindow window{o.window, CellWindow::Norm::kL1};
  std::optional<Vec> weight;
  if (!o.weight.empty()) weight = parse_weight(o.weight, m.ambient_rank());

  TruncatedDihedralSet x = [&] {
    try {
      if (o.kind == "dihedral") return dihedral_nerve(m, depth, *weight);
      if (o.kind == "tensor-interval") return tensor_interval(m, depth, *weight);
      if (o.kind == "replete") return replete_nerve(m, depth, window, weight);
      return real_nerve(m, depth, window);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  json report;
  report["kind"] = o.kind;
  report["monoid"] = monoid_to_json(m);
  report["weight"] = weight ? json(*weight) : json(nullptr);
  report["window"] = needs_window ? json(o.window) : json(nullptr);
  const HomologyTable under = homology(normalized_chains(x.truncated(cap + 1)).complex);
  report["homology"] = under.to_json();
  std::optional<HomologyTable> fixed;
  if (o.fixed_points) {
    fixed = homology(normalized_chains(fixed_points(segal_subdivide(x, cap + 1))).complex);
    report["fixed_points"] = fixed->to_json();
  }
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "N^" << o.kind << " of " << m.describe();
    if (weight) std::cout << ", weight " << to_string(*weight);
    if (needs_window) std::cout << ", l1 window " << o.window;
    std::cout << "\n" << under.to_text();
    if (fixed) std::cout << "fixed points of the subdivision\n" << fixed->to_text();
  }
  return kExitPass;
}

int verify(std::vector<std::string> ids, const SuiteConfig& config, const std::string& format, bool strict) {
  if (ids.empty()) ids = {"all"};
  std::vector<CheckReport> reports;
  try {
    reports = run_checks(ids, config);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (format == "json")
    std::cout << suite_report(reports, config).dump(2) << "\n";
  else
    std::cout << summary_table(reports);
  bool failed = false, inconclusive = false;
  for (const CheckReport& r : reports) {
    failed |= r.status == CheckStatus::kFail;
    inconclusive |= r.status == CheckStatus::kInconclusive;
  }
  if (failed) return kExitFail;
  if (strict && inconclusive) return kExitInconclusive;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monoids with involution, dihedral nerves and their homology"};
  app.require_subcommand(1);

  SuiteConfig config;
  std::string format = "json";
  bool strict = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-degree", config.max_degree, "Degree cap")->check(CLI::PositiveNumber);
    sub->add_option("--weight-window", config.weight_window, "Largest weight")->check(CLI::PositiveNumber);
    sub->add_option("--coord-window", config.coord_window, "Monoid enumeration window")->check(CLI::PositiveNumber);
    sub->add_option("--rank-cap", config.rank_cap, "Saturation rank cap")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "Seed for random instances");
    sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--strict", strict, "Exit 3 when a check is inconclusive");
  };

  std::string info_path;
  CLI::App* info = app.add_subcommand("monoid-info", "Rank, units, sharpening and saturation of a monoid file");
  info->add_option("path", info_path, "Monoid JSON")->required();
  common(info);

  NerveOptions nerve;
  CLI::App* nh = app.add_subcommand("nerve-homology", "Homology table of a nerve weight piece or window");
  nh->add_option("path", nerve.path, "Monoid JSON")->required();
  nh->add_option("--kind", nerve.kind, "dihedral, replete, real or tensor-interval")
      ->required()
      ->check(CLI::IsMember({"dihedral", "replete", "real", "tensor-interval"}));
  nh->add_option("--weight", nerve.weight, "Weight, comma separated");
  nh->add_option("--window", nerve.window, "l1 cell window (replete, real)");
  nh->add_flag("--fixed-points", nerve.fixed_points, "Also the fixed points of the Segal subdivision");
  common(nh);

  std::vector<std::string> ids;
  CLI::App* ver = app.add_subcommand("verify", "Run registered checks");
  ver->add_option("ids", ids, "Check ids or all");
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*info) return monoid_info(info_path, config, format);
    if (*nh) return nerve_homology(nerve, config, format);
    return verify(ids, config, format, strict);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

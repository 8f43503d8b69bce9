// Acceptance run: one line per criterion, exit 0 only if all pass.
// Usage: acceptance [path-to-rthh]
// With the CLI path, criterion 9 compares the in-process report against a
// separate `rthh verify all` process; otherwise against a second in-process run.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "rthh/integer_matrix.hpp"
#include "rthh/verify_suite.hpp"

using namespace rthh;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Line {
  int number;
  std::string name;
  bool ok;
  std::string note;
};

std::vector<Line> lines;

void record(int number, std::string name, bool ok, std::string note) {
  std::cout << "criterion " << number << " " << name << ": " << (ok ? "PASS" : "FAIL") << "  " << note
            << std::endl;
  lines.push_back({number, std::move(name), ok, std::move(note)});
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << s << " s";
  return out.str();
}

std::string statuses(const std::vector<const CheckReport*>& rs) {
  std::string s;
  for (const CheckReport* r : rs) {
    if (!s.empty()) s += ", ";
    s += r->check + "=" + std::string(status_name(r->status));
  }
  return s;
}

bool all_pass(const std::vector<const CheckReport*>& rs) {
  for (const CheckReport* r : rs)
    if (!r->passed()) return false;
  return true;
}

// Recomposition, divisibility and pivot agreement on random matrices.
void snf_criterion() {
  const auto start = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  int bad_recompose = 0, bad_chain = 0, bad_agree = 0;
  for (int t = 0; t < 200; ++t) {
    BigMatrix a(size(rng), size(rng));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = entry(rng);
    const SmithForm s = smith_normal_form(a, PivotStrategy::kSmallestMagnitude);
    const SmithForm f = smith_normal_form(a, PivotStrategy::kFirstNonzero);
    // D = U A V, so A = U^-1 D V^-1.
    if (!(unimodular_inverse(s.left) * s.diagonal * unimodular_inverse(s.right) == a)) ++bad_recompose;
    if (!(unimodular_inverse(f.left) * f.diagonal * unimodular_inverse(f.right) == a)) ++bad_recompose;
    for (const SmithForm* x : {&s, &f}) {
      const auto& d = x->invariant_factors;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 0 || (i + 1 < d.size() && d[i + 1] % d[i] != 0)) ++bad_chain;
        if (x->diagonal(i, i) != d[i]) ++bad_chain;
      }
    }
    if (s.invariant_factors != f.invariant_factors ||
        invariant_factors(a, PivotStrategy::kFirstNonzero) != s.invariant_factors)
      ++bad_agree;
  }
  std::ostringstream note;
  note << "200 matrices up to 8x8, recomposition failures " << bad_recompose << ", divisibility failures "
       << bad_chain << ", strategy disagreements " << bad_agree << " (" << fmt_seconds(seconds_since(start))
       << ")";
  record(8, "smith normal form", bad_recompose == 0 && bad_chain == 0 && bad_agree == 0, note.str());
}

std::string run_cli_verify_all(const std::string& cli) {
  const std::string cmd = "\"" + cli + "\" verify all";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const SuiteConfig config;
  std::cout << "config " << config.to_json().dump() << std::endl;

  // Every registered check once, timed individually, in registry order.
  std::map<std::string, CheckReport> by_id;
  std::map<std::string, double> secs;
  std::vector<CheckReport> in_order;
  for (const std::string& id : check_ids()) {
    const auto start = Clock::now();
    CheckReport r = run_checks({id}, config).front();
    secs[id] = seconds_since(start);
    std::cout << "  ran " << id << " " << status_name(r.status) << " (" << fmt_seconds(secs[id]) << ")"
              << std::endl;
    by_id[id] = r;
    in_order.push_back(std::move(r));
  }

  {
    const CheckReport& r = by_id["relations"];
    record(1, "crossed-simplicial relations", r.passed() && secs["relations"] < 30.0,
           std::string(status_name(r.status)) + ", " + fmt_seconds(secs["relations"]) + " (limit 30 s)");
  }
  {
    const CheckReport& r = by_id["thrlog.10"];
    record(2, "weight pieces of N^di N", r.passed() && secs["thrlog.10"] < 60.0,
           std::string(status_name(r.status)) + ", exact, " + fmt_seconds(secs["thrlog.10"]) + " (limit 60 s)");
  }
  {
    const CheckReport& r = by_id["drep.1"];
    record(3, "sum-collapse Z/2-equivalence", r.passed() && config.max_degree - 1 == 3,
           std::string(status_name(r.status)) + ", weights <= " + std::to_string(config.weight_window) +
               ", certified through degree " + std::to_string(config.max_degree - 1));
  }
  {
    std::vector<const CheckReport*> rs = {&by_id["drep.4"], &by_id["dih.25"], &by_id["drep.2.2"]};
    record(4, "cellwise isomorphisms", all_pass(rs) && config.iso_window == 4 && config.max_degree + 1 == 5,
           statuses(rs) + ", l1 <= " + std::to_string(config.iso_window) + ", degrees <= " +
               std::to_string(config.max_degree + 1) + " (" +
               fmt_seconds(secs["drep.4"] + secs["dih.25"] + secs["drep.2.2"]) + ")");
  }
  {
    std::vector<const CheckReport*> rs = {&by_id["strict.2"], &by_id["strict.3"]};
    std::string note = statuses(rs);
    bool logged = true;
    for (const CheckReport* r : rs) {
      const std::size_t excluded = r->details.contains("excluded") ? r->details["excluded"].size() : 0;
      note += "; " + r->check + " " + r->details.value("instances", nlohmann::ordered_json(0)).dump() +
              " checked, " + std::to_string(excluded) + " excluded";
      if (excluded > 0) {
        for (const auto& e : r->details["excluded"])
          if (!e.contains("instance") || !e.contains("reason")) logged = false;
      }
    }
    record(5, "unit base change squares", all_pass(rs) && logged && config.random_instances == 20, note);
  }
  {
    std::vector<const CheckReport*> rs = {&by_id["mot.1-n1"], &by_id["mot.1-n2"]};
    const double t = secs["mot.1-n1"] + secs["mot.1-n2"];
    record(6, "Phi-cube total cofibers", all_pass(rs) && t < 300.0,
           statuses(rs) + ", negative control included in mot.1-n1, " + fmt_seconds(t) + " (limit 300 s)");
  }
  {
    const CheckReport& r = by_id["dih.14"];
    record(7, "exactification", r.passed(), std::string(status_name(r.status)) + ", 100 samples each for N, Z, N^2 swap");
  }
  snf_criterion();
  {
    const auto start = Clock::now();
    const std::string first = suite_report(in_order, config).dump(2) + "\n";
    std::string second;
    std::string how;
    if (argc > 1) {
      second = run_cli_verify_all(argv[1]);
      how = "in-process run vs `rthh verify all`";
    } else {
      second = suite_report(run_checks({"all"}, config), config).dump(2) + "\n";
      how = "two in-process runs";
    }
    record(9, "determinism", first == second,
           how + ", " + std::to_string(first.size()) + " bytes, " + fmt_seconds(seconds_since(start)));
  }

  bool ok = true;
  for (const Line& l : lines) ok = ok && l.ok;
  std::cout << (ok ? "all criteria pass" : "some criteria fail") << std::endl;
  return ok ? 0 : 1;
}

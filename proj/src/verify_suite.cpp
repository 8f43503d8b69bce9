#include "rthh/verify_suite.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rthh/cube.hpp"
#include "rthh/homology.hpp"
#include "rthh/monoid_checks.hpp"
#include "rthh/simplicial_checks.hpp"

namespace rthh {

void SuiteConfig::validate() const {
  if (max_degree < 1 || weight_window < 1 || coord_window < 1 || iso_window < 1 || rank_cap < 1 || threads < 1)
    throw std::invalid_argument("every cap must be positive");
}

nlohmann::ordered_json SuiteConfig::to_json() const {
  return {{"max_degree", max_degree},       {"weight_window", weight_window}, {"coord_window", coord_window},
          {"iso_window", iso_window},       {"rank_cap", rank_cap},           {"seed", seed},
          {"random_instances", random_instances}};
}

namespace {

AffineMonoid n_triv() { return AffineMonoid::naturals(1).with_involution(Mat{{1}}); }
AffineMonoid z_triv() { return AffineMonoid::integers(1).with_involution(Mat{{1}}); }
AffineMonoid z_neg() { return AffineMonoid::integers(1).with_involution(Mat{{-1}}); }
AffineMonoid n2_swap() { return AffineMonoid::naturals(2).with_involution(Mat{{0, 1}, {1, 0}}); }
AffineMonoid nz_triv() { return AffineMonoid(2, {{1, 0}, {0, 1}, {0, -1}}, identity_mat(2)); }

struct Named {
  std::string label;
  AffineMonoid monoid;
};

std::vector<Named> iso_monoids() { return {{"N", n_triv()}, {"Z", z_triv()}, {"N^2 swap", n2_swap()}}; }

// Runs one instance; an exception is a failure of the check, not of the run.
CheckReport guarded(const std::string& label, const std::function<CheckReport()>& f) {
  CheckReport r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r = CheckReport::fail(label, {{"exception", e.what()}});
  }
  r.details["instance"] = label;
  return r;
}

// Aggregates instances; precondition-failed ones are excluded and listed.
struct Instances {
  CheckReport report = CheckReport::pass("");
  nlohmann::ordered_json excluded = nlohmann::ordered_json::array();
  std::size_t counted = 0;

  void add(const std::string& label, const std::function<CheckReport()>& f) {
    CheckReport r = guarded(label, f);
    if (r.status == CheckStatus::kPreconditionFailed) {
      excluded.push_back({{"instance", label}, {"reason", r.witness}});
      return;
    }
    ++counted;
    absorb(report, r);
  }
  // A negative control: passes exactly when the instance fails.
  void add_control(const std::string& label, const std::function<CheckReport()>& f) {
    CheckReport r = guarded(label, f);
    CheckReport wrapped = CheckReport::pass(label + " (control)");
    wrapped.details["control_status"] = r.to_json()["status"];
    wrapped.details["control_witness"] = r.witness;
    if (r.status != CheckStatus::kFail) {
      wrapped.status = CheckStatus::kFail;
      wrapped.witness = {{"instance", label}, {"reason", "negative control did not fail"}};
    }
    ++counted;
    absorb(report, wrapped);
  }
  CheckReport finish() {
    report.details["instances"] = counted;
    if (!excluded.empty()) report.details["excluded"] = excluded;
    return report;
  }
};

std::string vec_label(const Vec& v) { return to_string(v); }

// theta: N -> N (+) Z, identity, and multiplication by 2 (non-iso sharpening).
std::vector<std::pair<std::string, MonoidHom>> listed_homs() {
  const AffineMonoid n = n_triv();
  return {{"N -> N (+) Z", MonoidHom(n, nz_triv(), Mat{{1}, {0}})},
          {"id N", MonoidHom::identity(n)},
          {"2: N -> N", MonoidHom(n, n, Mat{{2}})}};
}

CheckReport run_relations(const SuiteConfig& c) {
  Instances in;
  const std::size_t deep = 2 * c.max_degree + 1;
  for (std::int64_t d = 0; d <= c.weight_window + 1; ++d)
    in.add("N^di N weight " + std::to_string(d), [&] { return verify_relations(dihedral_nerve(n_triv(), deep, Vec{d})); });
  in.add("N^drep N window " + std::to_string(c.weight_window),
         [&] { return verify_relations(replete_nerve(n_triv(), c.max_degree, CellWindow{c.weight_window})); });
  for (std::int64_t d = 0; d <= c.weight_window; ++d)
    in.add("N (x) Delta^1_sigma weight " + std::to_string(d),
           [&] { return verify_relations(tensor_interval(n_triv(), deep, Vec{d})); });
  in.add("N^di N^2 swap weight (2,1)", [&] { return verify_relations(dihedral_nerve(n2_swap(), c.max_degree + 1, Vec{2, 1})); });
  const CellWindow l1{c.weight_window, CellWindow::Norm::kL1};
  in.add("N^drep N^2 swap", [&] { return verify_relations(replete_nerve(n2_swap(), c.max_degree, l1)); });
  in.add("N^sigma Z sign", [&] { return verify_relations(real_nerve(z_neg(), c.max_degree, CellWindow{2})); });
  in.add("N^2 swap x E(Z^2)", [&] { return verify_relations(repletion_resolution(n2_swap(), c.max_degree, l1)); });
  return in.finish();
}

CheckReport run_drep1(const SuiteConfig& c) {
  Instances in;
  const std::size_t n = c.max_degree - 1;
  const std::size_t depth = 2 * n + 3;
  for (std::int64_t d = 0; d <= c.weight_window; ++d)
    in.add("N weight " + std::to_string(d), [&] {
      return z2_equivalence_certificate("drep.1", tensor_interval(n_triv(), depth, Vec{d}),
                                        constant_object(n_triv(), depth, {{d}}), sum_map(1), n);
    });
  const AffineMonoid m = n2_swap();
  for (std::int64_t total = 0; total <= c.weight_window; ++total)
    for (std::int64_t a = total; 2 * a >= total; --a) {
      const Vec w{a, total - a};
      in.add("N^2 swap weight " + vec_label(w), [&] {
        return z2_equivalence_certificate("drep.1", tensor_interval(m, depth, w),
                                          constant_object(m, depth, weight_orbit(m, w)), sum_map(2), n);
      });
    }
  in.add("sd Delta^1_sigma", [&] { return check_subdivided_interval(n + 1); });
  return in.finish();
}

CheckReport run_drep22(const SuiteConfig& c) {
  Instances in;
  for (const auto& [label, m] : iso_monoids())
    in.add(label, [&] { return check_drep22(m, c.max_degree + 1, c.iso_window); });
  return in.finish();
}

CheckReport run_dih25(const SuiteConfig& c) {
  Instances in;
  for (const auto& [label, m] : iso_monoids())
    in.add(label, [&] { return check_dih25(m, c.max_degree + 1, c.iso_window); });
  return in.finish();
}

template <class F>
CheckReport run_pairs(const SuiteConfig& c, F check) {
  Instances in;
  const std::vector<Named> ms = iso_monoids();
  for (const auto& p : ms)
    for (const auto& q : ms)
      in.add(p.label + ", " + q.label, [&] { return check(p.monoid, q.monoid, c.max_degree + 1, c.iso_window); });
  return in.finish();
}

CheckReport run_dih15(const SuiteConfig& c) {
  Instances in;
  const std::vector<Named> ms = {{"N", n_triv()}, {"Z sign", z_neg()}, {"N^2 swap", n2_swap()}};
  for (const auto& [label, m] : ms) in.add(label, [&] { return check_dih15(m, 2, c.iso_window - 1); });
  return in.finish();
}

CheckReport run_drep6(const SuiteConfig& c) {
  Instances in;
  for (const auto& [label, theta] : listed_homs())
    in.add(label, [&] { return check_pair_base_change(theta, c.coord_window - 2); });
  auto random = random_unit_extensions(c.seed ^ 0x6a, std::min<std::size_t>(c.random_instances, 5));
  for (std::size_t i = 0; i < random.size(); ++i)
    in.add("random " + std::to_string(i), [&] { return check_pair_base_change(random[i], c.coord_window - 2); });
  return in.finish();
}

CheckReport run_unit_checks(const SuiteConfig& c, bool strict3) {
  Instances in;
  const std::int64_t window = strict3 ? std::max<std::int64_t>(1, c.coord_window - 2) : c.coord_window;
  auto run = [&](const MonoidHom& theta) {
    return strict3 ? check_strict3_squares(theta, window) : check_unit_base_change(theta, window);
  };
  for (const auto& [label, theta] : listed_homs()) in.add(label, [&] { return run(theta); });
  auto random = random_unit_extensions(c.seed, c.random_instances);
  for (std::size_t i = 0; i < random.size(); ++i)
    in.add("random " + std::to_string(i) + ": " + random[i].target.describe(), [&] { return run(random[i]); });
  CheckReport r = in.finish();
  r.details["seed"] = c.seed;
  return r;
}

CheckReport run_dih14(const SuiteConfig& c) {
  Instances in;
  std::mt19937_64 rng(c.seed ^ 0x14);
  std::uniform_int_distribution<int> coeff(0, 3);
  auto sample = [&](const AffineMonoid& m) {
    Vec x(m.ambient_rank(), 0);
    for (const Vec& g : m.generators()) x = add(x, scale(coeff(rng), g));
    return x;
  };
  for (const auto& [label, m] : iso_monoids())
    in.add(label, [&] {
      const ExactifiedMonoid ex = exactify(m);
      const Mat& w = *ex.carrier.involution();
      if (compose(w, w) != identity_mat(w.size()))
        return CheckReport::fail("dih.14", {{"reason", "carrier involution is not of order 2"}});
      for (int k = 0; k < 100; ++k) {
        const Vec v = sample(ex.carrier);
        if (ex.carrier.involute(ex.carrier.involute(v)) != v)
          return CheckReport::fail("dih.14", {{"sample", k}, {"element", v}, {"reason", "w^2 != id"}});
        const Vec u = sample(ex.doubled);
        if (ex.theta_ex(ex.eta(u)) != ex.theta(u))
          return CheckReport::fail("dih.14", {{"sample", k}, {"element", u}, {"reason", "theta_ex eta != theta"}});
        if (ex.eta(ex.doubled.involute(u)) != ex.carrier.involute(ex.eta(u)))
          return CheckReport::fail("dih.14", {{"sample", k}, {"element", u}, {"reason", "eta not equivariant"}});
      }
      CheckReport r = CheckReport::pass("dih.14");
      r.details["samples"] = 100;
      return r;
    });
  return in.finish();
}

CheckReport run_thrlog10(const SuiteConfig& c) {
  Instances in;
  const std::size_t cap = c.max_degree;
  for (std::int64_t d = 0; d <= c.weight_window + 1; ++d)
    in.add("weight " + std::to_string(d), [&, d] {
      const TruncatedDihedralSet x = dihedral_nerve(n_triv(), 2 * cap + 1, Vec{d});
      const HomologyTable under = homology(normalized_chains(x.truncated(cap)).complex);
      const HomologyTable fixed = homology(normalized_chains(fixed_points(segal_subdivide(x, cap))).complex);
      CheckReport r = CheckReport::pass("thrlog.10");
      r.details["underlying"] = under.to_json();
      r.details["fixed"] = fixed.to_json();
      for (int k = 0; k < static_cast<int>(cap); ++k) {
        const HomologyGroup want_under{k == 0 || (k == 1 && d > 0) ? 1u : 0u, {}};
        const HomologyGroup want_fixed{k == 0 ? (d > 0 ? 2u : 1u) : 0u, {}};
        if (!(under.at(k) == want_under) || !(fixed.at(k) == want_fixed))
          return CheckReport::fail("thrlog.10", {{"weight", d},
                                                 {"degree", k},
                                                 {"underlying", under.at(k).to_string()},
                                                 {"fixed", fixed.at(k).to_string()}});
      }
      return r;
    });
  return in.finish();
}

CheckReport run_mot1(const SuiteConfig& c, std::size_t n) {
  Instances in;
  const std::int64_t window = n == 1 ? 2 : 1;
  const std::size_t cap = n == 1 ? c.max_degree : c.max_degree - 1;
  in.add("window " + std::to_string(window) + ", degree cap " + std::to_string(cap),
         [&] { return pn_invariance_check(n, window, cap); });
  if (n == 1)
    in.add_control("x = 0 with collapsed direction 0",
                   [&] { return phi_cube_check(1, {0}, cap, PhiVariant::kDirectionZeroCollapsed); });
  return in.finish();
}

CheckReport run_descent3(const SuiteConfig&) {
  Instances in;
  const AffineMonoid p0(2, {{-1, 0}, {0, -1}, {1, -1}, {-1, 1}});
  const AffineMonoid n = AffineMonoid::naturals(1);
  in.add("id N^2", [] { return check_chart_surjectivity(MonoidHom::identity(AffineMonoid::naturals(2))); });
  in.add("id P_0", [&] { return check_chart_surjectivity(MonoidHom::identity(p0)); });
  in.add("N -> N (+) Z", [&] {
    return check_chart_surjectivity(MonoidHom(n, AffineMonoid(2, {{1, 0}, {0, 1}, {0, -1}}), Mat{{1}, {0}}));
  });
  in.add_control("2: N -> N", [&] { return check_chart_surjectivity(MonoidHom(n, n, Mat{{2}})); });
  return in.finish();
}

std::vector<CheckDescriptor> build_registry() {
  return {
      {"relations", R"(is a real simplicial set equipped with automorphisms)",
       "crossed-simplicial relations of the nerves, tensor, real nerve and resolution", CheckStatus::kPass,
       run_relations},
      {"drep.1",
       R"(given by $(x_0,\ldots,x_q)\mapsto x_0+\cdots+x_q$ in simplicial degree $q$ is a ${\mathbb{Z}/2}$-weak equivalence.)",
       "sum collapse P (x) Delta^1_sigma -> P is a Z/2-equivalence per weight", CheckStatus::kPass, run_drep1},
      {"drep.2.2", R"((P\otimes \Delta_\sigma^1)\oplus_{i_\sharp i^*P} P)",
       "the pushout of the tensor with P is the dihedral nerve", CheckStatus::kPass, run_drep22},
      {"drep.4", R"(\Ndrep P \times \Ndrep Q.)", "replete nerve of a product", CheckStatus::kPass,
       [](const SuiteConfig& c) { return run_pairs(c, check_drep4); }},
      {"dih.25", R"(P\times \Nsigma P^\gp.)", "replete nerve splits off the real nerve of the group completion",
       CheckStatus::kPass, run_dih25},
      {"dih.15", R"(The ${\mathbb{Z}/2}$-fixed point of the Segal subdivision)",
       "resolution Q = P x E P^gp and its subdivided fixed points", CheckStatus::kPass, run_dih15},
      {"drep.6", R"(where the involution on the right-hand side switches the components.)",
       "base change of the monoid set P |_| P", CheckStatus::kPass, run_drep6},
      {"thrlog.8", R"(\Ndi (P\oplus Q))", "dihedral nerve of a direct sum", CheckStatus::kPass,
       [](const SuiteConfig& c) { return run_pairs(c, check_thrlog8); }},
      {"thrlog.10", R"(\bigoplus_{d=0}^\infty \Sphere[S^\sigma].)",
       "weight pieces of N^di N are circles with two fixed points", CheckStatus::kPass, run_thrlog10},
      {"strict.2",
       R"(If $\ol{\theta}\colon \ol{P}\to \ol{Q}$ is an isomorphism, then the induced homomorphism of monoids)",
       "unit base change", CheckStatus::kPass, [](const SuiteConfig& c) { return run_unit_checks(c, false); }},
      {"strict.3", R"(are cocartesian.)", "pushout squares of exactified fixed-point monoids", CheckStatus::kPass,
       [](const SuiteConfig& c) { return run_unit_checks(c, true); }},
      {"dih.14", R"(w(x,y):=(w(x),w(x)-w(y)).)", "exactification involution and triangle", CheckStatus::kPass,
       run_dih14},
      {"mot.1-n1", R"(it suffices to show $\tcofib(\Phi(-;x))\simeq 0$ for every $x\in \Z^n$.)",
       "total cofibers of the Phi-cubes vanish, n = 1", CheckStatus::kPass,
       [](const SuiteConfig& c) { return run_mot1(c, 1); }},
      {"mot.1-n2", R"(it suffices to show $\tcofib(\Phi(-;x))\simeq 0$ for every $x\in \Z^n$.)",
       "total cofibers of the Phi-cubes vanish, n = 2", CheckStatus::kPass,
       [](const SuiteConfig& c) { return run_mot1(c, 2); }},
      {"descent.3", R"(is surjective for every open subscheme $U$ of $X$.)",
       "global charts surject onto every face localization", CheckStatus::kPass, run_descent3},
  };
}

}  // namespace

const std::vector<CheckDescriptor>& registry() {
  static const std::vector<CheckDescriptor> r = build_registry();
  return r;
}

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.push_back(d.id);
  return out;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const SuiteConfig& config) {
  config.validate();
  std::vector<bool> wanted(registry().size(), false);
  for (const std::string& id : ids) {
    if (id == "all") {
      std::fill(wanted.begin(), wanted.end(), true);
      continue;
    }
    auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& d) { return d.id == id; });
    if (it == registry().end()) throw std::out_of_range("unknown check id: " + id);
    wanted[static_cast<std::size_t>(it - registry().begin())] = true;
  }
  std::vector<const CheckDescriptor*> jobs;
  for (std::size_t i = 0; i < wanted.size(); ++i)
    if (wanted[i]) jobs.push_back(&registry()[i]);

  std::vector<CheckReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const CheckDescriptor& d = *jobs[k];
      CheckReport r = guarded(d.id, [&] { return d.run(config); });
      r.check = d.id;
      r.details.erase("instance");
      nlohmann::ordered_json details = {{"anchor", d.anchor}, {"statement", d.statement}};
      for (auto& [key, value] : r.details.items()) details[key] = value;
      r.details = std::move(details);
      out[k] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(config.threads, std::max<std::size_t>(1, jobs.size())); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

nlohmann::ordered_json suite_report(const std::vector<CheckReport>& reports, const SuiteConfig& config) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  std::map<std::string, std::size_t> counts;
  for (const CheckReport& r : reports) {
    checks.push_back(r.to_json());
    ++counts[checks.back()["status"].get<std::string>()];
  }
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const char* s : {"pass", "fail", "inconclusive", "precondition-failed"}) summary[s] = counts[s];
  return {{"config", config.to_json()}, {"checks", checks}, {"summary", summary}};
}

std::string summary_table(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const CheckReport& r : reports) width = std::max(width, r.check.size());
  auto pad = [](std::string s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  out << pad("check", width) << "  " << pad("status", 20) << "  instances\n";
  for (const CheckReport& r : reports) {
    const std::string status = r.to_json()["status"];
    std::string instances = r.details.contains("instances") ? r.details["instances"].dump() : "-";
    if (r.details.contains("excluded")) instances += " (" + std::to_string(r.details["excluded"].size()) + " excluded)";
    out << pad(r.check, width) << "  " << pad(status, 20) << "  " << instances << "\n";
  }
  return out.str();
}

std::vector<MonoidHom> random_unit_extensions(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return static_cast<int>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<MonoidHom> out;
  while (out.size() < count) {
    const std::size_t r = static_cast<std::size_t>(pick(1, 3));
    const std::size_t k = static_cast<std::size_t>(pick(0, static_cast<int>(3 - r)));
    Mat perm = identity_mat(r);
    if (r >= 2 && pick(0, 1) == 1) {
      const std::size_t a = static_cast<std::size_t>(pick(0, static_cast<int>(r) - 2));
      std::swap(perm[a], perm[a + 1]);
    }
    Mat gens;
    const int extra = pick(0, 2);
    for (std::size_t i = 0; i < r + static_cast<std::size_t>(extra); ++i) {
      Vec g(r);
      for (auto& v : g) v = pick(0, 2);
      if (i < r) g[i] = std::max<std::int64_t>(g[i], 1);
      gens.push_back(g);
      gens.push_back(mat_vec(perm, g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const AffineMonoid p(r, gens, perm);
    Mat unit_inv = identity_mat(k);
    for (std::size_t i = 0; i < k; ++i) unit_inv[i][i] = pick(0, 1) == 0 ? 1 : -1;
    const AffineMonoid lattice = AffineMonoid::integers(k).with_involution(unit_inv);
    const AffineMonoid q = direct_sum(p, lattice);
    Mat theta(r + k, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) theta[i][i] = 1;
    out.emplace_back(p, q, theta);
  }
  return out;
}

}  // namespace rthh

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "rthh/verify_suite.hpp"

using namespace rthh;

namespace {

SuiteConfig small_config() {
  SuiteConfig c;
  c.max_degree = 3;
  c.weight_window = 2;
  c.coord_window = 4;
  c.iso_window = 3;
  c.random_instances = 4;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Registry, IdsAreUniqueAndOrdered) {
  const auto ids = check_ids();
  ASSERT_EQ(ids.size(), registry().size());
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  EXPECT_EQ(ids.front(), "relations");
  for (const char* id : {"drep.1", "drep.2.2", "drep.4", "dih.25", "thrlog.10", "strict.2", "strict.3",
                         "dih.14", "mot.1-n1", "mot.1-n2"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
}

TEST(Registry, AnchorsOccurVerbatim) {
  const std::string text = read_file(RTHH_SOURCE_DIR "/paper.md");
  ASSERT_FALSE(text.empty());
  for (const auto& d : registry()) {
    EXPECT_FALSE(d.anchor.empty()) << d.id;
    EXPECT_NE(text.find(d.anchor), std::string::npos) << d.id;
  }
}

TEST(Registry, UnknownIdThrows) {
  EXPECT_THROW(run_checks({"no.such.check"}, small_config()), std::out_of_range);
}

TEST(SuiteConfig, RejectsZeroCaps) {
  SuiteConfig c;
  c.max_degree = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = SuiteConfig{};
  c.threads = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_NO_THROW(SuiteConfig{}.validate());
}

TEST(RandomInstances, DeterministicInSeed) {
  auto a = random_unit_extensions(5, 6);
  auto b = random_unit_extensions(5, 6);
  auto c = random_unit_extensions(6, 6);
  ASSERT_EQ(a.size(), 6u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].matrix, b[i].matrix);
    EXPECT_EQ(a[i].source.generators(), b[i].source.generators());
    EXPECT_LE(a[i].source.ambient_rank(), 3u);
    if (a[i].source.generators() != c[i].source.generators()) differs = true;
  }
  EXPECT_TRUE(differs);
}

TEST(RunChecks, ReportsComeBackInRegistryOrder) {
  auto reports = run_checks({"dih.14", "drep.1"}, small_config());
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].check, "drep.1");
  EXPECT_EQ(reports[1].check, "dih.14");
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
    auto it = r.details.begin();
    EXPECT_EQ(it.key(), "anchor");
    EXPECT_EQ((++it).key(), "statement");
  }
}

TEST(RunChecks, ExcludedInstancesAreLogged) {
  auto reports = run_checks({"strict.2"}, small_config());
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].passed());
  ASSERT_TRUE(reports[0].details.contains("excluded"));
  EXPECT_EQ(reports[0].details["excluded"][0]["instance"], "2: N -> N");
}

TEST(RunChecks, JsonIndependentOfRunAndThreads) {
  const std::vector<std::string> ids = {"drep.1", "thrlog.10", "strict.3", "dih.14", "mot.1-n1"};
  SuiteConfig c = small_config();
  const std::string first = suite_report(run_checks(ids, c), c).dump(2);
  const std::string second = suite_report(run_checks(ids, c), c).dump(2);
  c.threads = 3;
  auto threaded = run_checks(ids, c);
  c.threads = 1;
  EXPECT_EQ(first, second);
  EXPECT_EQ(first, suite_report(threaded, c).dump(2));
}

TEST(Summary, TableListsEveryCheck) {
  auto reports = run_checks({"thrlog.10", "dih.14"}, small_config());
  const std::string table = summary_table(reports);
  EXPECT_NE(table.find("thrlog.10"), std::string::npos);
  EXPECT_NE(table.find("dih.14"), std::string::npos);
  auto j = suite_report(reports, small_config());
  EXPECT_EQ(j["summary"]["pass"], 2);
}

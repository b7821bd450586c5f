#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "rank3/reproduction.hpp"

using namespace rank3;

TEST(Reproduction, CaseTable) {
  std::set<std::string> labels;
  for (auto& c : expected_cases()) {
    EXPECT_FALSE(c.citation.empty()) << c.label;
    EXPECT_TRUE(labels.insert(c.label).second) << c.label;
    EXPECT_FALSE(c.expected.is_null()) << c.label;
  }
  EXPECT_TRUE(labels.count("sp6-sym-heavy"));
}

TEST(Reproduction, IngestSkippedWithoutFiles) {
  auto rep = run_reproduction_suite(Tier::Ingest, {testing::TempDir() + "no-such-dir", true, {}});
  EXPECT_EQ(rep.skipped, 2u);
  EXPECT_EQ(rep.passed + rep.failed, 0u);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(to_json(rep)["cases"][0]["status"], "SKIPPED");
}

TEST(Reproduction, IngestReadsFiles) {
  namespace fs = std::filesystem;
  fs::path dir = fs::path(testing::TempDir()) / "ingest";
  fs::create_directories(dir);
  auto c = wedge_square_rep();
  MatrixGroup G = c.group;
  G.form = c.space.gram();
  std::ofstream(dir / "l2_13.gen") << write_generator_file(G, {c.base_points[0]});
  auto rep = run_reproduction_suite(Tier::Ingest, {dir.string(), true, {}});
  EXPECT_EQ(rep.skipped, 1u);
  EXPECT_EQ(rep.failed, 1u);
  EXPECT_FALSE(rep.ok());
  for (auto& r : rep.cases)
    if (r.label == "l2-13-ingest") {
      EXPECT_EQ(r.computed, json::array({json::array({13040, 9072})}));
    }
  fs::remove_all(dir);
}

TEST(Reproduction, CoreDeterministic) {
  auto a = to_json(run_reproduction_suite(Tier::Core, {"", true, {}})).dump();
  auto b = to_json(run_reproduction_suite(Tier::Core, {"", true, {}})).dump();
  EXPECT_EQ(a, b);
  auto j = json::parse(a);
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_EQ(j["summary"]["skipped"], 0);
  for (auto& c : j["cases"]) EXPECT_EQ(c["seconds"], 0.0);
}

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperchrom_cli.hpp"

namespace fs = std::filesystem;
using hyperchrom::cli::fnv1a_hex;
using hyperchrom::cli::run;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperchrom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hyperchrom_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

nlohmann::json strip_time(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j.erase("wall_time_ms");
  return j;
}

}  // namespace

TEST(CliHash, Fnv1aKnownValues) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST_F(CliTest, GenThenExactOnFano) {
  const auto f7 = path("f7.hg");
  auto g = invoke({"gen", "--family", "plane", "--q", "2", "--out", f7});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(g.out, "gen: generated\n");
  ASSERT_TRUE(fs::exists(f7));

  auto e = invoke({"exact", "--in", f7});
  EXPECT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("exact: solved"), std::string::npos) << e.out;
  EXPECT_NE(e.out.find("chromatic_index=7"), std::string::npos) << e.out;

  auto no = invoke({"exact", "--in", f7, "--lists", "uniform:6"});
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("not-colourable"), std::string::npos) << no.out;

  auto yes = invoke({"exact", "--in", f7, "--lists", "uniform:7", "--json"});
  EXPECT_EQ(yes.code, 0);
  auto j = nlohmann::json::parse(yes.out);
  EXPECT_EQ(j["outcome"], "colourable");
  EXPECT_EQ(j["colouring"].size(), 7u);
}

TEST_F(CliTest, GenWithoutOutPrintsText) {
  auto g = invoke({"gen", "--family", "near-pencil", "--n", "4"});
  ASSERT_EQ(g.code, 0) << g.err;
  std::istringstream in(g.out);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "gen: generated");
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto h = hyperchrom::parse_hg(rest);
  EXPECT_EQ(h, hyperchrom::near_pencil(4));
}

TEST_F(CliTest, ClassifyNearPencil) {
  const auto np = path("np5.hg");
  ASSERT_EQ(invoke({"gen", "--family", "near-pencil", "--n", "5", "--out", np}).code, 0);
  auto c = invoke({"classify", "--in", np, "--t", "1"});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("TFoldNearPencil"), std::string::npos) << c.out;
}

TEST_F(CliTest, ColorDoubledFano) {
  const auto f = path("f7x2.hg");
  ASSERT_EQ(invoke({"gen", "--family", "plane", "--q", "2", "--fold", "2", "--out", f}).code, 0);
  auto c = invoke({"color", "--in", f, "--t", "2", "--lists", "uniform:14", "--json"});
  EXPECT_EQ(c.code, 0) << c.err;
  auto j = nlohmann::json::parse(c.out);
  EXPECT_EQ(j["colours_used"], 14);
}

TEST_F(CliTest, VerifyAndSweep) {
  const auto f = path("f7.hg");
  ASSERT_EQ(invoke({"gen", "--family", "plane", "--q", "2", "--fold", "2", "--out", f}).code, 0);
  auto ok = invoke({"verify", "--in", f, "--t", "2"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("verify: holds"), std::string::npos) << ok.out;
  auto bad = invoke({"verify", "--in", f, "--t", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("premise-failed"), std::string::npos) << bad.out;

  auto s = invoke({"sweep", "--task", "greedy", "--count", "5", "--n", "12", "--t", "2", "--max-size", "4",
                   "--density", "15", "--threads", "1"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("sweep: pass"), std::string::npos) << s.out;
}

TEST_F(CliTest, DeterministicReports) {
  auto args = std::vector<std::string>{"sweep", "--task", "verify", "--count", "4", "--n",    "15",
                                       "--t",   "2",      "--seed", "9", "--max-size", "5", "--density", "20",
                                       "--json"};
  auto a = invoke(args);
  auto b = invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(strip_time(a.out), strip_time(b.out));

  auto g1 = invoke({"gen", "--family", "random", "--n", "10", "--t", "1", "--max-size", "3", "--density", "12",
                    "--seed", "4", "--json"});
  auto g2 = invoke({"gen", "--family", "random", "--n", "10", "--t", "1", "--max-size", "3", "--density", "12",
                    "--seed", "4", "--json"});
  EXPECT_EQ(strip_time(g1.out), strip_time(g2.out));
  EXPECT_EQ(strip_time(g1.out)["input_digest"], fnv1a_hex(strip_time(g1.out)["hg"].get<std::string>()));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"exact", "--in", path("missing.hg")}).code, 2);
  EXPECT_EQ(invoke({"gen", "--family", "plane", "--q", "6"}).code, 2);
  EXPECT_EQ(invoke({"sweep", "--task", "dance"}).code, 2);

  const auto broken = path("broken.hg");
  std::ofstream(broken) << "3 1\n0 7\n";
  auto r = invoke({"exact", "--in", broken});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("input error"), std::string::npos) << r.err;
}

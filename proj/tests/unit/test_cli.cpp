#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "fixtures.hpp"

namespace cyclat {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cyclat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static std::string data(const std::string& name) { return testing::data_path(name + ".txt"); }

  fs::path dir_;
};

TEST_F(CliTest, AnalyzeReportsStructure) {
  const CliRun r = run({"analyze", data("triangle_pendant")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_FALSE(j["three_edge_connected"].get<bool>());
  EXPECT_EQ(j["bridges"], Json::array({3}));
  EXPECT_EQ(run({"--output", "text", "analyze", data("k4")}).code, 0);
}

TEST_F(CliTest, BasisRoundTripsThroughVerify) {
  for (const char* method : {"simple", "semi-fundamental", "topological"}) {
    for (const char* name : {"k4", "b3", "prism", "k33"}) {
      const CliRun b = run({"basis", "--method", method, data(name)});
      ASSERT_EQ(b.code, 0) << b.err;
      const std::string doc = write(std::string(name) + "_" + method + ".json", b.out);
      const CliRun v = run({"verify", data(name), doc});
      EXPECT_EQ(v.code, 0) << method << " " << name << "\n" << v.out;
      EXPECT_TRUE(v.json()["accepted"].get<bool>());
    }
  }
}

TEST_F(CliTest, BasisVerifyFlagCertifies) {
  const CliRun r = run({"basis", "--verify", data("petersen")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_TRUE(j["certified"].get<bool>());
  EXPECT_EQ(j["determinant"], "512");
  EXPECT_TRUE(j.contains("verification"));

  const CliRun lifted = run({"basis", "--verify", data("dumbbell")});
  EXPECT_EQ(lifted.code, 0) << lifted.out;
}

TEST_F(CliTest, OutputIsDeterministic) {
  EXPECT_EQ(run({"basis", data("wheel4")}).out, run({"basis", data("wheel4")}).out);
  EXPECT_EQ(run({"gen", "--seed", "5", "--steps", "9"}).out,
            run({"gen", "--seed", "5", "--steps", "9"}).out);
}

TEST_F(CliTest, TreeSeedIsALabel) {
  const CliRun r = run({"basis", "--tree-seed", "h", data("wheel4")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"basis", "--tree-seed", "nope", data("wheel4")}).code, 1);
  EXPECT_EQ(run({"basis", "--method", "topological", "--tree-seed", "h", data("wheel4")}).code, 1);
}

TEST_F(CliTest, VerifyRejectsAnIncompleteBasis) {
  const CliRun b = run({"basis", data("k4")});
  Json doc = b.json();
  Json cycles = Json::array();
  for (std::size_t i = 0; i < 3; ++i) cycles.push_back(doc["cycles"][i]);
  doc["cycles"] = cycles;
  const CliRun v = run({"verify", data("k4"), write("short.json", doc.dump())});
  EXPECT_EQ(v.code, 3);
  bool cardinality_failed = false;
  const Json report = v.json();
  for (const auto& c : report["checks"]) {
    if (c["check"] == "cardinality") cardinality_failed = c["status"] == "failed";
  }
  EXPECT_TRUE(cardinality_failed) << v.out;
}

TEST_F(CliTest, VerifyRejectsANonCycle) {
  Json doc = run({"basis", data("b3")}).json();
  doc["cycles"][0]["edges"] = Json::array({0});
  EXPECT_EQ(run({"verify", data("b3"), write("bad.json", doc.dump())}).code, 3);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"basis", data("two_triangles")}).code, 2);
  EXPECT_EQ(run({"basis", "--method", "simple", data("c3")}).code, 2);
  EXPECT_EQ(run({"extend", data("c3")}).code, 2);
  EXPECT_EQ(run({"basis", write("broken.txt", "3 2\n0 1\n")}).code, 2);
  EXPECT_EQ(run({"basis", (dir_ / "missing.txt").string()}).code, 1);
  EXPECT_EQ(run({"basis", "--method", "greedy", data("k4")}).code, 1);
  EXPECT_EQ(run({"hull", data("k4")}).code, 1);
  EXPECT_EQ(run({"hull", "--char", "4", data("k4")}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"verify", data("k4"), write("junk.json", "{")}).code, 2);
}

TEST_F(CliTest, ExtendReportsTheChain) {
  const CliRun r = run({"extend", "--verify", data("prism")});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["chain"].size(), 4u);
  EXPECT_EQ(j["chain"].back()["basis_size"], 9);
  EXPECT_EQ(j["chain"].back()["determinant"], "32");
  for (const auto& c : j["verification"]) EXPECT_NE(c["status"], "failed") << c.dump();
}

TEST_F(CliTest, HullReportsDimensionAndGroup) {
  Json j = run({"hull", "--char", "3", data("k4")}).json();
  EXPECT_EQ(j["dimension"], 6);
  EXPECT_TRUE(j["verified"].get<bool>());
  j = run({"hull", "--group", "4", data("b3")}).json();
  EXPECT_EQ(j["structure"], "C2^1 + C4^2");
  EXPECT_EQ(j["order"], "32");
  j = run({"hull", "--char", "2", data("triangle_pendant")}).json();
  EXPECT_TRUE(j["derived"].get<bool>());
  EXPECT_EQ(j["dimension"], 1);
}

TEST_F(CliTest, GenWritesParseableInstances) {
  const CliRun r = run({"gen", "--count", "3", "--steps", "6", "--seed", "2", "--out-dir", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  for (int i = 0; i < 3; ++i) {
    const Multigraph g = read_edge_list_file((dir_ / ("instance_" + std::to_string(i) + ".txt")).string());
    EXPECT_TRUE(is_three_edge_connected(g));
    EXPECT_EQ(g.num_edges() - g.num_vertices() + 1, 6u);
  }
  const CliRun sized = run({"gen", "--vertices", "6", "--edges", "11", "--seed", "3"});
  ASSERT_EQ(sized.code, 0) << sized.err;
  EXPECT_EQ(parse_edge_list(sized.out).num_edges(), 11u);
  const CliRun seq = run({"gen", "--steps", "4", "--sequence"});
  ASSERT_EQ(seq.code, 0);
  EXPECT_TRUE(is_three_edge_connected(extension_sequence_from_json(seq.json()).result()));
}

}  // namespace
}  // namespace cyclat

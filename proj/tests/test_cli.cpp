#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "vecgo/cli.hpp"

using vecgo::io::json;

namespace {

const std::string kExamples = VECGO_EXAMPLES_DIR;
const std::string kData = VECGO_TEST_DATA_DIR;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = vecgo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in.good()) << path;
  return json::parse(in);
}

}  // namespace

TEST(Cli, GoldenOutputs) {
  json cases = read_json(kExamples + "/cases.json");
  ASSERT_GE(cases.size(), 20u);
  for (const auto& c : cases) {
    std::vector<std::string> args{"--config", kExamples + "/" + c["config"].get<std::string>(), "--format", "json"};
    for (const auto& a : c["args"]) args.push_back(a.get<std::string>());
    CliResult r = run(args);
    const std::string name = c["name"];
    ASSERT_EQ(r.code, 0) << name << ": " << r.err;
    EXPECT_EQ(json::parse(r.out), read_json(kExamples + "/golden/" + name + ".json")) << name;
  }
}

TEST(Cli, BiedenharnElliottOnZ3Omega1) {
  CliResult r = run({"-c", kExamples + "/z3.json", "verify", "biedenharn-elliott", "w1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("checked 81 identities, 0 failures"), std::string::npos) << r.out;
}

TEST(Cli, ClassifySimplePointOverZ2) {
  CliResult r = run({"-c", kExamples + "/z2.json", "--format", "json", "classify-simple", "P", "P"});
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  ASSERT_EQ(doc["functors"].size(), 2u);
  EXPECT_EQ(doc["functors"][0]["xi"], "1");
  EXPECT_EQ(doc["functors"][1]["xi"], "-1");
}

TEST(Cli, TrivialGroupFusionTable) {
  CliResult r = run({"-c", kData + "/trivial.json", "--format", "json", "sixj-table", "fusion"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 1u);
  EXPECT_EQ(doc["rows"][0]["value"], "1");
}

TEST(Cli, ExitCodes) {
  CliResult bad = run({"-c", kData + "/bad_cocycle.json", "validate"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("ValidationError"), std::string::npos);
  EXPECT_NE(bad.err.find("(1,1,1,1)"), std::string::npos) << bad.err;

  CliResult undefined = run({"-c", kData + "/undefined_gset.json", "validate"});
  EXPECT_EQ(undefined.code, 2);
  EXPECT_NE(undefined.err.find("ParseError"), std::string::npos);
  EXPECT_NE(undefined.err.find("nowhere"), std::string::npos);

  EXPECT_EQ(run({"-c", kData + "/malformed.json", "validate"}).code, 2);
  EXPECT_EQ(run({"-c", kData + "/missing.json", "validate"}).code, 2);
  EXPECT_EQ(run({"validate"}).code, 2);
  EXPECT_EQ(run({"-c", kExamples + "/z2.json", "frobnicate"}).code, 2);
  EXPECT_EQ(run({"-c", kExamples + "/z2.json", "equiv", "R"}).code, 2);
  EXPECT_EQ(run({"-c", kExamples + "/z2.json", "trace", "nope"}).code, 2);
  EXPECT_EQ(run({"-c", kExamples + "/z2.json", "sixj-table", "q", "w1"}).code, 2);
  EXPECT_EQ(run({"-c", kExamples + "/z2.json", "--format", "xml", "validate"}).code, 2);
  EXPECT_EQ(run({"-c", kExamples + "/z2.json", "verify", "orthogonality", "Ps"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TableAndJsonAgreeOnCounts) {
  CliResult t = run({"-c", kExamples + "/z2.json", "verify", "orthogonality"});
  CliResult j = run({"-c", kExamples + "/z2.json", "--format", "json", "verify", "orthogonality"});
  ASSERT_EQ(t.code, 0);
  json doc = json::parse(j.out);
  std::string total = "total: checked " + std::to_string(doc["checked"].get<int>()) + " identities, 0 failures";
  EXPECT_NE(t.out.find(total), std::string::npos) << t.out;
  ASSERT_EQ(doc["skipped"].size(), 1u);
  EXPECT_EQ(doc["skipped"][0]["context"], "Ps");
}

TEST(Cli, BinaryExitStatus) {
  std::string cmd = std::string("\"") + VECGO_BINARY + "\" -c \"" + kExamples + "/z3.json\" verify biedenharn-elliott 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string out;
  char buf[512];
  while (std::fgets(buf, sizeof buf, p)) out += buf;
  int status = pclose(p);
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_NE(out.find(", 0 failures"), std::string::npos) << out;

  cmd = std::string("\"") + VECGO_BINARY + "\" -c \"" + kData + "/undefined_gset.json\" validate 2>/dev/null";
  p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  while (std::fgets(buf, sizeof buf, p)) {
  }
  status = pclose(p);
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

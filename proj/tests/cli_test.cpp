#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dfkit/cli.hpp"
#include "dfkit/constructions.hpp"
#include "oracle.hpp"

using namespace dfkit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run dfkit_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dfkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  fs::path dir_;
};

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_F(CliTest, ConstructVerifyRoundTripsAndIsByteStable) {
  const std::vector<std::vector<std::string>> matrix = {
      {"orbit", "--v", "13", "--u", "3"},
      {"orbit", "--factors", "7,13", "--k", "3"},
      {"furino", "--v", "91", "--k", "3"},
      {"furino", "--factors", "7,13", "--k", "3", "--half"},
      {"cyclotomic-half", "--factors", "7,13", "--k", "3"},
      {"cyclotomic-half", "--factors", "7,13,19", "--k", "3", "--sigma-choice", "7:3"},
      {"units-hdm", "--factors", "5", "--k", "4"},
      {"result1", "--factors", "13", "--k", "4"},
      {"trivial-ds", "--k", "6"},
      {"singer", "--q", "4", "--m", "4"},
      {"singer", "--q", "3", "--m", "3"},
      {"result3star", "--q", "4", "--d", "4", "--e", "3", "--h", "2"},
      {"result3star", "--q", "3", "--d", "3", "--e", "2", "--h", "2"},
  };
  int i = 0;
  for (auto args : matrix) {
    const auto a = path("a" + std::to_string(i) + ".json");
    const auto b = path("b" + std::to_string(i) + ".json");
    ++i;
    auto cmd = args;
    cmd.insert(cmd.begin(), "construct");
    auto ca = cmd, cb = cmd;
    ca.insert(ca.end(), {"--out", a});
    cb.insert(cb.end(), {"--out", b});
    const auto r1 = dfkit_run(ca);
    ASSERT_EQ(r1.code, 0) << args[0] << ": " << r1.err;
    ASSERT_EQ(dfkit_run(cb).code, 0);
    EXPECT_EQ(slurp(a), slurp(b)) << args[0];
    const auto v = dfkit_run({"verify", a});
    EXPECT_EQ(v.code, 0) << args[0] << "\n" << v.out;
    EXPECT_TRUE(contains(v.out, "verdict: PASS"));
    // Parse and re-serialize gives the same bytes.
    EXPECT_EQ(serialize(read_design_file(a)), slurp(a));
  }
}

TEST_F(CliTest, OrbitSplitAndProductFromFiles) {
  const auto a = path("a.json"), b = path("b.json");
  ASSERT_EQ(dfkit_run({"construct", "orbit-split", "--v", "13", "--u", "3", "--out", a, "--out2", b}).code, 0);
  EXPECT_EQ(dfkit_run({"verify", a}).code, 0);
  EXPECT_EQ(dfkit_run({"verify", b}).code, 0);

  const auto g = path("g.json"), h = path("h.json"), m = path("m.json"), p = path("p.json");
  ASSERT_EQ(dfkit_run({"construct", "trivial-ds", "--k", "3", "--out", g}).code, 0);
  ASSERT_EQ(dfkit_run({"construct", "furino", "--factors", "7", "--k", "3", "--out", h}).code, 0);
  ASSERT_EQ(dfkit_run({"construct", "units-hdm", "--factors", "7", "--k", "3", "--out", m}).code, 0);
  const auto r = dfkit_run({"construct", "product", "--g-file", g, "--h-file", h, "--hdm-file", m, "--out", p});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto v = dfkit_run({"verify", p});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_TRUE(contains(v.out, "Z_4 x GF(7)"));

  const auto s = path("s.json"), d = path("d.json");
  ASSERT_EQ(dfkit_run({"construct", "singer", "--q", "2", "--m", "3", "--out", s}).code, 0);
  ASSERT_EQ(dfkit_run({"construct", "dds-product", "--in", s, "--h", "2", "--out", d}).code, 0);
  EXPECT_EQ(dfkit_run({"verify", d}).code, 0);
}

TEST_F(CliTest, ConstructionErrorsExitOne) {
  const auto r = dfkit_run({"construct", "furino", "--v", "10", "--k", "3", "--out", path("x.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "2 ≢ 1 (mod 3)")) << r.err;
  const auto o = dfkit_run({"construct", "orbit", "--v", "8", "--u", "3", "--out", path("y.json")});
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(contains(o.err, "4")) << o.err;
  EXPECT_FALSE(fs::exists(path("x.json")));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(dfkit_run({}).code, 2);
  EXPECT_EQ(dfkit_run({"construct", "singer", "--q", "4"}).code, 2);  // --out missing
  EXPECT_EQ(dfkit_run({"check", "ds", "7", "x", "1"}).code, 2);
  EXPECT_EQ(dfkit_run({"check", "bogus", "1"}).code, 2);
  EXPECT_EQ(dfkit_run({"verify", path("missing.json")}).code, 2);
  std::ofstream(path("bad.json")) << "{\"format\": \"dfkit-design/1\", \"kind\": \"ds\"";
  EXPECT_EQ(dfkit_run({"verify", path("bad.json")}).code, 2);
}

TEST_F(CliTest, CheckCommand) {
  const auto a = dfkit_run({"check", "ds", "170", "42", "10"});
  EXPECT_EQ(a.code, 1);
  EXPECT_TRUE(contains(a.out, "1690 ≠ 1722")) << a.out;
  EXPECT_EQ(dfkit_run({"check", "ds", "7", "3", "1"}).code, 0);
  const auto b = dfkit_run({"check", "result3", "4", "4", "3", "2"});
  EXPECT_EQ(b.code, 1);
  EXPECT_TRUE(contains(b.out, "refuted"));
  const auto c = dfkit_run({"check", "result3", "4", "4", "3", "1"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(contains(c.out, "valid (Singer)"));
  EXPECT_EQ(dfkit_run({"check", "dds", "85", "2", "42", "42", "10"}).code, 0);
  EXPECT_EQ(dfkit_run({"check", "dds", "7", "2", "6", "6", "3"}).code, 1);
  EXPECT_EQ(dfkit_run({"check", "proportional", "85", "21", "5", "2"}).code, 1);
  EXPECT_EQ(dfkit_run({"check", "proportional", "5", "5", "5", "3"}).code, 0);
}

// A u (A + 85) in Z_170, A the Singer 21-set.
TEST_F(CliTest, InvolutionCounterexample) {
  const auto s = singer_ds(4, 4);
  DesignFile f;
  f.group = Group::cyclic(170);
  f.kind = DesignKind::ds;
  f.params = {{"v", 170}, {"k", 42}, {"lambda", 10}};
  Block d = s.set;
  for (auto x : s.set) d.push_back(x + 85);
  f.blocks = {make_block(f.group, d)};
  const auto file = path("d170.json");
  write_design_file(file, f);

  const auto r = dfkit_run({"verify", file});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "deviations: 1\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "count(85) = 42 (expected 10)")) << r.out;
  EXPECT_TRUE(contains(r.out, "all other nonzero elements: 10")) << r.out;

  const auto dds = dfkit_run({"verify", file, "--expect-kind", "dds", "--expect-params", "85,2,42,42,10"});
  EXPECT_EQ(dds.code, 0) << dds.out << dds.err;
  EXPECT_TRUE(contains(dds.out, "subgroup: {0,85}")) << dds.out;
}

// The verify verdict of every single-element mutant agrees with the oracle.
TEST_F(CliTest, MutantsAgreeWithOracle) {
  const auto src = path("s.json");
  ASSERT_EQ(dfkit_run({"construct", "singer", "--q", "3", "--m", "3", "--out", src}).code, 0);
  const auto base = read_design_file(src);
  int killed = 0, total = 0;
  for (std::size_t pos = 0; pos < base.blocks[0].size(); ++pos)
    for (u64 y = 0; y < base.group.order(); ++y) {
      auto m = base;
      auto& b = m.blocks[0];
      if (std::find(b.begin(), b.end(), y) != b.end()) continue;
      b[pos] = y;
      std::sort(b.begin(), b.end());
      const auto p = path("m.json");
      write_design_file(p, m);
      const bool oracle_pass = oracle::is_df(m.group, m.blocks, 1);
      const int code = dfkit_run({"verify", p}).code;
      EXPECT_EQ(code == 0, oracle_pass);
      ++total;
      killed += code != 0;
    }
  EXPECT_EQ(total, 4 * 9);
  EXPECT_GT(killed, 0);
}

TEST_F(CliTest, DesignFileParsing) {
  const std::string text = R"({
  "format": "dfkit-design/1",
  "kind": "ds",
  "group": [{"cyclic": 7}],
  "params": {"v": 7, "k": 3, "lambda": 1},
  "blocks": [[[1], [2], [4]]]
})";
  const auto d = parse_design(text);
  EXPECT_EQ(d.blocks[0], (Block{1, 2, 4}));
  std::ofstream(path("ds.json")) << text;
  EXPECT_EQ(dfkit_run({"verify", path("ds.json")}).code, 0);

  std::string dup = text;
  dup.replace(dup.find("[4]"), 3, "[2]");
  EXPECT_THROW(parse_design(dup), ParseError);
  std::string empty = text;
  empty.replace(empty.find("[[1], [2], [4]]"), 15, "[]");
  EXPECT_THROW(parse_design(empty), ParseError);
  std::string outside = text;
  outside.replace(outside.find("[4]"), 3, "[9]");
  EXPECT_THROW(parse_design(outside), ParseError);
}

TEST_F(CliTest, FieldGroupFileIsSelfContained) {
  const auto f = path("f.json");
  ASSERT_EQ(dfkit_run({"construct", "furino", "--factors", "4,7", "--k", "3", "--out", f}).code, 0);
  const auto text = slurp(f);
  EXPECT_TRUE(contains(text, "\"modulus\":[1,1,1]")) << text.substr(0, 300);
  const auto d = read_design_file(f);
  EXPECT_EQ(d.group.describe(), "GF(2^2) x GF(7)");
}

TEST_F(CliTest, BinaryExitCodes) {
  auto status = [](const std::string& args) {
    const int s = std::system((std::string(DFKIT_BINARY) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("check ds 7 3 1"), 0);
  EXPECT_EQ(status("check ds 170 42 10"), 1);
  EXPECT_EQ(status("check ds 7 3"), 2);
  EXPECT_EQ(status("--help"), 0);
}

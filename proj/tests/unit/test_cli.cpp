#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "scottmax/errors.hpp"

using namespace scottmax;
using namespace scottmax::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("scottmax_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed tool, returning its exit status and stdout.
int run_tool(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(SCOTTMAX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  std::string text;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = ::pclose(pipe);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, OrderReports) {
  auto r = run_order("x(4,11)", "s[1,5,7,11]");
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_TRUE(r.detail["leq"].get<bool>());

  r = run_order("s[1,2]", "s[2,1]");
  EXPECT_FALSE(r.detail["leq"].get<bool>());
  EXPECT_FALSE(r.detail["geq"].get<bool>());
  EXPECT_FALSE(r.detail["upper_bound"].get<bool>());

  r = run_order("x(3,w)", "x(3,w)");
  EXPECT_TRUE(r.detail["leq"].get<bool>());
  EXPECT_EQ(r.summary, "equal");
  EXPECT_THROW(run_order("x(3,", "s[1]"), ParseError);
}

TEST(Cli, LCheck) {
  auto r = run_l_check({"x(3,w)", "s[1|2]", "t[1]"});
  ASSERT_EQ(r.detail["elements"].size(), 3u);
  EXPECT_TRUE(r.detail["elements"][0]["maximal"].get<bool>());
  EXPECT_FALSE(r.detail["elements"][1]["maximal"].get<bool>());
  EXPECT_TRUE(r.detail["elements"][1]["strictly_below_star"].get<bool>());
  EXPECT_TRUE(r.detail["elements"][2]["compact"].get<bool>());
}

TEST(Cli, PosetCommands) {
  TempDir dir;
  const auto chain = dir.write("chain.json", R"({"elements":["a","b","c"],"leq":[["a","b"],["b","c"]]})");
  EXPECT_EQ(run_poset_verify(chain, false).status, Status::pass);
  auto strict = run_poset_verify(chain, true);
  EXPECT_EQ(strict.status, Status::fail);
  EXPECT_GE(strict.detail["violations"].size(), 1u);

  auto gd = run_poset_gdelta(chain, std::nullopt);
  EXPECT_EQ(gd.status, Status::pass);
  EXPECT_EQ(gd.detail["maximals"], nlohmann::ordered_json::array({"c"}));
  EXPECT_EQ(run_poset_gdelta(chain, std::vector<std::string>{"a"}).status, Status::fail);
  EXPECT_EQ(run_poset_gdelta(chain, std::vector<std::string>{"b", "c"}).status, Status::pass);
  EXPECT_THROW(run_poset_gdelta(chain, std::vector<std::string>{"q"}), InputError);
  EXPECT_THROW(run_poset_verify(dir.file("missing.json"), false), InputError);
}

TEST(Cli, SupOnTwoChains) {
  auto plain = run_sup(1, "x", {});
  EXPECT_TRUE(plain.detail["sup"].is_null());
  EXPECT_EQ(plain.detail["witness"], nlohmann::ordered_json::array({"xw", "yw"}));
  auto joined = run_sup(2, "x", {});
  EXPECT_EQ(joined.detail["sup"], "xw");
  EXPECT_THROW(run_sup(3, "x", {}), InputError);
}

TEST(Cli, DiagWritesVerifiableCertificate) {
  TempDir dir;
  DiagOptions opt;
  opt.out = dir.file("cert.json");
  auto r = run_diag(opt);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_NE(r.summary.find("family refuted at depth 64"), std::string::npos);
  const auto cert = nlohmann::json::parse(slurp(*opt.out));
  std::vector<Nat> expected(64);
  for (Nat k = 1; k <= 64; ++k) expected[k - 1] = k;
  EXPECT_EQ(cert["prefix"].get<std::vector<Nat>>(), expected);
  EXPECT_EQ(run_cert_verify(*opt.out, "canonical").status, Status::pass);

  const auto other = dir.write("rank1.json", R"({"opens":[{"families":[{"kind":"x_rank_at_least","k":1}]}]})");
  EXPECT_EQ(run_cert_verify(*opt.out, other).status, Status::fail);
}

TEST(Cli, DiagScreensNonCoveringFamilies) {
  TempDir dir;
  const auto fam = dir.write("seq.json", R"({"opens":[{"families":[{"kind":"single","elem":"s[2]"}]}]})");
  DiagOptions opt;
  opt.family = fam;
  opt.depth = 1;
  opt.budget = 10;
  auto r = run_diag(opt);
  EXPECT_EQ(r.status, Status::indeterminate);
  EXPECT_EQ(r.detail["level"], 1);

  opt.check_cover = false;
  r = run_diag(opt);
  EXPECT_EQ(r.status, Status::indeterminate);
  EXPECT_EQ(r.detail["reason"], "budget");
}

TEST(Cli, SuitesPass) {
  SuiteOptions opt;
  opt.random_cases = 500;
  auto r = run_suites("finite", opt);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_NE(r.summary.find("Max is G-delta in every finite poset"), std::string::npos);
  EXPECT_EQ(run_suites("seq", opt).status, Status::pass);
  EXPECT_THROW(run_suites("bogus", opt), InputError);
}

TEST(CliBinary, ExitCodes) {
  TempDir dir;
  EXPECT_EQ(run_tool("order 'x(4,11)' 's[1,5,7,11]'"), kExitPass);
  EXPECT_EQ(run_tool("order 'x(4,' 's[1]'"), kExitUsage);
  EXPECT_EQ(run_tool("order 'x(4,1)'"), kExitUsage);
  EXPECT_EQ(run_tool("--bogus order 'x(1,1)' 'x(1,1)'"), kExitUsage);
  EXPECT_EQ(run_tool(""), kExitUsage);

  const auto bad = dir.write("bad.json", R"({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})");
  EXPECT_EQ(run_tool("poset-verify " + bad), kExitFail);
  const auto seq = dir.write("seq.json", R"({"opens":[{"families":[{"kind":"single","elem":"s[2]"}]}]})");
  EXPECT_EQ(run_tool("diag " + seq + " --depth 1 --budget 10"), kExitIndeterminate);
  const auto broken = dir.write("broken.json", R"({"opens":[)");
  EXPECT_EQ(run_tool("diag " + broken), kExitUsage);
  EXPECT_EQ(run_tool("sup --order 2 --chain x"), kExitPass);
}

TEST(CliBinary, JsonOutputAndDeterminism) {
  TempDir dir;
  std::string out;
  ASSERT_EQ(run_tool("--json order 's[1,2]' 's[2,1]'", &out), kExitPass);
  const auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j["command"], "order");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_FALSE(j["detail"]["upper_bound"].get<bool>());

  const auto a = dir.file("a.json"), b = dir.file("b.json");
  ASSERT_EQ(run_tool("diag canonical --depth 64 --out " + a), kExitPass);
  ASSERT_EQ(run_tool("diag canonical --depth 64 --out " + b), kExitPass);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(run_tool("cert-verify " + a + " --family canonical"), kExitPass);
}

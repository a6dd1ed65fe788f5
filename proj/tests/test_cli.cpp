#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "pfpoly/cli.hpp"

using pfpoly::cli::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pfpoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = pfpoly::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// the installed binary, through the shell
Run run_binary(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + PFPOLY_BIN + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out, ""};
}

}  // namespace

TEST(Cli, ClassifyExample) {
  auto r = run({"classify", "--u", "0,0,4,4,4,6,8,8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"m\":[2,3,1,2],\"d\":[\"4\",\"6\",\"8\"],\"simple\":false,\"simplicial\":false}\n");
  auto md = run({"classify", "--m", "2,3,1,2", "--d", "4,6,8"});
  EXPECT_EQ(md.out, r.out);
}

TEST(Cli, EhrhartExample) {
  auto r = run({"ehrhart", "--u", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[\"1\",\"7/2\",\"7/2\"]\n");
  auto t = json::parse(run({"ehrhart", "--u", "1,2", "--t", "2"}).out);
  EXPECT_EQ(t["count"], "22");
}

TEST(Cli, HPolyStellahedron) {
  // 1 + sum_k C(3,k) t A_k(t) with A_1 = 1, A_2 = 1 + t, A_3 = 1 + 4t + t^2
  EXPECT_EQ(run({"hpoly", "--u", "1,2,3"}).out, "[\"1\",\"7\",\"7\",\"1\"]\n");
}

TEST(Cli, ExitCodes) {
  auto bad = run({"vertices", "--u", "2,1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.err.rfind("error:", 0), 0u);
  EXPECT_EQ(run({"vertices", "--u", "0,0"}).code, 2);
  EXPECT_EQ(run({"vertices", "--u", "1,x"}).code, 2);
  EXPECT_EQ(run({"vertices"}).code, 2);
  EXPECT_EQ(run({"frobnicate", "--u", "1"}).code, 2);
  EXPECT_EQ(run({"vertices", "--u", "1", "--m", "0,1"}).code, 2);
  EXPECT_EQ(run({"vertices", "--u", "1,2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"locate", "--u", "1,2"}).code, 2);
  EXPECT_EQ(run({"locate", "--u", "1,2", "--c", "1"}).code, 2);
  auto h = run({"hpoly", "--u", "4,4,6"});
  EXPECT_EQ(h.code, 3);
  EXPECT_EQ(h.err.rfind("error:", 0), 0u);
  EXPECT_EQ(run({"ehrhart", "--u", "1/2,1"}).code, 3);
}

TEST(Cli, SizeGuards) {
  const std::string big = "1,1,1,1,1,1,1,1,1,1,1,1,1";
  EXPECT_EQ(run({"vertices", "--u", big}).code, 3);
  EXPECT_EQ(run({"faceposet", "--u", big}).code, 3);
  EXPECT_EQ(run({"check", "--u", "1,1,1,1,1,1,1", "--level", "full"}).code, 3);
  EXPECT_EQ(run({"check", "--u", "1,1,1,1,1,1,1,1"}).code, 3);
  EXPECT_EQ(run({"ehrhart", "--u", "1,2,3,4,5,6,7"}).code, 3);
  // cheap commands are not guarded
  EXPECT_EQ(run({"classify", "--u", big}).code, 0);
  EXPECT_EQ(run({"fvector", "--u", big}).code, 0);
  auto forced = run({"vertices", "--u", "0,0,0,0,0,0,0,0,0,0,0,0,1", "--force"});
  EXPECT_EQ(forced.code, 0);
  EXPECT_EQ(json::parse(forced.out).size(), 14u);
}

TEST(Cli, Outputs) {
  auto v = json::parse(run({"vertices", "--u", "1,2"}).out);
  EXPECT_EQ(v, json::parse(R"([["0","0"],["0","2"],["1","2"],["2","0"],["2","1"]])"));
  EXPECT_EQ(json::parse(run({"fvector", "--m", "0,1,1"}).out), json::parse("[5,5,1]"));
  EXPECT_EQ(json::parse(run({"fvector", "--u", "1,1"}).out), json::parse("[4,4,1]"));
  EXPECT_EQ(json::parse(run({"fvector", "--u", "0,1"}).out), json::parse("[3,3,1]"));
  EXPECT_EQ(json::parse(run({"rays", "--u", "1,2"}).out), json::parse("[[-1,0],[0,-1],[1,0],[0,1],[1,1]]"));
  EXPECT_EQ(json::parse(run({"volume", "--u", "1/2,1"}).out), "7/8");
  auto f = json::parse(run({"facets", "--u", "1,1"}).out);
  ASSERT_EQ(f.size(), 5u);
  EXPECT_EQ(f[4]["coeffs"], json::parse(R"(["1","1"])"));
  EXPECT_EQ(f[4]["rhs"], "2");
  EXPECT_EQ(f[4]["facet"], false);
  EXPECT_EQ(json::parse(run({"facets", "--u", "1,1", "--facets-only"}).out).size(), 4u);
  auto d = json::parse(run({"decompose", "--u", "3,5,7"}).out);
  EXPECT_EQ(d["simplices"][0]["y"], "3");
  EXPECT_EQ(d["simplices"][1]["y"], "2");
  EXPECT_EQ(d["simplices"][2]["y"], "0");
  auto loc = json::parse(run({"locate", "--u", "1,2", "--c", "3,-1"}).out);
  EXPECT_EQ(loc["vertex"], json::parse(R"(["2","0"])"));
  auto fp = json::parse(run({"faceposet", "--u", "1,2"}).out);
  EXPECT_EQ(fp["nodes"].size(), 11u);
  EXPECT_EQ(fp["covers"].size(), 15u);
  EXPECT_EQ(fp["nodes"][10]["dim"], 2);
}

TEST(Cli, Csv) {
  EXPECT_EQ(run({"vertices", "--u", "1", "--format", "csv"}).out, "0\n1\n");
  EXPECT_EQ(run({"ehrhart", "--u", "1,2", "--format", "csv"}).out, "1,7/2,7/2\n");
  auto c = run({"classify", "--u", "1,1", "--format", "csv"}).out;
  EXPECT_EQ(c, "m,0;2\nd,1\nsimple,true\nsimplicial,true\n");
  auto f = run({"facets", "--u", "1", "--format", "csv"}).out;
  EXPECT_EQ(f, "coeffs,rhs,facet\n-1,0,true\n1,1,true\n");
}

TEST(Cli, Check) {
  auto q = run({"check", "--u", "1,2,3"});
  EXPECT_EQ(q.code, 0);
  auto j = json::parse(q.out);
  EXPECT_TRUE(j["ok"]);
  for (const auto& s : j["suites"]) EXPECT_TRUE(s["ok"]) << s["name"];
  auto full = json::parse(run({"check", "--u", "0,1,1", "--level", "full"}).out);
  EXPECT_TRUE(full["ok"]);
  EXPECT_EQ(full["suites"].size(), 8u);  // not simple: no h suite
  EXPECT_EQ(run({"check", "--u", "1,2", "--level", "deep"}).code, 2);
}

TEST(Cli, DeterministicAcrossJobs) {
  for (const char* cmd : {"vertices", "faceposet", "ehrhart"}) {
    auto one = run({cmd, "--u", "0,1,2,2", "--jobs", "1"});
    auto four = run({cmd, "--u", "0,1,2,2", "--jobs", "4"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out) << cmd;
  }
}

TEST(Cli, Binary) {
  auto r = run_binary("ehrhart --u 1,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[\"1\",\"7/2\",\"7/2\"]\n");
  EXPECT_EQ(run_binary("vertices --u 3,2").code, 2);
  EXPECT_EQ(run_binary("hpoly --u 4,4,6").code, 3);
  EXPECT_EQ(run_binary("faceposet --u 0,1,2,2", "PFPOLY_JOBS=3").out, run_binary("faceposet --u 0,1,2,2").out);
  EXPECT_EQ(run_binary("--help").code, 0);
}

// Black-box runs of the secm binary.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Invocation {
  int code;
  std::string out;
};

Invocation run(const std::string& args) {
  const std::string cmd = std::string(SECM_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "secm_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Cli, MomentsSucceed) {
  const Invocation r = run("moments --density uniform --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,c_n");
  EXPECT_EQ(count_lines(r.out), 4);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "--format json secondary --density sqrt32 --grid 5";
  const Invocation a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("--tol -1 moments --density uniform").code, 2);
  EXPECT_EQ(run("--tol abc moments --density uniform").code, 2);
  EXPECT_EQ(run("moments --density legendre").code, 2);
  EXPECT_EQ(run("solve --density uniform --lambda 1 --g \"1+*x\"").code, 2);
  EXPECT_EQ(run("solve --density uniform --lambda -2 --g x").code, 2);
  EXPECT_EQ(run("family density --density sqrt32 --t 2").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, UncheckedFlagBypassesThePolicy) {
  const Invocation r = run("family density --density sqrt32 --t 2 --unchecked --grid 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 4);
}

TEST(Cli, NumericalFailureExitsThree) {
  EXPECT_EQ(run("--quad-levels 1 moments --density uniform").code, 3);
}

TEST(Cli, LargeResidualExitsOne) {
  EXPECT_EQ(run("solve --density uniform --lambda 1 --g \"exp(30*x)\" --grid 3").code, 1);
  EXPECT_EQ(run("solve --density uniform --lambda 1 --g \"1/(x+1)\" --grid 3").code, 0);
}

TEST(Cli, VerifyQuickPasses) {
  const Invocation r = run("verify --suite quick");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find(",fail,"), std::string::npos);
}

TEST(Cli, FamilyScanRows) {
  const Invocation r = run("family scan --density uniform --t-min 0.5 --t-max 1.5 --steps 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 6);
  EXPECT_NE(r.out.find("\n1.5,0.874107"), std::string::npos);
  const Invocation sqrt = run("family scan --density sqrt32 --t-min 1 --t-max 2 --steps 2");
  EXPECT_EQ(sqrt.code, 0);
  EXPECT_NE(sqrt.out.find("\n2,0.749604174"), std::string::npos);
}

TEST(Cli, RootsOfChebyshevAtThree) {
  const Invocation r = run("roots --density cheb-u --t 3 --search 1.001 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1.06066017"), std::string::npos);
}

TEST(Cli, PlotWritesSvg) {
  const auto csv = scratch("two.csv");
  const auto svg = scratch("two.svg");
  std::ofstream(csv) << "t,f\n0,1\n1,2\n";
  std::filesystem::remove(svg);
  const Invocation r = run("plot --input " + csv.string() + " --x-col t --y-col f --output " + svg.string());
  EXPECT_EQ(r.code, 0);
  ASSERT_TRUE(std::filesystem::exists(svg));
  std::stringstream text;
  text << std::ifstream(svg).rdbuf();
  EXPECT_NE(text.str().find("<polyline"), std::string::npos);
  EXPECT_NE(text.str().find("</svg>"), std::string::npos);
}

TEST(Cli, PlotIsByteIdenticalAcrossRuns) {
  const auto csv = scratch("scan.csv");
  std::ofstream(csv) << run("family scan --density uniform --t-min 0.5 --t-max 1.5 --steps 6").out;
  std::string bytes[2];
  for (int k = 0; k < 2; ++k) {
    const auto svg = scratch("scan" + std::to_string(k) + ".svg");
    ASSERT_EQ(run("plot --input " + csv.string() + " --x-col t --y-col f --output " + svg.string()).code, 0);
    std::stringstream text;
    text << std::ifstream(svg).rdbuf();
    bytes[k] = text.str();
  }
  EXPECT_FALSE(bytes[0].empty());
  EXPECT_EQ(bytes[0], bytes[1]);
}

TEST(Cli, PlotRejectsEmptyCsv) {
  const auto csv = scratch("empty.csv");
  const auto svg = scratch("empty.svg");
  std::ofstream(csv).close();
  std::filesystem::remove(svg);
  EXPECT_EQ(run("plot --input " + csv.string() + " --x-col t --y-col f --output " + svg.string()).code, 2);
  EXPECT_FALSE(std::filesystem::exists(svg));
}

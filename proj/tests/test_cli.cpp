#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fracvoigt/csv.hpp"

using fracvoigt::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fracvoigt");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fracvoigt_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, MittagLefflerValue) {
  const Outcome r = invoke({"ml", "--alpha", "1", "--beta", "1", "--z", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2.718281828459045\n");
  EXPECT_EQ(invoke({"ml", "--alpha", "0.5", "--z", "-1"}).out, "0.427583576155807\n");
}

TEST(Cli, CreepCurve) {
  const auto path = temp_path("creep.csv");
  const Outcome r = invoke({"creep", "--alpha", "0.5", "--eta", "1", "--e-mod", "2", "--t-end", "1", "--n",
                            "100", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  const auto table = fracvoigt::io::read_table(in);
  EXPECT_EQ(table.t.size(), 101u);
  EXPECT_EQ(table.t.back(), 1.0);
  EXPECT_NEAR(table.value.back(), 0.4693746511946810251459, 1e-14);
  std::filesystem::remove(path);
}

TEST(Cli, SolveReciprocalLawIsDeterministic) {
  const auto a = temp_path("solve_a.csv");
  const auto b = temp_path("solve_b.csv");
  for (const auto& p : {a, b}) {
    const Outcome r = invoke({"solve", "--alpha", "0.5", "--eta", "1", "--e-mod", "2", "--sigma-expr",
                              "1/(1+eps)", "--n", "256", "-o", p.string()});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_NE(text.find("# converged=true"), std::string::npos);
  EXPECT_NE(text.find("# residual="), std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, StrainWarnsOnNonzeroInitialStress) {
  const Outcome r = invoke({"strain", "--alpha", "0.5", "--stress-builtin", "unit-step", "--n", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# warning: stress at t=0 is 1"), std::string::npos);
  EXPECT_NE(r.err.find("warn"), std::string::npos);
  const Outcome ramp = invoke({"strain", "--alpha", "0.5", "--stress-builtin", "ramp", "--n", "8"});
  EXPECT_EQ(ramp.out.find("warning"), std::string::npos);
}

TEST(Cli, StressCsvRoundTrip) {
  const auto stress = temp_path("stress.csv");
  const Outcome s = invoke({"strain", "--alpha", "1", "--stress-expr", "sin(3*t)", "--n", "50"});
  ASSERT_EQ(s.code, 0);
  const Outcome direct = invoke({"picard", "--alpha", "0.7", "--stress-expr", "sin(3*t)", "--n", "50"});
  {
    const fracvoigt::Grid g(1.0, 50);
    fracvoigt::io::write_signal(stress,
                                fracvoigt::Signal::sample(g, [](double t) { return std::sin(3 * t); }));
  }
  const Outcome via_csv = invoke({"picard", "--alpha", "0.7", "--stress-csv", stress.string()});
  ASSERT_EQ(via_csv.code, 0) << via_csv.err;
  EXPECT_EQ(direct.out, via_csv.out);
  std::filesystem::remove(stress);
}

TEST(Cli, NonConvergenceExitsOneAndStillWrites) {
  const Outcome r = invoke({"picard", "--alpha", "0.5", "--stress-builtin", "ramp", "--n", "16", "--tol",
                            "1e-30", "--max-iter", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("t,value"), std::string::npos);
  EXPECT_NE(r.out.find("# converged=false"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  const Outcome alpha = invoke({"creep", "--alpha", "1.5"});
  EXPECT_EQ(alpha.code, 2);
  EXPECT_NE(alpha.err.find("--alpha"), std::string::npos);
  const Outcome eta = invoke({"creep", "--alpha", "0.5", "--eta", "-1"});
  EXPECT_EQ(eta.code, 2);
  EXPECT_NE(eta.err.find("--eta"), std::string::npos);
  EXPECT_EQ(invoke({"strain", "--alpha", "0.5"}).code, 2);  // no stress source
  EXPECT_EQ(invoke({"strain", "--alpha", "0.5", "--stress-builtin", "ramp", "--stress-expr", "t"}).code, 2);
  EXPECT_EQ(invoke({"strain", "--alpha", "0.5", "--stress-builtin", "square"}).code, 2);
  EXPECT_EQ(invoke({"strain", "--alpha", "0.5", "--stress-expr", "2t"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--alpha", "0.5", "--sigma-expr", "log(eps)"}).code, 2);
  EXPECT_EQ(invoke({"ml", "--alpha", "0.5", "--z", "-500"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--alpha", "0.5", "--sigma-builtin", "reciprocal", "--damping", "0"}).code, 2);
}

TEST(Cli, IoErrors) {
  EXPECT_EQ(invoke({"strain", "--alpha", "0.5", "--stress-csv", "/nonexistent/s.csv"}).code, 3);
  EXPECT_EQ(invoke({"creep", "--alpha", "0.5", "-o", "/nonexistent/dir/out.csv"}).code, 3);
  EXPECT_EQ(invoke({"solve", "--alpha", "0.5", "--sigma-csv", "/nonexistent/law.csv"}).code, 3);
}

TEST(Cli, CheckReport) {
  const Outcome r = invoke({"check", "--sigma-expr", "1/(1+eps)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict=true"), std::string::npos);
  const Outcome lin = invoke({"check", "--sigma-expr", "eps"});
  EXPECT_NE(lin.out.find("is_decreasing=false"), std::string::npos);
  EXPECT_NE(lin.out.find("verdict=false"), std::string::npos);
}

TEST(Cli, HelpMentionsExpressionSyntax) {
  const Outcome r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("right-associative"), std::string::npos);
}

TEST(Cli, ExecutableExitCodes) {
  const std::string exe = FRACVOIGT_CLI_PATH;
  EXPECT_EQ(std::system((exe + " ml --alpha 1 --z 1 > /dev/null").c_str()), 0);
  const int status = std::system((exe + " creep --alpha 2 > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

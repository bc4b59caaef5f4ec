#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "smt_lab_app.hpp"

using namespace smt;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_smt_lab(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }
}  // namespace

TEST(Cli, Enumerate) {
  EXPECT_EQ(lines(run({"enumerate", "--poset", "H", "--n", "2", "--m", "3", "--q", "3"}).out), 24u);
  EXPECT_EQ(lines(run({"enumerate", "--standard", "--bidegree", "1,1"}).out), 9u);
  EXPECT_EQ(lines(run({"enumerate", "--poset", "D"}).out), 26u);
  EXPECT_EQ(lines(run({"enumerate", "--standard", "--mode", "RD", "--degree", "2"}).out), 283u);
  auto csv = run({"enumerate", "--poset", "H", "--format", "csv"});
  EXPECT_EQ(lines(csv.out), 25u);
  EXPECT_EQ(csv.out.substr(0, 11), "index,item\n");
}

TEST(Cli, Straighten) {
  EXPECT_EQ(run({"straighten", "u[1,2]*xi[1,2]"}).out, "1 p[1,2|1,2]\n");
  EXPECT_EQ(run({"straighten", "p[1|2]*p[2|1]"}).out, "1 p[2|2]*p[1|1]\n-1 p[1,2|1,2]\n");
  EXPECT_EQ(run({"straighten", "p[1|1]"}).out, "1 p[1|1]\n");
  EXPECT_EQ(run({"straighten", "p[1|2]*p[2|1]", "--mode", "RD"}).out, "-1 TOP*p[1,2|1,2]\n1 p[2|2]*p[1|1]\n");
  auto j = Json::parse(run({"straighten", "p[1|2]*p[2|1]", "--format", "json"}).out);
  EXPECT_EQ(j["terms"][1]["coeff"], "-1/1");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"straighten", "p[1|2"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "basis", "--cap-monomials", "10"}).code, 4);
  EXPECT_EQ(run({"verify", "--suite", "lattice", "--cap-lattice", "10"}).code, 4);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyIsDeterministic) {
  auto a = run({"verify", "--suite", "termination", "--samples", "30", "--format", "json"});
  auto b = run({"verify", "--suite", "termination", "--samples", "30", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(Json::parse(a.out)["pass"].get<bool>());
}

TEST(Cli, VerifySuites) {
  for (const char* s : {"order", "lattice", "relations", "degeneration", "rank", "fundamental-sl"}) {
    auto r = run({"verify", "--suite", s, "--maxdeg", "2"});
    EXPECT_EQ(r.code, 0) << s << "\n" << r.out << r.err;
  }
  auto rank = run({"verify", "--suite", "rank"});
  EXPECT_NE(rank.out.find("of 9..9 elements"), std::string::npos);
  EXPECT_NE(rank.out.find("of 11..11 elements"), std::string::npos);
}

TEST(Cli, HibiExportImport) {
  auto exported = run({"hibi", "--export"});
  ASSERT_EQ(exported.code, 0);
  const std::string path = testing::TempDir() + "d_2_3_3.json";
  std::ofstream(path) << exported.out;
  auto r = run({"hibi", "--lattice", path, "--maxdeg", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS hilbert k=3: 1900"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS binomial generators: 68"), std::string::npos) << r.out;
  std::ofstream(path) << "{not json";
  EXPECT_EQ(run({"hibi", "--lattice", path}).code, 2);
}

TEST(Cli, RelationsMatchGolden) {
  std::ifstream in(SMT_GOLDEN_DIR "/relations_2_3_3.json");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream golden;
  golden << in.rdbuf();
  auto r = run({"relations", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden.str());
}

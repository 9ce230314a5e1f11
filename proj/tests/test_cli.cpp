#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "braidburau/braidburau.hpp"

using namespace braidburau;

namespace {

struct RunResult {
  int code;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
RunResult run(const std::string& args) {
  std::string cmd = std::string("'") + BRAIDBURAU_CLI + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json run_json(const std::string& args) {
  RunResult r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, BurauFamilyJsonMatchesLibrary) {
  for (const char* form : {"reduced", "unreduced"}) {
    Json j = run_json(std::string("burau --n 3 --form ") + form);
    BurauFamily fam = burau_closed_form(3, std::string(form) == "reduced" ? BurauForm::kReduced : BurauForm::kUnreduced);
    ASSERT_EQ(j.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(labeled_equal(labeled_matrix_from_json(j[i]), fam.generators[i]));
  }
  Json inv = run_json("burau --n 3 --inverses");
  EXPECT_TRUE(labeled_equal(labeled_matrix_from_json(inv[0]), burau_closed_form(3, BurauForm::kReduced).inverses[0]));
}

TEST(Cli, BurauOfBraidBothRoutesAgree) {
  Json a = run_json("burau --n 4 --form unreduced --braid 's1 s2^-1 s3'");
  Json b = run_json("burau --n 4 --form unreduced --route groupoid --braid 's1 s2^-1 s3'");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["label"]["word"].dump(), "[[1,1],[2,-1],[3,1]]");
}

TEST(Cli, BurauLatexGrid) {
  RunResult r = run("burau --n 3 --latex");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("label s1\n[ 1 & f1  & 0 ]\n[ 0 & -f1 & 0 ]\n[ 0 & 1   & 1 ]\n"), std::string::npos) << r.out;
}

TEST(Cli, ArtinAndEmbed) {
  Json a = run_json("artin --n 3 --braid s1");
  EXPECT_EQ(a["images_text"], Json::parse(R"(["f1 f2 f1^-1","f1","f3"])"));
  Json w = run_json("artin --n 3 --braid 's1 s2' --word 'f3'");
  EXPECT_EQ(w["image_text"], "f2");
  Json e = run_json("embed --n 2 --free f1");
  Braid up = braid_from_json(e["image"]);
  EXPECT_TRUE(braid_equal(up, pure_braid_gen(3, 1, 3)));
}

TEST(Cli, ExponentsTable) {
  Json j = run_json("exponents --algebra A1 --weights w1,w1 --kappa 1/4 --kvec 1");
  EXPECT_EQ(j["exponents"][0][1], "1/8");
  EXPECT_EQ(j["exponents"][0][2], "-1/4");
  EXPECT_EQ(j["exponents"][1][2], "-1/4");
  EXPECT_EQ(j["m"], 1);
}

TEST(Cli, HomologyAndMonodromy) {
  for (int n = 1; n <= 4; ++n) {
    Json h = run_json("homology --n " + std::to_string(n));
    EXPECT_EQ(h["dim_h0"], 0);
    EXPECT_EQ(h["dim_h1"], n - 1);
  }
  Json d = run_json("homology --n 2 --t 0");
  EXPECT_EQ(d["degenerate"], true);
  Json m = run_json("monodromy --n 2 --braid s1");
  EXPECT_EQ(m["matrix"]["entries"][0][0]["num"].dump(), R"([[-1,"1/1"]])");
  RunResult latex = run("monodromy --n 3 --braid s1 --latex");
  EXPECT_NE(latex.out.find("char poly (lowest degree first): [-q] [q - 1] [1]"), std::string::npos) << latex.out;
}

TEST(Cli, SpecializeClassical) {
  Json j = run_json("specialize --n 2 --form unreduced --classical");
  EXPECT_EQ(j["variable"], "t");
  LaurentMatrix m = laurent_matrix_from_json(j["generators"][0]);
  RationalLaurent t = RationalLaurent::monomial(1);
  EXPECT_EQ(m, LaurentMatrix::from_rows({{RationalLaurent(1) - t, t}, {RationalLaurent(1), RationalLaurent(0)}}));
  EXPECT_EQ(run("specialize --n 2 --classical --t 3").code, 2);
}

TEST(Cli, YbeExitCodes) {
  RunResult ok = run("ybe --fixture uq-sl2");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "YBE: satisfied\n");
  RunResult bad = run("ybe --fixture ybe-broken");
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "YBE: violated\n");
  EXPECT_EQ(run("ybe --fixture no-such").code, 1);
  EXPECT_EQ(run("ybe").code, 2);
  EXPECT_EQ(run(std::string("ybe --d 2 --matrix '") + BRAIDBURAU_TEST_DATA + "/uq-sl2.json'").code, 2);
}

TEST(Cli, YbeFromMatrixFile) {
  std::string path = testing::TempDir() + "bb_flip.json";
  std::ofstream(path) << run_json("fixtures --show flip-d2")["matrix"].dump();
  RunResult r = run("ybe --d 2 --matrix '" + path + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "YBE: satisfied\n");
}

TEST(Cli, VerifyOutput) {
  RunResult r = run("verify --relations --n 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK: 1 far-commutations, 2 braid relations\n");
  RunResult o = run("verify --oracle --n 3");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "OK: groupoid and closed-form families agree for n=3\n");
  EXPECT_EQ(run("verify --n 1").code, 1);
}

TEST(Cli, FixturesListingCarriesHashes) {
  Json j = run_json("fixtures");
  bool found = false;
  for (const auto& f : j)
    if (f["name"] == "burau-reduced-n3") {
      found = true;
      EXPECT_EQ(f["hash"], "780d459a3375bf34");
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(run("fixtures --show nope").code, 1);
}

TEST(Cli, UsageAndDomainErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("burau").code, 2);
  EXPECT_EQ(run("burau --n 3 --form sideways").code, 2);
  EXPECT_EQ(run("burau --n 3 --braid 's1 x2'").code, 2);
  EXPECT_EQ(run("artin --n 3 --braid s5").code, 1);
  EXPECT_EQ(run("groupoid-act --n 2 --braid s1 --path 'w0 w0'").code, 1);
  EXPECT_EQ(run("homology --n 0").code, 1);
  EXPECT_EQ(run("monodromy --n 3 --braid s1 --algebra A1 --weights w1 --kappa 1 --kvec 1").code, 1);
}

TEST(Cli, DeterministicOutput) {
  for (const char* args : {"burau --n 4 --form unreduced", "homology --n 3 --t 1/3", "fixtures",
                           "monodromy --n 4 --braid 's1 s2 s3^-1'", "groupoid-act --n 3 --braid 's2 s1'"}) {
    RunResult a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "test_util.hpp"

using namespace braidburau;
using bbtest::uniform;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(BRAIDBURAU_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

// Round trip through text, not just through the in-memory tree.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

FreeRing random_element(int gens) {
  FreeRing x;
  for (int k = uniform(0, 3); k > 0; --k) x += FreeRing(bbtest::random_word(gens, uniform(0, 4)), uniform(-5, 5));
  return x;
}

}  // namespace

TEST(JsonRoundTrip, Rational) {
  for (Rational r : {Rational(0), Rational(-3, 4), Rational(7), Rational(1, 6)}) {
    EXPECT_EQ(rational_from_json(reparse(to_json(r))), r);
  }
  EXPECT_EQ(to_json(Rational(-3, 4)).get<std::string>(), "-3/4");
  EXPECT_EQ(rational_from_json(Json("2/4")), Rational(1, 2));
}

TEST(JsonRoundTrip, FreeWordAndBraid) {
  for (int trial = 0; trial < 50; ++trial) {
    FreeWord w = bbtest::random_word(4, uniform(0, 12));
    EXPECT_EQ(word_from_json(reparse(to_json(w))), w);
    Braid b = bbtest::random_braid(4, uniform(0, 8));
    Braid back = braid_from_json(reparse(to_json(b)));
    EXPECT_EQ(back.strands(), 4);
    EXPECT_EQ(back.word(), b.word());
  }
  EXPECT_EQ(to_json(FreeWord::parse("f1 f2^-1")).dump(), "[[1,1],[2,-1]]");
  EXPECT_EQ(to_json(Braid::parse(3, "s2")).dump(), R"({"n":3,"word":[[2,1]]})");
}

TEST(JsonRoundTrip, FreeRingAndLabeledMatrix) {
  for (int trial = 0; trial < 50; ++trial) {
    FreeRing x = random_element(3);
    EXPECT_EQ(free_ring_from_json(reparse(to_json(x))), x);
  }
  EXPECT_EQ(to_json(FreeRing{}).dump(), "[]");
  BurauFamily fam = burau_closed_form(4, BurauForm::kUnreduced);
  for (int trial = 0; trial < 20; ++trial) {
    LabeledMatrix m = burau_of_braid(fam, bbtest::random_braid(4, uniform(0, 4)));
    LabeledMatrix back = labeled_matrix_from_json(reparse(to_json(m)));
    EXPECT_TRUE(labeled_equal(back, m));
    EXPECT_EQ(back.matrix, m.matrix);
  }
  LabeledMatrix bare{free_identity(2), std::nullopt};
  LabeledMatrix back = labeled_matrix_from_json(reparse(to_json(bare)));
  EXPECT_FALSE(back.label.has_value());
  EXPECT_EQ(back.matrix, bare.matrix);
}

TEST(JsonRoundTrip, LaurentAndFractionMatrices) {
  LaurentMatrix r = uq_sl2_r_matrix();
  EXPECT_EQ(laurent_matrix_from_json(reparse(to_json(r))), r);
  RationalLaurent x = RationalLaurent::monomial(Rational(-1, 4), 3) + RationalLaurent::monomial(Rational(5, 2), -2);
  EXPECT_EQ(laurent_from_json(reparse(to_json(x))), x);

  Specialization sp;
  sp.t_exponent = Rational(1, 2);
  HomologyResult h = homology(3, sp);
  FractionMatrix m = monodromy_action(Braid::parse(3, "s1 s2^-1"), h);
  EXPECT_EQ(fraction_matrix_from_json(reparse(fraction_matrix_to_json(m, h.denominator)), h.denominator), m);
}

TEST(JsonParse, MalformedInputsRaiseParseError) {
  EXPECT_THROW(rational_from_json(Json(3)), ParseError);
  EXPECT_THROW(rational_from_json(Json("1/0")), ParseError);
  EXPECT_THROW(word_from_json(Json::parse("[[1]]")), ParseError);
  EXPECT_THROW(word_from_json(Json::parse("[[1,\"a\"]]")), ParseError);
  EXPECT_THROW(word_from_json(Json::parse("{}")), ParseError);
  // Stored words must be reduced.
  EXPECT_THROW(word_from_json(Json::parse("[[1,1],[1,-1]]")), ParseError);
  EXPECT_THROW(braid_from_json(Json::parse(R"({"word":[]})")), ParseError);
  EXPECT_THROW(free_ring_from_json(Json::parse("[[1]]")), ParseError);
  EXPECT_THROW(labeled_matrix_from_json(Json::parse(R"({"rows":2,"cols":1,"entries":[[[]]]})")), ParseError);
  EXPECT_THROW(laurent_matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"entries":[[[]]]})")), ParseError);
  EXPECT_THROW(laurent_from_json(Json::parse("[[1,2]]")), ParseError);
  EXPECT_THROW(fraction_from_json(Json::parse(R"({"num":[]})"), 1), ParseError);
}

TEST(Fixtures, NamesKindsAndUniqueness) {
  std::set<std::string> names;
  for (const Fixture& f : list_fixtures()) {
    EXPECT_TRUE(names.insert(f.name).second) << f.name;
    EXPECT_TRUE(f.kind == "r-matrix" || f.kind == "classical-burau" || f.kind == "burau-family") << f.kind;
    EXPECT_FALSE(f.description.empty());
  }
  for (const char* need : {"uq-sl2", "ybe-broken", "flip-d2", "identity-d2", "burau-reduced-n3",
                           "burau-unreduced-n3", "burau-classical-reduced-n3", "burau-classical-reduced-n4"})
    EXPECT_TRUE(names.count(need)) << need;
}

TEST(Fixtures, HashIsStableAndMatchesContent) {
  for (const Fixture& f : list_fixtures()) {
    EXPECT_EQ(f.hash().size(), 16u);
    EXPECT_EQ(f.hash(), find_fixture(f.name).hash());
  }
  // Known values: recomputed independently as FNV-1a over the compact dumps.
  EXPECT_EQ(find_fixture("uq-sl2").hash(), "fb0b59cfdcf3de02");
  EXPECT_EQ(find_fixture("burau-reduced-n3").hash(), "780d459a3375bf34");
  Fixture changed = find_fixture("uq-sl2");
  changed.content["d"] = 3;
  EXPECT_NE(changed.hash(), "fb0b59cfdcf3de02");
}

TEST(Fixtures, UnknownNameIsIndexError) { EXPECT_THROW(find_fixture("no-such-fixture"), IndexError); }

TEST(Fixtures, GoldenFilesMatch) {
  EXPECT_EQ(find_fixture("uq-sl2").content.dump(), read_data("uq-sl2.json"));
  EXPECT_EQ(find_fixture("burau-reduced-n3").content.dump(), read_data("burau-reduced-n3.json"));
}

TEST(Fixtures, GoldenBurauDecodesToClosedForm) {
  Json j = Json::parse(read_data("burau-reduced-n3.json"));
  ASSERT_EQ(j["generators"].size(), 2u);
  LabeledMatrix t1 = labeled_matrix_from_json(j["generators"][0]);
  LabeledMatrix t2 = labeled_matrix_from_json(j["generators"][1]);
  EXPECT_EQ(t1.matrix, bbtest::free_matrix({{"1", "f1", "0"}, {"0", "-f1", "0"}, {"0", "1", "1"}}));
  EXPECT_EQ(t2.matrix, bbtest::free_matrix({{"1", "0", "0"}, {"0", "1", "f2"}, {"0", "0", "-f2"}}));
  EXPECT_EQ(t1.label->word(), FreeWord::parse("f1"));
  EXPECT_EQ(t2.label->word(), FreeWord::parse("f2"));
}

TEST(Fixtures, GoldenUqSl2DecodesAndSatisfiesYbe) {
  Json j = Json::parse(read_data("uq-sl2.json"));
  LaurentMatrix r = laurent_matrix_from_json(j["matrix"]);
  RationalLaurent q = RationalLaurent::monomial(1);
  EXPECT_EQ(r(0, 0), q);
  EXPECT_EQ(r(1, 1), q - RationalLaurent::monomial(-1));
  EXPECT_EQ(r(1, 2), RationalLaurent(1));
  EXPECT_TRUE(r(2, 2).is_zero());
  EXPECT_TRUE(ybe_check(r, j["d"].get<std::size_t>()));
}

TEST(Fixtures, GoldenMonodromy) {
  Json j = Json::parse(read_data("monodromy-n3-s1s2.json"));
  HomologyResult h = homology(3);
  FractionMatrix m = monodromy_action(Braid::parse(3, "s1 s2"), h);
  EXPECT_EQ(fraction_matrix_from_json(j["matrix"], h.denominator), m);
  auto cp = char_poly(m);
  ASSERT_EQ(cp.size(), j["char_poly"].size());
  for (std::size_t k = 0; k < cp.size(); ++k) EXPECT_EQ(fraction_from_json(j["char_poly"][k], h.denominator), cp[k]);
  // x^2 + q x + q^2
  EXPECT_EQ(laurent_from_json(j["char_poly"][0]["num"]), RationalLaurent::monomial(2));
  EXPECT_EQ(laurent_from_json(j["char_poly"][1]["num"]), RationalLaurent::monomial(1));
}

TEST(Fixtures, ClassicalFixtureMatchesGenerator) {
  for (int n = 2; n <= 4; ++n) {
    Fixture f = find_fixture("burau-classical-reduced-n" + std::to_string(n));
    ASSERT_EQ(f.content["generators"].size(), static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n - 1; ++i)
      EXPECT_EQ(laurent_matrix_from_json(f.content["generators"][static_cast<std::size_t>(i - 1)]),
                classical_reduced_burau(n, i));
  }
}

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace braidburau;
using bbtest::uniform;

namespace {

FreeWord w(const std::string& s) { return FreeWord::parse(s); }
Braid br(int n, const std::string& s) { return Braid::parse(n, s); }

}  // namespace

TEST(ArtinAct, GeneratorExamples) {
  Braid t1 = Braid::generator(3, 1), t2 = Braid::generator(3, 2);
  EXPECT_EQ(artin_act(t1, w("f1")), w("f1 f2 f1^-1"));
  EXPECT_EQ(artin_act(t1, w("f2")), w("f1"));
  EXPECT_EQ(artin_act(t1, w("f3")), w("f3"));
  EXPECT_EQ(artin_act(t2, w("f1")), w("f1"));
  EXPECT_EQ(artin_act(Braid::identity(3), w("f2 f3^-1 f1")), w("f2 f3^-1 f1"));
}

TEST(ArtinAct, InverseGenerator) {
  Braid ti = Braid::generator(3, 1, -1);
  EXPECT_EQ(artin_act(ti, w("f1")), w("f2"));
  EXPECT_EQ(artin_act(ti, w("f2")), w("f2^-1 f1 f2"));
  for (int j = 1; j <= 3; ++j) {
    FreeWord fj = FreeWord::generator(j);
    EXPECT_EQ(artin_act(ti, artin_act(Braid::generator(3, 1), fj)), fj);
  }
}

TEST(ArtinAct, RightActionInReadingOrder) {
  // act(b b') = act(b') o act(b)
  for (int trial = 0; trial < 50; ++trial) {
    Braid a = bbtest::random_braid(4, uniform(0, 6)), b = bbtest::random_braid(4, uniform(0, 6));
    FreeWord x = bbtest::random_word(4, uniform(0, 6));
    EXPECT_EQ(artin_act(a * b, x), artin_act(b, artin_act(a, x)));
  }
}

TEST(ArtinAct, ProductOfGeneratorsFixed) {
  // f_1 f_2 ... f_n is fixed by every braid.
  for (int trial = 0; trial < 30; ++trial) {
    Braid b = bbtest::random_braid(5, uniform(0, 10));
    EXPECT_EQ(artin_act(b, w("f1 f2 f3 f4 f5")), w("f1 f2 f3 f4 f5"));
  }
}

TEST(ArtinAct, IndexOutOfRange) {
  EXPECT_THROW(artin_act(Braid::generator(3, 1), w("f4")), IndexError);
  EXPECT_THROW(Braid::generator(3, 3), IndexError);
  EXPECT_THROW(br(3, "s3"), IndexError);
  EXPECT_THROW(Braid(0), IndexError);
}

TEST(BraidEqual, Examples) {
  EXPECT_TRUE(braid_equal(br(3, "s1 s2 s1"), br(3, "s2 s1 s2")));
  EXPECT_TRUE(braid_equal(br(3, "s1 s1^-1"), Braid::identity(3)));
  EXPECT_FALSE(braid_equal(br(3, "s1 s2"), br(3, "s2 s1")));
  EXPECT_FALSE(braid_equal(br(2, "s1 s1"), Braid::identity(2)));
  EXPECT_TRUE(braid_equal(br(4, "s1 s3"), br(4, "s3 s1")));
  EXPECT_THROW(braid_equal(Braid::identity(3), Braid::identity(4)), MixedGroupError);
}

TEST(BraidRelations, ArtinImagesAgreeUpToSix) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& r : braid_relations(n)) EXPECT_TRUE(artin_relation_holds(r)) << n << ": " << r.to_string();
}

TEST(BraidRelations, InstanceCounts) {
  auto count = [](int n, bool far) {
    int c = 0;
    for (const auto& r : braid_relations(n)) c += r.far == far;
    return c;
  };
  EXPECT_EQ(count(4, true), 1);
  EXPECT_EQ(count(4, false), 2);
  EXPECT_EQ(count(5, true), 3);
  EXPECT_EQ(count(5, false), 3);
  EXPECT_TRUE(braid_relations(2).empty());
}

TEST(BraidEqual, SeparatesPairsWithDifferentInvariants) {
  int checked = 0;
  while (checked < 50) {
    Braid a = bbtest::random_braid(4, uniform(1, 8)), b = bbtest::random_braid(4, uniform(1, 8));
    bool differ = a.word().total_exponent() != b.word().total_exponent() || a.permutation() != b.permutation();
    if (!differ) continue;
    EXPECT_FALSE(braid_equal(a, b)) << a.to_string() << " vs " << b.to_string();
    ++checked;
  }
}

TEST(BraidEqual, RandomConjugatesOfRelationsAreEqual) {
  for (int trial = 0; trial < 30; ++trial) {
    Braid c = bbtest::random_braid(4, uniform(0, 5));
    Braid lhs = c * br(4, "s2 s3 s2") * c.inverse(), rhs = c * br(4, "s3 s2 s3") * c.inverse();
    EXPECT_TRUE(braid_equal(lhs, rhs));
  }
}

TEST(BraidEqual, LengthCapRaisesResourceError) {
  // s1 s2^-1 is pseudo-Anosov: image lengths grow geometrically.
  Braid pa = br(3, "s1 s2^-1");
  Braid big = Braid::identity(3);
  for (int k = 0; k < 30; ++k) big = big * pa;
  EXPECT_THROW(braid_equal(big, Braid::identity(3)), ResourceError);
}

TEST(Braid, PermutationAndPurity) {
  EXPECT_EQ(br(3, "s1").permutation(), (std::vector<int>{1, 0, 2}));
  EXPECT_TRUE(br(3, "s1 s1").is_pure());
  EXPECT_FALSE(br(3, "s1 s2").is_pure());
  EXPECT_EQ(br(3, "s2 s1^-1").to_string(), "s2 s1^-1");
}

TEST(GroupoidAct, TableExamples) {
  CellComplexSpec cx(3);
  auto img = [&](int i, Cell c) { return groupoid_act(i, GroupoidPath::edge(cx, c)).to_string(); };
  EXPECT_EQ(img(1, Cell::w(0)), "w0 L1p w1 L2p");
  EXPECT_EQ(img(1, Cell::w(1)), "w1^-1");
  EXPECT_EQ(img(1, Cell::l_plus(1)), "L2m");
  EXPECT_EQ(img(1, Cell::l_minus(1)), "L2p");
  EXPECT_EQ(img(1, Cell::l_plus(2)), "L1m");
  EXPECT_EQ(img(1, Cell::w(2)), "L1m^-1 w1 L2m^-1 w2");
  EXPECT_EQ(img(2, Cell::w(0)), "w0");
  EXPECT_EQ(img(1, Cell::l_plus(3)), "L3p");
}

TEST(GroupoidAct, FixesFarCellsAndBasePoint) {
  CellComplexSpec cx(5);
  for (int i = 1; i <= 4; ++i)
    for (int j = 0; j < 5; ++j) {
      if (j >= i - 1 && j <= i + 1) continue;
      GroupoidPath e = GroupoidPath::edge(cx, Cell::w(j));
      EXPECT_EQ(groupoid_act(i, e), e);
    }
  for (int trial = 0; trial < 30; ++trial) {
    GroupoidPath p = bbtest::random_loop(cx, uniform(0, 15));
    GroupoidPath q = groupoid_act(bbtest::random_braid(5, uniform(0, 5)), p);
    EXPECT_TRUE(q.is_closed_at_base());
  }
}

TEST(GroupoidAct, InverseGeneratorUndoes) {
  CellComplexSpec cx(4);
  for (int i = 1; i <= 3; ++i)
    for (const Cell& c : cx.cells()) {
      GroupoidPath e = GroupoidPath::edge(cx, c);
      EXPECT_EQ(groupoid_act(i, -1, groupoid_act(i, 1, e)), e) << i << " " << c.to_string();
      EXPECT_EQ(groupoid_act(i, 1, groupoid_act(i, -1, e)), e) << i << " " << c.to_string();
    }
}

TEST(GroupoidAct, RespectsBraidRelations) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& r : braid_relations(n)) EXPECT_TRUE(groupoid_relation_holds(r)) << n << ": " << r.to_string();
}

TEST(GroupoidAct, RestrictsToArtinActionOnLoops) {
  for (int n = 2; n <= 5; ++n) {
    CellComplexSpec cx(n);
    for (int i = 1; i <= n - 1; ++i)
      for (int sign : {1, -1})
        for (int j = 1; j <= n; ++j) {
          GroupoidPath img = groupoid_act(i, sign, loop_generator(cx, j));
          EXPECT_EQ(loop_word(img), artin_act(Braid::generator(n, i, sign), FreeWord::generator(j)));
          EXPECT_EQ(img, path_of_free_word(cx, loop_word(img)));
        }
  }
}

TEST(GroupoidAct, RandomBraidsOnRandomLoops) {
  CellComplexSpec cx(4);
  for (int trial = 0; trial < 40; ++trial) {
    Braid b = bbtest::random_braid(4, uniform(0, 6));
    FreeWord x = bbtest::random_word(4, uniform(0, 6));
    EXPECT_EQ(loop_word(groupoid_act(b, path_of_free_word(cx, x))), artin_act(b, x));
  }
}

TEST(GroupoidAct, Errors) {
  CellComplexSpec cx(3);
  EXPECT_THROW(groupoid_act(3, GroupoidPath::edge(cx, Cell::w(0))), IndexError);
  EXPECT_THROW(groupoid_act(Braid::generator(4, 1), GroupoidPath::edge(cx, Cell::w(0))), MixedGroupError);
}

TEST(PureBraidGen, Examples) {
  EXPECT_EQ(pure_braid_gen(1, 2, 2).to_string(), "s1 s1");
  EXPECT_EQ(pure_braid_gen(1, 3, 3).to_string(), "s2 s1 s1 s2^-1");
  EXPECT_EQ(pure_braid_gen(3, 1, 3).to_string(), "s2 s1 s1 s2^-1");
  EXPECT_EQ(pure_braid_gen(2, 4, 4).to_string(), "s3 s2 s2 s3^-1");
  EXPECT_THROW(pure_braid_gen(1, 1, 3), IndexError);
  EXPECT_THROW(pure_braid_gen(1, 4, 3), IndexError);
  EXPECT_THROW(pure_braid_gen(0, 2, 3), IndexError);
}

TEST(PureBraidGen, PureWithWindingOne) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Braid a = pure_braid_gen(i, j, n);
        EXPECT_TRUE(a.is_pure());
        // A_{i,j} conjugates f_i and f_j; the other generators outside i..j are fixed.
        for (int k = 1; k <= n; ++k) {
          FreeWord img = artin_act(a, FreeWord::generator(k));
          EXPECT_EQ(img.total_exponent(), 1);
          EXPECT_EQ(img.exponent_sum(k), 1);
          if (k < i || k > j) {
            EXPECT_EQ(img, FreeWord::generator(k));
          }
        }
        EXPECT_NE(artin_act(a, FreeWord::generator(i)), FreeWord::generator(i));
      }
}

TEST(EmbedSemidirect, Examples) {
  EXPECT_EQ(embed_semidirect(SemidirectElement(Braid::identity(2), w("f1"))).to_string(), "s2 s1 s1 s2^-1");
  EXPECT_EQ(embed_semidirect(SemidirectElement(Braid::generator(2, 1))).to_string(), "s1");
  EXPECT_TRUE(braid_equal(embed_semidirect(SemidirectElement(Braid::identity(3), w("f3"))), br(4, "s3 s3")));
  EXPECT_THROW(SemidirectElement(Braid::identity(2), w("f3")), IndexError);
}

TEST(EmbedSemidirect, ConjugationConsistencyUnderPinnedAction) {
  // With the right action, sigma_i^-1 A_{j,n+1} sigma_i = A(tau_i(f_j)).
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n; ++j) {
        Braid s = embed_semidirect(SemidirectElement(Braid::generator(n, i)));
        Braid a = embed_semidirect(SemidirectElement(Braid::identity(n), FreeWord::generator(j)));
        FreeWord moved = artin_act(Braid::generator(n, i), FreeWord::generator(j));
        Braid rhs = embed_semidirect(SemidirectElement(Braid::identity(n), moved));
        EXPECT_TRUE(braid_equal(s.inverse() * a * s, rhs)) << n << " " << i << " " << j;
      }
}

TEST(EmbedSemidirect, LeftConjugationFormFailsRegression) {
  // The mirror form sigma_i A sigma_i^-1 = A(tau_i(f_j)) is not a law here.
  int failures = 0;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) {
      Braid s = Braid::generator(4, i);
      Braid a = pure_braid_gen(j, 4, 4);
      Braid rhs = embed_semidirect(
          SemidirectElement(Braid::identity(3), artin_act(Braid::generator(3, i), FreeWord::generator(j))));
      failures += !braid_equal(s * a * s.inverse(), rhs);
    }
  EXPECT_GT(failures, 0);
}

TEST(EmbedSemidirect, HomomorphismOnRandomElements) {
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      // Element length (braid letters plus free letters) at most 4. Images
      // in B_{n+1} grow fast enough that longer inputs can hit the word cap.
      auto element = [&]() {
        int lb = uniform(0, 4);
        return SemidirectElement(bbtest::random_braid(n, lb), bbtest::random_word(n, uniform(0, 4 - lb)));
      };
      SemidirectElement x = element(), y = element();
      EXPECT_TRUE(braid_equal(embed_semidirect(x * y), embed_semidirect(x) * embed_semidirect(y)));
      EXPECT_TRUE(braid_equal(embed_semidirect(x.inverse()), embed_semidirect(x).inverse()));
    }
}

TEST(SemidirectElement, GroupLaws) {
  for (int trial = 0; trial < 30; ++trial) {
    SemidirectElement x(bbtest::random_braid(3, uniform(0, 5)), bbtest::random_word(3, uniform(0, 5)));
    SemidirectElement y(bbtest::random_braid(3, uniform(0, 5)), bbtest::random_word(3, uniform(0, 5)));
    SemidirectElement z(bbtest::random_braid(3, uniform(0, 5)), bbtest::random_word(3, uniform(0, 5)));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * x.inverse(), SemidirectElement::identity(3));
    EXPECT_EQ(SemidirectElement::identity(3) * x, x);
  }
  EXPECT_THROW(SemidirectElement::identity(2) * SemidirectElement::identity(3), MixedGroupError);
}

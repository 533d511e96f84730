#include <qspectra/bwb/bott.hpp>
#include <qspectra/bwb/bundle.hpp>
#include <qspectra/bwb/ext.hpp>
#include <qspectra/lefschetz/collection.hpp>

#include <oracles/gl2_character.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace qspectra;
using namespace qspectra::bwb;

namespace {

CohomologyTable h(int degree, long dim) { return CohomologyTable{{degree, Integer(dim)}}; }

BundleExpr parse(const std::string& s, int k, int n) { return parse_bundle(s, k, n); }

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Weight random_weight(std::mt19937& rng, int len, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Weight w(static_cast<std::size_t>(len));
  for (auto& x : w) x = d(rng);
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

BundleExpr random_bundle(std::mt19937& rng, int k, int n, int summands) {
  BundleExpr e(k, n);
  for (int i = 0; i < summands; ++i) e.add(random_weight(rng, k, 2), random_weight(rng, n - k, 2), 1 + i % 2);
  return e;
}

CohomologyTable mirrored(const CohomologyTable& t, int top) {
  CohomologyTable out;
  for (const auto& [d, v] : t.entries()) out.add(top - d, v);
  return out;
}

}  // namespace

TEST(WeylDimension, Classical) {
  EXPECT_EQ(weyl_dimension({0, 0, 0}), 1);
  EXPECT_EQ(weyl_dimension({1, 0, 0, 0}), 4);
  EXPECT_EQ(weyl_dimension({1, 1, 0, 0}), 6);
  EXPECT_EQ(weyl_dimension({2, 0, 0}), 6);
  EXPECT_EQ(weyl_dimension({2, 1, 0}), 8);
  EXPECT_EQ(weyl_dimension({1, 0, -1}), 8);
  EXPECT_THROW(weyl_dimension({0, 1}), std::invalid_argument);
}

TEST(Bott, Examples) {
  EXPECT_EQ(bott({0, 0, 0, 0}, 2, 4), h(0, 1));
  EXPECT_EQ(bott({1, 0, 0, 0}, 2, 4), h(0, 4));
  EXPECT_EQ(bott({-4, 0, 0, 0}, 1, 4), h(3, 1));
  EXPECT_TRUE(bott({-1, 0, 0, 0}, 1, 4).empty());
  EXPECT_THROW(bott({0, 0, 0}, 2, 4), std::invalid_argument);
}

TEST(Bott, Calibration) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {3, 6}, {2, 7}}) {
    EXPECT_EQ(cohomology(parse("U*", k, n)), h(0, n));
    EXPECT_EQ(cohomology(parse("O(1)", k, n)), h(0, binomial(n, k).get_si()));
    EXPECT_EQ(cohomology(parse("O(-1)", k, n)), CohomologyTable{});
    EXPECT_EQ(cohomology(parse("O", k, n).twist(-n)), h(k * (n - k), 1));
  }
}

TEST(Bott, SingleDegreeOnRandomWeights) {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> d(-6, 6);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}})
    for (int i = 0; i < 2000; ++i) {
      GLWeight w(static_cast<std::size_t>(n));
      for (auto& x : w) x = d(rng);
      const auto t = bott(w, k, n);
      EXPECT_LE(t.support_size(), 1u);
      for (const auto& [deg, dim] : t.entries()) {
        EXPECT_GE(deg, 0);
        EXPECT_LE(deg, n * (n - 1) / 2);
        EXPECT_GT(dim, 0);
      }
    }
}

TEST(Parser, Grammar) {
  EXPECT_EQ(parse("O", 2, 4), BundleExpr::structure_sheaf(2, 4));
  EXPECT_EQ(parse("O(1)", 2, 4), BundleExpr::irreducible(2, 4, {1, 1}, {0, 0}));
  EXPECT_EQ(parse("U*", 2, 4), BundleExpr::irreducible(2, 4, {1, 0}, {0, 0}));
  EXPECT_EQ(parse("S^2 U*", 2, 4), BundleExpr::irreducible(2, 4, {2, 0}, {0, 0}));
  EXPECT_EQ(parse("S^(2,1) U*", 2, 4), BundleExpr::irreducible(2, 4, {2, 1}, {0, 0}));
  EXPECT_EQ(parse("S^(1,-1) U*", 2, 4), BundleExpr::irreducible(2, 4, {1, -1}, {0, 0}));
  EXPECT_EQ(parse("S^2 U*(1)", 2, 4), BundleExpr::irreducible(2, 4, {3, 1}, {0, 0}));
  EXPECT_EQ(parse("U", 2, 4), BundleExpr::irreducible(2, 4, {0, -1}, {0, 0}));
  EXPECT_EQ(parse("Q*", 2, 4), BundleExpr::irreducible(2, 4, {0, 0}, {1, 0}));
  EXPECT_EQ(parse("U* * U*", 2, 4),
            BundleExpr::irreducible(2, 4, {2, 0}, {0, 0}) + BundleExpr::irreducible(2, 4, {1, 1}, {0, 0}));
  EXPECT_EQ(parse("U**U*", 2, 4), parse("U* * U*", 2, 4));
}

TEST(Parser, Errors) {
  for (const char* bad : {"", "X", "S^ U*", "S^(2,1 U*", "U*(", "O(1", "S^(1,2) U*", "S^(1,1,1) U*", "O O", "u*"})
    EXPECT_THROW(parse(bad, 2, 4), BundleParseError) << bad;
}

TEST(Canonical, QuotientFactorsFoldIntoTwists) {
  // det Q* = O(-1)
  EXPECT_EQ(parse("S^(1,1) Q*", 2, 4), parse("O(-1)", 2, 4));
  EXPECT_EQ(parse("Q", 1, 3).dual(), parse("Q*", 1, 3));
}

TEST(HomBundle, Examples) {
  EXPECT_EQ(hom_bundle(parse("O", 2, 4), parse("O(1)", 2, 4)), BundleExpr::irreducible(2, 4, {1, 1}, {0, 0}));
  EXPECT_EQ(hom_bundle(parse("U*", 2, 4), parse("U*", 2, 4)),
            BundleExpr::irreducible(2, 4, {0, 0}, {0, 0}) + BundleExpr::irreducible(2, 4, {1, -1}, {0, 0}));
  EXPECT_EQ(hom_bundle(parse("S^2 U*", 2, 4), parse("U*", 2, 4)),
            BundleExpr::irreducible(2, 4, {1, -2}, {0, 0}) + BundleExpr::irreducible(2, 4, {0, -1}, {0, 0}));
  EXPECT_THROW(hom_bundle(parse("O", 2, 4), parse("O", 2, 5)), std::invalid_argument);
}

TEST(HomBundle, MatchesGl2Characters) {
  for (int a1 = -2; a1 <= 3; ++a1)
    for (int a2 = -3; a2 <= a1; ++a2)
      for (int b1 = -2; b1 <= 3; ++b1)
        for (int b2 = -3; b2 <= b1; ++b2) {
          const auto e = BundleExpr::irreducible(2, 4, {a1, a2}, {0, 0});
          const auto f = BundleExpr::irreducible(2, 4, {b1, b2}, {0, 0});
          const auto expected =
              oracle::gl2_decompose(oracle::gl2_multiply(oracle::gl2_dual(oracle::gl2_character(a1, a2)),
                                                         oracle::gl2_character(b1, b2)));
          std::map<std::pair<int, int>, std::int64_t> got;
          const BundleExpr hom = hom_bundle(e, f);
          for (const auto& [key, m] : hom.terms()) got[{key.first[0], key.first[1]}] = m;
          EXPECT_EQ(got, expected);
        }
}

TEST(HomBundle, TrivialSummandOnce) {
  std::mt19937 rng(5);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}})
    for (int i = 0; i < 20; ++i) {
      const auto e = BundleExpr::irreducible(k, n, random_weight(rng, k, 2), random_weight(rng, n - k, 2));
      const BundleExpr hom = hom_bundle(e, e);
      const auto& terms = hom.terms();
      const BundleExpr::Key trivial{Weight(static_cast<std::size_t>(k), 0), Weight(static_cast<std::size_t>(n - k), 0)};
      ASSERT_TRUE(terms.count(trivial));
      EXPECT_EQ(terms.at(trivial), 1);
    }
}

TEST(HomBundle, ShiftTrickIsTwistEquivariant) {
  std::mt19937 rng(9);
  for (int i = 0; i < 30; ++i) {
    const auto e = random_bundle(rng, 2, 5, 2), f = random_bundle(rng, 2, 5, 2);
    EXPECT_EQ(tensor(e.twist(3), f.twist(-1)), tensor(e, f).twist(2));
  }
}

TEST(ExtTable, Examples) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 6}, {3, 6}})
    EXPECT_EQ(ext_table(parse("O", k, n), parse("O", k, n)), h(0, 1));
  EXPECT_EQ(ext_table(parse("U*", 2, 4), parse("U*", 2, 4)), h(0, 1));
  EXPECT_TRUE(ext_table(parse("O(1)", 2, 4), parse("U*", 2, 4)).empty());
}

TEST(ExtTable, SerreDualityOnRandomPairs) {
  std::mt19937 rng(2024);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}})
    for (int i = 0; i < 100; ++i) {
      const auto e = random_bundle(rng, k, n, 1 + i % 2), f = random_bundle(rng, k, n, 1);
      EXPECT_EQ(ext_table(e, f), mirrored(ext_table(f, e.twist(-n)), k * (n - k)));
    }
}

TEST(ExtTable, EulerCharacteristicBilinear) {
  std::mt19937 rng(77);
  for (int i = 0; i < 30; ++i) {
    const auto e1 = random_bundle(rng, 2, 5, 1), e2 = random_bundle(rng, 2, 5, 1), f = random_bundle(rng, 2, 5, 2);
    EXPECT_EQ(ext_table(e1 + e2, f).euler_characteristic(),
              ext_table(e1, f).euler_characteristic() + ext_table(e2, f).euler_characteristic());
    EXPECT_EQ(ext_table(e1 + e2, f), [&] {
      auto t = ext_table(e1, f);
      t += ext_table(e2, f);
      return t;
    }());
  }
}

TEST(CheckCollection, Builtins) {
  for (int n = 1; n <= 6; ++n) {
    const auto c = check_collection(lefschetz::builtin_collection("beilinson", n));
    EXPECT_TRUE(c.passed()) << n;
    EXPECT_EQ(c.objects.size(), static_cast<std::size_t>(n + 1));
  }
  for (const char* name : {"kapranov_g24", "minimal_g24"}) {
    const auto c = check_collection(lefschetz::builtin_collection(name));
    EXPECT_TRUE(c.passed()) << name;
    EXPECT_EQ(c.pairs_checked, 15u);
  }
}

TEST(CheckCollection, ReportsFailures) {
  const lefschetz::LefschetzCollection reversed("G(2,4)", {"U*", "O"}, {2, 2, 1, 1}, 4);
  const auto c = check_collection(reversed);
  EXPECT_FALSE(c.passed());
  ASSERT_FALSE(c.failures.empty());
  EXPECT_EQ(c.failures.front().problem, "backward Ext nonzero");

  const lefschetz::LefschetzCollection twice("P2", {"O", "O"}, {2, 2, 2}, 3);
  EXPECT_FALSE(check_collection(twice).passed());
  const lefschetz::LefschetzCollection not_exc("G(2,4)", {"U* * U*"}, {1}, 4);
  const auto ne = check_collection(not_exc);
  ASSERT_FALSE(ne.failures.empty());
  EXPECT_EQ(ne.failures.front().problem, "not exceptional");
}

TEST(CheckCollection, UnsupportedBackend) {
  const lefschetz::LefschetzCollection q("Q3", {"O"}, {1, 1, 1}, 3);
  EXPECT_THROW(check_collection(q), UnsupportedBackend);
  EXPECT_EQ(ambient_for("P3").n, 4);
  EXPECT_TRUE(ambient_for("IG(2,8)").hyperplane);
  EXPECT_THROW(ambient_for("IG(2,7)"), UnsupportedBackend);
}

TEST(Hyperplane, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = ext_hyperplane(parse("O", 2, 2 * n), parse("O", 2, 2 * n), n);
    EXPECT_EQ(r.verdict, HyperplaneExt::Verdict::Dims);
    EXPECT_EQ(r.dims, h(0, 1));
    EXPECT_TRUE(r.t1.empty());
  }
  const auto u = ext_hyperplane(parse("U*", 2, 6), parse("O", 2, 6), 3);
  EXPECT_EQ(u.verdict, HyperplaneExt::Verdict::Vanishes);
  EXPECT_THROW(ext_hyperplane(parse("O", 2, 5), parse("O", 2, 5), 3), std::invalid_argument);
}

TEST(Hyperplane, InconclusiveIsSurfaced) {
  // O(-1) -> O with T0 and T1 both in degree 0 once the twist is large enough.
  const auto r = ext_hyperplane(parse("O", 2, 4), parse("O(2)", 2, 4), 2);
  EXPECT_EQ(r.verdict, HyperplaneExt::Verdict::Inconclusive);
  EXPECT_TRUE(r.dims.empty());
}

TEST(Hyperplane, KuznetsovCollections) {
  for (int n = 2; n <= 5; ++n) {
    const auto c = check_collection(lefschetz::builtin_collection("kuznetsov_ig2", n));
    EXPECT_TRUE(c.failures.empty()) << n;
    EXPECT_TRUE(c.inconclusive.empty()) << n;
  }
}

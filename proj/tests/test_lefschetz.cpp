#include <qspectra/algebra/providers.hpp>
#include <qspectra/lefschetz/collection.hpp>
#include <qspectra/schur/quantum_grassmannian.hpp>
#include <qspectra/spectrum/report.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace qspectra;
using namespace qspectra::lefschetz;

namespace {

spectrum::SpectrumReport report_for(const std::string& variety) {
  if (variety[0] == 'P') return spectrum::quantum_spectrum_report(qh_projective(std::stoi(variety.substr(1))));
  if (variety == "G(2,4)") return spectrum::quantum_spectrum_report(schur::qh_grassmannian(2, 4));
  const int two_n = std::stoi(variety.substr(5));
  return spectrum::quantum_spectrum_report(qh_ig2(two_n / 2));
}

}  // namespace

TEST(Collection, RejectsBadSupport) {
  try {
    LefschetzCollection("G(2,4)", {"O", "U*"}, {1, 1, 2, 2}, 4);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("support partition not non-increasing"), std::string::npos);
  }
  EXPECT_THROW(LefschetzCollection("P2", {"O"}, {1, -1}, 3), std::invalid_argument);
  EXPECT_THROW(LefschetzCollection("P2", {"O"}, {1, 1, 1, 1}, 3), std::invalid_argument);
  EXPECT_THROW(LefschetzCollection("P2", {"O"}, {2, 1, 1}, 3), std::invalid_argument);
  EXPECT_THROW(LefschetzCollection("P2", {"O"}, {1}, 0), std::invalid_argument);
}

TEST(Lengths, Examples) {
  for (int n = 1; n <= 10; ++n) {
    const auto l = lengths(builtin_collection("beilinson", n));
    EXPECT_EQ(l.total, n + 1);
    EXPECT_EQ(l.rectangular, n + 1);
    EXPECT_EQ(l.residual_expected, 0);
  }
  const auto kap = builtin_collection("kapranov_g24");
  EXPECT_EQ(kap.support(), (std::vector<int>{3, 2, 1, 0}));
  const auto lk = lengths(kap);
  EXPECT_EQ(lk.total, 6);
  EXPECT_EQ(lk.rectangular, 0);
  EXPECT_EQ(lk.residual_expected, 6);

  const auto lm = lengths(builtin_collection("minimal_g24"));
  EXPECT_EQ(lm.total, 6);
  EXPECT_EQ(lm.rectangular, 4);
  EXPECT_EQ(lm.residual_expected, 2);
}

TEST(Lengths, TwoWaysAndRectangularity) {
  std::vector<LefschetzCollection> all{builtin_collection("kapranov_g24"), builtin_collection("minimal_g24")};
  for (int n = 1; n <= 10; ++n) all.push_back(builtin_collection("beilinson", n));
  for (int n = 2; n <= 6; ++n) all.push_back(builtin_collection("kuznetsov_ig2", n));
  for (const auto& c : all) {
    const auto l = lengths(c);
    EXPECT_EQ(static_cast<int>(c.objects().size()), l.total);
    EXPECT_EQ(l.total, l.rectangular + l.residual_expected);
    const auto [lo, hi] = std::minmax_element(c.support().begin(), c.support().end());
    EXPECT_EQ(c.rectangular(), l.residual_expected == 0);
    EXPECT_EQ(c.rectangular(), *lo == *hi);
  }
}

TEST(Builtin, Shapes) {
  const auto b2 = builtin_collection("beilinson", 2);
  EXPECT_EQ(b2.support(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(b2.starting_block(), (std::vector<std::string>{"O"}));

  const auto m = builtin_collection("minimal_g24");
  const std::vector<std::pair<std::size_t, int>> expected{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(m.objects(), expected);

  const auto k3 = builtin_collection("kuznetsov_ig2", 3);
  EXPECT_EQ(k3.starting_block(), (std::vector<std::string>{"O", "U*", "S^2 U*"}));
  EXPECT_EQ(k3.support(), (std::vector<int>{3, 3, 2, 2, 2}));
  EXPECT_EQ(k3.fano_index(), 5);
  EXPECT_THROW(builtin_collection("nonsense"), std::invalid_argument);
  EXPECT_THROW(builtin_collection("beilinson", 0), std::invalid_argument);
}

TEST(Numerology, KnownCollections) {
  std::vector<LefschetzCollection> pairs{builtin_collection("minimal_g24")};
  for (int n = 1; n <= 10; ++n) pairs.push_back(builtin_collection("beilinson", n));
  for (int n = 2; n <= 5; ++n) pairs.push_back(builtin_collection("kuznetsov_ig2", n));
  for (const auto& c : pairs) {
    const auto v = conjecture_numerology(report_for(c.variety()), c);
    EXPECT_TRUE(v.all_passed()) << c.variety();
    EXPECT_EQ(v.total_length, v.rect_length + v.residual_expected);
  }
}

TEST(Numerology, IsotropicValues) {
  for (int n = 3; n <= 5; ++n) {
    const auto c = builtin_collection("kuznetsov_ig2", n);
    const auto v = conjecture_numerology(report_for(c.variety()), c);
    EXPECT_EQ(c.support().back(), n - 1);
    EXPECT_EQ(v.k_required, n - 1);
    EXPECT_EQ(v.residual_expected, n - 1);
    EXPECT_FALSE(v.find("residual_points")->applicable);
  }
}

TEST(Numerology, KapranovIsFullButNotRectangularOptimal) {
  const auto v = conjecture_numerology(report_for("G(2,4)"), builtin_collection("kapranov_g24"));
  EXPECT_TRUE(v.find("total_length")->passed);
  EXPECT_FALSE(v.find("rectangular_part")->passed);
  EXPECT_EQ(v.rect_length, 0);
  EXPECT_EQ(v.residual_expected, 6);
}

TEST(Numerology, MinimalG24ResidualPoints) {
  const auto v = conjecture_numerology(report_for("G(2,4)"), builtin_collection("minimal_g24"));
  const Check* c = v.find("residual_points");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->applicable);
  EXPECT_TRUE(c->passed);
}

TEST(Numerology, RejectsIndexMismatch) {
  EXPECT_THROW(conjecture_numerology(report_for("P3"), builtin_collection("beilinson", 2)), std::invalid_argument);
}

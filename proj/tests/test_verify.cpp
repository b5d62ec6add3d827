#include <gtest/gtest.h>

#include "weyl/verify.hpp"

using namespace weyl;

namespace {

HomogeneousElement hom(const std::string& text) { return HomogeneousElement::from(parse(text)); }

}  // namespace

TEST(ClosedForms, NLevelNesting) {
  for (const auto& s : {"X^2", "H*X", "H*(H-3)*X^2", "Y", "H^2*Y"}) {
    auto u = hom(s);
    const Box box{4, 6};
    for (int l = 0; l < 4; ++l) {
      auto a = closed_n_level(u, l, box), b = closed_n_level(u, l + 1, box);
      for (const auto& [g, v] : a) EXPECT_LE(v.size(), b[g].size()) << s;
    }
  }
}

TEST(ClosedForms, LevelZeroIsCentralizer) {
  for (const auto& s : {"X", "X^2", "H*X", "H*(H-1)*X^2", "H*(H-3)*X^2", "Y", "H^2"}) {
    auto u = hom(s);
    const Box box{6, 8};
    EXPECT_TRUE(detail::blocks_agree(closed_n_level(u, 0, box), closed_centralizer(u, box), box.degree)) << s;
  }
}

TEST(VerifyElement, HXAllPass) {
  auto results = verify_element(hom("H*X"), "H*X", {3, Box{4, 6}, 2});
  EXPECT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_EQ(r.verdict, Verdict::Pass) << r.claim << ": " << r.closed_form << " vs " << r.oracle;
}

TEST(VerifyElement, SmallBoxIsFlagged) {
  auto results = verify_element(hom("H*X"), "H*X", {4, Box{1, 1}, 0});
  bool inconclusive = false;
  for (const auto& r : results) {
    EXPECT_NE(r.verdict, Verdict::Fail) << r.claim;
    if (!r.saturated) {
      EXPECT_EQ(r.verdict, Verdict::Inconclusive);
      inconclusive = true;
    }
  }
  EXPECT_TRUE(inconclusive);
}

TEST(VerifyElement, ScalarRejected) { EXPECT_THROW(verify_element(hom("3"), "3"), PreconditionError); }

TEST(VerifySuite, StandardSuitePasses) {
  auto results = verify_suite(standard_suite(), {3, Box{6, 8}, 2});
  ASSERT_FALSE(results.empty());
  EXPECT_EQ(results.front().element, "X");
  for (const auto& r : results)
    EXPECT_EQ(r.verdict, Verdict::Pass) << r.element << " " << r.claim << ": " << r.closed_form << " vs " << r.oracle
                                        << " box " << to_string(r.box);
}

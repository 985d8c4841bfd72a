#include "baxter/tree.hpp"

#include <map>
#include <set>

#include "baxter/congruence.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace baxter;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// Test oracle: the literal leaves-upward construction of the top tree.
// n+1 leaves sit on a line with the gaps labeled 1..n; each entry of x
// joins the two subtrees adjacent to its gap label.
std::string rho_t_literal(const Permutation& x) {
  const int n = x.size();
  std::vector<std::string> items(static_cast<size_t>(n) + 1, "");  // leaf encodings
  std::vector<int> gaps(static_cast<size_t>(n));
  std::iota(gaps.begin(), gaps.end(), 1);
  for (int i = 0; i < n; ++i) {
    size_t j = 0;
    while (gaps[j] != x[i]) ++j;
    items[j] = "(" + items[j] + ")" + items[j + 1];
    items.erase(items.begin() + static_cast<long>(j) + 1);
    gaps.erase(gaps.begin() + static_cast<long>(j));
  }
  return items[0];
}

TEST(Encoding, SplitAndValidate) {
  EXPECT_EQ(PlanarBinaryTree::leaf(TreeOrientation::top).size(), 0);
  PlanarBinaryTree t(TreeOrientation::top, "(())()");
  EXPECT_EQ(t.size(), 3);
  auto [l, r] = PlanarBinaryTree::split(t.encoding());
  EXPECT_EQ(l, "()");
  EXPECT_EQ(r, "()");
  EXPECT_THROW(PlanarBinaryTree(TreeOrientation::top, "(()"), InvalidInput);
  EXPECT_THROW(PlanarBinaryTree(TreeOrientation::top, ")("), InvalidInput);
  EXPECT_THROW(PlanarBinaryTree(TreeOrientation::top, "(a)"), InvalidInput);
}

TEST(RhoMaps, SingleElement) {
  EXPECT_EQ(rho_t(P("1")).encoding(), "()");
  EXPECT_EQ(rho_b(P("1")).encoding(), "()");
  EXPECT_EQ(rho_t(Permutation()).encoding(), "");
  EXPECT_EQ(rho_b(Permutation()).encoding(), "");
}

TEST(RhoMaps, TopMatchesLiteralConstruction) {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& x) {
      ASSERT_EQ(rho_t(x).encoding(), rho_t_literal(x)) << x.str();
    });
  }
  Permutation big = P("467198352");
  EXPECT_EQ(rho_t(big).encoding(), rho_t_literal(big));
  EXPECT_EQ(rho_t(big).encoding(), "(())(()())((()))()");
  EXPECT_EQ(rho_b(big).encoding(), "(()(()))(())()(())");
}

TEST(RhoMaps, ImageCountsAreCatalan) {
  const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> top, bottom;
    for_each_permutation(n, [&](const Permutation& x) {
      top.insert(rho_t(x).encoding());
      bottom.insert(rho_b(x).encoding());
    });
    EXPECT_EQ(static_cast<long long>(top.size()), catalan[n]) << n;
    EXPECT_EQ(static_cast<long long>(bottom.size()), catalan[n]) << n;
    EXPECT_EQ(static_cast<long long>(all_tree_encodings(n).size()), catalan[n]) << n;
    // The images exhaust all trees of that size.
    auto all = all_tree_encodings(n);
    EXPECT_EQ(top, std::set<std::string>(all.begin(), all.end()));
  }
}

TEST(RhoMaps, FibersOnS3) {
  EXPECT_NE(rho_b(P("213")), rho_b(P("231")));
  std::map<std::string, std::set<Permutation>> fibers;
  for_each_permutation(3, [&](const Permutation& x) { fibers[rho_b(x).encoding()].insert(x); });
  EXPECT_EQ(fibers.size(), 5u);
}

// Fibers of rho_b are the 231-congruence classes; fibers of rho_t the
// 312-classes.
TEST(RhoMaps, FibersAreCongruenceClasses) {
  for (int n = 0; n <= 7; ++n) {
    std::map<Permutation, std::string> bmin, tmin;
    for_each_permutation(n, [&](const Permutation& x) {
      Permutation r231 = project_down(x, CongruenceKind::C231);
      Permutation r312 = project_down(x, CongruenceKind::C312);
      std::string be = rho_b(x).encoding(), te = rho_t(x).encoding();
      auto [bi, bfresh] = bmin.emplace(r231, be);
      if (!bfresh) ASSERT_EQ(bi->second, be) << x.str();
      auto [ti, tfresh] = tmin.emplace(r312, te);
      if (!tfresh) ASSERT_EQ(ti->second, te) << x.str();
      // Same tree implies same class: minimal representatives are
      // injective into trees.
      ASSERT_EQ(rho_b(r231).encoding(), be);
      ASSERT_EQ(rho_t(r312).encoding(), te);
    });
    // Injectivity: distinct class representatives map to distinct trees.
    std::set<std::string> distinct;
    for (auto& [rep, enc] : bmin) ASSERT_TRUE(distinct.insert(enc).second);
    distinct.clear();
    for (auto& [rep, enc] : tmin) ASSERT_TRUE(distinct.insert(enc).second);
  }
}

TEST(RhoMaps, FiberExtremesAvoidPatterns) {
  const auto p231 = VincularPattern::parse("2-3-1");
  const auto p213 = VincularPattern::parse("2-1-3");
  const auto p312 = VincularPattern::parse("3-1-2");
  const auto p132 = VincularPattern::parse("1-3-2");
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& x) {
      ASSERT_FALSE(contains_vincular(project_down(x, CongruenceKind::C231), p231));
      ASSERT_FALSE(contains_vincular(project_up(x, CongruenceKind::C231), p213));
      ASSERT_FALSE(contains_vincular(project_down(x, CongruenceKind::C312), p312));
      ASSERT_FALSE(contains_vincular(project_up(x, CongruenceKind::C312), p132));
    });
  }
}

TEST(Drawing, SmallCases) {
  // Vertical strips of size 2: the bottom tree contributes the wall part
  // below the antidiagonal, the top tree the part above.
  auto segs_b = rotated_drawing(rho_b(P("12")));
  EXPECT_TRUE(std::count(segs_b.begin(), segs_b.end(), GridSegment{true, 1, 0, 1}) == 1);
  auto segs_t = rotated_drawing(rho_t(P("12")));
  EXPECT_TRUE(std::count(segs_t.begin(), segs_t.end(), GridSegment{true, 1, 1, 2}) == 1);
}

}  // namespace

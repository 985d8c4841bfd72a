#include "baxter/congruence.hpp"

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace baxter;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

const CongruenceKind kAll[] = {CongruenceKind::C231, CongruenceKind::C312, CongruenceKind::CSUB,
                               CongruenceKind::CTB, CongruenceKind::C3412};

TEST(Moves, Examples) {
  auto ms = down_moves(P("3412"), CongruenceKind::CTB);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].first.kind, MoveKind::m3412_3142);
  EXPECT_EQ(ms[0].second, P("3142"));

  for (CongruenceKind k : kAll) EXPECT_TRUE(down_moves(Permutation::identity(5), k).empty());

  auto m231 = down_moves(P("231"), CongruenceKind::C231);
  ASSERT_EQ(m231.size(), 1u);
  EXPECT_EQ(m231[0].first.kind, MoveKind::m231_213);
  EXPECT_EQ(m231[0].second, P("213"));
}

TEST(Moves, UpDownAreInverse) {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& y) {
      for (CongruenceKind k : kAll) {
        for (auto& [m, x] : down_moves(y, k)) {
          ASSERT_TRUE(weak_leq(x, y));
          bool found = false;
          for (auto& [mu, back] : up_moves(x, k))
            if (back == y) found = true;
          ASSERT_TRUE(found) << y.str() << " " << congruence_name(k);
        }
      }
    });
  }
}

// The direct value-gap condition for CSUB equals the union of 231- and
// 312-move applicability.
TEST(Moves, SubIsUnionOfSingletonMoves) {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& y) {
      std::set<Permutation> sub, uni;
      for (auto& [m, x] : down_moves(y, CongruenceKind::CSUB)) sub.insert(x);
      for (auto& [m, x] : down_moves(y, CongruenceKind::C231)) uni.insert(x);
      for (auto& [m, x] : down_moves(y, CongruenceKind::C312)) uni.insert(x);
      ASSERT_EQ(sub, uni) << y.str();
    });
  }
}

TEST(Projections, Examples) {
  EXPECT_EQ(project_down(P("3412"), CongruenceKind::CTB), P("3142"));
  EXPECT_EQ(project_up(P("3142"), CongruenceKind::C3412), P("3412"));
  // Fixed points of the projection are the pattern-avoiding members.
  EXPECT_EQ(project_down(P("2143"), CongruenceKind::CTB), P("2143"));
  EXPECT_EQ(project_down(Permutation(), CongruenceKind::CTB), Permutation());
}

TEST(Projections, OutputAvoidance) {
  const auto p3412 = VincularPattern::parse("3-41-2");
  const auto p2413 = VincularPattern::parse("2-41-3");
  const auto p3142 = VincularPattern::parse("3-14-2");
  const auto p2143 = VincularPattern::parse("2-14-3");
  const auto p231 = VincularPattern::parse("2-3-1");
  const auto p312 = VincularPattern::parse("3-1-2");
  const auto p213 = VincularPattern::parse("2-1-3");
  const auto p132 = VincularPattern::parse("1-3-2");
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& x) {
      ASSERT_TRUE(is_twisted_baxter(project_down(x, CongruenceKind::CTB)));
      ASSERT_FALSE(contains_vincular(project_down(x, CongruenceKind::C231), p231));
      ASSERT_FALSE(contains_vincular(project_down(x, CongruenceKind::C312), p312));
      ASSERT_FALSE(contains_vincular(project_up(x, CongruenceKind::C3412), p3142));
      ASSERT_FALSE(contains_vincular(project_down(x, CongruenceKind::C3412), p3412));
      ASSERT_FALSE(contains_vincular(project_up(x, CongruenceKind::C231), p213));
      ASSERT_FALSE(contains_vincular(project_up(x, CongruenceKind::C312), p132));
      Permutation top = project_up(x, CongruenceKind::CTB);
      ASSERT_FALSE(contains_vincular(top, p3142));
      ASSERT_FALSE(contains_vincular(top, p2143));
      // NSym representatives: each entry at most one more than its right
      // neighbor.
      Permutation nsym = project_down(x, CongruenceKind::CSUB);
      for (int i = 0; i + 1 < n; ++i) ASSERT_LE(nsym[i], nsym[i + 1] + 1);
    });
  }
}

// Any down-move strategy reaches the same minimum.
TEST(Projections, Confluence) {
  auto project_rightmost = [](Permutation y, CongruenceKind k) {
    for (;;) {
      auto ms = down_moves(y, k);
      if (ms.empty()) return y;
      y = ms.back().second;
    }
  };
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& y) {
      for (CongruenceKind k : kAll)
        ASSERT_EQ(project_down(y, k), project_rightmost(y, k)) << y.str();
    });
  }
}

TEST(Projections, IdempotentAndOrderPreserving) {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& y) {
      for (CongruenceKind k : kAll) {
        Permutation d = project_down(y, k);
        ASSERT_EQ(project_down(d, k), d);
        Permutation u = project_up(y, k);
        ASSERT_EQ(project_up(u, k), u);
        for (const Permutation& z : weak_covers_up(y)) {
          ASSERT_TRUE(weak_leq(project_down(y, k), project_down(z, k)));
          ASSERT_TRUE(weak_leq(project_up(y, k), project_up(z, k)));
        }
      }
    });
  }
}

TEST(Classes, Examples) {
  EXPECT_EQ(congruence_class(P("532641"), CongruenceKind::CTB),
            (std::set<Permutation>{P("532641"), P("536241"), P("563241")}));
  for (CongruenceKind k : kAll)
    EXPECT_EQ(congruence_class(Permutation::identity(4), k),
              std::set<Permutation>{Permutation::identity(4)});
  EXPECT_EQ(congruence_class(P("3412"), CongruenceKind::C3412),
            (std::set<Permutation>{P("3412"), P("3142")}));
}

// Classes partition S_n, are weak-order intervals, and agree with the
// projections.
TEST(Classes, PartitionIntoIntervals) {
  for (int n = 0; n <= 7; ++n) {
    auto all = all_permutations(n);
    for (CongruenceKind k : kAll) {
      std::map<Permutation, Permutation> rep;  // element -> class minimum
      for (const auto& x : all) rep.emplace(x, project_down(x, k));
      std::map<Permutation, std::set<Permutation>> classes;
      for (const auto& [x, r] : rep) classes[r].insert(x);
      size_t total = 0;
      for (auto& [min_elt, members] : classes) {
        total += members.size();
        Permutation max_elt = project_up(min_elt, k);
        ASSERT_TRUE(members.count(max_elt));
        ASSERT_EQ(congruence_class(min_elt, k), members);
        for (const auto& m : members) {
          ASSERT_TRUE(weak_leq(min_elt, m));
          ASSERT_TRUE(weak_leq(m, max_elt));
          ASSERT_EQ(project_up(m, k), max_elt);
        }
        // Interval: everything weak-order between min and max belongs.
        if (n <= 6) {
          for (const auto& z : all)
            if (weak_leq(min_elt, z) && weak_leq(z, max_elt))
              ASSERT_TRUE(members.count(z)) << z.str();
        }
      }
      ASSERT_EQ(total, all.size());
    }
  }
}

// Same CTB class exactly when same C231 class and same C312 class.
TEST(Classes, TbIsMeetOf231And312) {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& x) {
      Permutation tb = project_down(x, CongruenceKind::CTB);
      Permutation a = project_down(x, CongruenceKind::C231);
      Permutation b = project_down(x, CongruenceKind::C312);
      Permutation tb2 = project_down(tb, CongruenceKind::C231);
      ASSERT_EQ(tb2, a);
      ASSERT_EQ(project_down(tb, CongruenceKind::C312), b);
    });
    // Distinct (231,312)-key pairs must give distinct CTB keys.
    std::map<std::pair<Permutation, Permutation>, std::set<Permutation>> by_pair;
    for_each_permutation(n, [&](const Permutation& x) {
      by_pair[{project_down(x, CongruenceKind::C231), project_down(x, CongruenceKind::C312)}]
          .insert(project_down(x, CongruenceKind::CTB));
    });
    for (auto& [key, tbs] : by_pair) ASSERT_EQ(tbs.size(), 1u);
  }
}

// CSUB classes are the join: the finest common coarsening of the C231 and
// C312 partitions; equivalently the fibers of sigma.
TEST(Classes, SubIsJoinAndSigmaFibers) {
  for (int n = 0; n <= 7; ++n) {
    auto all = all_permutations(n);
    std::map<Permutation, int> index;
    for (size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);
    // Union-find over the union of the two congruences.
    std::vector<int> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
      return parent[static_cast<size_t>(v)] == v
                 ? v
                 : parent[static_cast<size_t>(v)] = find(parent[static_cast<size_t>(v)]);
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    for (CongruenceKind k : {CongruenceKind::C231, CongruenceKind::C312}) {
      std::map<Permutation, int> head;
      for (const auto& x : all) {
        Permutation r = project_down(x, k);
        auto [it, fresh] = head.emplace(r, index[x]);
        if (!fresh) unite(index[x], it->second);
      }
    }
    for (const auto& x : all)
      for (const auto& y : all) {
        bool same_sub = project_down(x, CongruenceKind::CSUB) ==
                        project_down(y, CongruenceKind::CSUB);
        bool same_component = find(index[x]) == find(index[y]);
        bool same_sigma = sigma(x) == sigma(y);
        ASSERT_EQ(same_sub, same_component);
        ASSERT_EQ(same_sub, same_sigma);
      }
  }
}

// Every C3412 class sits inside a CTB class.
TEST(Classes, Refinement3412InTb) {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& x) {
      ASSERT_EQ(project_down(project_down(x, CongruenceKind::C3412), CongruenceKind::CTB),
                project_down(x, CongruenceKind::CTB));
    });
  }
}

TEST(Counting, ProjectionFixedPointsAreBaxterNumbers) {
  const long long expected[] = {1, 1, 2, 6, 22, 92, 422, 2074, 10754, 58202};
  for (int n = 0; n <= 8; ++n) {
    long long fixed = 0;
    for_each_permutation(n, [&](const Permutation& x) {
      if (project_down(x, CongruenceKind::CTB) == x) ++fixed;
    });
    EXPECT_EQ(fixed, expected[n]) << n;
  }
  // n = 9 via the equivalent no-applicable-move form.
  long long fixed9 = 0;
  for_each_permutation(9, [&](const Permutation& x) {
    if (down_moves(x, CongruenceKind::CTB).empty()) ++fixed9;
  });
  EXPECT_EQ(fixed9, expected[9]);
}

TEST(Parsing, CongruenceNames) {
  EXPECT_EQ(parse_congruence("231"), CongruenceKind::C231);
  EXPECT_EQ(parse_congruence("tb"), CongruenceKind::CTB);
  EXPECT_EQ(parse_congruence("3412"), CongruenceKind::C3412);
  EXPECT_THROW(parse_congruence("x"), InvalidInput);
}

}  // namespace

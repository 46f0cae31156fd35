#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sesqui/diagram.hpp"
#include "sesqui/notation.hpp"

namespace sesqui {
namespace {

SimpleDiagram D(const char* s) { return parse_notation(s); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::UnknownCell;
}

TEST(Validate, ThreeStringsThreeDots) {
  auto d = validate_diagram(2, {{3}, {1, 3, 1}});
  EXPECT_EQ(d.lengths(), (std::vector<int>{1, 3, 3}));
  EXPECT_EQ(d.parents(1), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(d.parents(2), (std::vector<int>{1, 3, 1}));
}

TEST(Validate, UnitOne) {
  auto d = validate_diagram(1, {{0}});
  EXPECT_EQ(d.lengths(), (std::vector<int>{1, 0}));
  EXPECT_EQ(d, unit_diagram(1));
}

TEST(Validate, Errors) {
  EXPECT_EQ(kind_of([] { validate_diagram(2, {{2}, {3}}); }), ErrorKind::OutOfRangeParent);
  EXPECT_EQ(kind_of([] { SimpleDiagram({{}, {1}}); }), ErrorKind::NonEmptyOverEmpty);
}

TEST(Validate, DegenerateMidLevelsAreValid) {
  auto d = D("(2,(),())");
  EXPECT_EQ(d.lengths(), (std::vector<int>{1, 2, 0, 0}));
}

TEST(SourceTarget, Truncates) {
  EXPECT_EQ(source_target(D("(3,(1,3,1))")), D("(3)"));
  EXPECT_EQ(source_target(unit_diagram(2)), D("(1)"));
  EXPECT_EQ(source_target(identity_diagram(3)), identity_diagram(2));
  EXPECT_EQ(kind_of([] { source_target(SimpleDiagram()); }), ErrorKind::DimZero);
}

TEST(Generators, Binary) {
  EXPECT_EQ(comp_diagram(2, 1), D("(2,(2))"));
  EXPECT_EQ(comp_diagram(1, 2), D("(2,(1))"));
  EXPECT_EQ(comp_diagram(1, 1), D("(2)"));
  EXPECT_EQ(comp_diagram(2, 2), D("(1,(1,1))"));
  EXPECT_EQ(comp_diagram(1, 3), D("(2,(1),(1))"));
  EXPECT_EQ(comp_diagram(3, 2), D("(1,(1,1),(2))"));
}

TEST(Generators, UnitsIdentitiesBlocks) {
  EXPECT_EQ(unit_diagram(1), D("(0)"));
  EXPECT_EQ(unit_diagram(2), D("(1,())"));
  EXPECT_EQ(identity_diagram(0), SimpleDiagram());
  EXPECT_EQ(identity_diagram(2), D("(1,(1))"));
  EXPECT_EQ(generator(GeneratorSpec::block(2, 1, 3, 2)), D("(3,(2))"));
  EXPECT_EQ(block_diagram(2, 2, 3), D("(1,(1,1,1))"));
  EXPECT_EQ(kind_of([] { block_diagram(2, 1, 3, 4); }), ErrorKind::BadIndices);
  EXPECT_EQ(kind_of([] { unit_diagram(0); }), ErrorKind::BadIndices);
  EXPECT_EQ(kind_of([] { generator(GeneratorSpec::comp(3, 1), 2); }), ErrorKind::BadIndices);
}

TEST(Restrict, Examples) {
  auto d = D("(3,(1,3,1))");
  EXPECT_EQ(restrict(d, 1, {1, 3}), D("(2,(1,2,1))"));
  EXPECT_EQ(restrict(d, 2, {3}), D("(3,(1))"));
  EXPECT_EQ(kind_of([&] { restrict(d, 1, {1, 2}); }), ErrorKind::ImageNotContained);
}

TEST(Stats, Examples) {
  auto s = stats(D("(3,(1,3,1))"));
  EXPECT_EQ(s.H, 2);
  EXPECT_EQ(s.m, 1);
  EXPECT_EQ(s.M, 2);
  EXPECT_EQ(s.M0, 2);
  EXPECT_TRUE(s.nondegenerate);
  EXPECT_TRUE(s.nontrivial);
  EXPECT_FALSE(s.block);
  EXPECT_FALSE(s.crossing_free);

  auto b = stats(D("(1,(1,1,1))"));
  EXPECT_EQ(b.H, 1);
  EXPECT_EQ(b.m, 2);
  EXPECT_EQ(b.M, 2);
  EXPECT_TRUE(b.block);

  for (int k = 0; k <= 4; ++k) {
    auto i = stats(identity_diagram(k));
    EXPECT_EQ(i.H, 0);
    EXPECT_FALSE(i.nontrivial);
    EXPECT_TRUE(i.crossing_free);
  }

  auto u = stats(unit_diagram(3));
  EXPECT_EQ(u.M0, 2);
  EXPECT_FALSE(u.nondegenerate);
}

TEST(Stats, ConsistencyOverEnumeration) {
  for (int k = 0; k <= 3; ++k)
    for_each_diagram(k, 7, [&](const SimpleDiagram& d) {
      auto s = stats(d);
      EXPECT_EQ(s.nondegenerate, s.M0 == d.dim());
      if (s.block) {
        EXPECT_TRUE(s.nontrivial);
        EXPECT_EQ(s.m, s.M);
      }
      bool all_small = true;
      for (int i = 1; i <= d.dim(); ++i) all_small = all_small && d.length(i) <= 1;
      EXPECT_EQ(s.H == 0, all_small);
    });
}

TEST(Pi, Examples) {
  EXPECT_EQ(pi(D("(3,(1,3,1))")), D("(3,(1,1,3))"));
  // Both level-3 cells sit over old cell 1 of level 2, which the sort moves to position 2.
  EXPECT_EQ(pi(D("(2,(2,1),(1,1))")), D("(2,(1,2),(2,2))"));
  EXPECT_EQ(pi(D("(2,(1,2),(2,2))")), D("(2,(1,2),(2,2))"));
}

TEST(Pi, IdempotentAndLengthPreserving) {
  for (int k = 0; k <= 3; ++k)
    for_each_diagram(k, 7, [&](const SimpleDiagram& d) {
      auto p = pi(d);
      EXPECT_TRUE(p.is_pasting());
      EXPECT_EQ(p.lengths(), d.lengths());
      EXPECT_EQ(pi(p), p);
      if (d.is_pasting()) EXPECT_EQ(p, d);
    });
}

TEST(Fiber, ThreeOverOneChain) {
  auto f = fiber(D("(3,(1,1,3))"));
  std::set<SimpleDiagram> got(f.begin(), f.end());
  std::set<SimpleDiagram> want{D("(3,(1,1,3))"), D("(3,(1,3,1))"), D("(3,(3,1,1))")};
  EXPECT_EQ(got, want);
  EXPECT_EQ(f.size(), 3u);
}

TEST(Fiber, IdentityIsSingleton) {
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(fiber(identity_diagram(k)), std::vector<SimpleDiagram>{identity_diagram(k)});
}

TEST(Fiber, RejectsCrossings) { EXPECT_EQ(kind_of([] { fiber(D("(2,(2,1))")); }), ErrorKind::NotPasting); }

TEST(Fiber, PartitionMatchesBruteForce) {
  for (int k = 0; k <= 3; ++k) {
    std::map<SimpleDiagram, std::set<SimpleDiagram>> by_pi;
    for_each_diagram(k, 8, [&](const SimpleDiagram& d) { by_pi[pi(d)].insert(d); });
    for (const auto& [p, members] : by_pi) {
      auto f = fiber(p);
      EXPECT_EQ(std::set<SimpleDiagram>(f.begin(), f.end()), members);
    }
  }
}

TEST(Enumerate, DimOne) {
  auto all = enumerate(1, 4);
  std::vector<SimpleDiagram> want{D("(0)"), D("(1)"), D("(2)"), D("(3)")};
  EXPECT_EQ(all, want);
}

TEST(Enumerate, CountsAndOrder) {
  auto all = enumerate(2, 5);
  std::set<SimpleDiagram> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), all.size());
  // lengths lexicographic first
  for (std::size_t i = 1; i < all.size(); ++i) {
    auto a = all[i - 1].lengths(), b = all[i].lengths();
    EXPECT_TRUE(a < b || (a == b && all[i - 1].all_parents() < all[i].all_parents()));
  }
}

TEST(BlockDecompose, TopLevelCase) {
  auto r = block_decompose(D("(3,(1,3,1))"));
  EXPECT_EQ(r.block, D("(1,(1,1,1))"));
  EXPECT_EQ(r.parts, (std::vector<SimpleDiagram>{D("(3,(1))"), D("(3,(3))"), D("(3,(1))")}));
}

TEST(BlockDecompose, LowerLevelCase) {
  // M = 2 < k = 3, p = v^3(1) = 2.
  auto r = block_decompose(D("(2,(1,2),(2))"));
  EXPECT_EQ(r.block, D("(1,(1,1),(2))"));
  EXPECT_EQ(r.parts, (std::vector<SimpleDiagram>{D("(2,(1))"), D("(2,(2),(1))")}));
}

TEST(BlockDecompose, Errors) {
  EXPECT_EQ(kind_of([] { block_decompose(D("(2,(2),(1))")); }), ErrorKind::AlreadyBlock);
  EXPECT_EQ(kind_of([] { block_decompose(identity_diagram(2)); }), ErrorKind::TrivialDiagram);
  EXPECT_EQ(kind_of([] { block_decompose(D("(2,())")); }), ErrorKind::TrivialDiagram);
}

TEST(BlockDecompose, PartsAreLowerAndNontrivial) {
  for (int k = 1; k <= 3; ++k)
    for_each_diagram(k, 7, [&](const SimpleDiagram& d) {
      auto s = stats(d);
      if (!s.nontrivial || s.block) return;
      auto r = block_decompose(d);
      auto bs = stats(r.block);
      EXPECT_TRUE(bs.block);
      EXPECT_EQ(bs.m, s.M);
      EXPECT_EQ(static_cast<int>(r.parts.size()), d.length(*s.M));
      for (const auto& part : r.parts) {
        auto ps = stats(part);
        ASSERT_TRUE(ps.nontrivial) << print_notation(d);
        EXPECT_LT(*ps.M, *s.M);
      }
    });
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(D("(2)")), D("(1,(1,1))"));
  EXPECT_EQ(shift(D("(2,(1))")), D("(1,(1,1),(1))"));
  EXPECT_EQ(shift(SimpleDiagram()), D("(1)"));
  EXPECT_EQ(kind_of([] { shift(D("(2,(1))"), 2); }), ErrorKind::ExceedsMaxDim);
}

TEST(Shift, RaisesNontrivialLevels) {
  for (int k = 0; k <= 3; ++k)
    for_each_diagram(k, 6, [&](const SimpleDiagram& d) {
      auto s = stats(d), t = stats(shift(d));
      EXPECT_EQ(s.H, t.H);
      if (s.m) {
        EXPECT_EQ(*t.m, *s.m + 1);
        EXPECT_EQ(*t.M, *s.M + 1);
      }
    });
}

TEST(Shift, GeneratorsShiftToGenerators) {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(shift(comp_diagram(i, j)), comp_diagram(i + 1, j + 1));
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(shift(unit_diagram(k)), unit_diagram(k + 1));
}

}  // namespace
}  // namespace sesqui

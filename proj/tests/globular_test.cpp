#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sample_sets.hpp"
#include "sesqui/globular.hpp"
#include "sesqui/labelling.hpp"
#include "sesqui/monad.hpp"
#include "sesqui/notation.hpp"

namespace sesqui {
namespace {

SimpleDiagram D(const char* s) { return parse_notation(s); }

std::vector<int> counts(const GlobularSet& g) {
  std::vector<int> out;
  for (int d = 0; d <= g.n(); ++d) out.push_back(g.count(d));
  return out;
}

using samples::whisker_set;

TEST(Hat, CompTwoOne) {
  auto h = hat(comp_diagram(2, 1));
  EXPECT_EQ(counts(h), (std::vector<int>{3, 3, 1}));
  h.check_globular();
  Cell eta = cell(h, "x2_1");
  EXPECT_EQ(cell_source(eta).name(), "x1_2");
  EXPECT_EQ(cell_source(cell(h, "x1_2")).name(), "t(x1_1)");
}

TEST(Hat, IdentityIsGlobe) {
  for (int k = 0; k <= 4; ++k) {
    std::vector<int> want(static_cast<std::size_t>(k), 2);
    want.push_back(1);
    EXPECT_EQ(counts(hat(identity_diagram(k))), want);
  }
}

TEST(Hat, CompKK) {
  // C_k glued to C_k along C_{k-1}
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> want(static_cast<std::size_t>(k - 1), 2);
    want.push_back(3);
    want.push_back(2);
    EXPECT_EQ(counts(hat(comp_diagram(k, k))), want);
  }
}

TEST(Hat, MatchesPushoutOracle) {
  for (int k = 0; k <= 3; ++k)
    for_each_diagram(k, 7, [&](const SimpleDiagram& d) {
      auto h = hat(d);
      h.check_globular();
      EXPECT_EQ(counts(h), oracle::hat_counts(d)) << print_notation(d);
      EXPECT_EQ(h.count(k), d.length(k));
    });
}

TEST(Hat, DependsOnlyOnPi) {
  for (int k = 1; k <= 3; ++k)
    for_each_diagram(k, 7, [&](const SimpleDiagram& d) {
      auto sigma = pi_permutation(d);
      auto a = hat(d), b = hat(pi(d));
      auto rename = [&](const std::string& name) {
        // x{m}_{i} or t(x{m}_{i})
        bool t = name[0] == 't';
        std::string core = t ? name.substr(2, name.size() - 3) : name;
        auto us = core.find('_');
        int m = std::stoi(core.substr(1, us - 1)), i = std::stoi(core.substr(us + 1));
        int j = sigma[static_cast<std::size_t>(m)][static_cast<std::size_t>(i - 1)];
        return t ? hat_target_name(m, j) : hat_cell_name(m, j);
      };
      for (int dm = 1; dm <= a.n(); ++dm)
        for (int i = 0; i < a.count(dm); ++i) {
          Cell ca{&a, dm, i};
          Cell cb = cell(b, rename(ca.name()));
          EXPECT_EQ(cell_source(cb).name(), rename(cell_source(ca).name()));
          EXPECT_EQ(cell_target(cb).name(), rename(cell_target(ca).name()));
        }
    });
}

TEST(MinGenerating, Examples) {
  auto h = hat(comp_diagram(2, 1));
  auto mins = min_generating(h);
  ASSERT_EQ(mins.size(), 3u);
  EXPECT_TRUE(mins[0].empty());
  ASSERT_EQ(mins[1].size(), 1u);
  EXPECT_EQ(h.name(1, mins[1][0]), "x1_1");
  ASSERT_EQ(mins[2].size(), 1u);
  EXPECT_EQ(h.name(2, mins[2][0]), "x2_1");

  for (int k = 0; k <= 4; ++k) {
    auto g = hat(identity_diagram(k));
    auto mk = min_generating(g);
    for (int d = 0; d < k; ++d) EXPECT_TRUE(mk[static_cast<std::size_t>(d)].empty());
    EXPECT_EQ(mk[static_cast<std::size_t>(k)].size(), 1u);
  }
}

TEST(MinGenerating, AttachedCellsOutsideImage) {
  for (int k = 0; k <= 3; ++k)
    for_each_diagram(k, 7, [&](const SimpleDiagram& d) {
      auto h = hat(d);
      auto mins = min_generating(h);
      std::set<std::string> got, want;
      for (int m = 0; m <= k; ++m)
        for (int i : mins[static_cast<std::size_t>(m)]) got.insert(h.name(m, i));
      for (auto [m, i] : min_cells(d)) want.insert(hat_cell_name(m, i));
      EXPECT_EQ(got, want) << print_notation(d);
    });
}

std::set<std::pair<int, int>> closure(const GlobularSet& g, std::set<std::pair<int, int>> cells) {
  std::vector<std::pair<int, int>> stack(cells.begin(), cells.end());
  while (!stack.empty()) {
    auto [d, i] = stack.back();
    stack.pop_back();
    if (d == 0) continue;
    for (int b : {g.source(d, i), g.target(d, i)})
      if (cells.insert({d - 1, b}).second) stack.push_back({d - 1, b});
  }
  return cells;
}

TEST(MinGenerating, IsMinimal) {
  for (int k = 0; k <= 3; ++k)
    for_each_diagram(k, 6, [&](const SimpleDiagram& d) {
      auto h = hat(d);
      auto mins = min_generating(h);
      std::set<std::pair<int, int>> all, gen;
      for (int m = 0; m <= h.n(); ++m) {
        for (int i = 0; i < h.count(m); ++i) all.insert({m, i});
        for (int i : mins[static_cast<std::size_t>(m)]) gen.insert({m, i});
      }
      EXPECT_EQ(closure(h, gen), all);
      for (auto c : gen) {
        auto smaller = gen;
        smaller.erase(c);
        EXPECT_NE(closure(h, smaller), all);
      }
    });
}

TEST(Labelling, ValidateWhiskering) {
  auto X = whisker_set();
  auto c = [&](const char* n) { return cell(X, n); };
  auto L = validate_labelling<Cell>(comp_diagram(2, 1), {{c("x")}, {c("f"), c("g")}, {c("eta")}});
  EXPECT_EQ(L.label(2, 1).name(), "eta");
  try {
    validate_labelling<Cell>(comp_diagram(2, 1), {{c("x")}, {c("f"), c("g")}, {c("eta2")}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SourceMismatch);
    EXPECT_EQ(e.level(), 2);
    EXPECT_EQ(e.position(), 1);
  }
}

TEST(Labelling, UnitTower) {
  auto X = whisker_set();
  auto L = eta(cell(X, "eta"));
  EXPECT_EQ(L.diagram, identity_diagram(2));
  EXPECT_EQ(L.label(1, 1).name(), "g");
  EXPECT_EQ(L.label(0, 1).name(), "y");
  EXPECT_NO_THROW(validate_labelling(L.diagram, L.labels));
  EXPECT_EQ(labelling_source(L), eta(cell(X, "g")));
  EXPECT_EQ(eta(cell(X, "x")).diagram, SimpleDiagram());
}

TEST(Labelling, ExpandMin) {
  auto X = whisker_set();
  std::map<std::pair<int, int>, Cell> mins{{{1, 1}, cell(X, "f")}, {{2, 1}, cell(X, "eta")}};
  auto L = expand_min_labelling(comp_diagram(2, 1), mins);
  std::vector<std::vector<Cell>> want{{cell(X, "x")}, {cell(X, "f"), cell(X, "g")}, {cell(X, "eta")}};
  EXPECT_EQ(L.labels, want);

  auto full = expand_min_labelling(identity_diagram(2), std::map<std::pair<int, int>, Cell>{{{2, 1}, cell(X, "eta2")}});
  EXPECT_EQ(full, eta(cell(X, "eta2")));

  GlobularSet Y = whisker_set();
  Y.add(0, "w");
  Y.add(1, "h", "x", "w");
  std::map<std::pair<int, int>, Cell> bad{{{1, 1}, cell(Y, "h")}, {{2, 1}, cell(Y, "eta")}};
  try {
    expand_min_labelling(comp_diagram(2, 1), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotExtendable);
  }
}

TEST(Labelling, SourceAndTarget) {
  auto X = whisker_set();
  auto c = [&](const char* n) { return cell(X, n); };
  auto L = validate_labelling<Cell>(comp_diagram(2, 1), {{c("x")}, {c("f"), c("g")}, {c("eta")}});
  auto t = labelling_target(L);
  EXPECT_EQ(t.diagram, D("(2)"));
  EXPECT_EQ(t.labels, (std::vector<std::vector<Cell>>{{c("x")}, {c("f"), c("g2")}}));
  auto s = labelling_source(L);
  EXPECT_EQ(s.labels, (std::vector<std::vector<Cell>>{{c("x")}, {c("f"), c("g")}}));
  EXPECT_EQ(labelling_source(s), labelling_source(t));
  EXPECT_EQ(labelling_target(s), labelling_target(t));
}

TEST(Labelling, PropertiesOverEnumeration) {
  auto X = samples::loop_set();
  int seen = 0;
  for (int k = 0; k <= 3; ++k)
    for_each_diagram(k, 6, [&](const SimpleDiagram& d) {
      for_each_labelling(d, X, [&](const Labelling& L) {
        ++seen;
        EXPECT_EQ(expand_min_labelling(d, restrict_to_min(L)), L);
        if (k >= 1) {
          auto s = labelling_source(L), t = labelling_target(L);
          EXPECT_NO_THROW(validate_labelling(s.diagram, s.labels));
          EXPECT_NO_THROW(validate_labelling(t.diagram, t.labels));
        }
        if (k >= 2) {
          auto s = labelling_source(L), t = labelling_target(L);
          EXPECT_EQ(labelling_source(s), labelling_source(t));
          EXPECT_EQ(labelling_target(s), labelling_target(t));
        }
      });
    });
  EXPECT_GT(seen, 100);
}

TEST(Labelling, HatLabellingIsValid) {
  for (int k = 0; k <= 3; ++k)
    for_each_diagram(k, 6, [&](const SimpleDiagram& d) {
      auto h = hat(d);
      EXPECT_NO_THROW(hat_labelling(d, h));
    });
}

TEST(Hom, OverGlobe) {
  auto c1 = hat(identity_diagram(1));
  auto h = hom_globular(c1, c1.index_of(0, "x0_1"), c1.index_of(0, "t(x1_1)"));
  EXPECT_EQ(counts(h), (std::vector<int>{1}));
}

TEST(Hom, OverWhiskeringHat) {
  auto g = hat(comp_diagram(2, 1));
  // brute force: all cells z of dim k with s^k z = a, t^k z = b
  auto brute = [&](int a, int b) {
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(g.n()));
    for (int k = 1; k <= g.n(); ++k)
      for (int i = 0; i < g.count(k); ++i) {
        Cell z{&g, k, i};
        if (iterated_source(z, k).index == a && iterated_target(z, k).index == b)
          out[static_cast<std::size_t>(k - 1)].push_back(z.name());
      }
    return out;
  };
  for (int a = 0; a < g.count(0); ++a)
    for (int b = 0; b < g.count(0); ++b) {
      auto h = hom_globular(g, a, b);
      auto want = brute(a, b);
      for (int k = 0; k < g.n(); ++k) EXPECT_EQ(h.count(k) ? h.names(k) : std::vector<std::string>{}, want[static_cast<std::size_t>(k)]);
      h.check_globular();
    }
  auto outer = hom_globular(g, g.index_of(0, "x0_1"), g.index_of(0, "t(x1_2)"));
  EXPECT_EQ(outer.count(0), 0);
  EXPECT_EQ(outer.count(1), 0);
  auto inner = hom_globular(g, g.index_of(0, "t(x1_1)"), g.index_of(0, "t(x1_2)"));
  EXPECT_EQ(inner.names(0), (std::vector<std::string>{"x1_2", "t(x2_1)"}));
  EXPECT_EQ(inner.names(1), (std::vector<std::string>{"x2_1"}));
}

TEST(Hom, DiscreteIsEmpty) {
  GlobularSet g(0);
  g.add(0, "a");
  auto h = hom_globular(g, 0, 0);
  EXPECT_EQ(h.count(0), 0);
}

}  // namespace
}  // namespace sesqui

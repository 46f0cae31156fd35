#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sesqui/diagram.hpp"
#include "sesqui/error.hpp"
#include "sesqui/globular.hpp"
#include "sesqui/labelling.hpp"
#include "sesqui/parse.hpp"
#include "sesqui/term.hpp"

namespace sesqui {

// A finite n-sesquicategory given by operation tables. Cells are indices into
// `cells` within their dimension.
struct SesquiAlgebra {
  GlobularSet cells;
  // comp[{i,j}][{x,y}] = x o_{i,j} y, a max(i,j)-cell
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>> comp;
  // unit[i][x] = u_i(x) for an (i-1)-cell x
  std::map<int, std::map<int, int>> unit;

  int n() const { return cells.n(); }

  bool compatible(int i, int j, int x, int y) const {
    int m = std::min(i, j);
    return iterated_source(Cell{&cells, i, x}, i - m + 1) == iterated_target(Cell{&cells, j, y}, j - m + 1);
  }

  // nullopt when the pair is not composable
  std::optional<int> try_compose(int i, int j, int x, int y) const {
    if (i < 1 || j < 1 || i > n() || j > n()) throw Error(ErrorKind::BadIndices, "no operation o_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    if (!compatible(i, j, x, y)) return std::nullopt;
    auto t = comp.find({i, j});
    if (t != comp.end()) {
      auto e = t->second.find({x, y});
      if (e != t->second.end()) return e->second;
    }
    throw Error(ErrorKind::PartialTable, "o_{" + std::to_string(i) + "," + std::to_string(j) + "} has no entry for (" +
                                             cells.name(i, x) + ", " + cells.name(j, y) + ")");
  }

  int compose(int i, int j, int x, int y) const {
    auto r = try_compose(i, j, x, y);
    if (!r)
      throw Error(ErrorKind::IncompatibleLabels, cells.name(i, x) + " and " + cells.name(j, y) + " do not compose under o_{" +
                                                     std::to_string(i) + "," + std::to_string(j) + "}");
    return *r;
  }

  int unit_of(int i, int x) const {
    auto t = unit.find(i);
    if (t != unit.end()) {
      auto e = t->second.find(x);
      if (e != t->second.end()) return e->second;
    }
    throw Error(ErrorKind::PartialTable, "u_" + std::to_string(i) + " has no entry for " + cells.name(i - 1, x));
  }

  void set_comp(int i, int j, int x, int y, int r) { comp[{i, j}][{x, y}] = r; }
  void set_unit(int i, int x, int r) { unit[i][x] = r; }

  int cell_index(int dim, const std::string& name) const { return cells.index_of(dim, name); }
  const std::string& name(int dim, int idx) const { return cells.name(dim, idx); }
};

// Totality on compatible pairs, nothing on incompatible ones, results in range.
inline void check_tables(const SesquiAlgebra& a) {
  a.cells.check_globular();
  const int n = a.n();
  for (auto& [ij, tab] : a.comp) {
    auto [i, j] = ij;
    if (i < 1 || j < 1 || i > n || j > n)
      throw Error(ErrorKind::PartialTable, "table for o_{" + std::to_string(i) + "," + std::to_string(j) + "} is out of range");
    for (auto& [xy, r] : tab) {
      auto [x, y] = xy;
      if (x < 0 || x >= a.cells.count(i) || y < 0 || y >= a.cells.count(j) || r < 0 || r >= a.cells.count(std::max(i, j)))
        throw Error(ErrorKind::PartialTable, "entry of o_{" + std::to_string(i) + "," + std::to_string(j) + "} names no cell");
      if (!a.compatible(i, j, x, y))
        throw Error(ErrorKind::PartialTable, "o_{" + std::to_string(i) + "," + std::to_string(j) + "} has an entry on the incompatible pair (" +
                                                 a.name(i, x) + ", " + a.name(j, y) + ")");
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int x = 0; x < a.cells.count(i); ++x)
        for (int y = 0; y < a.cells.count(j); ++y) a.try_compose(i, j, x, y);
  for (auto& [i, tab] : a.unit) {
    if (i < 1 || i > n) throw Error(ErrorKind::PartialTable, "table for u_" + std::to_string(i) + " is out of range");
    for (auto& [x, r] : tab)
      if (x < 0 || x >= a.cells.count(i - 1) || r < 0 || r >= a.cells.count(i))
        throw Error(ErrorKind::PartialTable, "entry of u_" + std::to_string(i) + " names no cell");
  }
  for (int i = 1; i <= n; ++i)
    for (int x = 0; x < a.cells.count(i - 1); ++x) a.unit_of(i, x);
}

// ---- the relation checker ----

struct FamilyResult {
  std::string name;
  long instances = 0;
  std::optional<std::string> witness;
  bool passed() const { return !witness; }
};

struct RelationReport {
  std::vector<FamilyResult> families;
  bool passed() const {
    return std::all_of(families.begin(), families.end(), [](const FamilyResult& f) { return f.passed(); });
  }
};

inline const std::vector<std::string>& relation_family_names() {
  static const std::vector<std::string> names{
      "boundary of x o y, |x| > |y|",
      "boundary of x o y, |x| < |y|",
      "boundary of x o y, |x| = |y|",
      "boundary of u(x)",
      "associativity",
      "left distributivity",
      "right distributivity",
      "left unit, |x| < |y|",
      "left unit, |x| >= |y|",
      "right unit, |x| > |y|",
      "right unit, |x| <= |y|",
  };
  return names;
}

namespace detail {

class RelationChecker {
 public:
  explicit RelationChecker(const SesquiAlgebra& a) : a_(a), n_(a.n()) {}

  RelationReport run() {
    RelationReport r;
    const auto& names = relation_family_names();
    std::vector<std::function<void(FamilyResult&)>> fams{
        [&](FamilyResult& f) { boundary(f, 1); },   [&](FamilyResult& f) { boundary(f, -1); },
        [&](FamilyResult& f) { boundary(f, 0); },   [&](FamilyResult& f) { unit_boundary(f); },
        [&](FamilyResult& f) { associativity(f); }, [&](FamilyResult& f) { left_distributivity(f); },
        [&](FamilyResult& f) { right_distributivity(f); }, [&](FamilyResult& f) { left_unit_small(f); },
        [&](FamilyResult& f) { left_unit_large(f); },      [&](FamilyResult& f) { right_unit_small(f); },
        [&](FamilyResult& f) { right_unit_large(f); }};
    for (std::size_t k = 0; k < fams.size(); ++k) {
      FamilyResult f{names[k], 0, std::nullopt};
      fams[k](f);
      r.families.push_back(std::move(f));
    }
    return r;
  }

 private:
  using Opt = std::optional<int>;

  std::string nm(int d, int x) const { return a_.name(d, x); }
  std::string nm(int d, Opt x) const { return x ? a_.name(d, *x) : std::string("undefined"); }
  int src(int d, int x) const { return a_.cells.source(d, x); }
  int tgt(int d, int x) const { return a_.cells.target(d, x); }
  Opt c(int i, int j, Opt x, Opt y) const {
    if (!x || !y) return std::nullopt;
    return a_.try_compose(i, j, *x, *y);
  }
  Opt u(int i, Opt x) const {
    if (!x) return std::nullopt;
    return a_.unit_of(i, *x);
  }
  int count(int d) const { return a_.cells.count(d); }

  static void fail(FamilyResult& f, std::string w) {
    if (!f.witness) f.witness = std::move(w);
  }

  // Both sides are compared wherever at least one is defined.
  template <class At>
  void compare(FamilyResult& f, At&& at, int dim, Opt lhs, Opt rhs) {
    if (!lhs && !rhs) return;
    ++f.instances;
    if (lhs != rhs) fail(f, "at " + at() + ": left side " + nm(dim, lhs) + ", right side " + nm(dim, rhs));
  }

  // sign > 0: |x| > |y|; sign < 0: |x| < |y|; 0: equal
  void boundary(FamilyResult& f, int sign) {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        if ((sign > 0 && i <= j) || (sign < 0 && i >= j) || (sign == 0 && i != j)) continue;
        int k = std::max(i, j);
        for (int x = 0; x < count(i); ++x)
          for (int y = 0; y < count(j); ++y) {
            Opt r = c(i, j, x, y);
            if (!r) continue;
            ++f.instances;
            Opt s, t;
            if (sign > 0) {
              s = c(i - 1, j, src(i, x), y);
              t = c(i - 1, j, tgt(i, x), y);
            } else if (sign < 0) {
              s = c(i, j - 1, x, src(j, y));
              t = c(i, j - 1, x, tgt(j, y));
            } else {
              s = src(j, y);
              t = tgt(i, x);
            }
            auto at = [&] { return "(" + nm(i, x) + ", " + nm(j, y) + ") under o_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };
            if (s != Opt(src(k, *r))) fail(f, "source at " + at() + ": " + nm(k - 1, src(k, *r)) + " but expected " + nm(k - 1, s));
            if (t != Opt(tgt(k, *r))) fail(f, "target at " + at() + ": " + nm(k - 1, tgt(k, *r)) + " but expected " + nm(k - 1, t));
          }
      }
  }

  void unit_boundary(FamilyResult& f) {
    for (int i = 1; i <= n_; ++i)
      for (int x = 0; x < count(i - 1); ++x) {
        ++f.instances;
        int r = a_.unit_of(i, x);
        if (src(i, r) != x || tgt(i, r) != x)
          fail(f, "u_" + std::to_string(i) + "(" + nm(i - 1, x) + ") = " + nm(i, r) + " runs " + nm(i - 1, src(i, r)) + " to " +
                      nm(i - 1, tgt(i, r)));
      }
  }

  template <class F>
  void triples(F&& body) {
    for (int p = 1; p <= n_; ++p)
      for (int q = 1; q <= n_; ++q)
        for (int r = 1; r <= n_; ++r)
          for (int x = 0; x < count(p); ++x)
            for (int y = 0; y < count(q); ++y)
              for (int z = 0; z < count(r); ++z) body(p, q, r, x, y, z);
  }

  std::string triple(int p, int q, int r, int x, int y, int z) const {
    return "(" + nm(p, x) + ", " + nm(q, y) + ", " + nm(r, z) + ")";
  }

  void associativity(FamilyResult& f) {
    triples([&](int p, int q, int r, int x, int y, int z) {
      std::vector<int> d{p, q, r};
      std::sort(d.begin(), d.end());
      if (d[0] != d[1]) return;
      Opt lhs = c(std::max(p, q), r, c(p, q, x, y), z);
      Opt rhs = c(p, std::max(q, r), x, c(q, r, y, z));
      compare(f, [&] { return triple(p, q, r, x, y, z); }, d[2], lhs, rhs);
    });
  }

  void left_distributivity(FamilyResult& f) {
    triples([&](int p, int q, int r, int x, int y, int z) {
      if (!(p < q && p < r)) return;
      Opt lhs = c(p, std::max(q, r), x, c(q, r, y, z));
      Opt rhs = c(q, r, c(p, q, x, y), c(p, r, x, z));
      compare(f, [&] { return triple(p, q, r, x, y, z); }, std::max(q, r), lhs, rhs);
    });
  }

  void right_distributivity(FamilyResult& f) {
    triples([&](int p, int q, int r, int x, int y, int z) {
      if (!(r < p && r < q)) return;
      Opt lhs = c(std::max(p, q), r, c(p, q, x, y), z);
      Opt rhs = c(p, q, c(p, r, x, z), c(q, r, y, z));
      compare(f, [&] { return triple(p, q, r, x, y, z); }, std::max(p, q), lhs, rhs);
    });
  }

  std::string pair(int p, int q, int x, int y) const { return "(" + nm(p, x) + ", " + nm(q, y) + ")"; }

  // u(x) o y = y, |x| < |y|
  void left_unit_small(FamilyResult& f) {
    for (int p = 0; p + 1 <= n_; ++p)
      for (int q = p + 1; q <= n_; ++q)
        for (int x = 0; x < count(p); ++x)
          for (int y = 0; y < count(q); ++y) {
            Opt lhs = c(p + 1, q, u(p + 1, x), y);
            if (lhs) compare(f, [&] { return pair(p, q, x, y); }, q, lhs, y);
          }
  }

  // u(x) o y = u(x o y), |x| >= |y|
  void left_unit_large(FamilyResult& f) {
    for (int q = 1; q <= n_; ++q)
      for (int p = q; p + 1 <= n_; ++p)
        for (int x = 0; x < count(p); ++x)
          for (int y = 0; y < count(q); ++y)
            compare(f, [&] { return pair(p, q, x, y); }, p + 1, c(p + 1, q, u(p + 1, x), y), u(p + 1, c(p, q, x, y)));
  }

  // x o u(y) = x, |x| > |y|
  void right_unit_small(FamilyResult& f) {
    for (int p = 1; p <= n_; ++p)
      for (int q = 0; q < p; ++q)
        for (int x = 0; x < count(p); ++x)
          for (int y = 0; y < count(q); ++y) {
            Opt lhs = c(p, q + 1, x, u(q + 1, y));
            if (lhs) compare(f, [&] { return pair(p, q, x, y); }, p, lhs, x);
          }
  }

  // x o u(y) = u(x o y), |x| <= |y|
  void right_unit_large(FamilyResult& f) {
    for (int p = 1; p <= n_; ++p)
      for (int q = p; q + 1 <= n_; ++q)
        for (int x = 0; x < count(p); ++x)
          for (int y = 0; y < count(q); ++y)
            compare(f, [&] { return pair(p, q, x, y); }, q + 1, c(p, q + 1, x, u(q + 1, y)), u(q + 1, c(p, q, x, y)));
  }

  const SesquiAlgebra& a_;
  int n_;
};

}  // namespace detail

inline RelationReport check_relations(const SesquiAlgebra& a) {
  check_tables(a);
  return detail::RelationChecker(a).run();
}

// ---- interchange ----

struct ProbeResult {
  long instances = 0;
  std::optional<std::string> witness;
  bool holds() const { return !witness; }
};

// For alpha: f => f' and beta: g => g' with g after f, compare the two ways of
// composing beta and alpha. Advisory only: sesquicategories need not satisfy it.
inline ProbeResult interchange_probe(const SesquiAlgebra& a) {
  ProbeResult out;
  if (a.n() < 2) return out;
  const auto& x = a.cells;
  for (int al = 0; al < x.count(2); ++al)
    for (int be = 0; be < x.count(2); ++be) {
      int f = x.source(2, al), f2 = x.target(2, al), g = x.source(2, be), g2 = x.target(2, be);
      if (x.target(1, f) != x.source(1, g)) continue;
      ++out.instances;
      int lhs = a.compose(2, 2, a.compose(2, 1, be, f2), a.compose(1, 2, g, al));
      int rhs = a.compose(2, 2, a.compose(1, 2, g2, al), a.compose(2, 1, be, f));
      if (lhs != rhs && !out.witness)
        out.witness = "alpha = " + x.name(2, al) + ", beta = " + x.name(2, be) + ": " + x.name(2, lhs) + " vs " + x.name(2, rhs);
    }
  return out;
}

// ---- monoids ----

struct Monoid {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a.b
  int identity = 0;
  int size() const { return static_cast<int>(names.size()); }
};

inline Monoid trivial_monoid() { return {{"e"}, {{0}}, 0}; }

inline Monoid cyclic_group(int order) {
  Monoid m;
  for (int a = 0; a < order; ++a) m.names.push_back(a == 0 ? "e" : "g" + std::to_string(a));
  m.mul.assign(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) m.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % order;
  return m;
}

// Permutations of {0,1,2}; r is the rotation i -> i+1, s the swap of 1 and 2,
// and a.b means "b first".
inline Monoid symmetric_group3() {
  using P = std::array<int, 3>;
  P e{0, 1, 2}, r{1, 2, 0}, s{0, 2, 1};
  auto after = [](const P& a, const P& b) { return P{a[static_cast<std::size_t>(b[0])], a[static_cast<std::size_t>(b[1])], a[static_cast<std::size_t>(b[2])]}; };
  std::vector<P> elems{e, r, after(r, r), s, after(s, r), after(s, after(r, r))};
  Monoid m{{"e", "r", "rr", "s", "sr", "srr"}, {}, 0};
  m.mul.assign(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      P ab = after(elems[a], elems[b]);
      m.mul[a][b] = static_cast<int>(std::find(elems.begin(), elems.end(), ab) - elems.begin());
    }
  return m;
}

// One 0-cell, one 1-cell, the 2-cells are M. Vertical composition x o_{2,2} y
// is x.y; whiskering by the only 1-cell does nothing.
inline SesquiAlgebra monoid_sesqui(const Monoid& m) {
  SesquiAlgebra a;
  a.cells.add(0, "*");
  a.cells.add(1, "1", 0, 0);
  for (const auto& nm : m.names) a.cells.add(2, nm, 0, 0);
  a.set_comp(1, 1, 0, 0, 0);
  for (int x = 0; x < m.size(); ++x) {
    a.set_comp(1, 2, 0, x, x);
    a.set_comp(2, 1, x, 0, x);
    for (int y = 0; y < m.size(); ++y) a.set_comp(2, 2, x, y, m.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  }
  a.set_unit(1, 0, 0);
  a.set_unit(2, 0, m.identity);
  return a;
}

// ---- evaluation ----

// Fold a tree through the tables; returns an index in dimension t.dim().
inline int fold_term(const SesquiAlgebra& a, const Term<Cell>& t) {
  switch (t.kind()) {
    case Term<Cell>::Kind::Leaf: return t.cell().index;
    case Term<Cell>::Kind::Unit: return a.unit_of(t.i(), fold_term(a, t.child(0)));
    case Term<Cell>::Kind::Comp: break;
  }
  return a.compose(t.i(), t.j(), fold_term(a, t.child(0)), fold_term(a, t.child(1)));
}

inline Cell eval_in_algebra(const SesquiAlgebra& a, const Labelling& l) {
  return Cell{&a.cells, l.dim(), fold_term(a, parse(l))};
}

// ---- truncation, Hom and the action of 1-cells ----

inline SesquiAlgebra truncate(const SesquiAlgebra& a, int n) {
  SesquiAlgebra out;
  out.cells = GlobularSet(n);
  for (int d = 0; d <= std::min(n, a.n()); ++d)
    for (int x = 0; x < a.cells.count(d); ++x)
      out.cells.add(d, a.name(d, x), d ? a.cells.source(d, x) : -1, d ? a.cells.target(d, x) : -1);
  for (auto& [ij, tab] : a.comp)
    if (ij.first <= n && ij.second <= n) out.comp[ij] = tab;
  for (auto& [i, tab] : a.unit)
    if (i <= n) out.unit[i] = tab;
  return out;
}

// Hom(x,y) with its shifted structure: o^{Hom}_{i,j} is o_{i+1,j+1}, u^{Hom}_i is u_{i+1}.
inline SesquiAlgebra hom_algebra(const SesquiAlgebra& a, int x, int y) {
  SesquiAlgebra h;
  h.cells = hom_globular(a.cells, x, y);
  const int n = a.n() - 1;
  auto down = [&](int k, int z) { return h.cells.index_of(k - 1, a.name(k, z)); };
  auto up = [&](int k, int z) { return a.cell_index(k + 1, h.name(k, z)); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int p = 0; p < h.cells.count(i); ++p)
        for (int q = 0; q < h.cells.count(j); ++q)
          if (h.compatible(i, j, p, q)) h.set_comp(i, j, p, q, down(std::max(i, j) + 1, a.compose(i + 1, j + 1, up(i, p), up(j, q))));
  for (int i = 1; i <= n; ++i)
    for (int p = 0; p < h.cells.count(i - 1); ++p) h.set_unit(i, p, down(i + 1, a.unit_of(i + 1, up(i - 1, p))));
  return h;
}

// Hom(f,g)_k for f: x -> x' and g: y -> y', on A's (k+1)-cells: z in Hom(x',y)
// goes to the value of B^{k+1}(1,3,2) labelled f, z, g. Indexed by A's cells.
inline std::vector<std::map<int, int>> hom_functor_action(const SesquiAlgebra& a, int f, int g) {
  const auto& x = a.cells;
  int xp = x.target(1, f), y = x.source(1, g);
  std::vector<std::map<int, int>> out(static_cast<std::size_t>(std::max(a.n(), 1)));
  for (int k = 0; k + 1 <= a.n(); ++k) {
    SimpleDiagram d = block_diagram(k + 1, 1, 3, 2);
    for (int z = 0; z < x.count(k + 1); ++z) {
      Cell c{&x, k + 1, z};
      if (iterated_source(c, k + 1).index != xp || iterated_target(c, k + 1).index != y) continue;
      std::map<std::pair<int, int>, Cell> given{{{1, 1}, Cell{&x, 1, f}}, {{1, 3}, Cell{&x, 1, g}}, {{k + 1, k == 0 ? 2 : 1}, c}};
      out[static_cast<std::size_t>(k)][z] = eval_in_algebra(a, expand_min_labelling(d, given)).index;
    }
  }
  return out;
}

// A category with a lift of its Hom functor to (n-1)-sesquialgebras.
struct HomLift {
  SesquiAlgebra base;  // 1-dimensional
  std::map<std::pair<int, int>, SesquiAlgebra> homs;  // by object pair
  // action[{f,g}][k][z] for z a k-cell of homs[{t f, s g}], valued in homs[{s f, t g}]
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> action;

  int n() const {
    if (homs.empty()) return 1;
    return homs.begin()->second.n() + 1;
  }
};

inline HomLift decompose(const SesquiAlgebra& a) {
  HomLift h;
  h.base = truncate(a, 1);
  const auto& x = a.cells;
  for (int p = 0; p < x.count(0); ++p)
    for (int q = 0; q < x.count(0); ++q) h.homs.emplace(std::make_pair(p, q), hom_algebra(a, p, q));
  const int n = std::max(a.n() - 1, 0);
  for (int f = 0; f < x.count(1); ++f)
    for (int g = 0; g < x.count(1); ++g) {
      auto act = hom_functor_action(a, f, g);
      const auto& from = h.homs.at({x.target(1, f), x.source(1, g)});
      const auto& to = h.homs.at({x.source(1, f), x.target(1, g)});
      std::vector<std::vector<int>> tab(static_cast<std::size_t>(n + 1));
      for (int k = 0; k <= n && k + 1 <= a.n(); ++k)
        for (int z = 0; z < from.cells.count(k); ++z) {
          int za = a.cell_index(k + 1, from.name(k, z));
          tab[static_cast<std::size_t>(k)].push_back(to.cell_index(k, a.name(k + 1, act[static_cast<std::size_t>(k)].at(za))));
        }
      h.action[{f, g}] = std::move(tab);
    }
  return h;
}

namespace detail {

inline Error lift_error(const std::string& what) { return Error(ErrorKind::LiftInconsistent, what); }

}  // namespace detail

// Lift condition, action shapes, the action in degree 0, and functoriality.
inline void validate_lift(const HomLift& h) {
  const auto& b = h.base;
  if (b.n() > 1) throw detail::lift_error("the base must be a category");
  check_tables(b);
  const int objs = b.cells.count(0), mors = b.cells.count(1);
  const int n = h.n();
  for (int p = 0; p < objs; ++p)
    for (int q = 0; q < objs; ++q) {
      auto it = h.homs.find({p, q});
      if (it == h.homs.end()) throw detail::lift_error("no hom algebra for (" + b.name(0, p) + ", " + b.name(0, q) + ")");
      if (it->second.n() != n - 1) throw detail::lift_error("hom algebras differ in dimension");
      std::set<std::string> want, got(it->second.cells.names(0).begin(), it->second.cells.names(0).end());
      for (int f = 0; f < mors; ++f)
        if (b.cells.source(1, f) == p && b.cells.target(1, f) == q) want.insert(b.name(1, f));
      if (want != got) throw detail::lift_error("0-cells of Hom(" + b.name(0, p) + ", " + b.name(0, q) + ") are not the hom-set");
      check_tables(it->second);
    }
  if (h.homs.size() != static_cast<std::size_t>(objs * objs)) throw detail::lift_error("hom algebra for an unknown object pair");
  auto act = [&](int f, int g) -> const std::vector<std::vector<int>>& {
    auto it = h.action.find({f, g});
    if (it == h.action.end()) throw detail::lift_error("no action for (" + b.name(1, f) + ", " + b.name(1, g) + ")");
    return it->second;
  };
  for (int f = 0; f < mors; ++f)
    for (int g = 0; g < mors; ++g) {
      const auto& from = h.homs.at({b.cells.target(1, f), b.cells.source(1, g)});
      const auto& to = h.homs.at({b.cells.source(1, f), b.cells.target(1, g)});
      const auto& t = act(f, g);
      if (static_cast<int>(t.size()) < n) throw detail::lift_error("action of (" + b.name(1, f) + ", " + b.name(1, g) + ") is short");
      for (int k = 0; k < n; ++k) {
        const auto& row = t[static_cast<std::size_t>(k)];
        if (static_cast<int>(row.size()) != from.cells.count(k)) throw detail::lift_error("action has the wrong domain");
        for (int z = 0; z < from.cells.count(k); ++z) {
          int r = row[static_cast<std::size_t>(z)];
          if (r < 0 || r >= to.cells.count(k)) throw detail::lift_error("action leaves the target hom");
          if (k > 0) {
            const auto& lower = t[static_cast<std::size_t>(k - 1)];
            if (to.cells.source(k, r) != lower[static_cast<std::size_t>(from.cells.source(k, z))] ||
                to.cells.target(k, r) != lower[static_cast<std::size_t>(from.cells.target(k, z))])
              throw detail::lift_error("action does not commute with source and target");
          } else {
            int mid = b.cell_index(1, from.name(0, z));
            int expect = b.compose(1, 1, g, b.compose(1, 1, mid, f));
            if (to.name(0, r) != b.name(1, expect)) throw detail::lift_error("action on morphisms is not composition");
          }
        }
      }
    }
  // each action is a morphism of hom algebras
  for (auto& [fg, t] : h.action) {
    auto [f, g] = fg;
    const auto& from = h.homs.at({b.cells.target(1, f), b.cells.source(1, g)});
    const auto& to = h.homs.at({b.cells.source(1, f), b.cells.target(1, g)});
    auto on = [&](int k, int z) { return t[static_cast<std::size_t>(k)][static_cast<std::size_t>(z)]; };
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j)
        for (auto& [xy, r] : from.comp.count({i, j}) ? from.comp.at({i, j}) : std::map<std::pair<int, int>, int>{})
          if (on(std::max(i, j), r) != to.compose(i, j, on(i, xy.first), on(j, xy.second)))
            throw detail::lift_error("action of (" + b.name(1, f) + ", " + b.name(1, g) + ") does not respect o_{" +
                                     std::to_string(i) + "," + std::to_string(j) + "}");
      for (int z = 0; z < from.cells.count(i - 1); ++z)
        if (on(i, from.unit_of(i, z)) != to.unit_of(i, on(i - 1, z)))
          throw detail::lift_error("action of (" + b.name(1, f) + ", " + b.name(1, g) + ") does not respect u_" + std::to_string(i));
    }
  }
  // identities act trivially, and actions compose
  for (int p = 0; p < objs; ++p)
    for (int q = 0; q < objs; ++q) {
      const auto& t = act(b.unit_of(1, p), b.unit_of(1, q));
      for (int k = 0; k < n; ++k)
        for (int z = 0; z < static_cast<int>(t[static_cast<std::size_t>(k)].size()); ++z)
          if (t[static_cast<std::size_t>(k)][static_cast<std::size_t>(z)] != z) throw detail::lift_error("identities do not act trivially");
    }
  for (int f = 0; f < mors; ++f)
    for (int f2 = 0; f2 < mors; ++f2) {
      if (b.cells.target(1, f) != b.cells.source(1, f2)) continue;
      for (int g = 0; g < mors; ++g)
        for (int g2 = 0; g2 < mors; ++g2) {
          if (b.cells.target(1, g) != b.cells.source(1, g2)) continue;
          // Hom(f2 o f, g2 o g) = Hom(f, g2) after Hom(f2, g)
          const auto& whole = act(b.compose(1, 1, f2, f), b.compose(1, 1, g2, g));
          const auto& first = act(f2, g);
          const auto& second = act(f, g2);
          for (int k = 0; k < n; ++k)
            for (std::size_t z = 0; z < whole[static_cast<std::size_t>(k)].size(); ++z) {
              int mid = first[static_cast<std::size_t>(k)][z];
              if (second[static_cast<std::size_t>(k)][static_cast<std::size_t>(mid)] != whole[static_cast<std::size_t>(k)][z])
                throw detail::lift_error("the action is not functorial");
            }
        }
    }
}

// C+: objects, then the disjoint union of the hom cells shifted up by one.
inline SesquiAlgebra plus_construction(const HomLift& h) {
  validate_lift(h);
  const auto& b = h.base;
  const int n = h.n();
  const int objs = b.cells.count(0);
  SesquiAlgebra a;
  a.cells = GlobularSet(n);
  for (int p = 0; p < objs; ++p) a.cells.add(0, b.name(0, p));
  // where[{p,q}][k][z]: index in C+(k+1) of the k-cell z of Hom(p,q)
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> where;
  std::vector<std::vector<std::pair<std::pair<int, int>, int>>> owner(static_cast<std::size_t>(n + 1));
  for (int k = 0; k < n; ++k)
    for (auto& [pq, hom] : h.homs) {
      auto& w = where[pq];
      w.resize(static_cast<std::size_t>(n));
      for (int z = 0; z < hom.cells.count(k); ++z) {
        int s = k == 0 ? pq.first : w[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(hom.cells.source(k, z))];
        int t = k == 0 ? pq.second : w[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(hom.cells.target(k, z))];
        int idx;
        try {
          idx = a.cells.add(k + 1, hom.name(k, z), s, t);
        } catch (const Error&) {
          throw detail::lift_error("cell name " + hom.name(k, z) + " occurs in two hom algebras");
        }
        w[static_cast<std::size_t>(k)].push_back(idx);
        owner[static_cast<std::size_t>(k + 1)].push_back({pq, z});
      }
    }
  auto own = [&](int k, int c) { return owner[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]; };
  auto place = [&](std::pair<int, int> pq, int k, int z) { return where.at(pq)[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(z)]; };
  auto morphism = [&](int c) { return b.cell_index(1, a.name(1, c)); };
  auto from_morphism = [&](int f) { return a.cell_index(1, b.name(1, f)); };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int x = 0; x < a.cells.count(i); ++x)
        for (int y = 0; y < a.cells.count(j); ++y) {
          if (!a.compatible(i, j, x, y)) continue;
          int r;
          if (i == 1 && j == 1) {
            r = from_morphism(b.compose(1, 1, morphism(x), morphism(y)));
          } else if (i == 1) {
            // whisker after: Hom(id, f)
            auto [pq, z] = own(j, y);
            int f = morphism(x);
            int v = h.action.at({b.unit_of(1, pq.first), f})[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(z)];
            r = place({pq.first, b.cells.target(1, f)}, j, v);
          } else if (j == 1) {
            auto [pq, z] = own(i, x);
            int f = morphism(y);
            int v = h.action.at({f, b.unit_of(1, pq.second)})[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(z)];
            r = place({b.cells.source(1, f), pq.second}, i, v);
          } else {
            auto [pq, zx] = own(i, x);
            auto [pq2, zy] = own(j, y);
            if (pq != pq2) throw detail::lift_error("composable cells in different hom algebras");
            r = place(pq, std::max(i, j), h.homs.at(pq).compose(i - 1, j - 1, zx, zy));
          }
          a.set_comp(i, j, x, y, r);
        }
  for (int p = 0; p < objs; ++p) a.set_unit(1, p, from_morphism(b.unit_of(1, p)));
  for (int i = 2; i <= n; ++i)
    for (int x = 0; x < a.cells.count(i - 1); ++x) {
      auto [pq, z] = own(i - 1, x);
      a.set_unit(i, x, place(pq, i, h.homs.at(pq).unit_of(i - 1, z)));
    }
  return a;
}

// The lift of a monoid: one object, one morphism, Hom(*,*) the one-object
// category on M, everything acting trivially.
inline HomLift monoid_lift(const Monoid& m) {
  HomLift h;
  h.base.cells.add(0, "*");
  h.base.cells.add(1, "1", 0, 0);
  h.base.set_comp(1, 1, 0, 0, 0);
  h.base.set_unit(1, 0, 0);
  SesquiAlgebra hom;
  hom.cells.add(0, "1");
  for (const auto& nm : m.names) hom.cells.add(1, nm, 0, 0);
  for (int x = 0; x < m.size(); ++x)
    for (int y = 0; y < m.size(); ++y) hom.set_comp(1, 1, x, y, m.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  hom.set_unit(1, 0, m.identity);
  h.homs.emplace(std::make_pair(0, 0), std::move(hom));
  std::vector<int> ids(static_cast<std::size_t>(m.size()));
  for (int x = 0; x < m.size(); ++x) ids[static_cast<std::size_t>(x)] = x;
  h.action[{0, 0}] = {{0}, ids};
  return h;
}

// ---- comparison by cell names ----

// The first difference between two algebras, comparing cells and tables by
// name so that cell order does not matter.
inline std::optional<std::string> algebra_difference(const SesquiAlgebra& a, const SesquiAlgebra& b) {
  if (a.n() != b.n()) return "dimensions " + std::to_string(a.n()) + " and " + std::to_string(b.n());
  for (int d = 0; d <= a.n(); ++d) {
    std::set<std::string> na(a.cells.names(d).begin(), a.cells.names(d).end());
    std::set<std::string> nb(b.cells.names(d).begin(), b.cells.names(d).end());
    if (na != nb) return "different " + std::to_string(d) + "-cells";
    if (d == 0) continue;
    for (int x = 0; x < a.cells.count(d); ++x) {
      int y = b.cell_index(d, a.name(d, x));
      if (a.name(d - 1, a.cells.source(d, x)) != b.name(d - 1, b.cells.source(d, y)) ||
          a.name(d - 1, a.cells.target(d, x)) != b.name(d - 1, b.cells.target(d, y)))
        return "boundary of " + a.name(d, x);
    }
  }
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      for (int x = 0; x < a.cells.count(i); ++x)
        for (int y = 0; y < a.cells.count(j); ++y) {
          auto ra = a.try_compose(i, j, x, y);
          auto rb = b.try_compose(i, j, b.cell_index(i, a.name(i, x)), b.cell_index(j, a.name(j, y)));
          int k = std::max(i, j);
          if (ra.has_value() != rb.has_value() || (ra && a.name(k, *ra) != b.name(k, *rb)))
            return "o_{" + std::to_string(i) + "," + std::to_string(j) + "} at (" + a.name(i, x) + ", " + a.name(j, y) + ")";
        }
  for (int i = 1; i <= a.n(); ++i)
    for (int x = 0; x < a.cells.count(i - 1); ++x)
      if (a.name(i, a.unit_of(i, x)) != b.name(i, b.unit_of(i, b.cell_index(i - 1, a.name(i - 1, x)))))
        return "u_" + std::to_string(i) + " at " + a.name(i - 1, x);
  return std::nullopt;
}

inline std::optional<std::string> lift_difference(const HomLift& a, const HomLift& b) {
  if (auto d = algebra_difference(a.base, b.base)) return "base: " + *d;
  auto ob = [&](const HomLift& h, int p) { return h.base.name(0, p); };
  for (auto& [pq, ha] : a.homs) {
    int p = b.base.cell_index(0, ob(a, pq.first)), q = b.base.cell_index(0, ob(a, pq.second));
    auto it = b.homs.find({p, q});
    if (it == b.homs.end()) return "missing hom (" + ob(a, pq.first) + ", " + ob(a, pq.second) + ")";
    if (auto d = algebra_difference(ha, it->second)) return "hom (" + ob(a, pq.first) + ", " + ob(a, pq.second) + "): " + *d;
  }
  if (a.homs.size() != b.homs.size()) return "different numbers of hom algebras";
  for (auto& [fg, tab] : a.action) {
    auto [f, g] = fg;
    int fb = b.base.cell_index(1, a.base.name(1, f)), gb = b.base.cell_index(1, a.base.name(1, g));
    auto it = b.action.find({fb, gb});
    if (it == b.action.end()) return "missing action";
    const auto& fa = a.homs.at({a.base.cells.target(1, f), a.base.cells.source(1, g)});
    const auto& ta = a.homs.at({a.base.cells.source(1, f), a.base.cells.target(1, g)});
    const auto& fbh = b.homs.at({b.base.cells.target(1, fb), b.base.cells.source(1, gb)});
    const auto& tbh = b.homs.at({b.base.cells.source(1, fb), b.base.cells.target(1, gb)});
    for (std::size_t k = 0; k < tab.size() && static_cast<int>(k) < a.n(); ++k)
      for (std::size_t z = 0; z < tab[k].size(); ++z) {
        int k_ = static_cast<int>(k);
        int zb = fbh.cell_index(k_, fa.name(k_, static_cast<int>(z)));
        if (ta.name(k_, tab[k][z]) != tbh.name(k_, it->second[k][static_cast<std::size_t>(zb)]))
          return "action of (" + a.base.name(1, f) + ", " + a.base.name(1, g) + ") on " + fa.name(k_, static_cast<int>(z));
      }
  }
  if (a.action.size() != b.action.size()) return "different numbers of actions";
  return std::nullopt;
}

}  // namespace sesqui

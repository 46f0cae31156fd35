#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sesqui/error.hpp"

namespace sesqui {

// A level tree with crossings. parents_[m-1] holds v^m with 1-based values.
class SimpleDiagram {
 public:
  SimpleDiagram() = default;

  explicit SimpleDiagram(std::vector<std::vector<int>> parents) : parents_(std::move(parents)) {
    for (std::size_t m = 1; m <= parents_.size(); ++m) {
      int below = m == 1 ? 1 : static_cast<int>(parents_[m - 2].size());
      const auto& v = parents_[m - 1];
      if (below == 0 && !v.empty())
        throw Error(ErrorKind::NonEmptyOverEmpty, "level " + std::to_string(m) + " is nonempty over an empty level",
                    static_cast<int>(m));
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 1 || v[i] > below)
          throw Error(ErrorKind::OutOfRangeParent,
                      "v^" + std::to_string(m) + "(" + std::to_string(i + 1) + ") = " + std::to_string(v[i]) +
                          " outside [1," + std::to_string(below) + "]",
                      static_cast<int>(m), static_cast<int>(i + 1));
    }
  }

  int dim() const { return static_cast<int>(parents_.size()); }
  int length(int m) const { return m == 0 ? 1 : static_cast<int>(parents_[m - 1].size()); }
  const std::vector<int>& parents(int m) const { return parents_[m - 1]; }
  int parent(int m, int i) const { return parents_[m - 1][i - 1]; }
  const std::vector<std::vector<int>>& all_parents() const { return parents_; }

  std::vector<int> lengths() const {
    std::vector<int> out{1};
    for (const auto& v : parents_) out.push_back(static_cast<int>(v.size()));
    return out;
  }

  int total_cells() const {
    int n = 1;
    for (const auto& v : parents_) n += static_cast<int>(v.size());
    return n;
  }

  bool is_pasting() const {
    for (const auto& v : parents_)
      if (!std::is_sorted(v.begin(), v.end())) return false;
    return true;
  }

  // True when i is the least element of its fibre under v^m.
  bool first_in_fiber(int m, int i) const { return previous_in_fiber(m, i) == 0; }

  // max{j < i : v^m(j) = v^m(i)}, or 0.
  int previous_in_fiber(int m, int i) const {
    const auto& v = parents_[m - 1];
    for (int j = i - 1; j >= 1; --j)
      if (v[j - 1] == v[i - 1]) return j;
    return 0;
  }

  // Elements of level m+1 sitting over position i of level m, in order.
  std::vector<int> fiber_over(int m, int i) const {
    std::vector<int> out;
    if (m + 1 > dim()) return out;
    const auto& v = parents_[m];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] == i) out.push_back(static_cast<int>(j + 1));
    return out;
  }

  bool in_image(int m, int i) const {
    if (m + 1 > dim()) return false;
    const auto& v = parents_[m];
    return std::find(v.begin(), v.end(), i) != v.end();
  }

  auto operator<=>(const SimpleDiagram&) const = default;
  bool operator==(const SimpleDiagram&) const = default;

 private:
  std::vector<std::vector<int>> parents_;
};

using PastingDiagram = SimpleDiagram;

// Notation order: levels[0] = {ℓ_1}, levels[m-1] = v^m for m ≥ 2.
inline SimpleDiagram validate_diagram(int dim, const std::vector<std::vector<int>>& levels) {
  if (dim < 0 || static_cast<int>(levels.size()) != dim)
    throw Error(ErrorKind::BadIndices, "expected " + std::to_string(dim) + " level entries");
  std::vector<std::vector<int>> parents;
  for (int m = 1; m <= dim; ++m) {
    if (m == 1) {
      if (levels[0].size() != 1) throw Error(ErrorKind::BadIndices, "level 1 must be the single integer ℓ_1");
      if (levels[0][0] < 0) throw Error(ErrorKind::BadIndices, "negative length");
      parents.emplace_back(static_cast<std::size_t>(levels[0][0]), 1);
    } else {
      parents.push_back(levels[m - 1]);
    }
  }
  return SimpleDiagram(std::move(parents));
}

inline SimpleDiagram source_target(const SimpleDiagram& d) {
  if (d.dim() == 0) throw Error(ErrorKind::DimZero, "a 0-diagram has no source or target");
  auto p = d.all_parents();
  p.pop_back();
  return SimpleDiagram(std::move(p));
}

inline SimpleDiagram truncate(const SimpleDiagram& d, int dim) {
  auto p = d.all_parents();
  p.resize(static_cast<std::size_t>(dim));
  return SimpleDiagram(std::move(p));
}

// ---- generators ----

inline SimpleDiagram identity_diagram(int k) {
  if (k < 0) throw Error(ErrorKind::BadIndices, "I_k needs k ≥ 0");
  return SimpleDiagram(std::vector<std::vector<int>>(static_cast<std::size_t>(k), std::vector<int>{1}));
}

inline SimpleDiagram unit_diagram(int k) {
  if (k < 1) throw Error(ErrorKind::BadIndices, "u_k needs k ≥ 1");
  std::vector<std::vector<int>> p(static_cast<std::size_t>(k), std::vector<int>{1});
  p.back().clear();
  return SimpleDiagram(std::move(p));
}

// B^k(i,len,p) for i < k; B^k(k,len) when i == k (p ignored).
inline SimpleDiagram block_diagram(int k, int i, int len, int p = 1) {
  if (k < 1 || i < 1 || i > k || len < 1 || (i < k && (p < 1 || p > len)))
    throw Error(ErrorKind::BadIndices, "bad block indices");
  std::vector<std::vector<int>> parents;
  for (int m = 1; m <= k; ++m) {
    if (m == i)
      parents.emplace_back(static_cast<std::size_t>(len), 1);
    else if (m == i + 1)
      parents.push_back({p});
    else
      parents.push_back({1});
  }
  return SimpleDiagram(std::move(parents));
}

inline SimpleDiagram comp_diagram(int i, int j) {
  if (i < 1 || j < 1) throw Error(ErrorKind::BadIndices, "o_{i,j} needs i,j ≥ 1");
  if (i == j) return block_diagram(i, i, 2);
  if (i < j) return block_diagram(j, i, 2, 1);
  return block_diagram(i, j, 2, 2);
}

struct GeneratorSpec {
  enum class Kind { Comp, Unit, Identity, Block } kind;
  int a = 0, b = 0, c = 0, d = 0;

  static GeneratorSpec comp(int i, int j) { return {Kind::Comp, i, j}; }
  static GeneratorSpec unit(int k) { return {Kind::Unit, k}; }
  static GeneratorSpec identity(int k) { return {Kind::Identity, k}; }
  static GeneratorSpec block(int k, int i, int len, int p = 1) { return {Kind::Block, k, i, len, p}; }
};

inline SimpleDiagram generator(const GeneratorSpec& g, int max_dim = -1) {
  SimpleDiagram d;
  switch (g.kind) {
    case GeneratorSpec::Kind::Comp: d = comp_diagram(g.a, g.b); break;
    case GeneratorSpec::Kind::Unit: d = unit_diagram(g.a); break;
    case GeneratorSpec::Kind::Identity: d = identity_diagram(g.a); break;
    case GeneratorSpec::Kind::Block: d = block_diagram(g.a, g.b, g.c, g.d); break;
  }
  if (max_dim >= 0 && d.dim() > max_dim) throw Error(ErrorKind::BadIndices, "generator exceeds the dimension bound");
  return d;
}

// ---- restriction ----

// D_S: level m replaced by the sorted subset S (1-based positions).
inline SimpleDiagram restrict(const SimpleDiagram& d, int m, const std::vector<int>& subset) {
  if (m < 1 || m > d.dim()) throw Error(ErrorKind::BadIndices, "restriction level out of range");
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int x : s)
    if (x < 1 || x > d.length(m)) throw Error(ErrorKind::BadIndices, "subset element out of range");
  std::vector<int> rank(static_cast<std::size_t>(d.length(m)) + 1, 0);
  for (std::size_t r = 0; r < s.size(); ++r) rank[static_cast<std::size_t>(s[r])] = static_cast<int>(r + 1);
  auto p = d.all_parents();
  if (m < d.dim()) {
    for (int& x : p[static_cast<std::size_t>(m)]) {
      if (rank[static_cast<std::size_t>(x)] == 0)
        throw Error(ErrorKind::ImageNotContained, "image of v^" + std::to_string(m + 1) + " not inside the subset", m + 1);
      x = rank[static_cast<std::size_t>(x)];
    }
  }
  std::vector<int> level;
  for (int x : s) level.push_back(d.parent(m, x));
  p[static_cast<std::size_t>(m - 1)] = std::move(level);
  return SimpleDiagram(std::move(p));
}

// ---- statistics ----

struct DiagramStats {
  int H = 0;
  std::optional<int> m, M;
  int M0 = 0;
  bool nondegenerate = false;
  bool nontrivial = false;
  bool block = false;
  bool crossing_free = false;
};

inline DiagramStats stats(const SimpleDiagram& d) {
  DiagramStats s;
  for (int i = 1; i <= d.dim(); ++i) {
    int l = d.length(i);
    if (l > 1) {
      ++s.H;
      if (!s.m) s.m = i;
      s.M = i;
    }
    if (l > 0) s.M0 = i;
  }
  s.nondegenerate = s.M0 == d.dim();
  s.nontrivial = s.nondegenerate && s.H > 0;
  s.block = s.nontrivial && s.m == s.M;
  s.crossing_free = d.is_pasting();
  return s;
}

// ---- de-crossing ----

// sigma[m][i-1] = new position of old cell i at level m (sigma[0] = {1}).
inline std::vector<std::vector<int>> pi_permutation(const SimpleDiagram& d) {
  std::vector<std::vector<int>> sigma{{1}};
  for (int m = 1; m <= d.dim(); ++m) {
    int l = d.length(m);
    std::vector<int> order(static_cast<std::size_t>(l));
    std::iota(order.begin(), order.end(), 1);
    const auto& below = sigma.back();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return below[static_cast<std::size_t>(d.parent(m, a) - 1)] < below[static_cast<std::size_t>(d.parent(m, b) - 1)];
    });
    std::vector<int> s(static_cast<std::size_t>(l));
    for (int q = 0; q < l; ++q) s[static_cast<std::size_t>(order[static_cast<std::size_t>(q)] - 1)] = q + 1;
    sigma.push_back(std::move(s));
  }
  return sigma;
}

// Conjugate the parent maps by per-level permutations (old position -> new position).
inline SimpleDiagram permute(const SimpleDiagram& d, const std::vector<std::vector<int>>& sigma) {
  std::vector<std::vector<int>> p;
  for (int m = 1; m <= d.dim(); ++m) {
    std::vector<int> v(static_cast<std::size_t>(d.length(m)));
    for (int i = 1; i <= d.length(m); ++i)
      v[static_cast<std::size_t>(sigma[static_cast<std::size_t>(m)][static_cast<std::size_t>(i - 1)] - 1)] =
          sigma[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(d.parent(m, i) - 1)];
    p.push_back(std::move(v));
  }
  return SimpleDiagram(std::move(p));
}

inline PastingDiagram pi(const SimpleDiagram& d) { return permute(d, pi_permutation(d)); }

// All simple diagrams C with pi(C) = P.
inline std::vector<SimpleDiagram> fiber(const PastingDiagram& p) {
  if (!p.is_pasting()) throw Error(ErrorKind::NotPasting, "fiber needs a pasting diagram");
  std::set<SimpleDiagram> found;
  std::vector<std::vector<int>> sigma{{1}};
  std::vector<std::vector<int>> built;

  std::function<void(int)> level = [&](int m) {
    if (m > p.dim()) {
      found.insert(SimpleDiagram(built));
      return;
    }
    int l = p.length(m);
    // sigma_m is fixed by which positions each fibre occupies; enumerate by
    // assigning positions 1..l to fibres in turn (a multiset permutation).
    std::vector<int> fibre_of(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) fibre_of[static_cast<std::size_t>(i - 1)] = p.parent(m, i);
    std::vector<int> labels = fibre_of;  // sorted since P is pasting
    do {
      // labels[q] = fibre of the cell at new position q+1; within a fibre keep order.
      std::vector<int> s(static_cast<std::size_t>(l));
      std::vector<int> next_in(static_cast<std::size_t>(p.length(m - 1)) + 1, 0);
      std::vector<std::vector<int>> members(static_cast<std::size_t>(p.length(m - 1)) + 1);
      for (int i = 1; i <= l; ++i) members[static_cast<std::size_t>(fibre_of[static_cast<std::size_t>(i - 1)])].push_back(i);
      for (int q = 0; q < l; ++q) {
        int f = labels[static_cast<std::size_t>(q)];
        int old = members[static_cast<std::size_t>(f)][static_cast<std::size_t>(next_in[static_cast<std::size_t>(f)]++)];
        s[static_cast<std::size_t>(old - 1)] = q + 1;
      }
      std::vector<int> v(static_cast<std::size_t>(l));
      for (int i = 1; i <= l; ++i)
        v[static_cast<std::size_t>(s[static_cast<std::size_t>(i - 1)] - 1)] =
            sigma[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(p.parent(m, i) - 1)];
      sigma.push_back(s);
      built.push_back(v);
      level(m + 1);
      built.pop_back();
      sigma.pop_back();
    } while (std::next_permutation(labels.begin(), labels.end()));
  };
  level(1);
  return {found.begin(), found.end()};
}

// ---- enumeration ----

// Calls f on every diagram of the given dim with Σ_{i≥0} ℓ_i ≤ max_cells,
// lengths lexicographic, then parent sequences lexicographic.
inline void for_each_diagram(int dim, int max_cells, const std::function<void(const SimpleDiagram&)>& f) {
  if (dim == 0) {
    if (max_cells >= 1) f(SimpleDiagram());
    return;
  }
  std::vector<int> len(static_cast<std::size_t>(dim));
  std::function<void(int, int)> lengths = [&](int m, int budget) {
    if (m > dim) {
      std::vector<std::vector<int>> p(static_cast<std::size_t>(dim));
      std::function<void(int)> fill = [&](int lvl) {
        if (lvl > dim) {
          f(SimpleDiagram(p));
          return;
        }
        int l = len[static_cast<std::size_t>(lvl - 1)];
        int below = lvl == 1 ? 1 : len[static_cast<std::size_t>(lvl - 2)];
        auto& v = p[static_cast<std::size_t>(lvl - 1)];
        v.assign(static_cast<std::size_t>(l), 1);
        if (l == 0) {
          fill(lvl + 1);
          return;
        }
        while (true) {
          fill(lvl + 1);
          int q = l - 1;
          while (q >= 0 && v[static_cast<std::size_t>(q)] == below) v[static_cast<std::size_t>(q--)] = 1;
          if (q < 0) break;
          ++v[static_cast<std::size_t>(q)];
        }
      };
      fill(1);
      return;
    }
    int below = m == 1 ? 1 : len[static_cast<std::size_t>(m - 2)];
    int top = below == 0 ? 0 : budget;
    for (int l = 0; l <= top; ++l) {
      len[static_cast<std::size_t>(m - 1)] = l;
      lengths(m + 1, budget - l);
    }
  };
  lengths(1, max_cells - 1);
}

inline std::vector<SimpleDiagram> enumerate(int dim, int max_cells) {
  std::vector<SimpleDiagram> out;
  for_each_diagram(dim, max_cells, [&](const SimpleDiagram& d) { out.push_back(d); });
  return out;
}

// ---- block decomposition ----

struct BlockDecomposition {
  SimpleDiagram block;
  std::vector<SimpleDiagram> parts;  // one per cell of level M(D) of the block
};

inline BlockDecomposition block_decompose(const SimpleDiagram& d) {
  auto st = stats(d);
  if (!st.nontrivial) throw Error(ErrorKind::TrivialDiagram, "block decomposition needs a nontrivial diagram");
  if (st.block) throw Error(ErrorKind::AlreadyBlock, "diagram is already a block");
  int k = d.dim(), M = *st.M, l = d.length(M);
  BlockDecomposition out;
  auto lower = truncate(d, M - 1).all_parents();
  if (M == k) {
    out.block = block_diagram(k, k, l);
    for (int j = 1; j <= l; ++j) {
      auto p = lower;
      p.push_back({d.parent(k, j)});
      out.parts.emplace_back(std::move(p));
    }
    return out;
  }
  int p_idx = d.parent(M + 1, 1);
  out.block = block_diagram(k, M, l, p_idx);
  for (int j = 1; j <= l; ++j) {
    auto p = lower;
    p.push_back({d.parent(M, j)});
    if (j == p_idx)
      for (int r = M + 1; r <= k; ++r) p.push_back({1});
    out.parts.emplace_back(std::move(p));
  }
  return out;
}

// ---- shift ----

inline SimpleDiagram shift(const SimpleDiagram& d, int max_dim = -1) {
  if (max_dim >= 0 && d.dim() + 1 > max_dim)
    throw Error(ErrorKind::ExceedsMaxDim, "shift would exceed the dimension bound");
  std::vector<std::vector<int>> p{{1}};
  for (const auto& v : d.all_parents()) p.push_back(v);
  return SimpleDiagram(std::move(p));
}

}  // namespace sesqui

#pragma once

// Brute-force constructions used as independent oracles by the tests.

#include <array>
#include <functional>
#include <numeric>
#include <vector>

#include "sesqui/diagram.hpp"
#include "sesqui/globular.hpp"

namespace sesqui::oracle {

// hat(D) by literal pushouts: every attachment adds a full copy of the globe
// C_m, whose source boundary is then identified with the globe of the cell it
// is glued to. Returns the number of cells per dimension after gluing.
inline std::vector<int> hat_counts(const SimpleDiagram& d) {
  struct Node {
    int dim, src, tgt;
  };
  std::vector<Node> nodes;
  std::vector<int> uf;
  auto make = [&](int dim, int s, int t) {
    nodes.push_back({dim, s, t});
    uf.push_back(static_cast<int>(uf.size()));
    return static_cast<int>(nodes.size()) - 1;
  };
  std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
  std::function<void(int, int)> unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    uf[a] = b;
    if (nodes[a].dim > 0) {
      unite(nodes[a].src, nodes[b].src);
      unite(nodes[a].tgt, nodes[b].tgt);
    }
  };
  // globe C_m: returns (top, source (m-1)-cell, target (m-1)-cell)
  auto globe = [&](int m) {
    if (m == 0) return std::array<int, 3>{make(0, -1, -1), -1, -1};
    int s = make(0, -1, -1), t = make(0, -1, -1);
    for (int j = 1; j < m; ++j) {
      int s2 = make(j, s, t), t2 = make(j, s, t);
      s = s2;
      t = t2;
    }
    int top = make(m, s, t);
    return std::array<int, 3>{top, s, t};
  };

  std::vector<std::vector<std::array<int, 3>>> att(static_cast<std::size_t>(d.dim() + 1));
  att[0].push_back(globe(0));
  for (int m = 1; m <= d.dim(); ++m)
    for (int i = 1; i <= d.length(m); ++i) {
      auto g = globe(m);
      int p = d.previous_in_fiber(m, i);
      int onto = p == 0 ? att[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(d.parent(m, i) - 1)][0]
                        : att[static_cast<std::size_t>(m)][static_cast<std::size_t>(p - 1)][2];
      unite(g[1], onto);
      att[static_cast<std::size_t>(m)].push_back(g);
    }
  std::vector<std::vector<int>> reps(static_cast<std::size_t>(d.dim() + 1));
  for (int a = 0; a < static_cast<int>(nodes.size()); ++a)
    if (find(a) == a) reps[static_cast<std::size_t>(nodes[a].dim)].push_back(a);
  std::vector<int> out;
  for (auto& r : reps) out.push_back(static_cast<int>(r.size()));
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace sesqui::oracle

#pragma once

#include <functional>
#include <vector>

#include "sesqui/globular.hpp"
#include "sesqui/term.hpp"

namespace sesqui {

// Valid trees over X by vertex count: out[s][d] holds the valid d-dimensional
// trees with s vertices, for d <= max_dim and s <= max_size.
inline std::vector<std::vector<std::vector<Term<Cell>>>> enumerate_trees(const GlobularSet& x, int max_dim, int max_size) {
  using T = Term<Cell>;
  std::vector<std::vector<std::vector<T>>> out(static_cast<std::size_t>(max_size + 1),
                                               std::vector<std::vector<T>>(static_cast<std::size_t>(max_dim + 1)));
  auto at = [&](int s, int d) -> std::vector<T>& { return out[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)]; };
  if (max_size < 1) return out;
  for (int d = 0; d <= max_dim; ++d)
    for (int c = 0; c < x.count(d); ++c) at(1, d).push_back(T::leaf(Cell{&x, d, c}));
  for (int s = 2; s <= max_size; ++s) {
    for (int d = 1; d <= max_dim; ++d)
      for (const auto& c : at(s - 1, d - 1)) at(s, d).push_back(T::unit(d, c));
    for (int a = 1; a + 1 < s; ++a) {
      int b = s - 1 - a;
      for (int i = 1; i <= max_dim; ++i)
        for (int j = 1; j <= max_dim; ++j)
          for (const auto& l : at(a, i))
            for (const auto& r : at(b, j)) {
              T t = T::comp(i, j, l, r);
              if (is_valid(t)) at(s, std::max(i, j)).push_back(std::move(t));
            }
    }
  }
  return out;
}

}  // namespace sesqui
